#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "delsarte/hodge.hpp"
#include "delsarte/table.hpp"

using namespace delsarte;

namespace {
const ExceptionalSet& shared_set() {
    static ExceptionalSet set = ExceptionalSet::build(ExceptionalSet::default_max_order, 2);
    return set;
}
DelsarteMatrix worked_example(int64 n) {
    return DelsarteMatrix({{{n, 0, 0, 0}, {0, n, 0, 0}, {0, 0, n - 1, 1}, {1, 1, 0, n - 2}}}, n);
}
}  // namespace

TEST_CASE("is_decomposable") {
    CHECK(is_decomposable(CharacterVector::of(5, 6, 1, 6, 1, 2, 1, 2)));
    CHECK_FALSE(is_decomposable(CharacterVector::of(1, 12, 7, 12, 2, 3, 2, 3)));
    CHECK(is_decomposable(CharacterVector::of(1, 7, 6, 7, 2, 7, 5, 7)));  // (a,-a,b,-b)
    CHECK(is_decomposable(CharacterVector::of(1, 2, 1, 2, 1, 2, 1, 2)));
}

TEST_CASE("is_regular matches the three template shapes") {
    auto r1 = is_regular(CharacterVector::of(1, 12, 7, 12, 2, 3, 2, 3));
    REQUIRE(r1.has_value());
    CHECK(r1->family == 2);
    CHECK(r1->a == reduce_mod1(1, 12));

    auto r2 = is_regular(CharacterVector::of(11, 12, 5, 12, 1, 3, 1, 3));
    REQUIRE(r2.has_value());
    CHECK(r2->family == 2);
    CHECK(r2->a == reduce_mod1(11, 12));

    CHECK_FALSE(is_regular(CharacterVector::of(1, 5, 1, 5, 1, 5, 2, 5)).has_value());

    // a family-1 instance under a nontrivial permutation
    auto r3 = is_regular(CharacterVector::of(1, 2, 7, 10, 1, 5, 3, 5));  // (1/2, 1/2+a, a, -2a)
    REQUIRE(r3.has_value());
    CHECK(r3->family == 1);
}

TEST_CASE("exceptional set has the known cardinality") {
    const ExceptionalSet& set = shared_set();
    CHECK(set.size() == 22080);
    CHECK(set.contains(CharacterVector::of(1, 24, 19, 24, 1, 3, 5, 6)));
    CHECK_FALSE(set.contains(CharacterVector::of(1, 2, 1, 2, 1, 2, 1, 2)));
    CHECK_FALSE(set.contains(CharacterVector::of(1, 12, 7, 12, 2, 3, 2, 3)));
}

TEST_CASE("order bound validation and truncation") {
    CHECK_THROWS_AS(ExceptionalSet::build(1), std::invalid_argument);
    CHECK_THROWS_AS(ExceptionalSet::build(5000), std::invalid_argument);
    // a non-default bound skips the cardinality guard and truncates by order
    ExceptionalSet t = ExceptionalSet::build(24);
    CHECK(t.size() < 22080);
    CHECK(t.contains(CharacterVector::of(1, 24, 19, 24, 1, 3, 5, 6)));
    CHECK_FALSE(t.contains(shared_set().vector_at(shared_set().size() - 1)));  // order 180
}

TEST_CASE("exceptional members fail every other predicate") {
    const ExceptionalSet& set = shared_set();
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
    for (int it = 0; it < 400; ++it) {
        CharacterVector x = set.vector_at(pick(rng));
        CHECK_FALSE(in_L0(x));
        CHECK_FALSE(is_decomposable(x));
        CHECK_FALSE(is_regular(x).has_value());
        CHECK_FALSE(in_lambda(x));
    }
}

TEST_CASE("exceptional set is closed under permutation and units") {
    const ExceptionalSet& set = shared_set();
    std::mt19937 rng(37);
    std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
    const auto& perms = all_permutations4();
    std::uniform_int_distribution<std::size_t> pp(0, perms.size() - 1);
    for (int it = 0; it < 300; ++it) {
        CharacterVector x = set.vector_at(pick(rng));
        CHECK(set.contains(x.permuted(perms[pp(rng)])));
        int64 m = x.order();
        std::uniform_int_distribution<int64> tt(1, m - 1);
        int64 t = tt(rng);
        while (std::gcd(t, m) != 1) t = tt(rng);
        CHECK(set.contains(x.times(t)));
    }
}

TEST_CASE("classify follows the cascade") {
    const ExceptionalSet& set = shared_set();
    CHECK(classify(CharacterVector::of(1, 2, 1, 2, 0, 1, 0, 1), set) == HodgeClassLabel::in_l0);
    CHECK(classify(CharacterVector::of(1, 5, 1, 5, 1, 5, 2, 5), set) ==
          HodgeClassLabel::in_lambda);
    CHECK(classify(CharacterVector::of(5, 6, 1, 6, 1, 2, 1, 2), set) ==
          HodgeClassLabel::decomposable);
    CHECK(classify(CharacterVector::of(5, 12, 11, 12, 1, 3, 1, 3), set) ==
          HodgeClassLabel::regular);
    CHECK(classify(CharacterVector::of(1, 24, 19, 24, 1, 3, 5, 6), set) ==
          HodgeClassLabel::exceptional);
}

TEST_CASE("classify raises on an element missing from a truncated set") {
    ExceptionalSet small = ExceptionalSet::build(10);
    CHECK_THROWS_AS(classify(CharacterVector::of(1, 24, 19, 24, 1, 3, 5, 6), small),
                    std::logic_error);
}

TEST_CASE("worked example census at n = 7") {
    CharacterGroup g = CharacterGroup::build(worked_example(7));
    ClassCensus c = structural_census(g.enumerate(), shared_set());
    CHECK(c.total == 210);
    CHECK(c.l0 == 35);
    CHECK(c.l0 + c.decomposable == 46);  // #(L0 u D) = n^2 - 3 for odd n
    CHECK(c.regular == 0);
    CHECK(c.exceptional == 0);
    CHECK(c.lambda == 164);
}

TEST_CASE("worked example regular vectors appear exactly when 12 | n - 4") {
    for (int64 n : {7, 14, 16, 28}) {
        CharacterGroup g = CharacterGroup::build(worked_example(n));
        auto elems = g.enumerate();
        std::vector<CharacterVector> regulars;
        for (const auto& x : elems)
            if (!in_L0(x) && !is_decomposable(x) && is_regular(x)) regulars.push_back(x);
        if (n % 12 == 4) {
            REQUIRE(regulars.size() == 4);
            std::sort(regulars.begin(), regulars.end());
            std::vector<CharacterVector> expected = {
                CharacterVector::of(1, 12, 7, 12, 2, 3, 2, 3),
                CharacterVector::of(5, 12, 11, 12, 1, 3, 1, 3),
                CharacterVector::of(7, 12, 1, 12, 2, 3, 2, 3),
                CharacterVector::of(11, 12, 5, 12, 1, 3, 1, 3)};
            std::sort(expected.begin(), expected.end());
            CHECK(regulars == expected);
        } else {
            CHECK(regulars.empty());
        }
    }
}

TEST_CASE("structural count equals the direct count") {
    Catalog cat = load_default_catalog();
    for (int id : {1, 20, 26, 47, 57, 75, 77, 83}) {
        for (int64 n : {6, 7, 11}) {
            DelsarteMatrix a = cat.by_id(id).instantiate(n);
            CHECK(structural_lefschetz(a, shared_set()) == lefschetz(a));
        }
    }
}

TEST_CASE("inclusion-exclusion L0 count equals the direct scan") {
    Catalog cat = load_default_catalog();
    CHECK(count_L0_inclusion_exclusion(worked_example(7)) == 35);
    CHECK(count_L0_inclusion_exclusion(worked_example(8)) == 48);  // n(n-2)
    for (int id : {1, 31, 55, 83}) {
        for (int64 n : {6, 9}) {
            DelsarteMatrix a = cat.by_id(id).instantiate(n);
            int64 scan = 0;
            for (const auto& x : CharacterGroup::build(a).enumerate())
                if (in_L0(x)) ++scan;
            CHECK(count_L0_inclusion_exclusion(a) == scan);
        }
    }
}

TEST_CASE("Fermat L0 count is 4n^2 - 6n + 3") {
    for (int64 n : {2, 5, 6, 7, 10}) {
        DelsarteMatrix f({{{n, 0, 0, 0}, {0, n, 0, 0}, {0, 0, n, 0}, {0, 0, 0, n}}}, n);
        int64 scan = 0;
        for (const auto& x : CharacterGroup::build(f).enumerate())
            if (in_L0(x)) ++scan;
        CHECK(scan == 4 * n * n - 6 * n + 3);
        CHECK(count_L0_inclusion_exclusion(f) == scan);
    }
}

TEST_CASE("emitted vectors are sorted, reduced and stable") {
    ExceptionalSet set = ExceptionalSet::build(30, 2);
    std::ostringstream a, b;
    set.emit(a);
    ExceptionalSet again = ExceptionalSet::build(30, 1);
    again.emit(b);
    CHECK(a.str() == b.str());
    CHECK(set.size() == again.size());
    // membership by packed key round-trips through vector_at
    for (std::size_t i = 0; i < set.size(); ++i) CHECK(set.contains(set.vector_at(i)));
}
