// Randomized property suites over catalog samples.  Seeds are fixed so runs
// are reproducible; each suite performs several hundred element-level checks.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "delsarte/group.hpp"
#include "delsarte/table.hpp"
#include "delsarte/verify.hpp"

using namespace delsarte;

namespace {

const Catalog& catalog() {
    static Catalog cat = load_default_catalog();
    return cat;
}

struct SampledModule {
    int id;
    int64 n;
    std::vector<CharacterVector> l1;  // elements with no zero coordinate
};

const std::vector<SampledModule>& sampled_modules() {
    static std::vector<SampledModule> mods = [] {
        std::vector<SampledModule> out;
        std::mt19937 rng(2026);
        std::uniform_int_distribution<int> ids(1, 83);
        std::uniform_int_distribution<int64> degrees(6, 14);
        for (int k = 0; k < 12; ++k) {
            SampledModule m;
            m.id = ids(rng);
            m.n = degrees(rng);
            auto elems = CharacterGroup::build(catalog().by_id(m.id).instantiate(m.n)).enumerate();
            for (const auto& x : elems)
                if (!x.has_zero_coordinate()) m.l1.push_back(x);
            out.push_back(std::move(m));
        }
        return out;
    }();
    return mods;
}

}  // namespace

TEST_CASE("Galois-orbit invariance of the Lambda test") {
    std::mt19937 rng(101);
    int checks = 0;
    for (const auto& m : sampled_modules()) {
        std::uniform_int_distribution<std::size_t> pick(0, m.l1.size() - 1);
        for (int it = 0; it < 30; ++it) {
            const CharacterVector& x = m.l1[pick(rng)];
            int64 ord = x.order();
            std::uniform_int_distribution<int64> ts(1, ord);
            int64 t = ts(rng);
            while (std::gcd(t, ord) != 1) t = ts(rng);
            CHECK(in_lambda(x.times(t)) == in_lambda(x));
            ++checks;
        }
    }
    CHECK(checks >= 300);
}

TEST_CASE("negation closure of the Lambda test") {
    std::mt19937 rng(103);
    int checks = 0;
    for (const auto& m : sampled_modules()) {
        std::uniform_int_distribution<std::size_t> pick(0, m.l1.size() - 1);
        for (int it = 0; it < 20; ++it) {
            const CharacterVector& x = m.l1[pick(rng)];
            CHECK(in_lambda(x.negated()) == in_lambda(x));
            ++checks;
        }
    }
    CHECK(checks >= 200);
}

TEST_CASE("fractional-part sums on L1 lie in {1, 2, 3}") {
    std::mt19937 rng(107);
    int checks = 0;
    for (const auto& m : sampled_modules()) {
        std::uniform_int_distribution<std::size_t> pick(0, m.l1.size() - 1);
        for (int it = 0; it < 30; ++it) {
            const CharacterVector& x = m.l1[pick(rng)];
            int64 ord = x.order();
            auto a = x.scaled_numerators(ord);
            std::uniform_int_distribution<int64> ts(1, ord);
            int64 t = ts(rng);
            while (std::gcd(t, ord) != 1) t = ts(rng);
            int64 s = scaled_fr_sum(a, ord, t);
            CHECK(s % ord == 0);
            int64 k = s / ord;
            CHECK(k >= 1);
            CHECK(k <= 3);
            ++checks;
        }
    }
    CHECK(checks >= 300);
}

TEST_CASE("coordinate permutations preserve lambda") {
    std::mt19937 rng(109);
    std::uniform_int_distribution<int> ids(1, 83);
    std::uniform_int_distribution<int64> degrees(6, 10);
    int checks = 0;
    for (int it = 0; it < 10; ++it) {
        int id = ids(rng);
        int64 n = degrees(rng);
        DelsarteMatrix a = catalog().by_id(id).instantiate(n);
        int64 base = lefschetz(a);
        std::array<int, 4> p = {0, 1, 2, 3};
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(lefschetz(a.column_permuted(p)) == base);
        ++checks;
    }
    CHECK(checks == 10);
}

TEST_CASE("h11 is integral and brackets rho") {
    for (int64 n = 3; n <= 300; ++n) CHECK(hodge11(n) * 3 == 2 * n * n * n - 6 * n * n + 7 * n);
    std::mt19937 rng(113);
    std::uniform_int_distribution<int> ids(1, 83);
    std::uniform_int_distribution<int64> degrees(6, 12);
    for (int it = 0; it < 25; ++it) {
        int id = ids(rng);
        int64 n = degrees(rng);
        int64 rho = picard(catalog().by_id(id).instantiate(n));
        CHECK(rho >= 1);
        CHECK(rho <= hodge11(n));
    }
}

TEST_CASE("direct lambda plus formula rho equals b2") {
    std::mt19937 rng(127);
    std::uniform_int_distribution<int> ids(1, 83);
    std::uniform_int_distribution<int64> degrees(6, 13);
    int checks = 0;
    for (int it = 0; it < 100; ++it) {
        int id = ids(rng);
        int64 n = degrees(rng);
        const CatalogEntry& e = catalog().by_id(id);
        CHECK(lefschetz(e.instantiate(n)) + e.rho.evaluate(n) == betti2(n));
        ++checks;
    }
    CHECK(checks == 100);
}
