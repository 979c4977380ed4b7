#pragma once

// Batch verification of the catalog formulas against direct computation,
// delta-term coverage accounting, the maximal-surface search, and the full
// per-surface report used by the command-line tool.

#include <chrono>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "delsarte/group.hpp"
#include "delsarte/hodge.hpp"
#include "delsarte/parallel.hpp"
#include "delsarte/table.hpp"

namespace delsarte {

struct PicardReport {
    int64 n = 0;
    int64 l_count = 0;
    int64 l0_count = 0;
    int64 decomposable = 0;
    int64 regular = 0;
    int64 exceptional = 0;  // remainder of L1 \ Lambda after D and R
    int64 lambda = 0;
    int64 b2 = 0;
    int64 rho = 0;
    int64 h11 = 0;
    bool maximal = false;
    double wall_ms = 0;
};

// Full census of one surface.  Elements outside Lambda that are neither
// decomposable nor regular are counted as exceptional; the classification is
// complete on every module, which the structural cross-check enforces.
inline PicardReport picard_report(const DelsarteMatrix& a) {
    auto start = std::chrono::steady_clock::now();
    PicardReport r;
    r.n = a.degree;
    CharacterGroup g = CharacterGroup::build(a);
    UnitsCache cache;
    r.l_count = g.cardinality;
    g.for_each_element([&](const CharacterVector& x) {
        if (x.has_zero_coordinate())
            ++r.l0_count;
        else if (in_lambda(x, &cache))
            ++r.lambda;
        else if (is_decomposable(x))
            ++r.decomposable;
        else if (is_regular(x))
            ++r.regular;
        else
            ++r.exceptional;
    });
    r.b2 = betti2(a.degree);
    r.rho = r.b2 - r.lambda;
    r.h11 = hodge11(a.degree);
    r.maximal = (r.rho == r.h11);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    return r;
}

struct VerifyResult {
    int id = 0;
    int64 n = 0;
    int64 rho_direct = 0;
    int64 rho_formula = 0;
    int64 lambda_direct = 0;
    bool match = false;
    double wall_ms = 0;
};

inline VerifyResult verify_case(const Catalog& cat, int id, int64 n) {
    const CatalogEntry& e = cat.by_id(id);
    auto start = std::chrono::steady_clock::now();
    VerifyResult r;
    r.id = id;
    r.n = n;
    r.lambda_direct = lefschetz(e.instantiate(n));
    r.rho_direct = betti2(n) - r.lambda_direct;
    r.rho_formula = e.rho.evaluate(n);
    r.match = (r.rho_direct == r.rho_formula);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
    return r;
}

struct TermCoverage {
    int id = 0;
    std::size_t term_index = 0;
    std::string term;       // rendered delta term
    int64 modulus = 0;
    int64 smallest_n = 0;   // smallest n >= 6 activating the term
    bool tested = false;
};

struct VerifySummary {
    int64 n_lo = 0, n_hi = 0, cover_max = 0;
    std::vector<VerifyResult> results;       // matrix run, then coverage extras
    std::vector<TermCoverage> coverage;      // one row per delta term
    int64 mismatches = 0;
    double wall_ms = 0;

    std::vector<const TermCoverage*> untested() const {
        std::vector<const TermCoverage*> u;
        for (const auto& t : coverage)
            if (!t.tested) u.push_back(&t);
        return u;
    }
};

inline int64 smallest_activating_n(const DeltaTerm& t, int64 from) {
    int64 best = -1;
    for (int64 r : t.normalized_residues()) {
        int64 n = r;
        while (n < from) n += t.modulus;
        if (best < 0 || n < best) best = n;
    }
    return best;
}

// Direct-vs-formula comparison for every case over [n_lo, n_hi], plus one
// extra run per delta term not activated inside the window, at its smallest
// activating n, provided that n does not exceed cover_max.  Terms beyond the
// budget are reported untested.
inline VerifySummary verify_all(const Catalog& cat, int64 n_lo, int64 n_hi, int threads = 1,
                                int64 cover_max = 0, const std::vector<int>& only_ids = {}) {
    auto start = std::chrono::steady_clock::now();
    VerifySummary s;
    s.n_lo = n_lo;
    s.n_hi = n_hi;
    s.cover_max = cover_max;

    std::vector<int> ids = only_ids;
    if (ids.empty())
        for (const auto& e : cat.entries) ids.push_back(e.id);

    std::vector<std::pair<int, int64>> jobs;
    for (int id : ids)
        for (int64 n = n_lo; n <= n_hi; ++n) jobs.emplace_back(id, n);
    // coverage extras
    for (int id : ids) {
        const CatalogEntry& e = cat.by_id(id);
        for (std::size_t ti = 0; ti < e.rho.terms.size(); ++ti) {
            const DeltaTerm& t = e.rho.terms[ti];
            TermCoverage c;
            c.id = id;
            c.term_index = ti;
            c.modulus = t.modulus;
            QuasiPolynomial one;
            one.base = {0};
            one.terms = {t};
            c.term = one.str();
            c.smallest_n = smallest_activating_n(t, 6);
            c.tested = (c.smallest_n >= n_lo && c.smallest_n <= n_hi);
            if (!c.tested && c.smallest_n <= cover_max) {
                jobs.emplace_back(id, c.smallest_n);
                c.tested = true;
            }
            s.coverage.push_back(c);
        }
    }

    s.results.resize(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        s.results[i] = verify_case(cat, jobs[i].first, jobs[i].second);
    });
    for (const auto& r : s.results)
        if (!r.match) ++s.mismatches;
    s.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return s;
}

// Sample rho of one surface by direct computation over [n_lo, n_hi] and
// recover a closed quasi-polynomial (degree <= 2 per residue class).
inline DiscoveryResult discover_picard_formula(const CatalogEntry& e, int64 n_lo, int64 n_hi,
                                               int64 period_bound, int threads = 1) {
    std::vector<std::pair<int64, int64>> samples(n_hi - n_lo + 1);
    parallel_for(samples.size(), threads, [&](std::size_t i) {
        int64 n = n_lo + static_cast<int64>(i);
        samples[i] = {n, betti2(n) - lefschetz(e.instantiate(n))};
    });
    return discover_quasipolynomial(samples, 2, period_bound);
}

struct MaximalHit {
    int id = 0;
    int64 n = 0;
    int64 rho = 0;
    int64 h11 = 0;
};

// All (surface, degree) pairs with rho equal to h^{1,1} in the given degree
// window, by direct computation.  Parametric entries are evaluated at every
// degree; extras only at their own degree.
inline std::vector<MaximalHit> find_maximal(const Catalog& cat, int64 n_lo, int64 n_hi,
                                            int threads = 1) {
    std::vector<std::pair<int, int64>> jobs;
    for (int64 n = std::max<int64>(n_lo, 3); n <= n_hi; ++n) {
        for (const auto& e : cat.entries) jobs.emplace_back(e.id, n);
        for (const auto& e : cat.extras)
            if (e.fixed_degree == n) jobs.emplace_back(e.id, n);
    }
    std::vector<int64> rho(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) {
        rho[i] = picard(cat.by_id(jobs[i].first).instantiate(jobs[i].second));
    });
    std::vector<MaximalHit> hits;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        int64 h = hodge11(jobs[i].second);
        if (rho[i] == h) hits.push_back({jobs[i].first, jobs[i].second, rho[i], h});
    }
    return hits;
}

}  // namespace delsarte
