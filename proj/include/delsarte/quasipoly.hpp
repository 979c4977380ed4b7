#pragma once

// Quasi-polynomials: an integer polynomial in n plus delta corrections
//   c(n) * d{r1,r2,...|m}   with   d{S|m} = 1 iff n mod m lies in S.
// Residues are kept as written (so d{2|2} survives a round trip) and
// normalized into [0, m) only for evaluation.  Also: recovery of a
// quasi-polynomial from sampled values by smallest-period search.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "delsarte/symbolic.hpp"

namespace delsarte {

struct DeltaTerm {
    Affine coeff{0, 1};
    std::vector<int64> residues;  // as written
    int64 modulus = 2;

    std::set<int64> normalized_residues() const {
        std::set<int64> s;
        for (int64 r : residues) s.insert(((r % modulus) + modulus) % modulus);
        return s;
    }

    bool active_at(int64 n) const {
        int64 r = ((n % modulus) + modulus) % modulus;
        return normalized_residues().count(r) > 0;
    }

    friend bool operator==(const DeltaTerm&, const DeltaTerm&) = default;
};

struct QuasiPolynomial {
    std::vector<int64> base;       // coefficients, constant first
    std::vector<DeltaTerm> terms;

    int64 evaluate(int64 n) const {
        int64 v = 0;
        for (std::size_t i = base.size(); i-- > 0;) v = v * n + base[i];
        for (const DeltaTerm& t : terms)
            if (t.active_at(n)) v += t.coeff.at(n);
        return v;
    }

    friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

    std::string str() const;
    static QuasiPolynomial parse(const std::string& text);
};

namespace detail {

inline std::string affine_abs_str(const Affine& f) {
    // |coefficient| for term rendering; the sign goes into the joiner
    if (f.a == 0) {
        int64 b = f.b < 0 ? -f.b : f.b;
        return b == 1 ? "" : std::to_string(b);
    }
    if (f.b == 0) {
        if (f.a == 1) return "n";
        if (f.a == -1) return "n";  // sign handled by joiner
        return std::to_string(f.a < 0 ? -f.a : f.a) + "n";
    }
    // mixed affine coefficient, rendered in parentheses with its own signs
    std::string s = "(";
    if (f.a == 1)
        s += "n";
    else if (f.a == -1)
        s += "-n";
    else
        s += std::to_string(f.a) + "n";
    s += (f.b > 0 ? "+" : "-") + std::to_string(f.b < 0 ? -f.b : f.b) + ")";
    return s;
}

inline bool affine_is_negative(const Affine& f) { return f.a != 0 ? f.a < 0 : f.b < 0; }

}  // namespace detail

inline std::string QuasiPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    auto join = [&](bool negative) {
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
    };
    for (std::size_t p = base.size(); p-- > 0;) {
        int64 c = base[p];
        if (c == 0) continue;
        join(c < 0);
        int64 ac = c < 0 ? -c : c;
        if (p == 0) {
            os << ac;
        } else {
            if (ac != 1) os << ac;
            os << "n";
            if (p > 1) os << "^" << p;
        }
    }
    for (const DeltaTerm& t : terms) {
        join(detail::affine_is_negative(t.coeff));
        std::string c = detail::affine_abs_str(t.coeff);
        if (!c.empty()) os << c << " ";
        os << "d{";
        for (std::size_t i = 0; i < t.residues.size(); ++i) {
            if (i) os << ",";
            os << t.residues[i];
        }
        os << "|" << t.modulus << "}";
    }
    if (first) os << "0";
    return os.str();
}

inline QuasiPolynomial QuasiPolynomial::parse(const std::string& text) {
    std::vector<std::string> tok;
    std::istringstream is(text);
    std::string t;
    while (is >> t) tok.push_back(t);

    QuasiPolynomial q;
    q.base.assign(4, 0);
    std::size_t i = 0;
    int sign = 1;
    if (!tok.empty() && tok[0] == "-") {
        sign = -1;
        i = 1;
    }
    auto parse_affine_coeff = [](const std::string& s) -> Affine {
        if (s.front() == '(') {
            if (s.back() != ')') throw std::invalid_argument("formula: unbalanced ( in " + s);
            return Affine::parse(s.substr(1, s.size() - 2));
        }
        return Affine::parse(s);
    };
    while (i < tok.size()) {
        std::string cur = tok[i];
        bool have_delta = false;
        std::string coeff_tok, delta_tok;
        if (cur.rfind("d{", 0) == 0) {
            have_delta = true;
            delta_tok = cur;
            ++i;
        } else if (i + 1 < tok.size() && tok[i + 1].rfind("d{", 0) == 0) {
            have_delta = true;
            coeff_tok = cur;
            delta_tok = tok[i + 1];
            i += 2;
        } else {
            coeff_tok = cur;
            ++i;
        }
        if (have_delta) {
            DeltaTerm dt;
            dt.coeff = coeff_tok.empty() ? Affine{0, 1} : parse_affine_coeff(coeff_tok);
            if (sign < 0) {
                dt.coeff.a = -dt.coeff.a;
                dt.coeff.b = -dt.coeff.b;
            }
            std::string body = delta_tok.substr(2);
            if (body.empty() || body.back() != '}')
                throw std::invalid_argument("formula: unbalanced d{ in " + delta_tok);
            body.pop_back();
            std::size_t bar = body.find('|');
            if (bar == std::string::npos)
                throw std::invalid_argument("formula: missing modulus in " + delta_tok);
            std::string rs = body.substr(0, bar);
            dt.modulus = std::stoll(body.substr(bar + 1));
            if (dt.modulus < 2)
                throw std::invalid_argument("formula: modulus must be at least 2");
            std::size_t p = 0;
            while (p < rs.size()) {
                std::size_t comma = rs.find(',', p);
                dt.residues.push_back(
                    std::stoll(rs.substr(p, comma == std::string::npos ? comma : comma - p)));
                p = comma == std::string::npos ? rs.size() : comma + 1;
            }
            if (dt.residues.empty())
                throw std::invalid_argument("formula: empty residue set in " + delta_tok);
            q.terms.push_back(dt);
        } else {
            // polynomial monomial: c, n, cn, n^k, cn^k
            std::size_t caret = coeff_tok.find('^');
            int pow = 0;
            std::string head = coeff_tok;
            if (caret != std::string::npos) {
                pow = std::stoi(coeff_tok.substr(caret + 1));
                head = coeff_tok.substr(0, caret);
            }
            Affine f = Affine::parse(head);
            int64 c;
            if (f.a != 0) {
                if (f.b != 0)
                    throw std::invalid_argument("formula: bad monomial " + coeff_tok);
                pow = pow == 0 ? 1 : pow;  // "n" and "cn" carry an implicit power
                c = f.a;
            } else {
                c = f.b;
            }
            if (pow > 3) throw std::invalid_argument("formula: base degree exceeds 3");
            q.base[pow] += sign * c;
        }
        // next joiner
        if (i < tok.size()) {
            if (tok[i] == "+")
                sign = 1;
            else if (tok[i] == "-")
                sign = -1;
            else
                throw std::invalid_argument("formula: expected + or - before " + tok[i]);
            ++i;
            if (i == tok.size()) throw std::invalid_argument("formula: trailing sign");
        }
    }
    while (q.base.size() > 1 && q.base.back() == 0) q.base.pop_back();
    return q;
}

// ---------------------------------------------------------------------------
// Quasi-polynomial recovery from samples.

struct DiscoveryError : std::runtime_error {
    std::vector<int64> failing_classes;
    int64 attempted_period;

    DiscoveryError(std::string msg, std::vector<int64> classes, int64 period)
        : std::runtime_error(std::move(msg)),
          failing_classes(std::move(classes)),
          attempted_period(period) {}
};

struct DiscoveryResult {
    QuasiPolynomial quasi;
    int64 period = 1;
};

namespace detail {

// Exact interpolation through the given points; empty result when the data is
// not a polynomial of degree <= max_degree with integer coefficients.
inline bool fit_integer_poly(const std::vector<std::pair<int64, int64>>& pts, int max_degree,
                             std::vector<int64>& out) {
    const int k = std::min<int>(static_cast<int>(pts.size()), max_degree + 1);
    std::vector<mpq_class> coeff(k, 0);
    // Newton form on the first k points, expanded to monomial coefficients.
    std::vector<mpq_class> divided(k);
    for (int i = 0; i < k; ++i) divided[i] = pts[i].second;
    for (int level = 1; level < k; ++level)
        for (int i = k - 1; i >= level; --i) {
            mpq_class num = divided[i] - divided[i - 1];
            mpq_class den = pts[i].first - pts[i - level].first;
            divided[i] = num / den;
            divided[i].canonicalize();
        }
    // expand: poly = sum divided[i] * prod_{j<i} (x - x_j)
    std::vector<mpq_class> poly(1, divided[0]);
    std::vector<mpq_class> basis(1, 1);
    for (int i = 1; i < k; ++i) {
        // basis *= (x - x_{i-1})
        basis.push_back(0);
        for (std::size_t j = basis.size() - 1; j > 0; --j)
            basis[j] = basis[j - 1] - mpq_class(pts[i - 1].first) * basis[j];
        basis[0] = -mpq_class(pts[i - 1].first) * basis[0];
        if (poly.size() < basis.size()) poly.resize(basis.size(), 0);
        for (std::size_t j = 0; j < basis.size(); ++j) poly[j] += divided[i] * basis[j];
    }
    out.clear();
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1) return false;
        if (!c.get_num().fits_slong_p()) return false;
        out.push_back(mpz_get_si(c.get_num().get_mpz_t()));
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    if (static_cast<int>(out.size()) > max_degree + 1) return false;
    // verify every point
    for (const auto& [x, y] : pts) {
        int64 v = 0;
        for (std::size_t i = out.size(); i-- > 0;) v = v * x + out[i];
        if (v != y) return false;
    }
    return true;
}

}  // namespace detail

// Smallest period P <= period_bound for which the samples restricted to each
// residue class mod P form integer polynomials of degree <= max_degree whose
// high-degree coefficients agree across classes.  The base polynomial is the
// coefficient-wise minimum over the classes; deviations split into delta
// terms along the divisors of P, coarsest modulus first, so shared bumps land
// on small moduli.  The result reproduces every sample exactly.
//
// Samples must be consecutive integers; only periods with at least two full
// sample periods are attempted.
inline DiscoveryResult discover_quasipolynomial(const std::vector<std::pair<int64, int64>>& samples,
                                                int max_degree, int64 period_bound) {
    const int64 count = static_cast<int64>(samples.size());
    for (int64 i = 1; i < count; ++i)
        if (samples[i].first != samples[i - 1].first + 1)
            throw std::invalid_argument("discover: samples must be consecutive in n");
    const int64 max_period = std::min(period_bound, count / 2);
    if (max_period < 1)
        throw DiscoveryError("discover: window shorter than two periods", {}, period_bound);

    std::vector<int64> last_failures;
    int64 last_period = 0;
    for (int64 period = 1; period <= max_period; ++period) {
        std::vector<std::vector<int64>> classes(period);  // class -> poly coeffs
        std::vector<int64> failures;
        bool ok = true;
        for (int64 r = 0; r < period && failures.size() < 16; ++r) {
            std::vector<std::pair<int64, int64>> pts;
            for (int64 i = r; i < count; i += period) pts.push_back(samples[i]);
            // residue class of actual n values, not sample indices
            int64 cls = ((samples[0].first + r) % period + period) % period;
            std::vector<int64> poly;
            if (!detail::fit_integer_poly(pts, max_degree, poly)) {
                ok = false;
                failures.push_back(cls);
                continue;
            }
            classes[cls] = std::move(poly);
        }
        if (ok) {
            // deviations from the coefficient-wise minimum must be affine
            std::size_t width = 1;
            for (auto& p : classes) width = std::max(width, p.size());
            for (auto& p : classes) p.resize(width, 0);
            std::vector<int64> base(width);
            for (std::size_t d = 0; d < width; ++d) {
                int64 m = classes[0][d];
                for (auto& p : classes) m = std::min(m, p[d]);
                base[d] = m;
            }
            bool affine_devs = true;
            for (auto& p : classes)
                for (std::size_t d = 2; d < width; ++d)
                    if (p[d] != base[d]) affine_devs = false;
            if (!affine_devs) {
                last_failures = {};
                last_period = period;
                continue;
            }
            std::vector<Affine> dev(period);
            for (int64 c = 0; c < period; ++c) {
                dev[c].b = static_cast<int>(classes[c][0] - base[0]);
                dev[c].a = width > 1 ? static_cast<int>(classes[c][1] - base[1]) : 0;
            }
            DiscoveryResult res;
            res.period = period;
            res.quasi.base = base;
            while (res.quasi.base.size() > 1 && res.quasi.base.back() == 0)
                res.quasi.base.pop_back();
            // layered split along divisors of the period
            std::map<std::pair<int64, Affine>, std::vector<int64>> grouped;
            for (int64 d = 2; d <= period; ++d) {
                if (period % d != 0) continue;
                for (int64 r = 0; r < d; ++r) {
                    Affine g{};
                    bool any = false;
                    for (int64 c = r; c < period; c += d) {
                        if (!any) {
                            g = dev[c];
                            any = true;
                        } else {
                            g.a = std::min(g.a, dev[c].a);
                            g.b = std::min(g.b, dev[c].b);
                        }
                    }
                    if (g.a == 0 && g.b == 0) continue;
                    for (int64 c = r; c < period; c += d) {
                        dev[c].a -= g.a;
                        dev[c].b -= g.b;
                    }
                    grouped[{d, g}].push_back(r);
                }
            }
            if (period == 1 && (dev[0].a != 0 || dev[0].b != 0))
                throw std::logic_error("discover: residual deviation at period 1");
            for (auto& [key, rs] : grouped) {
                DeltaTerm t;
                t.modulus = key.first;
                t.coeff = key.second;
                t.residues = rs;
                res.quasi.terms.push_back(t);
            }
            for (const auto& [n, y] : samples)
                if (res.quasi.evaluate(n) != y)
                    throw std::logic_error("discover: reconstruction mismatch at n=" +
                                           std::to_string(n));
            return res;
        }
        last_failures = failures;
        last_period = period;
    }
    std::string msg = "discover: no period up to " + std::to_string(max_period) +
                      " fits the samples; unstable classes mod " + std::to_string(last_period) + ":";
    for (int64 c : last_failures) msg += " " + std::to_string(c);
    throw DiscoveryError(msg, last_failures, last_period);
}

}  // namespace delsarte
