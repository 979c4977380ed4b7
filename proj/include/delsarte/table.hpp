#pragma once

// The shipped table of catalog surfaces: 83 degree-parametric equations with
// their singular loci and closed Picard-number formulas, plus fixed-degree
// extra entries.  Plain-text format, one record per case; parsing is
// loss-free and re-serialization reproduces the file byte for byte.

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "delsarte/pipeline.hpp"
#include "delsarte/quasipoly.hpp"
#include "delsarte/symbolic.hpp"

namespace delsarte {

struct CatalogEntry {
    int id = 0;
    bool extra = false;
    int64 fixed_degree = 0;  // extras only
    SymbolicSurface surface;
    std::vector<SingularPoint> singular;
    bool smooth = false;
    QuasiPolynomial rho;

    DelsarteMatrix instantiate(int64 n) const {
        if (extra && n != fixed_degree)
            throw std::invalid_argument("catalog: extra entry has fixed degree " +
                                        std::to_string(fixed_degree));
        return surface.instantiate(n);
    }
};

struct Catalog {
    std::vector<CatalogEntry> entries;  // ids 1..83 in order
    std::vector<CatalogEntry> extras;

    const CatalogEntry& by_id(int id) const {
        for (const auto& e : entries)
            if (e.id == id) return e;
        for (const auto& e : extras)
            if (e.id == id) return e;
        throw std::invalid_argument("catalog: no case " + std::to_string(id));
    }

    static Catalog parse(std::istream& in);
    static Catalog load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("catalog: cannot open " + path);
        return parse(in);
    }

    std::string serialize() const;
};

namespace detail {

inline const char* table_header() {
    return "# Delsarte surfaces with only isolated ADE singularities.\n"
           "#\n"
           "# Records:\n"
           "#   case N      catalog id\n"
           "#   extra N     fixed-degree entry outside the parametric catalog\n"
           "#   degree D    (extras only) the fixed degree\n"
           "#   surface     exponent rows of the four monomials, entries affine in n\n"
           "#   singular    singular points: corners (0:0:0:1), edge families\n"
           "#               (r{k}:0:0:1) meaning eta^k = -1, or none\n"
           "#   note        annotations (smooth marks the nonsingular cases)\n"
           "#   rho         Picard number; d{r1,...|m} is 1 when n mod m lies in\n"
           "#               {r1,...} and 0 otherwise\n"
           "\n";
}

inline std::string serialize_entry(const CatalogEntry& e) {
    std::ostringstream os;
    if (e.extra) {
        os << "extra " << e.id << "\n";
        os << "degree " << e.fixed_degree << "\n";
    } else {
        os << "case " << e.id << "\n";
    }
    os << "surface " << e.surface.str() << "\n";
    if (!e.extra) {
        os << "singular ";
        if (e.singular.empty()) {
            os << "none";
        } else {
            for (std::size_t i = 0; i < e.singular.size(); ++i) {
                if (i) os << " ; ";
                os << e.singular[i].str();
            }
        }
        os << "\n";
    }
    if (e.smooth) os << "note smooth\n";
    os << "rho " << e.rho.str() << "\n";
    return os.str();
}

}  // namespace detail

inline std::string Catalog::serialize() const {
    std::string out = detail::table_header();
    bool first = true;
    for (const auto& e : entries) {
        if (!first) out += "\n";
        first = false;
        out += detail::serialize_entry(e);
    }
    for (const auto& e : extras) {
        if (!first) out += "\n";
        first = false;
        out += detail::serialize_entry(e);
    }
    return out;
}

inline Catalog Catalog::parse(std::istream& in) {
    Catalog cat;
    std::optional<CatalogEntry> cur;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("catalog: line " + std::to_string(lineno) + ": " + msg);
    };
    auto flush = [&] {
        if (!cur) return;
        if (cur->surface == SymbolicSurface{}) fail("record without surface");
        if (cur->rho == QuasiPolynomial{}) fail("record without rho formula");
        (cur->extra ? cat.extras : cat.entries).push_back(*cur);
        cur.reset();
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest;
        std::getline(ls, rest);
        if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
        try {
            if (key == "case" || key == "extra") {
                flush();
                cur = CatalogEntry{};
                cur->id = std::stoi(rest);
                cur->extra = (key == "extra");
            } else if (!cur) {
                fail("field before any case/extra record");
            } else if (key == "degree") {
                cur->fixed_degree = std::stoll(rest);
            } else if (key == "surface") {
                cur->surface = SymbolicSurface::parse(rest);
            } else if (key == "singular") {
                if (rest != "none") {
                    std::size_t p = 0;
                    while (p < rest.size()) {
                        std::size_t semi = rest.find(" ; ", p);
                        std::string tok =
                            rest.substr(p, semi == std::string::npos ? semi : semi - p);
                        cur->singular.push_back(SingularPoint::parse(tok));
                        p = semi == std::string::npos ? rest.size() : semi + 3;
                    }
                }
            } else if (key == "note") {
                if (rest == "smooth")
                    cur->smooth = true;
                else
                    fail("unknown note " + rest);
            } else if (key == "rho") {
                cur->rho = QuasiPolynomial::parse(rest);
            } else {
                fail("unknown field " + key);
            }
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& ex) {
            fail(ex.what());
        }
    }
    flush();
    if (cat.entries.size() != 83)
        throw std::runtime_error("catalog: expected 83 parametric entries, found " +
                                 std::to_string(cat.entries.size()));
    for (std::size_t i = 0; i < cat.entries.size(); ++i)
        if (cat.entries[i].id != static_cast<int>(i) + 1)
            throw std::runtime_error("catalog: ids must be 1..83 in order");
    return cat;
}

#ifdef DELSARTE_TABLE_PATH
inline Catalog load_default_catalog() { return Catalog::load(DELSARTE_TABLE_PATH); }
#endif

}  // namespace delsarte
