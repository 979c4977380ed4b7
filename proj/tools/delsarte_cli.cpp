// Command-line interface: Picard numbers of Delsarte surfaces with only
// isolated ADE singularities.
//
// Subcommands:
//   picard       invariants of one surface (catalog id or explicit matrix)
//   classify     run the classification pipeline and print the catalog
//   verify       compare closed formulas to direct computation over a window
//   exceptional  reconstruct the residual indecomposable set
//   maximal      search a degree window for surfaces with rho = h^{1,1}
//
// Exit codes: 0 success, 1 verification or self-test failure, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "delsarte/delsarte.hpp"

using nlohmann::json;
using namespace delsarte;

namespace {

Catalog load_catalog(const std::string& path) {
    return path.empty() ? Catalog::load(DELSARTE_TABLE_PATH) : Catalog::load(path);
}

json report_to_json(int id, const PicardReport& r) {
    json j;
    if (id > 0) j["case"] = id;
    j["n"] = r.n;
    j["L"] = r.l_count;
    j["L0"] = r.l0_count;
    j["decomposable"] = r.decomposable;
    j["regular"] = r.regular;
    j["exceptional"] = r.exceptional;
    j["lambda"] = r.lambda;
    j["b2"] = r.b2;
    j["rho"] = r.rho;
    j["h11"] = r.h11;
    j["maximal"] = r.maximal;
    j["wall_ms"] = r.wall_ms;
    return j;
}

void print_report(int id, const PicardReport& r) {
    if (id > 0) std::cout << "case " << id << " at ";
    std::cout << "n=" << r.n << "\n";
    std::cout << "  #L       = " << r.l_count << "\n";
    std::cout << "  #L0      = " << r.l0_count << "\n";
    std::cout << "  census     D=" << r.decomposable << " R=" << r.regular
              << " I=" << r.exceptional << "\n";
    std::cout << "  lambda   = " << r.lambda << "\n";
    std::cout << "  b2       = " << r.b2 << "\n";
    std::cout << "  rho      = " << r.rho << "\n";
    std::cout << "  h11      = " << r.h11 << (r.maximal ? "   (maximal)" : "") << "\n";
    std::cout << "  wall     = " << r.wall_ms << " ms\n";
}

std::array<std::array<int64, 4>, 4> parse_matrix(const std::string& text) {
    std::array<std::array<int64, 4>, 4> rows{};
    std::string t = text;
    for (char& ch : t)
        if (ch == ',' || ch == ';') ch = ' ';
    std::istringstream is(t);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!(is >> rows[i][j]))
                throw std::invalid_argument("matrix: expected 16 integers");
    int64 extra;
    if (is >> extra) throw std::invalid_argument("matrix: expected exactly 16 integers");
    return rows;
}

std::string catalog_entry_text(const CatalogEntry& e) {
    std::ostringstream os;
    os << (e.extra ? "extra " : "case ") << e.id;
    if (e.extra) os << " degree " << e.fixed_degree;
    os << "\n  surface  " << e.surface.str() << "\n";
    if (!e.extra) {
        os << "  singular ";
        if (e.singular.empty()) {
            os << "none";
        } else {
            for (std::size_t i = 0; i < e.singular.size(); ++i)
                os << (i ? " ; " : "") << e.singular[i].str();
        }
        os << "\n";
    }
    if (e.smooth) os << "  note     smooth\n";
    os << "  rho      " << e.rho.str() << "\n";
    return os.str();
}

int run_picard(const std::string& table, int case_id, const std::string& matrix_text,
               int64 n, bool as_json) {
    PicardReport r;
    int shown_id = 0;
    if (!matrix_text.empty()) {
        r = picard_report(DelsarteMatrix(parse_matrix(matrix_text), n));
    } else {
        Catalog cat = load_catalog(table);
        r = picard_report(cat.by_id(case_id).instantiate(n));
        shown_id = case_id;
    }
    if (as_json)
        std::cout << report_to_json(shown_id, r).dump(2) << "\n";
    else
        print_report(shown_id, r);
    return 0;
}

int run_classify(const std::string& table, const std::string& emit, bool as_json) {
    Catalog cat = load_catalog(table);
    auto candidates = generate_candidates();
    auto pruned = dedupe_and_prune(candidates);
    auto final = corner_ade_filter(pruned);

    bool counts_ok =
        candidates.size() == 2401 && pruned.size() == 90 && final.size() == 83;

    // match survivors against the catalog up to coordinate permutation
    std::map<std::array<int, 32>, int> catalog_keys;
    for (const auto& e : cat.entries) catalog_keys[e.surface.canonical_key()] = e.id;
    std::size_t matched = 0;
    for (const auto& s : final)
        if (catalog_keys.count(s.canonical_key())) ++matched;
    bool match_ok = (matched == 83 && catalog_keys.size() == 83);

    if (as_json) {
        json j;
        j["candidates"] = candidates.size();
        j["after_prune_dedupe"] = pruned.size();
        j["final"] = final.size();
        j["catalog_matched"] = matched;
        j["ok"] = counts_ok && match_ok;
        json cases = json::array();
        for (const auto& e : cat.entries) {
            json c;
            c["case"] = e.id;
            c["surface"] = e.surface.str();
            json sing = json::array();
            for (const auto& p : e.singular) sing.push_back(p.str());
            c["singular"] = sing;
            c["smooth"] = e.smooth;
            c["rho"] = e.rho.str();
            cases.push_back(c);
        }
        j["catalog"] = cases;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "candidates             " << candidates.size() << "\n";
        std::cout << "after prune and dedupe " << pruned.size() << "\n";
        std::cout << "with only ADE corners  " << final.size() << "\n";
        std::cout << "matched to catalog     " << matched << " of 83\n";
    }
    if (!emit.empty()) {
        std::ofstream out(emit);
        if (!out) throw std::runtime_error("cannot open " + emit);
        for (const auto& e : cat.entries) out << catalog_entry_text(e) << "\n";
        for (const auto& e : cat.extras) out << catalog_entry_text(e) << "\n";
        std::cout << "catalog written to " << emit << "\n";
    }
    return counts_ok && match_ok ? 0 : 1;
}

int run_verify(const std::string& table, int64 n_from, int64 n_to, int case_id,
               int64 cover_max, int threads, bool as_json, const std::string& report_path) {
    Catalog cat = load_catalog(table);
    std::vector<int> ids;
    if (case_id > 0) ids.push_back(case_id);
    VerifySummary s = verify_all(cat, n_from, n_to, threads, cover_max, ids);

    std::ostringstream text;
    for (const auto& r : s.results)
        if (!r.match)
            text << "MISMATCH case " << r.id << " n=" << r.n << ": direct " << r.rho_direct
                 << " formula " << r.rho_formula << "\n";
    auto untested = s.untested();
    for (const auto* t : untested)
        text << "untested: case " << t->id << " term " << t->term << " (first n "
             << t->smallest_n << ")\n";
    text << "checked " << s.results.size() << " (case, n) pairs on n in [" << s.n_lo << ", "
         << s.n_hi << "]"
         << (s.cover_max > s.n_hi ? " with coverage runs up to n=" + std::to_string(s.cover_max)
                                  : std::string())
         << "\n";
    text << "mismatches " << s.mismatches << ", delta terms untested " << untested.size()
         << ", wall " << s.wall_ms / 1000.0 << " s\n";

    if (as_json) {
        json j;
        j["n_from"] = s.n_lo;
        j["n_to"] = s.n_hi;
        j["cover_max"] = s.cover_max;
        j["pairs"] = s.results.size();
        j["mismatches"] = s.mismatches;
        json res = json::array();
        for (const auto& r : s.results) {
            json e;
            e["case"] = r.id;
            e["n"] = r.n;
            e["rho_direct"] = r.rho_direct;
            e["rho_formula"] = r.rho_formula;
            e["match"] = r.match;
            res.push_back(e);
        }
        j["results"] = res;
        json unt = json::array();
        for (const auto* t : untested) {
            json e;
            e["case"] = t->id;
            e["term"] = t->term;
            e["first_n"] = t->smallest_n;
            unt.push_back(e);
        }
        j["untested"] = unt;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text.str();
    }
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::runtime_error("cannot open " + report_path);
        for (const auto& r : s.results)
            out << r.id << " " << r.n << " " << r.rho_direct << " " << r.rho_formula << " "
                << (r.match ? "ok" : "MISMATCH") << "\n";
        for (const auto* t : untested)
            out << "untested " << t->id << " " << t->term << " " << t->smallest_n << "\n";
    }
    return s.mismatches == 0 ? 0 : 1;
}

int run_exceptional(int64 bound, int threads, const std::string& emit, bool as_json) {
    ExceptionalSet set = ExceptionalSet::build(bound, threads);
    if (as_json) {
        json j;
        j["bound"] = bound;
        j["count"] = set.size();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "order bound " << bound << ": " << set.size() << " exceptional vectors\n";
    }
    if (!emit.empty()) {
        std::ofstream out(emit);
        if (!out) throw std::runtime_error("cannot open " + emit);
        set.emit(out);
        std::cout << "written to " << emit << "\n";
    }
    return 0;
}

int run_maximal(const std::string& table, int64 n_min, int64 n_max, int threads,
                bool as_json) {
    Catalog cat = load_catalog(table);
    auto hits = find_maximal(cat, n_min, n_max, threads);
    if (as_json) {
        json j = json::array();
        for (const auto& h : hits) {
            json e;
            e["case"] = h.id;
            e["n"] = h.n;
            e["rho"] = h.rho;
            e["h11"] = h.h11;
            j.push_back(e);
        }
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& h : hits)
            std::cout << "case " << h.id << " at n=" << h.n << ": rho = h11 = " << h.rho
                      << "\n";
        std::cout << hits.size() << " maximal surfaces for n in [" << n_min << ", " << n_max
                  << "]\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Picard numbers of Delsarte surfaces with isolated ADE singularities"};
    app.require_subcommand(1);

    std::string table;
    int threads = default_thread_count();
    std::string format = "text";
    app.add_option("--table", table, "catalog data file (default: shipped table)");
    app.add_option("--threads", threads, "worker threads (default: DELSARTE_THREADS or all)");
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* picard_cmd = app.add_subcommand("picard", "invariants of one surface");
    int case_id = 0;
    std::string matrix_text;
    int64 n = 0;
    picard_cmd->add_option("--case", case_id, "catalog id (1..83, or an extra id)");
    picard_cmd->add_option("--matrix", matrix_text, "explicit 4x4 exponent matrix, 16 integers");
    picard_cmd->add_option("--n", n, "degree")->required();

    auto* classify_cmd = app.add_subcommand("classify", "classification pipeline + catalog");
    std::string emit;
    classify_cmd->add_option("--emit", emit, "write the catalog to this file");

    auto* verify_cmd = app.add_subcommand("verify", "formulas vs direct computation");
    int64 n_from = 6, n_to = 16, cover_max = 60;
    int verify_case_id = 0;
    std::string report_path;
    verify_cmd->add_option("--n-from", n_from, "first degree (default 6)");
    verify_cmd->add_option("--n-to", n_to, "last degree (default 16)");
    verify_cmd->add_option("--case", verify_case_id, "restrict to one catalog id");
    verify_cmd->add_option("--cover-max", cover_max,
                           "degree budget for out-of-window delta-term coverage (default 60)");
    verify_cmd->add_option("--report", report_path, "write a machine-readable report");

    auto* exceptional_cmd = app.add_subcommand("exceptional", "residual indecomposable set");
    int64 bound = ExceptionalSet::default_max_order;
    std::string exc_emit;
    exceptional_cmd->add_option("--bound", bound, "order bound (default 180)");
    exceptional_cmd->add_option("--emit", exc_emit, "write vectors to this file");

    auto* maximal_cmd = app.add_subcommand("maximal", "surfaces with rho = h11");
    int64 n_min = 5, n_max = 12;
    maximal_cmd->add_option("--n-min", n_min, "first degree (default 5)");
    maximal_cmd->add_option("--n-max", n_max, "last degree (default 12)");

    CLI11_PARSE(app, argc, argv);

    bool as_json = (format == "json");
    try {
        if (picard_cmd->parsed()) {
            if ((case_id > 0) == !matrix_text.empty())
                throw std::invalid_argument("picard: give exactly one of --case, --matrix");
            return run_picard(table, case_id, matrix_text, n, as_json);
        }
        if (classify_cmd->parsed()) return run_classify(table, emit, as_json);
        if (verify_cmd->parsed())
            return run_verify(table, n_from, n_to, verify_case_id, cover_max, threads, as_json,
                              report_path);
        if (exceptional_cmd->parsed()) return run_exceptional(bound, threads, exc_emit, as_json);
        if (maximal_cmd->parsed()) return run_maximal(table, n_min, n_max, threads, as_json);
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::logic_error& ex) {
        std::cerr << "self-test failure: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
