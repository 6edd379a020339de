// chesshom: exact homology of chessboard and matching complexes, plus the
// named verification cases.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "chesshom/cache.hpp"
#include "chesshom/complex.hpp"
#include "chesshom/cycles.hpp"
#include "chesshom/homology.hpp"
#include "chesshom/sequence.hpp"
#include "chesshom/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace chesshom;

struct SpecFlags {
    std::string complex_kind = "chessboard";
    int m = 0, n = 0, N = 0, stage = 2;
    std::string rows_csv, cols_csv;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--complex", complex_kind,
                        "chessboard | matching | gamma | delta | subboard")
            ->capture_default_str();
        cmd->add_option("--m", m, "number of rows");
        cmd->add_option("--n", n, "number of columns");
        cmd->add_option("--N", N, "number of vertices (matching complex)");
        cmd->add_option("--stage", stage, "filtration stage 0|1|2 (delta)");
        cmd->add_option("--rows", rows_csv, "comma-separated row labels (subboard)");
        cmd->add_option("--cols", cols_csv, "comma-separated column labels (subboard)");
    }

    static std::vector<int> parse_csv(const std::string& csv)
    {
        std::vector<int> out;
        std::stringstream ss(csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.push_back(std::stoi(tok));
        return out;
    }

    ComplexSpec to_spec() const
    {
        if (complex_kind == "chessboard") return ComplexSpec::chessboard(m, n);
        if (complex_kind == "matching") return ComplexSpec::matching_complex(N);
        if (complex_kind == "gamma") return ComplexSpec::gamma(m, n);
        if (complex_kind == "delta") return ComplexSpec::filtration_stage(m, n, stage);
        if (complex_kind == "subboard")
            return ComplexSpec::sub_board(parse_csv(rows_csv), parse_csv(cols_csv));
        throw DomainError("unknown complex kind: " + complex_kind);
    }
};

RunConfig config_from(const std::string& cache_dir, int threads, std::int64_t p, int max_mn,
                      int max_sum, long max_faces, const std::string& format)
{
    RunConfig cfg;
    cfg.cache_dir = cache_dir;
    if (threads > 0) cfg.threads = threads;
    cfg.p = p;
    if (max_mn > 0) cfg.max_mn = max_mn;
    if (max_sum > 0) cfg.max_sum = max_sum;
    cfg.max_faces = max_faces;
    cfg.format = format;
    return cfg;
}

int cmd_verify(const std::vector<std::string>& ids, const RunConfig& cfg)
{
    std::vector<CaseResult> results = run_cases(ids.empty() ? std::vector<std::string>{"all"} : ids,
                                                cfg);
    bool all = true;
    if (cfg.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : results) {
            arr.push_back({{"id", r.id},
                           {"passed", r.passed},
                           {"seconds", r.seconds},
                           {"evidence", r.evidence}});
            all = all && r.passed;
        }
        std::cout << nlohmann::json{{"schema", "chesshom/1"}, {"results", arr}}.dump(2) << "\n";
    } else if (cfg.format == "tsv") {
        std::cout << "id\tpassed\tseconds\n";
        for (const auto& r : results) {
            std::cout << r.id << "\t" << (r.passed ? 1 : 0) << "\t" << r.seconds << "\n";
            all = all && r.passed;
        }
    } else {
        for (const auto& r : results) {
            std::printf("[%s] %-14s (%.2fs)\n", r.passed ? "PASS" : "FAIL", r.id.c_str(),
                        r.seconds);
            if (!r.passed) std::cout << "  evidence: " << r.evidence.dump() << "\n";
            all = all && r.passed;
        }
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact homology engine for chessboard and matching complexes"};
    app.require_subcommand(1);

    std::string cache_dir = default_cache_dir();
    int threads = 0;
    std::string format = "human";
    app.add_option("--cache-dir", cache_dir, "homology cache directory")->capture_default_str();
    app.add_option("--threads", threads, "worker threads (default: CHESSHOM_THREADS or cores)");
    app.add_option("--format", format, "human | json | tsv")->capture_default_str();

    // betti
    auto* betti = app.add_subcommand("betti", "one reduced homology group");
    SpecFlags betti_spec;
    betti_spec.attach(betti);
    int betti_dim = 0;
    std::string betti_ring = "Z";
    bool betti_no_cache = false;
    long betti_max_faces = 200000;
    betti->add_option("--dim", betti_dim, "homology degree")->required();
    betti->add_option("--ring", betti_ring, "Z or Zp:<prime>")->capture_default_str();
    betti->add_flag("--no-cache", betti_no_cache, "skip the on-disk cache");
    betti->add_option("--max-faces", betti_max_faces, "per-degree face budget")
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "run named verification cases");
    std::vector<std::string> verify_ids;
    int v_max = 0, v_max_sum = 0;
    std::int64_t v_p = 3;
    long v_max_faces = 200000;
    verify->add_option("cases", verify_ids, "case ids, or 'all'");
    verify->add_option("--max", v_max, "per-side bound for field sweeps");
    verify->add_option("--max-sum", v_max_sum, "m+n bound for integer sweeps");
    verify->add_option("--p", v_p, "prime for field audits")->capture_default_str();
    verify->add_option("--max-faces", v_max_faces, "per-degree face budget")
        ->capture_default_str();
    verify->add_flag("--list", "list case ids and exit");

    // cycle
    auto* cycle = app.add_subcommand("cycle", "build a named cycle recipe");
    std::string cycle_recipe;
    bool cyc_check = false, cyc_order = false, cyc_print = false;
    SpecFlags cycle_spec;
    cycle->add_option("recipe", cycle_recipe, "e.g. rho, z_top:3, gamma_mn:4,5, w_k:0,1,2")
        ->required();
    cycle->add_flag("--check", cyc_check, "report whether the chain is a cycle");
    cycle->add_flag("--order", cyc_order, "order of the class in the ambient complex");
    cycle->add_flag("--print", cyc_print, "print the chain as JSON (default)");
    cycle_spec.attach(cycle);

    // table1
    auto* table1 = app.add_subcommand("table1", "bottom-degree exponents along a table row");
    int t1_row = 5, t1_max_m = 8;
    long t1_max_faces = 200000;
    table1->add_option("--row", t1_row, "row key 2m-n")->capture_default_str();
    table1->add_option("--max-m", t1_max_m, "largest m to attempt")->capture_default_str();
    table1->add_option("--max-faces", t1_max_faces, "per-degree face budget")
        ->capture_default_str();

    // faces
    auto* faces_cmd = app.add_subcommand("faces", "enumerate faces in canonical order");
    SpecFlags faces_spec;
    faces_spec.attach(faces_cmd);
    int faces_dim = 0;
    faces_cmd->add_option("--dim", faces_dim, "face dimension")->required();

    // audit-pair
    auto* audit_pair = app.add_subcommand("audit-pair", "exactness audit of a pair sequence");
    std::string ap_pair = "gamma";
    int ap_m = 0, ap_n = 0, ap_dmax = -1;
    std::int64_t ap_p = 3;
    audit_pair->add_option("--pair", ap_pair, "gamma (M/Gamma) | d21 (D2/D1) | d10 (D1/D0)")
        ->capture_default_str();
    audit_pair->add_option("--m", ap_m)->required();
    audit_pair->add_option("--n", ap_n)->required();
    audit_pair->add_option("--p", ap_p)->capture_default_str();
    audit_pair->add_option("--dmax", ap_dmax, "highest degree to report");

    // audit-dmt
    auto* audit_dmt = app.add_subcommand("audit-dmt", "homology dimension inequality");
    int ad_m = 0, ad_n = 0, ad_d = -2, ad_max = 0;
    std::int64_t ad_p = 3;
    audit_dmt->add_option("--m", ad_m);
    audit_dmt->add_option("--n", ad_n);
    audit_dmt->add_option("--d", ad_d);
    audit_dmt->add_option("--max", ad_max, "sweep all m,n up to this bound");
    audit_dmt->add_option("--p", ad_p)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (betti->parsed()) {
            ComplexSpec spec = betti_spec.to_spec();
            if (auto refusal = budget_refusal(spec, betti_max_faces)) {
                std::cerr << *refusal << "\n";
                return 2;
            }
            RingSpec ring = parse_ring(betti_ring);
            HomologyCache cache(cache_dir);
            HomologyGroup g =
                homology_cached(spec, betti_dim, ring, betti_no_cache ? nullptr : &cache);
            // JSON is the default contract; --format human opts into Z^r notation
            if (format == "human" && app.count("--format") > 0)
                std::cout << g.human() << "\n";
            else
                std::cout << g.to_json().dump() << "\n";
            return 0;
        }
        if (verify->parsed()) {
            if (verify->count("--list") > 0) {
                for (const auto& c : case_registry())
                    std::cout << c.id << "\t" << c.description << "\n";
                return 0;
            }
            RunConfig cfg = config_from(cache_dir, threads, v_p, v_max, v_max_sum, v_max_faces,
                                        format);
            if (v_max_sum > 0) cfg.pair_max_sum = std::min(v_max_sum, cfg.pair_max_sum);
            return cmd_verify(verify_ids, cfg);
        }
        if (cycle->parsed()) {
            Recipe r = parse_recipe(cycle_recipe);
            if (cyc_order) {
                ComplexSpec spec = cycle_spec.m || cycle_spec.N || !cycle_spec.rows_csv.empty()
                                       ? cycle_spec.to_spec()
                                       : (r.home ? *r.home
                                                 : throw DomainError(
                                                       "no ambient complex for this recipe"));
                std::cout << class_order(r.chain, spec).str() << "\n";
                return 0;
            }
            if (cyc_check) {
                std::cout << (is_cycle(r.chain) ? "cycle" : "not a cycle") << "\n";
                return is_cycle(r.chain) ? 0 : 1;
            }
            std::cout << chain_to_json(r.chain).dump() << "\n";
            return 0;
        }
        if (table1->parsed()) {
            HomologyCache cache(cache_dir);
            int row = t1_row;
            nlohmann::json rows = nlohmann::json::array();
            for (int m = std::max(row, 5); m <= t1_max_m; ++m) {
                int n = 2 * m - row;
                if (n < m || n > 2 * m - 5) continue;
                ComplexSpec spec = ComplexSpec::chessboard(m, n);
                if (auto refusal = budget_refusal(spec, t1_max_faces)) {
                    rows.push_back({{"m", m}, {"n", n}, {"status", *refusal}});
                    if (format == "human")
                        std::printf("(%d,%d)\t%s\n", m, n, refusal->c_str());
                    continue;
                }
                HomologyGroup g = homology_cached(spec, nu(m, n), RingZ{}, &cache);
                rows.push_back({{"m", m},
                                {"n", n},
                                {"nu", nu(m, n)},
                                {"exponent", chesshom::detail::coeff_to_json(group_exponent(g))},
                                {"group", g.human()}});
                if (format == "human")
                    std::printf("(%d,%d)\tnu=%d\texponent=%s\tgroup=%s\n", m, n, nu(m, n),
                                group_exponent(g).str().c_str(), g.human().c_str());
            }
            if (format != "human")
                std::cout << nlohmann::json{{"schema", "chesshom/1"}, {"row", row},
                                            {"rows", rows}}
                                 .dump(2)
                          << "\n";
            return 0;
        }
        if (faces_cmd->parsed()) {
            ComplexSpec spec = faces_spec.to_spec();
            nlohmann::json arr = nlohmann::json::array();
            for (const Face& f : enumerate_faces(spec, faces_dim)) arr.push_back(face_to_json(f));
            std::cout << arr.dump() << "\n";
            return 0;
        }
        if (audit_pair->parsed()) {
            PairSpec pair = [&]() -> PairSpec {
                if (ap_pair == "gamma")
                    return {ComplexSpec::chessboard(ap_m, ap_n), ComplexSpec::gamma(ap_m, ap_n)};
                if (ap_pair == "d21")
                    return {ComplexSpec::filtration_stage(ap_m, ap_n, 2),
                            ComplexSpec::filtration_stage(ap_m, ap_n, 1)};
                if (ap_pair == "d10")
                    return {ComplexSpec::filtration_stage(ap_m, ap_n, 1),
                            ComplexSpec::filtration_stage(ap_m, ap_n, 0)};
                throw DomainError("unknown pair kind: " + ap_pair);
            }();
            SequenceReport rep = pair_exactness_audit(pair, ap_p, ap_dmax);
            if (format == "tsv")
                std::cout << rep.to_tsv();
            else if (format == "json")
                std::cout << rep.to_json().dump(2) << "\n";
            else
                std::cout << (rep.all_exact ? "exact at every node" : "NOT EXACT") << " (p="
                          << ap_p << ")\n"
                          << rep.to_tsv();
            return rep.all_exact && rep.composites_zero ? 0 : 1;
        }
        if (audit_dmt->parsed()) {
            if (ad_max > 0) {
                auto rows = dmt_sweep(ad_max, ad_p, threads > 0 ? threads : default_thread_count());
                bool all = true;
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : rows) {
                    all = all && r.holds;
                    arr.push_back(r.to_json());
                }
                if (format == "human")
                    std::cout << (all ? "inequality holds on all " : "FAILURES among ")
                              << rows.size() << " cells\n";
                else
                    std::cout << nlohmann::json{{"schema", "chesshom/1"}, {"cells", arr}}.dump(2)
                              << "\n";
                return all ? 0 : 1;
            }
            DmtResult r = dmt_inequality_audit(ad_m, ad_n, ad_d, ad_p);
            std::cout << r.to_json().dump() << "\n";
            return r.holds ? 0 : 1;
        }
    } catch (const UnknownCase& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
