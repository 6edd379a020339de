// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Run through ctest or directly; timings assume a commodity multi-core box.

#include "chesshom/cycles.hpp"
#include "chesshom/homology.hpp"
#include "chesshom/sequence.hpp"
#include "chesshom/verify.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

using namespace chesshom;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool passed, double seconds,
            const std::string& extra = "")
{
    std::printf("[%s] criterion %2d: %s (%.2fs)%s\n", passed ? "PASS" : "FAIL", number,
                label.c_str(), seconds, extra.empty() ? "" : ("  " + extra).c_str());
    std::fflush(stdout);
    if (!passed) ++failures;
}

void run_case_criterion(int number, const std::string& label, const std::string& case_id,
                        const RunConfig& cfg, double time_limit_s)
{
    CaseResult r = run_case(case_id, cfg);
    bool ok = r.passed && (time_limit_s <= 0 || r.seconds <= time_limit_s);
    std::string extra;
    if (!r.passed) extra = r.evidence.dump();
    if (r.passed && time_limit_s > 0 && r.seconds > time_limit_s)
        extra = "over time budget of " + std::to_string(time_limit_s) + "s";
    report(number, label, ok, r.seconds, extra);
}

// criterion 10: the property battery, including the oracle comparisons that
// live on the test side
bool property_battery(const RunConfig& cfg, std::string& note)
{
    bool ok = true;

    // boundary-squared on random chains
    {
        std::mt19937 rng(20260810);
        for (int trial = 0; trial < 25; ++trial) {
            ComplexSpec spec = trial % 2 == 0 ? ComplexSpec::chessboard(4, 5)
                                              : ComplexSpec::matching_complex(7);
            int d = 1 + static_cast<int>(rng() % 2);
            auto faces = enumerate_faces(spec, d);
            ZChain c(IntRing{}, spec.kind(), d);
            for (int i = 0; i < 6; ++i)
                c.add_term(Int(static_cast<long>(rng() % 9) - 4), faces[rng() % faces.size()]);
            if (!boundary(boundary(c)).is_zero()) ok = false;
        }
    }

    // engine SNF vs the dense oracle on every complex with <= 200 faces
    long oracle_checks = 0;
    {
        std::vector<ComplexSpec> specs;
        for (int m = 1; m <= 5; ++m)
            for (int n = m; n <= 6; ++n) specs.push_back(ComplexSpec::chessboard(m, n));
        for (int nv = 1; nv <= 6; ++nv) specs.push_back(ComplexSpec::matching_complex(nv));
        specs.push_back(ComplexSpec::gamma(3, 4));
        specs.push_back(ComplexSpec::gamma(4, 4));
        specs.push_back(ComplexSpec::filtration_stage(3, 4, 1));
        for (const auto& spec : specs) {
            long total = 0;
            for (int d = 0; d <= complex_dimension(spec); ++d) total += face_count(spec, d);
            if (total > 200) continue;
            for (int d = 0; d <= complex_dimension(spec); ++d) {
                ZMat b = z_boundary_matrix(spec, d);
                auto mine = snf(b);
                auto expected = oracle::dense_snf_invariants(oracle::densify(b));
                if (mine.invariants != expected) ok = false;
                // divisibility chain
                for (std::size_t i = 0; i + 1 < mine.invariants.size(); ++i)
                    if (mine.invariants[i + 1] % mine.invariants[i] != 0) ok = false;
                ++oracle_checks;
            }
        }
    }

    // the shared structural case: boundary-squared matrices, pivot-strategy
    // agreement, Euler characteristic, thread-count determinism
    CaseResult props = run_case("properties", cfg);
    if (!props.passed) ok = false;

    // outsized table rows are flagged, never attempted
    std::string skips;
    for (auto [m, n] : {std::pair{7, 9}, std::pair{8, 8}, std::pair{8, 9}}) {
        auto refusal = budget_refusal(ComplexSpec::chessboard(m, n), cfg.max_faces);
        if (!refusal) ok = false;
        skips += " (" + std::to_string(m) + "," + std::to_string(n) + ") " +
                 refusal.value_or("attempted!") + ";";
    }

    note = "oracle checks: " + std::to_string(oracle_checks) + "; large rows:" + skips;
    return ok;
}

}  // namespace

int main()
{
    RunConfig cfg;
    cfg.max_sum = 11;
    cfg.max_mn = 7;
    cfg.pair_max_sum = 10;
    cfg.p = 3;

    run_case_criterion(1, "H2 of the 5x5 board is Z_3 (200x600, 600x600)", "m55", cfg, 10.0);
    run_case_criterion(2, "H1 of M_7 is Z_3 and gamma_6 has order 3", "m7", cfg, 5.0);
    run_case_criterion(3, "H3 of the 6x7 board is Z_3 and w_1 has order 3", "m67", cfg, 600.0);
    run_case_criterion(4, "connectivity sweep m+n <= 11", "connectivity", cfg, 0);
    run_case_criterion(5, "infinite-homology criterion sweep m <= n <= 7", "fh", cfg, 0);
    run_case_criterion(6, "symbolic chain-identity suite", "chains", cfg, 1.0);
    run_case_criterion(7, "Gamma_{5,5} reconstruction", "gamma55", cfg, 0);
    run_case_criterion(8, "pair-sequence exactness m+n <= 10", "pairs", cfg, 0);
    run_case_criterion(9, "dimension inequality sweep m,n <= 7, sharp at (6,7,3)", "dmt", cfg, 0);

    {
        auto t0 = std::chrono::steady_clock::now();
        std::string note;
        bool ok = property_battery(cfg, note);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report(10, "property battery (oracle, determinism, budget flags)", ok, secs, note);
    }

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
