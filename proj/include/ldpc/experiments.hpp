#ifndef LDPC_EXPERIMENTS_HPP
#define LDPC_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ldpc/bisection.hpp"
#include "ldpc/config_model.hpp"
#include "ldpc/degree_model.hpp"

namespace ldpc {

// One Monte Carlo draw. mbw is computed on the raw multigraph (socket-level
// counting); mbw_simplified on the multigraph after the multi-edge rule.
// passed compares the raw mbw against beta_n_threshold; it is only a real
// verdict when exact is true, otherwise mbw is just an upper bound
// observation.
struct TrialRecord {
    std::uint64_t seed = 0;
    std::int64_t n = 0, m = 0;
    std::int64_t mbw = 0;
    bool exact = false;
    std::int64_t mbw_simplified = 0;
    std::int64_t multi_edge_units_removed = 0;
    double beta_n_threshold = 0.0;
    bool condition_met = false;
    bool passed = false;
};

struct TrendSummary {
    std::int64_t n = 0, m = 0;
    double beta = 0.0;
    bool condition_met = false;
    std::int64_t trials = 0;
    std::int64_t exact_trials = 0;
    std::int64_t exact_passes = 0;
    double fraction_exact_pass = 0.0;
    // multi-edge units removed per socket, averaged over trials; expected to
    // drift toward 0 as n grows for a fixed regular family (reported, never
    // asserted against a threshold)
    double mean_removed_fraction = 0.0;
};

struct McOptions {
    std::int64_t trials = 1;
    std::uint64_t master_seed = 0;
    int threads = 1;
    std::int64_t exact_cap = kDefaultExactCap;
    int heuristic_restarts = 32;
    double beta_tolerance = 1e-9;
    std::optional<double> beta_override;
};

// Samples `trials` configurations per sequence (trial t of sequence s uses
// seed derive_seed(derive_seed(master_seed, s), t)), computes the exact
// bisection width when the vertex count fits the cap and a heuristic upper
// bound otherwise, and compares against beta*n with beta from solve_beta.
// When the condition fails (or sigma == 0) the threshold is 0 and records are
// marked condition_met = false. Records come back in (sequence, trial) order
// regardless of thread count.
std::vector<TrialRecord> mc_mbw_trend(const std::vector<DegreeSequence>& family,
                                      const McOptions& options);

// Per-sequence pass fractions over the exact records.
std::vector<TrendSummary> summarize_trend(const std::vector<DegreeSequence>& family,
                                          const std::vector<TrialRecord>& records,
                                          const McOptions& options);

// Exact bisection-width distribution over every one of the |E|! pairings,
// paired with the counting bound per size a.
struct EnumerationRow {
    std::int64_t a = 0;
    std::uint64_t count_leq = 0;   // configurations with minimum width <= a
    bool admissible = false;       // a < sigma_n; no bound otherwise
    double log_bound = 0.0;        // only meaningful when admissible
    double bound_clamped = 1.0;    // min(1, exp(log_bound)) when admissible
};

struct EnumerationReport {
    std::int64_t n = 0, m = 0, edges = 0;
    std::int64_t sigma_n = 0;
    std::uint64_t total_configs = 0;
    std::vector<std::uint64_t> mbw_histogram;  // index = exact minimum width
    std::vector<EnumerationRow> rows;          // a = 0 .. a_max
};

EnumerationReport enumerate_bisection_distribution(const DegreeSequence& ds,
                                                   std::int64_t a_max,
                                                   std::int64_t enum_cap = kDefaultEnumCap,
                                                   int threads = 1);

// Verifies min(left sockets, right sockets) <= n*delta over half-subsets of
// the vertices: exhaustively when n + m <= 16, otherwise over `samples`
// seeded random subsets. True iff no violation was found.
bool socket_bound_check(const DegreeSequence& ds, std::int64_t samples, std::uint64_t seed);

// Same check against an arbitrary socket threshold; lets tests inject a wrong
// threshold and watch the checker fail.
bool socket_bound_check_against(const DegreeSequence& ds, std::int64_t threshold,
                                std::int64_t samples, std::uint64_t seed);

}  // namespace ldpc

#endif
