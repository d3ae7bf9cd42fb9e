#ifndef LDPC_BOUNDS_HPP
#define LDPC_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "ldpc/bigint.hpp"
#include "ldpc/degree_model.hpp"
#include "ldpc/rational.hpp"

namespace ldpc {

// Thompson-model circuit constants. wire_width is the grid square side,
// xi_tech the energy per unit area per clock cycle, circuit_mbw the bisection
// width of the circuit's own graph (distinct from the Tanner graph's).
struct CircuitParams {
    double wire_width = 1.0;
    double xi_tech = 1.0;
    std::int64_t clock_cycles = 1;
    std::int64_t circuit_mbw = 0;
};

// Gap-to-capacity inputs. eta = R/C in (0, 1); block_b is the constant in the
// minimum block length law n ~ b/(1-eta)^2; sason_c the constant inside the
// average-edge-degree growth law; iterations the decoder iteration count.
struct CapacityParams {
    double eta = 0.5;
    double rate = 0.5;
    double block_b = 1.0;
    double sason_c = 1.0;
    std::int64_t iterations = 1;
};

// Maximizer of m! * n! subject to m + n <= Y, 0 <= m, n <= Z: the extreme
// split (Z, Y - Z). Requires Z <= Y so the second factorial is defined;
// BadRange otherwise. When Y <= 2Z the returned split is itself admissible
// and attains the maximum; beyond that it is still an upper bound.
std::pair<std::int64_t, std::int64_t> factorial_product_max(std::int64_t Y, std::int64_t Z);

// Counting upper bound on the probability that a uniform configuration has a
// bisection of size a or less:
//   (a+1) n^2 C(n, n/2)^2 C(|E|, a)^4 a! (delta_n)! (sigma_n - a)! / |E|!
// Valid for 0 <= a < sigma_n (ConditionViolated otherwise). Values above 1
// are reported as-is; callers clamp for probability display.
double bisection_count_log_bound(const EnsembleStats& stats, std::int64_t a);

// Same bound as an exact integer ratio, for zero-tolerance comparisons and
// for cross-checking the log-gamma evaluation.
struct ExactBound {
    BigUint num;
    BigUint den;
    double log_e() const { return num.log_e() - den.log_e(); }
    bool at_least_one() const { return num >= den; }
};
ExactBound bisection_count_exact_bound(const EnsembleStats& stats, std::int64_t a);

// Growth ratio of successive counting-bound prefactors,
// (|E|-a)^4 / ((a+1)^3 (sigma_n - a)); >= 1 wherever 2a <= |E|-1, which is
// what makes the (a+1)-fold sum collapse onto the largest term.
Rational bisection_count_growth_ratio(const EnsembleStats& stats, std::int64_t a);

// Grid-model area floor for any circuit whose graph has bisection width
// omega: wire_width^2 * omega^2 / 4.
double thompson_area(double lambda_w, std::int64_t omega);

// Area floor from nested bisections, for any loop-free graph contained in the
// circuit: wire_width^2 (sqrt(2)-1)^2 / 4 * |E|^2 / |V|.
double nested_bisection_area(double lambda_w, std::int64_t edges, std::int64_t vertices);

// Per-iteration energy floor for a complete-check-node decoder:
// xi_tech * omega * sqrt(n). Serializing messages over shared wires trades
// area for clock cycles but cannot beat this.
double ccn_energy_bound(const CircuitParams& params, std::int64_t omega, std::int64_t n);

// Scaling envelopes as explicit formulas in the user-supplied constants.
struct GapScalingReport {
    double eta = 0.0;
    double n_min = 0.0;          // block_b / (1-eta)^2
    double area_direct = 0.0;    // lambda_w^2 beta^2 block_b^2 / (4 (1-eta)^4)
    double energy_direct = 0.0;  // N * n_min * sason_c^2 * ln^2(1/(1-eta))
    double energy_per_bit = 0.0;  // energy_direct / (rate * n_min)
};
GapScalingReport gap_scaling_report(const CapacityParams& cap, double lambda_w,
                                    double beta = 1.0);

// Everything the `bound` report carries, inputs echoed alongside results.
struct BoundReport {
    std::int64_t n = 0, m = 0, edges = 0;
    double lambda_w = 1.0;
    double xi_tech = 1.0;
    std::int64_t iterations = 1;
    double eta = 0.5, rate = 0.5, block_b = 1.0, sason_c = 1.0;
    std::optional<double> beta_override;
    double condition = 0.0;
    bool condition_met = false;
    std::optional<double> beta;  // solved; absent when the condition fails
    double beta_used = 0.0;
    std::optional<std::int64_t> a;
    std::optional<double> log_prob_small_bisection;  // at `a`, when admissible
    std::optional<double> prob_small_bisection;      // clamped at 1
    double thompson_area = 0.0;  // with omega = beta_used * n
    double nested_area = 0.0;
    double energy_ccn = 0.0;  // with omega = beta_used * n
    double n_min = 0.0;
    double area_direct = 0.0;
    double energy_direct = 0.0;
    double energy_per_bit = 0.0;
    bool fewer_left_than_right = false;
};

BoundReport make_bound_report(const DegreeSequence& ds, const CircuitParams& circuit,
                              const CapacityParams& cap,
                              std::optional<double> beta_override = std::nullopt,
                              std::optional<std::int64_t> a = std::nullopt);

}  // namespace ldpc

#endif
