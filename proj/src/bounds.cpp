#include "ldpc/bounds.hpp"

#include <cmath>
#include <limits>

#include "ldpc/errors.hpp"

namespace ldpc {

std::pair<std::int64_t, std::int64_t> factorial_product_max(std::int64_t Y, std::int64_t Z) {
    if (Y <= 0 || Z <= 0)
        throw BadRange("factorial_product_max needs positive Y and Z");
    if (Y < Z)
        throw BadRange("factorial_product_max needs Z <= Y, got Y = " + std::to_string(Y) +
                       ", Z = " + std::to_string(Z));
    return {Z, Y - Z};
}

namespace {

double log_factorial(double x) { return std::lgamma(x + 1.0); }

void check_count_bound_args(const EnsembleStats& stats, std::int64_t a) {
    if (a < 0) throw ConditionViolated("bisection size a must be nonnegative");
    if (a >= stats.sigma_n)
        throw ConditionViolated("bisection size a = " + std::to_string(a) +
                                " must be below sigma*n = " + std::to_string(stats.sigma_n));
}

}  // namespace

double bisection_count_log_bound(const EnsembleStats& stats, std::int64_t a) {
    check_count_bound_args(stats, a);
    const double n = static_cast<double>(stats.n);
    const double edges = static_cast<double>(stats.edges);
    const double dn = static_cast<double>(stats.delta_n);
    const double sn = static_cast<double>(stats.sigma_n);
    const double da = static_cast<double>(a);
    const auto half = static_cast<double>(stats.n / 2);
    const double log_choose_half = log_factorial(n) - log_factorial(half) -
                                   log_factorial(n - half);
    const double log_choose_a = log_factorial(edges) - log_factorial(da) -
                                log_factorial(edges - da);
    return std::log(da + 1.0) + 2.0 * std::log(n) + 2.0 * log_choose_half +
           4.0 * log_choose_a + log_factorial(da) + log_factorial(dn) +
           log_factorial(sn - da) - log_factorial(edges);
}

ExactBound bisection_count_exact_bound(const EnsembleStats& stats, std::int64_t a) {
    check_count_bound_args(stats, a);
    const std::int64_t n = stats.n;
    BigUint num(static_cast<std::uint64_t>(a + 1));
    num = num * BigUint(static_cast<std::uint64_t>(n * n));
    num = num * BigUint::pow(BigUint::binomial(n, n / 2), 2);
    num = num * BigUint::pow(BigUint::binomial(stats.edges, a), 4);
    num = num * BigUint::factorial(a);
    num = num * BigUint::factorial(stats.delta_n);
    num = num * BigUint::factorial(stats.sigma_n - a);
    return {std::move(num), BigUint::factorial(stats.edges)};
}

Rational bisection_count_growth_ratio(const EnsembleStats& stats, std::int64_t a) {
    check_count_bound_args(stats, a);
    const std::int64_t e_minus_a = stats.edges - a;
    const std::int64_t a1 = a + 1;
    return Rational(e_minus_a * e_minus_a * e_minus_a * e_minus_a,
                    a1 * a1 * a1 * (stats.sigma_n - a));
}

double thompson_area(double lambda_w, std::int64_t omega) {
    if (!(lambda_w > 0.0)) throw Error("wire width must be positive");
    if (omega < 0) throw Error("bisection width must be nonnegative");
    const double w = static_cast<double>(omega);
    return lambda_w * lambda_w * w * w / 4.0;
}

double nested_bisection_area(double lambda_w, std::int64_t edges, std::int64_t vertices) {
    if (!(lambda_w > 0.0)) throw Error("wire width must be positive");
    if (vertices < 1) throw Error("vertex count must be >= 1");
    if (edges < 0) throw Error("edge count must be nonnegative");
    const double c = std::sqrt(2.0) - 1.0;
    const double e = static_cast<double>(edges);
    return lambda_w * lambda_w * c * c / 4.0 * e * e / static_cast<double>(vertices);
}

double ccn_energy_bound(const CircuitParams& params, std::int64_t omega, std::int64_t n) {
    if (n < 1) throw Error("block length must be >= 1");
    if (omega < 0) throw Error("bisection width must be nonnegative");
    return params.xi_tech * static_cast<double>(omega) * std::sqrt(static_cast<double>(n));
}

GapScalingReport gap_scaling_report(const CapacityParams& cap, double lambda_w, double beta) {
    if (!(cap.eta > 0.0) || !(cap.eta < 1.0))
        throw EtaOutOfRange("eta must lie in (0, 1), got " + std::to_string(cap.eta));
    if (!(cap.rate > 0.0) || !(cap.rate < 1.0))
        throw Error("rate must lie in (0, 1), got " + std::to_string(cap.rate));
    if (cap.block_b <= 0.0 || cap.sason_c <= 0.0 || cap.iterations < 1)
        throw Error("block_b, sason_c must be positive and iterations >= 1");
    GapScalingReport rep;
    rep.eta = cap.eta;
    const double gap = 1.0 - cap.eta;
    const double log_term = std::log(1.0 / gap);
    rep.n_min = cap.block_b / (gap * gap);
    rep.area_direct =
        lambda_w * lambda_w * beta * beta * cap.block_b * cap.block_b / (4.0 * gap * gap * gap * gap);
    rep.energy_direct = static_cast<double>(cap.iterations) * rep.n_min * cap.sason_c *
                        cap.sason_c * log_term * log_term;
    rep.energy_per_bit = rep.energy_direct / (cap.rate * rep.n_min);
    return rep;
}

BoundReport make_bound_report(const DegreeSequence& ds, const CircuitParams& circuit,
                              const CapacityParams& cap, std::optional<double> beta_override,
                              std::optional<std::int64_t> a) {
    const EnsembleStats stats = ensemble_stats(ds);
    BoundReport rep;
    rep.n = stats.n;
    rep.m = stats.m;
    rep.edges = stats.edges;
    rep.lambda_w = circuit.wire_width;
    rep.xi_tech = circuit.xi_tech;
    rep.iterations = cap.iterations;
    rep.eta = cap.eta;
    rep.rate = cap.rate;
    rep.block_b = cap.block_b;
    rep.sason_c = cap.sason_c;
    rep.beta_override = beta_override;
    rep.fewer_left_than_right = stats.fewer_left_than_right;

    if (stats.sigma_n == 0) {
        rep.condition = std::numeric_limits<double>::infinity();
        rep.condition_met = false;
    } else {
        rep.condition = condition_value(stats);
        rep.condition_met = rep.condition < 0.0;
        if (rep.condition_met) rep.beta = solve_beta(stats, 1e-9);
    }
    rep.beta_used = beta_override.value_or(rep.beta.value_or(0.0));

    std::optional<std::int64_t> a_eff = a;
    if (!a_eff && stats.sigma_n > 0) {
        const auto from_beta =
            static_cast<std::int64_t>(std::floor(rep.beta_used * static_cast<double>(stats.n)));
        a_eff = std::max<std::int64_t>(0, std::min(from_beta, stats.sigma_n - 1));
    }
    if (a_eff && *a_eff >= 0 && *a_eff < stats.sigma_n) {
        rep.a = a_eff;
        rep.log_prob_small_bisection = bisection_count_log_bound(stats, *a_eff);
        rep.prob_small_bisection = std::min(1.0, std::exp(*rep.log_prob_small_bisection));
    } else if (a_eff) {
        rep.a = a_eff;  // requested but outside 0 <= a < sigma_n: no bound
    }

    const double omega = rep.beta_used * static_cast<double>(stats.n);
    rep.thompson_area = circuit.wire_width * circuit.wire_width * omega * omega / 4.0;
    rep.nested_area = nested_bisection_area(circuit.wire_width, stats.edges, stats.n + stats.m);
    rep.energy_ccn = circuit.xi_tech * omega * std::sqrt(static_cast<double>(stats.n));

    const GapScalingReport gap = gap_scaling_report(cap, circuit.wire_width, rep.beta_used);
    rep.n_min = gap.n_min;
    rep.area_direct = gap.area_direct;
    rep.energy_direct = gap.energy_direct;
    rep.energy_per_bit = gap.energy_per_bit;
    return rep;
}

}  // namespace ldpc
