#include "ldpc/degree_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ldpc/errors.hpp"

namespace ldpc {

DegreeSequence DegreeSequence::validate(std::vector<std::int64_t> lambda,
                                        std::vector<std::int64_t> rho) {
    if (lambda.empty() || rho.empty()) throw Error("degree sequence must be nonempty");
    for (const auto d : lambda)
        if (d < 1) throw ZeroDegree("left degree " + std::to_string(d) + " < 1");
    for (const auto d : rho)
        if (d < 1) throw ZeroDegree("right degree " + std::to_string(d) + " < 1");
    const std::int64_t left = std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
    const std::int64_t right = std::accumulate(rho.begin(), rho.end(), std::int64_t{0});
    if (left != right)
        throw SocketMismatch("left sockets " + std::to_string(left) + " != right sockets " +
                             std::to_string(right));
    std::sort(lambda.begin(), lambda.end());
    std::sort(rho.begin(), rho.end());
    DegreeSequence ds;
    ds.lambda = std::move(lambda);
    ds.rho = std::move(rho);
    ds.edges = left;
    return ds;
}

DegreeSequence DegreeSequence::regular(std::int64_t n, std::int64_t dv, std::int64_t dc) {
    if (n < 1 || dv < 1 || dc < 1) throw Error("regular shorthand needs n, dv, dc >= 1");
    if ((n * dv) % dc != 0)
        throw Error("regular shorthand: n*dv/dc = " + std::to_string(n) + "*" +
                    std::to_string(dv) + "/" + std::to_string(dc) + " is not an integer");
    const std::int64_t m = n * dv / dc;
    return validate(std::vector<std::int64_t>(static_cast<std::size_t>(n), dv),
                    std::vector<std::int64_t>(static_cast<std::size_t>(m), dc));
}

namespace {

// Sum of the top ceil(k/2) entries of an ascending list.
std::int64_t top_half_sum(const std::vector<std::int64_t>& degrees) {
    const std::int64_t k = static_cast<std::int64_t>(degrees.size());
    const std::int64_t take = (k + 1) / 2;
    std::int64_t s = 0;
    for (std::int64_t i = k - take; i < k; ++i) s += degrees[static_cast<std::size_t>(i)];
    return s;
}

}  // namespace

EnsembleStats ensemble_stats(const DegreeSequence& ds) {
    EnsembleStats st;
    st.n = ds.n();
    st.m = ds.m();
    st.edges = ds.edges;
    const std::int64_t sum_left = top_half_sum(ds.lambda);
    const std::int64_t sum_right = top_half_sum(ds.rho);
    st.delta_l = Rational(sum_left, st.n);
    st.sigma_l = Rational(st.edges, st.n) - st.delta_l;
    st.delta_r = Rational(sum_right, st.m);
    st.sigma_r = Rational(st.edges, st.m) - st.delta_r;
    st.delta_n = std::max(sum_left, sum_right);
    st.sigma_n = st.edges - st.delta_n;
    st.delta = Rational(st.delta_n, st.n);
    st.sigma = Rational(st.sigma_n, st.n);
    st.fewer_left_than_right = st.n < st.m;
    return st;
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

double condition_value(const EnsembleStats& stats) {
    if (stats.sigma_n == 0) throw DegenerateSigma("sigma == 0: condition value undefined");
    const double delta = stats.delta.to_double();
    const double sigma = stats.sigma.to_double();
    const double total = delta + sigma;
    return 2.0 * binary_entropy(0.5) + delta * std::log(delta / total) +
           sigma * std::log(sigma / total);
}

double beta_condition_value(const EnsembleStats& stats, double beta) {
    const double sigma = stats.sigma.to_double();
    if (!(beta > 0.0) || !(beta < sigma))
        throw BetaOutOfRange("beta must lie in (0, sigma = " + std::to_string(sigma) + ")");
    const double delta = stats.delta.to_double();
    const double total = delta + sigma;
    return 2.0 * binary_entropy(0.5) + 4.0 * binary_entropy(beta / total) +
           beta * std::log(beta / (sigma - beta)) + delta * std::log(delta / total) +
           sigma * std::log((sigma - beta) / total);
}

std::optional<double> solve_beta(const EnsembleStats& stats, double tolerance) {
    if (!(tolerance > 0.0)) throw Error("tolerance must be positive");
    if (condition_value(stats) >= 0.0) return std::nullopt;
    const double sigma = stats.sigma.to_double();

    // Scan toward sigma on a geometric grid in the gap (sigma - beta). Below a
    // relative gap of ~1e-12 the two large log terms cancel past double
    // precision, so the scan stops there.
    const auto at_gap_exponent = [&](double k) { return sigma * (1.0 - std::pow(2.0, -k)); };
    constexpr double kStep = 0.25;
    constexpr double kMaxExponent = 40.0;

    double hi = 0.0;          // smallest beta known to violate the condition
    double lo = -1.0;         // largest beta known to satisfy it
    bool have_hi = false;
    for (double k = kMaxExponent; k >= kStep; k -= kStep) {
        const double beta = at_gap_exponent(k);
        if (beta <= 0.0 || beta >= sigma) continue;
        if (beta_condition_value(stats, beta) <= 0.0) {
            lo = beta;
            break;
        }
        hi = beta;
        have_hi = true;
    }
    if (lo < 0.0) {
        // Condition violated across the whole grid; it must hold for small
        // enough beta since the beta -> 0 limit is condition_value < 0.
        for (int j = 3; j <= 60; ++j) {
            const double beta = sigma * std::pow(2.0, -j);
            if (beta_condition_value(stats, beta) <= 0.0) {
                lo = beta;
                break;
            }
            hi = beta;
            have_hi = true;
        }
        if (lo < 0.0) return std::nullopt;  // unreachable for finite inputs
    }
    if (!have_hi) return lo;  // nonpositive all the way to the scan floor

    while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (beta_condition_value(stats, mid) <= 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace ldpc
