#ifndef LDPC_DEGREE_MODEL_HPP
#define LDPC_DEGREE_MODEL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ldpc/rational.hpp"

namespace ldpc {

// Ordered left/right degree lists of a bipartite ensemble. Left nodes are the
// variable nodes (one per codeword symbol), right nodes the check nodes.
struct DegreeSequence {
    std::vector<std::int64_t> lambda;  // left degrees, sorted ascending
    std::vector<std::int64_t> rho;     // right degrees, sorted ascending
    std::int64_t edges = 0;

    std::int64_t n() const { return static_cast<std::int64_t>(lambda.size()); }
    std::int64_t m() const { return static_cast<std::int64_t>(rho.size()); }

    // Sorts, checks all degrees >= 1 (ZeroDegree) and equal socket totals
    // (SocketMismatch).
    static DegreeSequence validate(std::vector<std::int64_t> lambda,
                                   std::vector<std::int64_t> rho);

    // (n, dv, dc)-regular shorthand; m = n*dv/dc must be an integer.
    static DegreeSequence regular(std::int64_t n, std::int64_t dv, std::int64_t dc);
};

// Average-socket statistics of a degree sequence, in edges per left node.
// delta_n = n*delta and sigma_n = n*sigma are the integer socket counts the
// counting bounds work with; delta + sigma == |E|/n holds exactly.
struct EnsembleStats {
    Rational delta_l, sigma_l;
    Rational delta_r, sigma_r;
    Rational delta, sigma;
    std::int64_t edges = 0;
    std::int64_t n = 0, m = 0;
    std::int64_t delta_n = 0, sigma_n = 0;
    // The counting bounds assume at least as many left as right nodes; flagged
    // (not rejected) when violated so reports can carry the caveat.
    bool fewer_left_than_right = false;
};

EnsembleStats ensemble_stats(const DegreeSequence& ds);

// Natural-log binary entropy H(x) = -x ln x - (1-x) ln(1-x), H(0)=H(1)=0.
double binary_entropy(double x);

// Sufficient-condition value 2H(1/2) + delta*ln(delta/(delta+sigma))
//                                    + sigma*ln(sigma/(delta+sigma)).
// Negative means the ensemble almost surely has linear bisection width.
// Throws DegenerateSigma when sigma == 0.
double condition_value(const EnsembleStats& stats);

// The beta-refined condition
//   2H(1/2) + 4H(beta/(delta+sigma)) + beta*ln(beta/(sigma-beta))
//   + delta*ln(delta/(delta+sigma)) + sigma*ln((sigma-beta)/(delta+sigma))
// for 0 < beta < sigma (BetaOutOfRange otherwise). Tends to condition_value
// as beta -> 0 and to condition_value + 4H(sigma/(delta+sigma)) as
// beta -> sigma (the two log terms cancel in that limit).
double beta_condition_value(const EnsembleStats& stats, double beta);

// Largest beta in (0, sigma) with beta_condition_value <= 0, located by a
// geometric scan from the sigma end followed by bisection of the nearest sign
// change to within `tolerance`. Returns nullopt when condition_value >= 0.
// When no sign change exists below the scan floor (the condition stays
// nonpositive all the way to sigma), returns the closest scanned point.
std::optional<double> solve_beta(const EnsembleStats& stats, double tolerance);

}  // namespace ldpc

#endif
