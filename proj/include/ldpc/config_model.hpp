#ifndef LDPC_CONFIG_MODEL_HPP
#define LDPC_CONFIG_MODEL_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "ldpc/degree_model.hpp"

namespace ldpc {

// Socket-level pairing: pairing[i] is the right socket wired to left socket i.
// Sockets are numbered node-major over the sorted degree sequence, so the
// pairing is a permutation of {0, ..., |E|-1} and determines the multigraph.
struct Configuration {
    DegreeSequence degrees;
    std::vector<std::int64_t> pairing;
};

// Bipartite multigraph: edge multiplicities keyed by (left node, right node).
struct Multigraph {
    std::int64_t n_left = 0;
    std::int64_t n_right = 0;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> edge_mult;

    std::int64_t vertex_count() const { return n_left + n_right; }
    std::int64_t total_multiplicity() const;
    std::vector<std::int64_t> left_degrees() const;
    std::vector<std::int64_t> right_degrees() const;
};

// Uniform draw over all |E|! pairings via seeded Fisher-Yates; deterministic
// for a fixed seed.
Configuration sample_configuration(const DegreeSequence& ds, std::uint64_t seed);

inline constexpr std::int64_t kDefaultEnumCap = 9;

// Streams every pairing exactly once in lexicographic order. Throws TooLarge
// when |E| exceeds the cap (|E|! enumerations get expensive fast).
class ConfigurationEnumerator {
  public:
    explicit ConfigurationEnumerator(DegreeSequence ds, std::int64_t cap = kDefaultEnumCap);

    std::uint64_t total() const { return total_; }
    // Copies the next configuration into `out`; false when exhausted.
    bool next(Configuration& out);

  private:
    DegreeSequence ds_;
    std::vector<std::int64_t> current_;
    std::uint64_t emitted_ = 0;
    std::uint64_t total_ = 0;
};

// Lexicographic rank of a pairing / pairing at a given rank. Only valid while
// |E|! fits in 64 bits (|E| <= 20); used for uniformity tests and for
// partitioning enumeration ranges across workers.
std::uint64_t pairing_lex_index(const std::vector<std::int64_t>& pairing);
std::vector<std::int64_t> pairing_at_lex_index(std::int64_t num_sockets, std::uint64_t index);
std::uint64_t factorial_u64(std::int64_t k);

// Multiplicity of (i, j) = number of paired sockets between left node i and
// right node j.
Multigraph to_multigraph(const Configuration& config);

// Standard multi-edge rule: multiplicity k becomes k mod 2 (even multi-edges
// deleted, odd ones collapsed to a single edge).
Multigraph simplify(const Multigraph& graph);

}  // namespace ldpc

#endif
