#include "ldpc/config_model.hpp"

#include <algorithm>
#include <numeric>

#include "ldpc/errors.hpp"
#include "ldpc/rng.hpp"

namespace ldpc {

std::int64_t Multigraph::total_multiplicity() const {
    std::int64_t total = 0;
    for (const auto& [edge, mult] : edge_mult) total += mult;
    return total;
}

std::vector<std::int64_t> Multigraph::left_degrees() const {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n_left), 0);
    for (const auto& [edge, mult] : edge_mult) deg[static_cast<std::size_t>(edge.first)] += mult;
    return deg;
}

std::vector<std::int64_t> Multigraph::right_degrees() const {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n_right), 0);
    for (const auto& [edge, mult] : edge_mult) deg[static_cast<std::size_t>(edge.second)] += mult;
    return deg;
}

Configuration sample_configuration(const DegreeSequence& ds, std::uint64_t seed) {
    Configuration config;
    config.degrees = ds;
    config.pairing.resize(static_cast<std::size_t>(ds.edges));
    std::iota(config.pairing.begin(), config.pairing.end(), std::int64_t{0});
    Rng rng(seed);
    for (std::int64_t i = ds.edges - 1; i >= 1; --i) {
        const auto j = static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(i + 1)));
        std::swap(config.pairing[static_cast<std::size_t>(i)],
                  config.pairing[static_cast<std::size_t>(j)]);
    }
    return config;
}

std::uint64_t factorial_u64(std::int64_t k) {
    if (k < 0 || k > 20) throw TooLarge("factorial_u64 requires 0 <= k <= 20");
    std::uint64_t r = 1;
    for (std::int64_t i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

ConfigurationEnumerator::ConfigurationEnumerator(DegreeSequence ds, std::int64_t cap)
    : ds_(std::move(ds)) {
    if (ds_.edges > cap)
        throw TooLarge("enumeration over " + std::to_string(ds_.edges) +
                       " sockets exceeds cap " + std::to_string(cap));
    current_.resize(static_cast<std::size_t>(ds_.edges));
    std::iota(current_.begin(), current_.end(), std::int64_t{0});
    total_ = factorial_u64(ds_.edges);
}

bool ConfigurationEnumerator::next(Configuration& out) {
    if (emitted_ >= total_) return false;
    if (emitted_ > 0) std::next_permutation(current_.begin(), current_.end());
    out.degrees = ds_;
    out.pairing = current_;
    ++emitted_;
    return true;
}

std::uint64_t pairing_lex_index(const std::vector<std::int64_t>& pairing) {
    const auto e = static_cast<std::int64_t>(pairing.size());
    std::uint64_t index = 0;
    for (std::int64_t i = 0; i < e; ++i) {
        std::int64_t smaller = 0;
        for (std::int64_t j = i + 1; j < e; ++j)
            if (pairing[static_cast<std::size_t>(j)] < pairing[static_cast<std::size_t>(i)])
                ++smaller;
        index += static_cast<std::uint64_t>(smaller) * factorial_u64(e - 1 - i);
    }
    return index;
}

std::vector<std::int64_t> pairing_at_lex_index(std::int64_t num_sockets, std::uint64_t index) {
    std::vector<std::int64_t> pool(static_cast<std::size_t>(num_sockets));
    std::iota(pool.begin(), pool.end(), std::int64_t{0});
    std::vector<std::int64_t> out;
    out.reserve(pool.size());
    for (std::int64_t i = num_sockets; i >= 1; --i) {
        const std::uint64_t block = factorial_u64(i - 1);
        const auto pick = static_cast<std::size_t>(index / block);
        index %= block;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

namespace {

// socket index -> owning node, from degree prefix sums.
std::vector<std::int64_t> socket_owners(const std::vector<std::int64_t>& degrees,
                                        std::int64_t edges) {
    std::vector<std::int64_t> owner(static_cast<std::size_t>(edges));
    std::int64_t socket = 0;
    for (std::size_t node = 0; node < degrees.size(); ++node)
        for (std::int64_t k = 0; k < degrees[node]; ++k)
            owner[static_cast<std::size_t>(socket++)] = static_cast<std::int64_t>(node);
    return owner;
}

}  // namespace

Multigraph to_multigraph(const Configuration& config) {
    const auto& ds = config.degrees;
    if (static_cast<std::int64_t>(config.pairing.size()) != ds.edges)
        throw Error("pairing size does not match socket count");
    const auto left_owner = socket_owners(ds.lambda, ds.edges);
    const auto right_owner = socket_owners(ds.rho, ds.edges);
    Multigraph graph;
    graph.n_left = ds.n();
    graph.n_right = ds.m();
    for (std::int64_t s = 0; s < ds.edges; ++s) {
        const std::int64_t i = left_owner[static_cast<std::size_t>(s)];
        const std::int64_t j =
            right_owner[static_cast<std::size_t>(config.pairing[static_cast<std::size_t>(s)])];
        ++graph.edge_mult[{i, j}];
    }
    return graph;
}

Multigraph simplify(const Multigraph& graph) {
    Multigraph out;
    out.n_left = graph.n_left;
    out.n_right = graph.n_right;
    for (const auto& [edge, mult] : graph.edge_mult)
        if (mult % 2 == 1) out.edge_mult[edge] = 1;
    return out;
}

}  // namespace ldpc
