#include "ldpc/bisection.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ldpc/errors.hpp"
#include "ldpc/rng.hpp"

namespace ldpc {

namespace {

// Dense symmetric multiplicity matrix over the n_left + n_right vertices.
std::vector<std::vector<std::int64_t>> weight_matrix(const Multigraph& graph) {
    const auto v = static_cast<std::size_t>(graph.vertex_count());
    std::vector<std::vector<std::int64_t>> w(v, std::vector<std::int64_t>(v, 0));
    for (const auto& [edge, mult] : graph.edge_mult) {
        const auto a = static_cast<std::size_t>(edge.first);
        const auto b = static_cast<std::size_t>(graph.n_left + edge.second);
        w[a][b] += mult;
        w[b][a] += mult;
    }
    return w;
}

void check_balance(std::int64_t count0, std::int64_t count1) {
    const std::int64_t diff = count0 > count1 ? count0 - count1 : count1 - count0;
    if (diff > 1)
        throw Unbalanced("side sizes " + std::to_string(count0) + " and " +
                         std::to_string(count1) + " differ by more than 1");
}

struct BranchState {
    const std::vector<std::vector<std::int64_t>>* w = nullptr;
    std::vector<std::int64_t> order;       // visit order (degree-descending)
    std::vector<std::int8_t> side;         // -1 unassigned, else 0/1, by vertex id
    std::vector<std::int64_t> cost_to[2];  // crossing cost if v joins side 1-s
    std::int64_t cap[2] = {0, 0};
    std::int64_t count[2] = {0, 0};
    std::int64_t cut = 0;
    std::int64_t best = 0;
    std::vector<std::uint8_t> best_side;
    bool have_best = false;
};

// cost_to[s][v] = total multiplicity from v into vertices already on side s.
void assign(BranchState& st, std::int64_t v, int s) {
    st.cut += st.cost_to[1 - s][static_cast<std::size_t>(v)];
    st.side[static_cast<std::size_t>(v)] = static_cast<std::int8_t>(s);
    ++st.count[s];
    const auto& row = (*st.w)[static_cast<std::size_t>(v)];
    auto& cost = st.cost_to[s];
    for (std::size_t u = 0; u < row.size(); ++u) cost[u] += row[u];
}

void unassign(BranchState& st, std::int64_t v, int s) {
    const auto& row = (*st.w)[static_cast<std::size_t>(v)];
    auto& cost = st.cost_to[s];
    for (std::size_t u = 0; u < row.size(); ++u) cost[u] -= row[u];
    --st.count[s];
    st.side[static_cast<std::size_t>(v)] = -1;
    st.cut -= st.cost_to[1 - s][static_cast<std::size_t>(v)];
}

void record_completion(BranchState& st, int forced_side) {
    std::int64_t total = st.cut;
    for (std::size_t v = 0; v < st.side.size(); ++v)
        if (st.side[v] < 0) total += st.cost_to[1 - forced_side][v];
    if (total < st.best) {
        st.best = total;
        st.best_side.resize(st.side.size());
        for (std::size_t v = 0; v < st.side.size(); ++v)
            st.best_side[v] = st.side[v] < 0 ? static_cast<std::uint8_t>(forced_side)
                                             : static_cast<std::uint8_t>(st.side[v]);
        st.have_best = true;
    }
}

void branch(BranchState& st, std::size_t pos) {
    if (st.count[0] == st.cap[0]) {
        record_completion(st, 1);
        return;
    }
    if (st.count[1] == st.cap[1]) {
        record_completion(st, 0);
        return;
    }
    // Unassigned vertices each contribute at least their cheaper attachment.
    std::int64_t bound = st.cut;
    for (std::size_t v = 0; v < st.side.size(); ++v)
        if (st.side[v] < 0) bound += std::min(st.cost_to[0][v], st.cost_to[1][v]);
    if (bound >= st.best) return;

    const std::int64_t v = st.order[pos];
    for (int s = 0; s <= 1; ++s) {
        if (st.count[s] >= st.cap[s]) continue;
        assign(st, v, s);
        if (st.cut < st.best) branch(st, pos + 1);
        unassign(st, v, s);
    }
}

BisectionResult edgeless_result(std::int64_t vertices, bool exact) {
    BisectionResult r;
    r.side.assign(static_cast<std::size_t>(vertices), 0);
    const auto half = static_cast<std::size_t>((vertices + 1) / 2);
    for (std::size_t v = half; v < r.side.size(); ++v) r.side[v] = 1;
    r.width = 0;
    r.exact = exact;
    return r;
}

}  // namespace

std::int64_t bisection_width(const Multigraph& graph, const std::vector<std::uint8_t>& side) {
    if (static_cast<std::int64_t>(side.size()) != graph.vertex_count())
        throw Error("assignment must cover all " + std::to_string(graph.vertex_count()) +
                    " vertices");
    std::int64_t count0 = 0;
    for (const auto s : side) {
        if (s > 1) throw Error("side labels must be 0 or 1");
        if (s == 0) ++count0;
    }
    check_balance(count0, static_cast<std::int64_t>(side.size()) - count0);
    std::int64_t width = 0;
    for (const auto& [edge, mult] : graph.edge_mult) {
        const auto a = static_cast<std::size_t>(edge.first);
        const auto b = static_cast<std::size_t>(graph.n_left + edge.second);
        if (side[a] != side[b]) width += mult;
    }
    return width;
}

BisectionResult exact_mbw(const Multigraph& graph, std::int64_t exact_cap) {
    const std::int64_t v = graph.vertex_count();
    if (v > exact_cap)
        throw TooLarge("exact bisection over " + std::to_string(v) + " vertices exceeds cap " +
                       std::to_string(exact_cap));
    if (v == 0) return {{}, 0, true};
    if (graph.edge_mult.empty()) return edgeless_result(v, true);

    BranchState st;
    const auto w = weight_matrix(graph);
    st.w = &w;
    st.side.assign(static_cast<std::size_t>(v), -1);
    st.cost_to[0].assign(static_cast<std::size_t>(v), 0);
    st.cost_to[1].assign(static_cast<std::size_t>(v), 0);
    st.cap[0] = (v + 1) / 2;
    st.cap[1] = v / 2;

    st.order.resize(static_cast<std::size_t>(v));
    std::iota(st.order.begin(), st.order.end(), std::int64_t{0});
    std::vector<std::int64_t> degree(static_cast<std::size_t>(v), 0);
    for (std::size_t a = 0; a < w.size(); ++a)
        degree[a] = std::accumulate(w[a].begin(), w[a].end(), std::int64_t{0});
    std::stable_sort(st.order.begin(), st.order.end(), [&](std::int64_t a, std::int64_t b) {
        return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });

    // Warm-start incumbent; +1 keeps every optimal assignment reachable so the
    // reported one depends only on the search order.
    std::int64_t incumbent = graph.total_multiplicity();
    if (v > 12) incumbent = heuristic_mbw(graph, 8, 0x1db3f5a2c917e604ull).width;
    st.best = incumbent + 1;

    std::size_t start = 0;
    if (v % 2 == 0) {
        assign(st, st.order[0], 0);  // mirror symmetry
        start = 1;
    }
    branch(st, start);
    if (!st.have_best) throw Error("internal: exhaustive bisection search found no assignment");

    BisectionResult result;
    result.side = st.best_side;
    result.width = st.best;
    result.exact = true;
    return result;
}

BisectionResult heuristic_mbw(const Multigraph& graph, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw Error("restarts must be >= 1");
    const std::int64_t v = graph.vertex_count();
    if (v == 0) return {{}, 0, false};
    if (graph.edge_mult.empty()) return edgeless_result(v, false);

    const auto w = weight_matrix(graph);
    const auto cap0 = static_cast<std::size_t>((v + 1) / 2);
    Rng rng(seed);

    BisectionResult best;
    best.width = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> ids(static_cast<std::size_t>(v));
    for (int r = 0; r < restarts; ++r) {
        std::iota(ids.begin(), ids.end(), std::int64_t{0});
        for (std::size_t i = ids.size() - 1; i >= 1; --i) {
            const auto j = static_cast<std::size_t>(rng.bounded(i + 1));
            std::swap(ids[i], ids[j]);
        }
        std::vector<std::uint8_t> side(static_cast<std::size_t>(v), 1);
        for (std::size_t i = 0; i < cap0; ++i) side[static_cast<std::size_t>(ids[i])] = 0;

        // D[v] = external - internal crossing cost; swap gain is
        // D[a] + D[b] - 2 w[a][b]. Width strictly decreases each round.
        for (;;) {
            std::vector<std::int64_t> d(static_cast<std::size_t>(v), 0);
            for (std::size_t a = 0; a < d.size(); ++a)
                for (std::size_t b = 0; b < d.size(); ++b)
                    d[a] += side[a] != side[b] ? w[a][b] : -w[a][b];
            std::int64_t best_gain = 0;
            std::size_t best_a = 0, best_b = 0;
            for (std::size_t a = 0; a < d.size(); ++a) {
                if (side[a] != 0) continue;
                for (std::size_t b = 0; b < d.size(); ++b) {
                    if (side[b] != 1) continue;
                    const std::int64_t gain = d[a] + d[b] - 2 * w[a][b];
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_a = a;
                        best_b = b;
                    }
                }
            }
            if (best_gain <= 0) break;
            side[best_a] = 1;
            side[best_b] = 0;
        }

        const std::int64_t width = bisection_width(graph, side);
        if (width < best.width) {
            best.width = width;
            best.side = side;
        }
    }
    best.exact = false;
    return best;
}

}  // namespace ldpc
