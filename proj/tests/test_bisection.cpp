#include <doctest.h>

#include <algorithm>

#include "ldpc/bisection.hpp"
#include "ldpc/config_model.hpp"
#include "ldpc/errors.hpp"
#include "test_support.hpp"

using namespace ldpc;
using ldpc_test::oracle_mbw;

namespace {

Multigraph four_cycle() {
    Multigraph g;
    g.n_left = 2;
    g.n_right = 2;
    g.edge_mult[{0, 0}] = 1;
    g.edge_mult[{0, 1}] = 1;
    g.edge_mult[{1, 0}] = 1;
    g.edge_mult[{1, 1}] = 1;
    return g;
}

}  // namespace

TEST_CASE("bisection width of explicit assignments") {
    const auto g = four_cycle();
    // vertex order: v0, v1, c0, c1
    CHECK(bisection_width(g, {0, 1, 0, 1}) == 2);  // {v0,c0} | {v1,c1}
    CHECK(bisection_width(g, {0, 0, 1, 1}) == 4);  // every edge crosses
    CHECK_THROWS_AS(bisection_width(g, {0, 0, 0, 1}), Unbalanced);
    CHECK_THROWS_AS(bisection_width(g, {0, 1, 0}), Error);

    Multigraph edgeless;
    edgeless.n_left = 2;
    edgeless.n_right = 2;
    // no edges at all; any balanced split has width 0
    CHECK(bisection_width(edgeless, {0, 1, 1, 0}) == 0);
}

TEST_CASE("exact minimum bisection on the named small graphs") {
    // path v0 - c0 - v1
    const auto path = to_multigraph(
        Configuration{DegreeSequence::validate({1, 1}, {2}), {0, 1}});
    const auto path_result = exact_mbw(path);
    CHECK(path_result.width == 1);
    CHECK(path_result.exact);
    CHECK(bisection_width(path, path_result.side) == path_result.width);

    const auto cycle_result = exact_mbw(four_cycle());
    CHECK(cycle_result.width == 2);

    // one doubled edge: the only balanced split separates the endpoints
    const auto doubled = to_multigraph(
        Configuration{DegreeSequence::validate({2}, {2}), {0, 1}});
    CHECK(exact_mbw(doubled).width == 2);
}

TEST_CASE("exact solver refuses graphs beyond the cap") {
    Multigraph wide;
    wide.n_left = 14;
    wide.n_right = 14;
    wide.edge_mult[{0, 0}] = 1;
    CHECK_THROWS_AS(exact_mbw(wide), TooLarge);
    CHECK_NOTHROW(exact_mbw(wide, 28));
}

TEST_CASE("exact solver agrees with the subset-scan oracle") {
    Rng rng(0x5eed0004);
    for (int iter = 0; iter < 120; ++iter) {
        const auto g = ldpc_test::random_multigraph(rng, 11);
        const auto result = exact_mbw(g);
        CHECK(result.width == oracle_mbw(g));
        CHECK(bisection_width(g, result.side) == result.width);
    }
}

TEST_CASE("exact solver agrees with the oracle over a full enumeration") {
    const auto ds = DegreeSequence::validate({2, 2}, {2, 2});
    ConfigurationEnumerator stream(ds);
    Configuration config;
    while (stream.next(config)) {
        const auto g = to_multigraph(config);
        CHECK(exact_mbw(g).width == oracle_mbw(g));
    }
}

TEST_CASE("exact width is invariant under vertex relabeling") {
    Rng rng(0x5eed0005);
    for (int iter = 0; iter < 40; ++iter) {
        const auto g = ldpc_test::random_multigraph(rng, 12);
        const auto width = exact_mbw(g).width;
        for (int r = 0; r < 5; ++r)
            CHECK(exact_mbw(ldpc_test::relabel(g, rng)).width == width);
    }
}

TEST_CASE("disjoint equal halves split for free") {
    Multigraph g;
    g.n_left = 2;
    g.n_right = 2;
    g.edge_mult[{0, 0}] = 3;
    g.edge_mult[{1, 1}] = 2;
    CHECK(exact_mbw(g).width == 0);
}

TEST_CASE("heuristic is an upper bound and hits small optima") {
    Rng rng(0x5eed0006);
    for (int iter = 0; iter < 100; ++iter) {
        const auto g = ldpc_test::random_multigraph(rng, 12);
        const auto exact = exact_mbw(g);
        const auto rough = heuristic_mbw(g, 4, rng.next_u64());
        CHECK_FALSE(rough.exact);
        CHECK(rough.width >= exact.width);
        CHECK(bisection_width(g, rough.side) == rough.width);
    }

    CHECK(heuristic_mbw(four_cycle(), 8, 7).width == 2);

    Multigraph edgeless;
    edgeless.n_left = 3;
    edgeless.n_right = 1;
    CHECK(heuristic_mbw(edgeless, 1, 0).width == 0);
    CHECK_THROWS_AS(heuristic_mbw(edgeless, 0, 0), Error);
}

TEST_CASE("heuristic is deterministic in the seed") {
    Rng rng(0x5eed0007);
    const auto g = ldpc_test::random_multigraph(rng, 14);
    const auto a = heuristic_mbw(g, 6, 123);
    const auto b = heuristic_mbw(g, 6, 123);
    CHECK(a.width == b.width);
    CHECK(a.side == b.side);
}

TEST_CASE("simplification moves the minimum width by at most the removed units") {
    const auto ds = DegreeSequence::validate({2, 2}, {2, 2});
    ConfigurationEnumerator stream(ds);
    Configuration config;
    while (stream.next(config)) {
        const auto g = to_multigraph(config);
        const auto s = simplify(g);
        const std::int64_t removed = g.total_multiplicity() - s.total_multiplicity();
        const auto wg = exact_mbw(g).width;
        const auto ws = exact_mbw(s).width;
        CHECK(ws <= wg + removed);
        CHECK(ws >= wg - removed);
    }

    Rng rng(0x5eed0008);
    for (int iter = 0; iter < 60; ++iter) {
        const auto g = ldpc_test::random_multigraph(rng, 10);
        const auto s = simplify(g);
        const std::int64_t removed = g.total_multiplicity() - s.total_multiplicity();
        const auto wg = exact_mbw(g).width;
        const auto ws = exact_mbw(s).width;
        CHECK(ws <= wg + removed);
        CHECK(ws >= wg - removed);
    }
}
