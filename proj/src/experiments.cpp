#include "ldpc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "ldpc/bounds.hpp"
#include "ldpc/errors.hpp"
#include "ldpc/rng.hpp"

namespace ldpc {

namespace {

struct SequencePlan {
    DegreeSequence ds;
    EnsembleStats stats;
    std::uint64_t seq_seed = 0;
    double beta = 0.0;
    bool condition_met = false;
};

std::vector<SequencePlan> plan_family(const std::vector<DegreeSequence>& family,
                                      const McOptions& options) {
    std::vector<SequencePlan> plans;
    plans.reserve(family.size());
    for (std::size_t s = 0; s < family.size(); ++s) {
        SequencePlan plan;
        plan.ds = family[s];
        plan.stats = ensemble_stats(plan.ds);
        plan.seq_seed = derive_seed(options.master_seed, static_cast<std::uint64_t>(s));
        if (options.beta_override) {
            plan.beta = *options.beta_override;
            plan.condition_met = true;
        } else if (plan.stats.sigma_n > 0 && condition_value(plan.stats) < 0.0) {
            plan.beta = solve_beta(plan.stats, options.beta_tolerance).value_or(0.0);
            plan.condition_met = true;
        }
        plans.push_back(std::move(plan));
    }
    return plans;
}

TrialRecord run_trial(const SequencePlan& plan, std::int64_t trial, const McOptions& options) {
    TrialRecord rec;
    rec.seed = derive_seed(plan.seq_seed, static_cast<std::uint64_t>(trial));
    rec.n = plan.stats.n;
    rec.m = plan.stats.m;
    rec.condition_met = plan.condition_met;
    rec.beta_n_threshold = plan.beta * static_cast<double>(plan.stats.n);

    const Configuration config = sample_configuration(plan.ds, rec.seed);
    const Multigraph graph = to_multigraph(config);
    const Multigraph simple = simplify(graph);
    rec.multi_edge_units_removed = graph.total_multiplicity() - simple.total_multiplicity();

    if (graph.vertex_count() <= options.exact_cap) {
        rec.mbw = exact_mbw(graph, options.exact_cap).width;
        rec.mbw_simplified = exact_mbw(simple, options.exact_cap).width;
        rec.exact = true;
    } else {
        rec.mbw = heuristic_mbw(graph, options.heuristic_restarts, rec.seed).width;
        rec.mbw_simplified = heuristic_mbw(simple, options.heuristic_restarts, rec.seed).width;
        rec.exact = false;
    }
    rec.passed = static_cast<double>(rec.mbw) >= rec.beta_n_threshold;
    return rec;
}

}  // namespace

std::vector<TrialRecord> mc_mbw_trend(const std::vector<DegreeSequence>& family,
                                      const McOptions& options) {
    if (options.trials < 1) throw Error("trials must be >= 1");
    if (options.threads < 1) throw Error("threads must be >= 1");
    const auto plans = plan_family(family, options);

    const std::int64_t total =
        static_cast<std::int64_t>(family.size()) * options.trials;
    std::vector<TrialRecord> records(static_cast<std::size_t>(total));
    const auto work = [&](std::int64_t flat) {
        const auto seq = static_cast<std::size_t>(flat / options.trials);
        const std::int64_t trial = flat % options.trials;
        records[static_cast<std::size_t>(flat)] = run_trial(plans[seq], trial, options);
    };

    if (options.threads == 1 || total <= 1) {
        for (std::int64_t flat = 0; flat < total; ++flat) work(flat);
    } else {
        // Records land in fixed slots keyed by (sequence, trial), so the
        // result is identical no matter how the indices get scheduled.
        std::atomic<std::int64_t> next{0};
        std::vector<std::thread> pool;
        const int nthreads = std::min<std::int64_t>(options.threads, total);
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::int64_t flat = next.fetch_add(1);
                    if (flat >= total) return;
                    work(flat);
                }
            });
        }
        for (auto& th : pool) th.join();
    }
    return records;
}

std::vector<TrendSummary> summarize_trend(const std::vector<DegreeSequence>& family,
                                          const std::vector<TrialRecord>& records,
                                          const McOptions& options) {
    std::vector<TrendSummary> out;
    out.reserve(family.size());
    for (std::size_t s = 0; s < family.size(); ++s) {
        TrendSummary sum;
        sum.trials = options.trials;
        std::int64_t removed_total = 0;
        for (std::int64_t t = 0; t < options.trials; ++t) {
            const auto& rec =
                records[static_cast<std::size_t>(s) * static_cast<std::size_t>(options.trials) +
                        static_cast<std::size_t>(t)];
            sum.n = rec.n;
            sum.m = rec.m;
            sum.condition_met = rec.condition_met;
            sum.beta = rec.beta_n_threshold / static_cast<double>(rec.n);
            removed_total += rec.multi_edge_units_removed;
            if (rec.exact) {
                ++sum.exact_trials;
                if (rec.passed) ++sum.exact_passes;
            }
        }
        sum.fraction_exact_pass =
            sum.exact_trials > 0
                ? static_cast<double>(sum.exact_passes) / static_cast<double>(sum.exact_trials)
                : 0.0;
        sum.mean_removed_fraction =
            static_cast<double>(removed_total) /
            static_cast<double>(family[s].edges * options.trials);
        out.push_back(sum);
    }
    return out;
}

EnumerationReport enumerate_bisection_distribution(const DegreeSequence& ds, std::int64_t a_max,
                                                   std::int64_t enum_cap, int threads) {
    if (a_max < 0) throw Error("a_max must be nonnegative");
    if (threads < 1) throw Error("threads must be >= 1");
    if (ds.edges > enum_cap)
        throw TooLarge("enumeration over " + std::to_string(ds.edges) +
                       " sockets exceeds cap " + std::to_string(enum_cap));
    const EnsembleStats stats = ensemble_stats(ds);
    EnumerationReport report;
    report.n = stats.n;
    report.m = stats.m;
    report.edges = stats.edges;
    report.sigma_n = stats.sigma_n;
    report.total_configs = factorial_u64(ds.edges);
    report.mbw_histogram.assign(static_cast<std::size_t>(ds.edges) + 1, 0);

    const int nthreads =
        static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads),
                                                 report.total_configs));
    std::vector<std::vector<std::uint64_t>> partial(
        static_cast<std::size_t>(nthreads),
        std::vector<std::uint64_t>(report.mbw_histogram.size(), 0));
    const auto run_range = [&](int worker, std::uint64_t lo, std::uint64_t hi) {
        Configuration config;
        config.degrees = ds;
        config.pairing = pairing_at_lex_index(ds.edges, lo);
        auto& hist = partial[static_cast<std::size_t>(worker)];
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const Multigraph graph = to_multigraph(config);
            const BisectionResult r = exact_mbw(graph);
            ++hist[static_cast<std::size_t>(r.width)];
            std::next_permutation(config.pairing.begin(), config.pairing.end());
        }
    };

    if (nthreads <= 1) {
        run_range(0, 0, report.total_configs);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nthreads));
        const std::uint64_t chunk =
            (report.total_configs + static_cast<std::uint64_t>(nthreads) - 1) /
            static_cast<std::uint64_t>(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            const std::uint64_t lo = chunk * static_cast<std::uint64_t>(t);
            const std::uint64_t hi = std::min(report.total_configs, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(run_range, t, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& hist : partial)
        for (std::size_t w = 0; w < hist.size(); ++w) report.mbw_histogram[w] += hist[w];

    std::uint64_t running = 0;
    std::int64_t next_width = 0;
    for (std::int64_t a = 0; a <= a_max; ++a) {
        while (next_width <= a && next_width <= ds.edges)
            running += report.mbw_histogram[static_cast<std::size_t>(next_width++)];
        EnumerationRow row;
        row.a = a;
        row.count_leq = running;
        row.admissible = a < stats.sigma_n;
        if (row.admissible) {
            row.log_bound = bisection_count_log_bound(stats, a);
            row.bound_clamped = std::min(1.0, std::exp(row.log_bound));
        }
        report.rows.push_back(row);
    }
    return report;
}

namespace {

std::int64_t socket_threshold_default(const DegreeSequence& ds) {
    return ensemble_stats(ds).delta_n;
}

// min(left sockets, right sockets) of the subset flagged in `pick`.
bool subset_within(const DegreeSequence& ds, const std::vector<std::uint8_t>& pick,
                   std::int64_t threshold) {
    std::int64_t left = 0, right = 0;
    const auto n = static_cast<std::size_t>(ds.n());
    for (std::size_t v = 0; v < pick.size(); ++v) {
        if (!pick[v]) continue;
        if (v < n)
            left += ds.lambda[v];
        else
            right += ds.rho[v - n];
    }
    return std::min(left, right) <= threshold;
}

}  // namespace

bool socket_bound_check_against(const DegreeSequence& ds, std::int64_t threshold,
                                std::int64_t samples, std::uint64_t seed) {
    const std::int64_t v = ds.n() + ds.m();
    const auto half = static_cast<std::size_t>((v + 1) / 2);
    if (v <= 16) {
        std::vector<std::uint8_t> pick(static_cast<std::size_t>(v), 0);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(half), 1);
        do {
            if (!subset_within(ds, pick, threshold)) return false;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return true;
    }
    Rng rng(seed);
    std::vector<std::int64_t> ids(static_cast<std::size_t>(v));
    for (std::int64_t s = 0; s < samples; ++s) {
        std::iota(ids.begin(), ids.end(), std::int64_t{0});
        for (std::size_t i = ids.size() - 1; i >= 1; --i) {
            const auto j = static_cast<std::size_t>(rng.bounded(i + 1));
            std::swap(ids[i], ids[j]);
        }
        std::vector<std::uint8_t> pick(static_cast<std::size_t>(v), 0);
        for (std::size_t i = 0; i < half; ++i) pick[static_cast<std::size_t>(ids[i])] = 1;
        if (!subset_within(ds, pick, threshold)) return false;
    }
    return true;
}

bool socket_bound_check(const DegreeSequence& ds, std::int64_t samples, std::uint64_t seed) {
    return socket_bound_check_against(ds, socket_threshold_default(ds), samples, seed);
}

}  // namespace ldpc
