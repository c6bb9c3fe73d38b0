#include "solarplan/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace solarplan {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

}  // namespace

Rng Rng::substream(std::uint64_t seed, std::uint64_t replication) {
    return Rng(mix64(seed + (replication + 1) * kGolden));
}

std::uint64_t Rng::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double Rng::uniform(double lo, double hi) {
    if (lo == hi) return lo;
    const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

DemandSample sample_demand(const PlanningScenario& scenario, Rng& substream) {
    DemandSample sample;
    sample.values.resize(scenario.plant_count());
    for (int j = 0; j < scenario.plant_count(); ++j) {
        sample.values[j].resize(scenario.period_count);
        for (int t = 0; t < scenario.period_count; ++t) {
            const PlantPeriodParams& q = scenario.plants[j].periods[t];
            sample.values[j][t] = substream.uniform(q.demand_lo, q.demand_hi);
        }
    }
    return sample;
}

namespace {

PlanningScenario with_demands(const PlanningScenario& scenario, const DemandSample& sample) {
    PlanningScenario fixed = scenario;
    for (int j = 0; j < fixed.plant_count(); ++j) {
        for (int t = 0; t < fixed.period_count; ++t) {
            fixed.plants[j].periods[t].demand_lo = sample.values[j][t];
            fixed.plants[j].periods[t].demand_hi = sample.values[j][t];
        }
    }
    return fixed;
}

// Type-7 quantile (linear interpolation between order statistics) on an
// already-sorted vector.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const std::size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double h = q * static_cast<double>(n - 1);
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= n) return sorted[n - 1];
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

SimulationReport run_simulation(const PlanningScenario& scenario, int replications,
                                std::uint64_t seed, int threads) {
    auto violations = validate_scenario(scenario);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
    if (replications < 1) {
        throw InvalidParameterError("replications must be >= 1, got " +
                                    std::to_string(replications));
    }
    const int m = scenario.plant_count();
    const int n = replications;

    std::vector<double> costs(n);
    std::vector<std::vector<bool>> selections(n);
    std::vector<std::string> failures(n);

    auto run_one = [&](int r) {
        try {
            Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(r));
            const DemandSample sample = sample_demand(scenario, rng);
            const DispatchSolution solution = solve_exact(with_demands(scenario, sample));
            costs[r] = solution.total_cost;
            selections[r] = solution.selection;
        } catch (const std::exception& e) {
            failures[r] = e.what();
        }
    };

    const int workers = std::max(1, threads);
    if (workers == 1 || n == 1) {
        for (int r = 0; r < n; ++r) run_one(r);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int r = w; r < n; r += workers) run_one(r);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (int r = 0; r < n; ++r) {
        if (!failures[r].empty()) {
            throw ReplicationError(r, failures[r]);
        }
    }

    SimulationReport report;
    report.replications = n;
    report.seed = seed;
    report.per_replication_costs = costs;
    report.per_replication_selection = selections;

    // Mean and deviations are computed relative to the first cost so that a
    // degenerate run of identical values collapses to exactly (cost, 0).
    const double base = costs[0];
    double shift_sum = 0.0;
    for (double c : costs) shift_sum += c - base;
    report.cost_mean = base + shift_sum / n;
    double ss = 0.0;
    for (double c : costs) {
        const double d = c - report.cost_mean;
        ss += d * d;
    }
    report.cost_std = n > 1 ? std::sqrt(ss / (n - 1)) : 0.0;

    std::vector<double> sorted = costs;
    std::sort(sorted.begin(), sorted.end());
    report.cost_p05 = quantile_sorted(sorted, 0.05);
    report.cost_p50 = quantile_sorted(sorted, 0.50);
    report.cost_p95 = quantile_sorted(sorted, 0.95);

    report.selection_frequency.assign(m, 0.0);
    for (const auto& sel : selections) {
        for (int j = 0; j < m; ++j) {
            if (sel[j]) report.selection_frequency[j] += 1.0;
        }
    }
    for (int j = 0; j < m; ++j) report.selection_frequency[j] /= n;
    return report;
}

std::string describe_variant(const ModelVariant& variant) {
    std::ostringstream out;
    out << "unselected_terms=" << to_string(variant.unselected_terms)
        << " surplus=" << to_string(variant.surplus) << " discount_denominator_eq16="
        << (variant.discount_denominator_eq16 ? "true" : "false")
        << " eq16_lower_bound=" << variant.eq16_lower_bound;
    return out.str();
}

namespace {

ComparisonReport compare_impl(const std::string& source, double model1_cost,
                              const RooftopSolution& rooftop, const EquivalenceResult& eq,
                              const ModelVariant& variant) {
    ComparisonReport report;
    report.model1_source = source;
    report.model1_cost = model1_cost;
    report.model2_cost_at_stationary = rooftop.cost_at_stationary;
    report.model2_cost_at_z_star = rooftop.cost_at_z_star;
    report.z1 = eq.z1;
    report.n_star = eq.n_star_numeric;
    const double m1 = std::abs(model1_cost);
    const double m2 = std::abs(rooftop.cost_at_stationary);
    report.winner = m1 == m2 ? "tie" : (m2 < m1 ? "rooftop" : "plants");
    report.note = "costs compared by magnitude; variant: " + describe_variant(variant);
    return report;
}

}  // namespace

ComparisonReport compare_models(const DispatchSolution& plant_solution,
                                const RooftopSolution& rooftop_solution,
                                const EquivalenceResult& equivalence,
                                const ModelVariant& variant) {
    return compare_impl("optimal", plant_solution.total_cost, rooftop_solution, equivalence,
                        variant);
}

ComparisonReport compare_models(const SimulationReport& plant_report,
                                const RooftopSolution& rooftop_solution,
                                const EquivalenceResult& equivalence,
                                const ModelVariant& variant) {
    return compare_impl("simulation_mean", plant_report.cost_mean, rooftop_solution, equivalence,
                        variant);
}

}  // namespace solarplan
