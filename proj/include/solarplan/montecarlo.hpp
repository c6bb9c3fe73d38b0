#ifndef SOLARPLAN_MONTECARLO_HPP
#define SOLARPLAN_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "solarplan/equivalence.hpp"
#include "solarplan/plant_solver.hpp"
#include "solarplan/rooftop.hpp"
#include "solarplan/scenario.hpp"

namespace solarplan {

// Reproducibility contract (see docs/rng.md): replication r draws from a
// splitmix64 stream whose initial state is
//   mix64(seed + (r + 1) * 0x9E3779B97F4A7C15)
// where mix64 is the splitmix64 finalizer. Uniform doubles take the top 53
// bits. The contract is fixed; changing it changes every report.
class Rng {
public:
    static Rng substream(std::uint64_t seed, std::uint64_t replication);
    explicit Rng(std::uint64_t state) : state_(state) {}

    std::uint64_t next_u64();
    // Uniform on [lo, hi); returns lo exactly when lo == hi.
    double uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

struct DemandSample {
    std::vector<std::vector<double>> values;  // [plant][period]
};

// One independent uniform draw per plant-period, plants then periods in
// index order.
DemandSample sample_demand(const PlanningScenario& scenario, Rng& substream);

struct SimulationReport {
    int replications = 0;
    std::uint64_t seed = 0;
    double cost_mean = 0.0;
    double cost_std = 0.0;  // sample standard deviation, 0 for n == 1
    double cost_p05 = 0.0;
    double cost_p50 = 0.0;
    double cost_p95 = 0.0;
    std::vector<double> selection_frequency;       // per plant
    std::vector<double> per_replication_costs;     // by replication index
    std::vector<std::vector<bool>> per_replication_selection;
};

// Draws `replications` demand samples, re-solves selection and dispatch for
// each, and aggregates. The report is a pure function of
// (scenario, replications, seed): any thread count produces identical
// results because replication r always uses substream (seed, r) and
// aggregation runs in replication order.
SimulationReport run_simulation(const PlanningScenario& scenario, int replications,
                                std::uint64_t seed, int threads = 1);

struct ComparisonReport {
    std::string model1_source;  // "optimal" or "simulation_mean"
    double model1_cost = 0.0;
    double model2_cost_at_stationary = 0.0;
    double model2_cost_at_z_star = 0.0;
    double z1 = 0.0;
    double n_star = 0.0;
    std::string winner;  // "plants", "rooftop", or "tie"
    std::string note;    // active variant flags
};

ComparisonReport compare_models(const DispatchSolution& plant_solution,
                                const RooftopSolution& rooftop_solution,
                                const EquivalenceResult& equivalence,
                                const ModelVariant& variant);
ComparisonReport compare_models(const SimulationReport& plant_report,
                                const RooftopSolution& rooftop_solution,
                                const EquivalenceResult& equivalence,
                                const ModelVariant& variant);

std::string describe_variant(const ModelVariant& variant);

}  // namespace solarplan

#endif
