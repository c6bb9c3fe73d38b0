#ifndef SOLARPLAN_PLANT_SOLVER_HPP
#define SOLARPLAN_PLANT_SOLVER_HPP

#include <vector>

#include "solarplan/errors.hpp"
#include "solarplan/scenario.hpp"

namespace solarplan {

struct CostBreakdown {
    double setup_cost_total = 0.0;
    double operational_transfer_total = 0.0;
    double surplus_total = 0.0;
    double total() const {
        return setup_cost_total + operational_transfer_total + surplus_total;
    }
};

// One feasible point of the plant model. production/surplus are indexed
// [plant][period]. surplus holds the signed balance production - demand for
// selected plants (variant clamping applies to the cost only, never to the
// reported matrix); unselected plants carry 0 under selected_only and
// -demand under literal_signed.
struct DispatchSolution {
    std::vector<bool> selection;
    std::vector<std::vector<double>> production;
    std::vector<std::vector<double>> surplus;
    double total_cost = 0.0;
    CostBreakdown breakdown;
};

struct ObjectiveValue {
    double total_cost = 0.0;
    CostBreakdown breakdown;
    std::vector<std::vector<double>> surplus;
};

// Cost of a fixed (selection, production) point under the scenario's
// variant. Preconditions: exactly required_count plants selected, production
// inside [cap_min, cap_max] for selected plants and 0 for unselected;
// anything else raises ConstraintViolationError naming the constraint.
ObjectiveValue evaluate_objective(const PlanningScenario& scenario,
                                  const std::vector<bool>& selection,
                                  const std::vector<std::vector<double>>& production);

struct PeriodDispatch {
    double z = 0.0;
    double contribution = 0.0;
};

// Optimal production level for one selected plant-period. The per-period
// cost is linear in z (piecewise linear under clamping), so the optimum is
// at cap_min, cap_max, or the demand kink; ties break toward the smallest z.
// `discount` is the period's discount factor.
PeriodDispatch solve_period_dispatch(const PlantPeriodParams& params, double discount,
                                     const ModelVariant& variant);

// Globally optimal solution by enumerating all required_count-subsets of
// plants. Demands must be point values (demand_lo == demand_hi); stochastic
// scenarios belong to the simulation engine. Among equal-cost selections the
// lexicographically smallest selected-index list wins. Plant counts above 30
// are rejected.
DispatchSolution solve_exact(const PlanningScenario& scenario);

// Independent verification oracle: exhaustive search over all selections
// with a uniform grid of `grid_points` levels per plant-period (endpoints
// and the demand kink always included). Shares nothing with solve_exact but
// the data types.
DispatchSolution oracle_grid_solve(const PlanningScenario& scenario, int grid_points);

// Feasibility check of a finished solution against the scenario, written as
// its own pass over the constraints rather than trusting solver bookkeeping.
// Empty result means feasible and internally consistent.
std::vector<Violation> verify_dispatch(const PlanningScenario& scenario,
                                       const DispatchSolution& solution);

}  // namespace solarplan

#endif
