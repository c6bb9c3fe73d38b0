#include "solarplan/plant_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "solarplan/finmath.hpp"

namespace solarplan {

namespace {

std::vector<double> period_discounts(const PlanningScenario& s) {
    std::vector<double> disc(s.period_count);
    for (int t = 0; t < s.period_count; ++t) {
        disc[t] = discount_factor(s.discount_rate, t + 1);
    }
    return disc;
}

double clamp_surplus(double k, SurplusRule rule) {
    return rule == SurplusRule::clamped_nonneg ? std::max(0.0, k) : k;
}

// Lexicographic enumeration of k-subsets of {0..m-1}. Returns false when
// exhausted.
bool next_combination(std::vector<int>& c, int m) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

void require_valid(const PlanningScenario& scenario) {
    auto violations = validate_scenario(scenario);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
}

}  // namespace

ObjectiveValue evaluate_objective(const PlanningScenario& scenario,
                                  const std::vector<bool>& selection,
                                  const std::vector<std::vector<double>>& production) {
    require_valid(scenario);
    const int m = scenario.plant_count();
    const int T = scenario.period_count;
    if (static_cast<int>(selection.size()) != m) {
        throw ConstraintViolationError("selection vector has " +
                                       std::to_string(selection.size()) + " entries for " +
                                       std::to_string(m) + " plants");
    }
    if (static_cast<int>(production.size()) != m) {
        throw ConstraintViolationError("production matrix has " +
                                       std::to_string(production.size()) + " rows for " +
                                       std::to_string(m) + " plants");
    }
    int selected = 0;
    for (int j = 0; j < m; ++j) {
        if (selection[j]) ++selected;
        if (static_cast<int>(production[j].size()) != T) {
            throw ConstraintViolationError("production row for plant " + scenario.plants[j].id +
                                           " has " + std::to_string(production[j].size()) +
                                           " periods, expected " + std::to_string(T));
        }
    }
    if (selected != scenario.required_count) {
        throw ConstraintViolationError("selection count " + std::to_string(selected) +
                                       " violates required_count = " +
                                       std::to_string(scenario.required_count));
    }

    const ModelVariant& variant = scenario.variant;
    const std::vector<double> disc = period_discounts(scenario);

    ObjectiveValue out;
    out.surplus.assign(m, std::vector<double>(T, 0.0));
    for (int j = 0; j < m; ++j) {
        const PlantParams& plant = scenario.plants[j];
        if (!selection[j]) {
            for (int t = 0; t < T; ++t) {
                if (production[j][t] != 0.0) {
                    throw ConstraintViolationError("unselected plant " + plant.id +
                                                   " has nonzero production in period " +
                                                   std::to_string(t + 1));
                }
                if (variant.unselected_terms == UnselectedTerms::literal_signed) {
                    const double k = -plant.periods[t].demand_lo;
                    out.surplus[j][t] = k;
                    out.breakdown.surplus_total +=
                        plant.periods[t].surplus_cost * clamp_surplus(k, variant.surplus) * disc[t];
                }
            }
            continue;
        }
        out.breakdown.setup_cost_total += plant.setup_cost;
        for (int t = 0; t < T; ++t) {
            const PlantPeriodParams& q = plant.periods[t];
            const double z = production[j][t];
            if (z < q.cap_min || z > q.cap_max) {
                throw ConstraintViolationError(
                    "production " + std::to_string(z) + " outside [" + std::to_string(q.cap_min) +
                    ", " + std::to_string(q.cap_max) + "] for plant " + plant.id + " period " +
                    std::to_string(t + 1));
            }
            const double k = z - q.demand_lo;
            out.surplus[j][t] = k;
            out.breakdown.operational_transfer_total +=
                (q.npw_operational + q.transfer_cost) * z * disc[t];
            out.breakdown.surplus_total +=
                q.surplus_cost * clamp_surplus(k, variant.surplus) * disc[t];
        }
    }
    out.total_cost = out.breakdown.total();
    return out;
}

PeriodDispatch solve_period_dispatch(const PlantPeriodParams& params, double discount,
                                     const ModelVariant& variant) {
    if (params.cap_min > params.cap_max) {
        throw ConstraintViolationError("cap_min " + std::to_string(params.cap_min) +
                                       " exceeds cap_max " + std::to_string(params.cap_max));
    }
    const double demand = params.demand_lo;
    std::vector<double> candidates = {params.cap_min, params.cap_max};
    if (variant.surplus == SurplusRule::clamped_nonneg && demand >= params.cap_min &&
        demand <= params.cap_max) {
        candidates.push_back(demand);
    }
    std::sort(candidates.begin(), candidates.end());

    auto cost_at = [&](double z) {
        const double k = clamp_surplus(z - demand, variant.surplus);
        return (params.npw_operational + params.transfer_cost) * z * discount +
               params.surplus_cost * k * discount;
    };

    PeriodDispatch best{candidates.front(), cost_at(candidates.front())};
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const double c = cost_at(candidates[i]);
        if (c < best.contribution) {
            best = {candidates[i], c};
        }
    }
    return best;
}

DispatchSolution solve_exact(const PlanningScenario& scenario) {
    require_valid(scenario);
    if (!scenario.has_point_demands()) {
        throw InvalidParameterError(
            "scenario has stochastic demand intervals; run the simulation engine or collapse "
            "demand_lo/demand_hi to a point");
    }
    const int m = scenario.plant_count();
    if (m > 30) {
        throw SizeLimitError("exact enumeration is limited to 30 plants, got " +
                             std::to_string(m));
    }
    const int T = scenario.period_count;
    const int F = scenario.required_count;
    const ModelVariant& variant = scenario.variant;
    const std::vector<double> disc = period_discounts(scenario);

    // Plants are coupled only through the selection count, so each plant's
    // selected and unselected contributions can be optimized once up front.
    std::vector<double> selected_cost(m), unselected_cost(m, 0.0);
    std::vector<std::vector<double>> selected_z(m, std::vector<double>(T));
    for (int j = 0; j < m; ++j) {
        const PlantParams& plant = scenario.plants[j];
        double total = plant.setup_cost;
        for (int t = 0; t < T; ++t) {
            const PeriodDispatch d = solve_period_dispatch(plant.periods[t], disc[t], variant);
            selected_z[j][t] = d.z;
            total += d.contribution;
        }
        selected_cost[j] = total;
        if (variant.unselected_terms == UnselectedTerms::literal_signed) {
            for (int t = 0; t < T; ++t) {
                const PlantPeriodParams& q = plant.periods[t];
                unselected_cost[j] +=
                    q.surplus_cost * clamp_surplus(-q.demand_lo, variant.surplus) * disc[t];
            }
        }
    }

    std::vector<int> combo(F);
    for (int i = 0; i < F; ++i) combo[i] = i;
    std::vector<int> best_combo;
    double best_cost = 0.0;
    bool first = true;
    do {
        double cost = 0.0;
        std::size_t pos = 0;
        for (int j = 0; j < m; ++j) {
            if (pos < combo.size() && combo[pos] == j) {
                cost += selected_cost[j];
                ++pos;
            } else {
                cost += unselected_cost[j];
            }
        }
        if (first || cost < best_cost) {
            best_cost = cost;
            best_combo = combo;
            first = false;
        }
    } while (next_combination(combo, m));

    DispatchSolution out;
    out.selection.assign(m, false);
    for (int j : best_combo) out.selection[j] = true;
    out.production.assign(m, std::vector<double>(T, 0.0));
    for (int j : best_combo) out.production[j] = selected_z[j];
    ObjectiveValue value = evaluate_objective(scenario, out.selection, out.production);
    out.surplus = std::move(value.surplus);
    out.total_cost = value.total_cost;
    out.breakdown = value.breakdown;
    return out;
}

DispatchSolution oracle_grid_solve(const PlanningScenario& scenario, int grid_points) {
    require_valid(scenario);
    if (grid_points < 2) {
        throw InvalidParameterError("grid_points must be >= 2, got " +
                                    std::to_string(grid_points));
    }
    if (!scenario.has_point_demands()) {
        throw InvalidParameterError(
            "scenario has stochastic demand intervals; run the simulation engine or collapse "
            "demand_lo/demand_hi to a point");
    }
    const int m = scenario.plant_count();
    if (m > 30) {
        throw SizeLimitError("exact enumeration is limited to 30 plants, got " +
                             std::to_string(m));
    }
    const int T = scenario.period_count;
    const bool clamped = scenario.variant.surplus == SurplusRule::clamped_nonneg;
    const bool literal = scenario.variant.unselected_terms == UnselectedTerms::literal_signed;
    const double rate = scenario.discount_rate.value;

    // Candidate production levels per plant-period: uniform grid plus the
    // interval endpoints and the demand kink.
    std::vector<std::vector<std::vector<double>>> levels(m);
    for (int j = 0; j < m; ++j) {
        levels[j].resize(T);
        for (int t = 0; t < T; ++t) {
            const PlantPeriodParams& q = scenario.plants[j].periods[t];
            std::vector<double>& zs = levels[j][t];
            const double width = q.cap_max - q.cap_min;
            for (int g = 0; g < grid_points; ++g) {
                zs.push_back(q.cap_min + width * g / (grid_points - 1));
            }
            zs.push_back(q.cap_min);
            zs.push_back(q.cap_max);
            if (q.demand_lo >= q.cap_min && q.demand_lo <= q.cap_max) {
                zs.push_back(q.demand_lo);
            }
            std::sort(zs.begin(), zs.end());
            zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
        }
    }

    std::vector<bool> selection(m, false);
    std::fill(selection.begin(), selection.begin() + scenario.required_count, true);

    bool first = true;
    DispatchSolution best;
    // std::prev_permutation walks mask patterns so that selected index lists
    // come out in lexicographic order, matching the solver's tie-break.
    do {
        DispatchSolution cand;
        cand.selection = selection;
        cand.production.assign(m, std::vector<double>(T, 0.0));
        cand.surplus.assign(m, std::vector<double>(T, 0.0));
        for (int j = 0; j < m; ++j) {
            const PlantParams& plant = scenario.plants[j];
            if (!selection[j]) {
                if (literal) {
                    for (int t = 0; t < T; ++t) {
                        const PlantPeriodParams& q = plant.periods[t];
                        double k = -q.demand_lo;
                        cand.surplus[j][t] = k;
                        if (clamped) k = std::max(0.0, k);
                        cand.breakdown.surplus_total +=
                            q.surplus_cost * k * std::pow(1.0 + rate, -(t + 1.0));
                    }
                }
                continue;
            }
            cand.breakdown.setup_cost_total += plant.setup_cost;
            for (int t = 0; t < T; ++t) {
                const PlantPeriodParams& q = plant.periods[t];
                const double w = std::pow(1.0 + rate, -(t + 1.0));
                bool have = false;
                double best_z = 0.0, best_op = 0.0, best_sur = 0.0;
                for (double z : levels[j][t]) {
                    const double op = (q.npw_operational + q.transfer_cost) * z * w;
                    double k = z - q.demand_lo;
                    if (clamped) k = std::max(0.0, k);
                    const double sur = q.surplus_cost * k * w;
                    if (!have || op + sur < best_op + best_sur) {
                        best_z = z;
                        best_op = op;
                        best_sur = sur;
                        have = true;
                    }
                }
                cand.production[j][t] = best_z;
                cand.surplus[j][t] = best_z - q.demand_lo;
                cand.breakdown.operational_transfer_total += best_op;
                cand.breakdown.surplus_total += best_sur;
            }
        }
        cand.total_cost = cand.breakdown.total();
        if (first || cand.total_cost < best.total_cost) {
            best = std::move(cand);
            first = false;
        }
    } while (std::prev_permutation(selection.begin(), selection.end()));

    return best;
}

std::vector<Violation> verify_dispatch(const PlanningScenario& scenario,
                                       const DispatchSolution& solution) {
    std::vector<Violation> out;
    const int m = scenario.plant_count();
    const int T = scenario.period_count;
    if (static_cast<int>(solution.selection.size()) != m ||
        static_cast<int>(solution.production.size()) != m ||
        static_cast<int>(solution.surplus.size()) != m) {
        out.push_back({"solution", "selection/production/surplus sized for wrong plant count"});
        return out;
    }
    for (int j = 0; j < m; ++j) {
        if (static_cast<int>(solution.production[j].size()) != T ||
            static_cast<int>(solution.surplus[j].size()) != T) {
            out.push_back({"solution.plants[" + std::to_string(j) + "]",
                           "production/surplus sized for wrong period count"});
            return out;
        }
    }

    int selected = 0;
    for (int j = 0; j < m; ++j) {
        if (solution.selection[j]) ++selected;
    }
    if (selected != scenario.required_count) {
        out.push_back({"solution.selection", "selected " + std::to_string(selected) +
                                                 " plants, required " +
                                                 std::to_string(scenario.required_count)});
    }

    const bool literal =
        scenario.variant.unselected_terms == UnselectedTerms::literal_signed;
    const bool clamped = scenario.variant.surplus == SurplusRule::clamped_nonneg;
    auto near = [](double a, double b, double scale) {
        return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(scale));
    };

    double setup = 0.0, optransfer = 0.0, surplus_cost = 0.0;
    for (int j = 0; j < m; ++j) {
        const PlantParams& plant = scenario.plants[j];
        const std::string path = "solution.plants[" + std::to_string(j) + "]";
        for (int t = 0; t < T; ++t) {
            const PlantPeriodParams& q = plant.periods[t];
            const double z = solution.production[j][t];
            const double k = solution.surplus[j][t];
            const double w = std::pow(1.0 + scenario.discount_rate.value, -(t + 1.0));
            if (solution.selection[j]) {
                if (z < q.cap_min - 1e-9 * std::max(1.0, std::abs(q.cap_min)) ||
                    z > q.cap_max + 1e-9 * std::max(1.0, std::abs(q.cap_max))) {
                    out.push_back({path, "production outside capacity bounds in period " +
                                             std::to_string(t + 1)});
                }
                if (!near(k, z - q.demand_lo, q.demand_lo)) {
                    out.push_back({path, "surplus does not equal production - demand in period " +
                                             std::to_string(t + 1)});
                }
                optransfer += (q.npw_operational + q.transfer_cost) * z * w;
                surplus_cost += q.surplus_cost * (clamped ? std::max(0.0, k) : k) * w;
            } else {
                if (z != 0.0) {
                    out.push_back({path, "unselected plant has nonzero production in period " +
                                             std::to_string(t + 1)});
                }
                const double expect_k = literal ? -q.demand_lo : 0.0;
                if (!near(k, expect_k, q.demand_lo)) {
                    out.push_back({path, "unexpected surplus for unselected plant in period " +
                                             std::to_string(t + 1)});
                }
                if (literal) {
                    surplus_cost += q.surplus_cost * (clamped ? std::max(0.0, k) : k) * w;
                }
            }
        }
        if (solution.selection[j]) setup += plant.setup_cost;
    }

    const double recomputed = setup + optransfer + surplus_cost;
    const double tol = 1e-12 * std::max(1.0, std::abs(solution.total_cost));
    if (std::abs(recomputed - solution.total_cost) > tol) {
        out.push_back({"solution.total_cost",
                       "objective recomputed from (Y, Z, K) differs from total_cost"});
    }
    if (std::abs(solution.breakdown.total() - solution.total_cost) > tol) {
        out.push_back({"solution.breakdown", "breakdown terms do not sum to total_cost"});
    }
    return out;
}

}  // namespace solarplan
