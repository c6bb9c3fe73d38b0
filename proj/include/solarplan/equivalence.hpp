#ifndef SOLARPLAN_EQUIVALENCE_HPP
#define SOLARPLAN_EQUIVALENCE_HPP

#include "solarplan/finmath.hpp"
#include "solarplan/plant_solver.hpp"
#include "solarplan/scenario.hpp"

namespace solarplan {

struct EquivalenceResult {
    double z1 = 0.0;               // plant-model unit value the panels must match
    double n_star_closed = 0.0;    // closed-form panel count
    double n_star_numeric = 0.0;   // bracketing root-finder result
    double residual_at_n_star = 0.0;  // (z(n_star_numeric) - z1) / max(1, |z1|)
};

// Per-unit value of a solved plant model:
//   [ -sum_j sum_t H*(K^2 - a^2)/2 * (1+i)^-t  -  sum_j R*Y ] / [ sum_j sum_t NPW * w ]
// with the surplus integral taken from lower bound a (variant.eq16_lower_bound)
// to the solution's surplus, sums over selected plants, and w = (1+i)^-t only
// when variant.discount_denominator_eq16 is set (the numerator is always
// discounted). Negative for ordinary cost data.
double model1_unit_value(const PlanningScenario& scenario, const DispatchSolution& solution,
                         const ModelVariant& variant);

// Positive-branch root z of  total_cost = n*C*Q*z + (n*Q/2)*annuity*z^2.
// Raises NoRealSolutionError when the discriminant is negative (sufficiently
// negative total_cost).
double model2_z_from_cost(double n, double panel_price, double operation_cost,
                          AnnuityFactor annuity, double total_cost);

// Panel count making the rooftop model's cost-implied z equal z1. Closed form
//   n* = 2*total_cost*annuity / (Q*((annuity*z1 + C)^2 - C^2))
// cross-checked by a sign-change bracketing root-finder on
// residual(n) = model2_z_from_cost(n, ...) - z1 over [1e-12, 1e12].
EquivalenceResult solve_equivalent_panels(double z1, double panel_price, double operation_cost,
                                          AnnuityFactor annuity, double total_cost);

}  // namespace solarplan

#endif
