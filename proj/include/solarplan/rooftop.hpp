#ifndef SOLARPLAN_ROOFTOP_HPP
#define SOLARPLAN_ROOFTOP_HPP

#include "solarplan/finmath.hpp"
#include "solarplan/scenario.hpp"

namespace solarplan {

// Stationary-point analysis of the rooftop cost curve
//   cost(z) = (A*C*Q/B)*z + (A*Q/(2B))*annuity*z^2.
// The curve is strictly convex with its minimum at the negative root
// z = -C/annuity; the model convention reports the absolute value alongside,
// and the cost is evaluated at both so the sign inconsistency stays visible.
struct RooftopSolution {
    double stationary_z_signed = 0.0;  // root of the gradient, negative
    double z_star = 0.0;               // |stationary_z_signed|
    double cost_at_stationary = 0.0;   // closed form, negative
    double cost_at_z_star = 0.0;       // cost curve evaluated at z_star
    AnnuityFactor annuity;
    double panels_real = 0.0;          // consumption / panel_capacity
    long long panels_ceil = 0;         // rounded up for procurement display
};

// cost(z) as above. z may be negative.
double rooftop_cost(const RooftopParams& params, double z);

// d cost / d z = A*C*Q/B + (A*Q/B)*annuity*z.
double rooftop_gradient(const RooftopParams& params, double z);

RooftopSolution rooftop_optimize(const RooftopParams& params);

}  // namespace solarplan

#endif
