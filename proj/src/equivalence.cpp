#include "solarplan/equivalence.hpp"

#include <cmath>
#include <optional>
#include <string>

namespace solarplan {

double model1_unit_value(const PlanningScenario& scenario, const DispatchSolution& solution,
                         const ModelVariant& variant) {
    auto violations = verify_dispatch(scenario, solution);
    if (!violations.empty()) {
        throw ConstraintViolationError("solution is not feasible for scenario: " +
                                       format_violations(violations));
    }
    const double a = variant.eq16_lower_bound;
    double numerator = 0.0;
    double denominator = 0.0;
    for (int j = 0; j < scenario.plant_count(); ++j) {
        if (!solution.selection[j]) continue;
        const PlantParams& plant = scenario.plants[j];
        numerator -= plant.setup_cost;
        for (int t = 0; t < scenario.period_count; ++t) {
            const PlantPeriodParams& q = plant.periods[t];
            const double disc = discount_factor(scenario.discount_rate, t + 1);
            const double k = solution.surplus[j][t];
            numerator -= q.surplus_cost * (k * k - a * a) / 2.0 * disc;
            denominator +=
                q.npw_operational * (variant.discount_denominator_eq16 ? disc : 1.0);
        }
    }
    if (denominator == 0.0) {
        throw DegenerateScenarioError(
            "unit value undefined: operational-cost denominator is zero");
    }
    return numerator / denominator;
}

double model2_z_from_cost(double n, double panel_price, double operation_cost,
                          AnnuityFactor annuity, double total_cost) {
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidParameterError("panel count must be positive and finite");
    }
    if (!(operation_cost > 0.0) || !(annuity.value > 0.0)) {
        throw InvalidParameterError("operation cost and annuity must be positive");
    }
    if (!std::isfinite(panel_price) || panel_price < 0.0) {
        throw InvalidParameterError("panel price must be finite and non-negative");
    }
    if (!std::isfinite(total_cost)) {
        throw InvalidParameterError("total cost must be finite");
    }
    const double ncq = n * panel_price * operation_cost;
    const double discriminant = ncq * ncq + 2.0 * total_cost * n * operation_cost * annuity.value;
    if (discriminant < 0.0) {
        throw NoRealSolutionError("no real production level: discriminant " +
                                  std::to_string(discriminant) + " < 0");
    }
    return (-ncq + std::sqrt(discriminant)) / (n * operation_cost * annuity.value);
}

EquivalenceResult solve_equivalent_panels(double z1, double panel_price, double operation_cost,
                                          AnnuityFactor annuity, double total_cost) {
    if (!(operation_cost > 0.0) || !(annuity.value > 0.0)) {
        throw InvalidParameterError("operation cost and annuity must be positive");
    }
    if (!std::isfinite(z1) || !std::isfinite(total_cost) || !std::isfinite(panel_price) ||
        panel_price < 0.0) {
        throw InvalidParameterError("z1, total cost, and panel price must be finite");
    }
    const double shifted = annuity.value * z1 + panel_price;
    const double denom = shifted * shifted - panel_price * panel_price;
    if (!(denom > 0.0)) {
        throw NoPositiveSolutionError(
            "no positive panel count: (annuity*z1 + C)^2 must exceed C^2");
    }
    EquivalenceResult out;
    out.z1 = z1;
    out.n_star_closed = 2.0 * total_cost * annuity.value / (operation_cost * denom);
    if (!(out.n_star_closed > 0.0)) {
        throw NoPositiveSolutionError("no positive panel count: closed form gives " +
                                      std::to_string(out.n_star_closed));
    }

    // Independent route: geometric ladder over [1e-12, 1e12] looking for a
    // sign change of residual(n), then bisection.
    auto residual = [&](double n) -> std::optional<double> {
        try {
            return model2_z_from_cost(n, panel_price, operation_cost, annuity, total_cost) - z1;
        } catch (const NoRealSolutionError&) {
            return std::nullopt;
        }
    };

    double lo = 0.0, hi = 0.0, flo = 0.0;
    bool bracketed = false;
    double prev_n = 1e-12;
    std::optional<double> prev_f = residual(prev_n);
    for (double n = 1e-11; n <= 1.0001e12; n *= 10.0) {
        const std::optional<double> f = residual(n);
        if (prev_f && f && ((*prev_f <= 0.0) != (*f <= 0.0))) {
            lo = prev_n;
            hi = n;
            flo = *prev_f;
            bracketed = true;
            break;
        }
        prev_n = n;
        prev_f = f;
    }
    if (!bracketed) {
        throw RootNotBracketedError(
            "no sign change of the panel-count residual in [1e-12, 1e12]");
    }

    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, lo); ++iter) {
        const double mid = 0.5 * (lo + hi);
        const std::optional<double> fmid = residual(mid);
        if (!fmid) {
            // Undefined region can only touch the small-n end of the bracket.
            lo = mid;
            continue;
        }
        if (*fmid == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((*fmid <= 0.0) == (flo <= 0.0)) {
            lo = mid;
            flo = *fmid;
        } else {
            hi = mid;
        }
    }
    out.n_star_numeric = 0.5 * (lo + hi);
    const std::optional<double> r = residual(out.n_star_numeric);
    out.residual_at_n_star = r ? *r / std::max(1.0, std::abs(z1)) : std::nan("");
    return out;
}

}  // namespace solarplan
