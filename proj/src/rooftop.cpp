#include "solarplan/rooftop.hpp"

#include <cmath>

#include "solarplan/errors.hpp"

namespace solarplan {

namespace {

void require_valid(const RooftopParams& params) {
    auto violations = validate_rooftop(params);
    if (!violations.empty()) {
        throw ValidationError(std::move(violations));
    }
}

}  // namespace

double rooftop_cost(const RooftopParams& params, double z) {
    require_valid(params);
    if (!std::isfinite(z)) {
        throw InvalidParameterError("z must be finite");
    }
    const double ann = annuity_factor(params.interest, params.lifetime).value;
    const double aqb = params.consumption * params.operation_cost / params.panel_capacity;
    return aqb * params.panel_price * z + 0.5 * aqb * z * z * ann;
}

double rooftop_gradient(const RooftopParams& params, double z) {
    require_valid(params);
    if (!std::isfinite(z)) {
        throw InvalidParameterError("z must be finite");
    }
    const double ann = annuity_factor(params.interest, params.lifetime).value;
    const double aqb = params.consumption * params.operation_cost / params.panel_capacity;
    return aqb * params.panel_price + aqb * ann * z;
}

RooftopSolution rooftop_optimize(const RooftopParams& params) {
    require_valid(params);
    RooftopSolution out;
    out.annuity = annuity_factor(params.interest, params.lifetime);
    out.stationary_z_signed = -params.panel_price / out.annuity.value;
    out.z_star = std::abs(out.stationary_z_signed);
    out.cost_at_stationary = -params.consumption * params.panel_price * params.panel_price *
                             params.operation_cost /
                             (2.0 * params.panel_capacity * out.annuity.value);
    out.cost_at_z_star = rooftop_cost(params, out.z_star);
    out.panels_real = params.consumption / params.panel_capacity;
    out.panels_ceil = static_cast<long long>(std::ceil(out.panels_real));
    return out;
}

}  // namespace solarplan
