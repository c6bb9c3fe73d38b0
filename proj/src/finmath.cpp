#include "solarplan/finmath.hpp"

#include <cmath>
#include <string>

#include "solarplan/errors.hpp"

namespace solarplan {

double discount_factor(DiscountRate rate, int period) {
    if (!std::isfinite(rate.value)) {
        throw InvalidParameterError("discount rate must be finite");
    }
    if (rate.value < 0.0) {
        throw InvalidParameterError("discount rate must be non-negative, got " +
                                    std::to_string(rate.value));
    }
    if (period < 0) {
        throw InvalidParameterError("period must be non-negative, got " +
                                    std::to_string(period));
    }
    return std::pow(1.0 + rate.value, -static_cast<double>(period));
}

AnnuityFactor annuity_factor(DiscountRate rate, int periods) {
    if (!std::isfinite(rate.value)) {
        throw InvalidParameterError("discount rate must be finite");
    }
    if (rate.value < 0.0) {
        throw InvalidParameterError("discount rate must be non-negative, got " +
                                    std::to_string(rate.value));
    }
    if (periods < 1) {
        throw InvalidParameterError("periods must be >= 1, got " +
                                    std::to_string(periods));
    }
    if (rate.value == 0.0) {
        return AnnuityFactor{static_cast<double>(periods)};
    }
    const double i = rate.value;
    const double numer = 1.0 - std::pow(1.0 + i, -static_cast<double>(periods));
    return AnnuityFactor{numer / (i * (1.0 + i))};
}

}  // namespace solarplan
