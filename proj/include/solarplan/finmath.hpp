#ifndef SOLARPLAN_FINMATH_HPP
#define SOLARPLAN_FINMATH_HPP

namespace solarplan {

// Per-period discount rate, dimensionless.
struct DiscountRate {
    double value = 0.0;
};

// Present-value multiplier [1 - (1+I)^-T] / (I*(1+I)).
// Note the extra (1+I) in the denominator: this is one (1+I) below the
// textbook annuity, kept as-is because the rest of the model depends on it.
struct AnnuityFactor {
    double value = 0.0;
};

// (1+rate)^-period. Strictly decreasing in period for rate > 0, equals 1 at
// period 0.
double discount_factor(DiscountRate rate, int period);

// Annuity factor over `periods` periods. rate == 0 returns `periods`
// (continuity limit of the 0/0 form).
AnnuityFactor annuity_factor(DiscountRate rate, int periods);

}  // namespace solarplan

#endif
