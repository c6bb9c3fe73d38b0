#ifndef SOLARPLAN_SCENARIO_HPP
#define SOLARPLAN_SCENARIO_HPP

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "solarplan/errors.hpp"
#include "solarplan/finmath.hpp"

namespace solarplan {

// How the objective treats plants that were not selected.
//   selected_only:  unselected plants contribute nothing (default).
//   literal_signed: unselected plants keep their surplus term with
//                   K = -demand, the literal reading of the balance
//                   constraint.
enum class UnselectedTerms { selected_only, literal_signed };

// How surplus enters the cost.
//   signed_surplus:  cost H*K with K possibly negative (default; negative
//                    surplus is rewarded).
//   clamped_nonneg:  cost H*max(0, K).
enum class SurplusRule { signed_surplus, clamped_nonneg };

// Every documented ambiguity in the cost model is a recorded flag here so
// reports can echo exactly which reading produced them.
struct ModelVariant {
    UnselectedTerms unselected_terms = UnselectedTerms::selected_only;
    SurplusRule surplus = SurplusRule::signed_surplus;
    // Discount the unit-value denominator as well as the numerator.
    bool discount_denominator_eq16 = false;
    // Lower bound of the surplus-cost integral in the unit-value formula.
    double eq16_lower_bound = 0.0;
};

// One plant-period parameter row.
struct PlantPeriodParams {
    double unit_production_cost = 0.0;  // carried but unused by the objective
    double transfer_cost = 0.0;         // per kWh transferred
    double surplus_cost = 0.0;          // per kWh of surplus
    double npw_operational = 0.0;       // per kWh produced, present-worth basis
    double cap_min = 0.0;               // kWh
    double cap_max = 0.0;               // kWh
    double demand_lo = 0.0;             // kWh; demand_lo == demand_hi is a
    double demand_hi = 0.0;             // deterministic (point) demand
};

struct PlantParams {
    std::string id;
    double setup_cost = 0.0;  // one-time, charged iff selected
    std::vector<PlantPeriodParams> periods;
};

struct PlanningScenario {
    std::vector<PlantParams> plants;
    int period_count = 0;
    int required_count = 0;  // exact number of plants that must be selected
    DiscountRate discount_rate;
    ModelVariant variant;

    int plant_count() const { return static_cast<int>(plants.size()); }
    bool has_point_demands() const;
};

// Rooftop photovoltaic cost-model parameters.
struct RooftopParams {
    DiscountRate interest;
    int lifetime = 1;             // periods
    double operation_cost = 0.0;  // per period
    double panel_price = 0.0;
    double consumption = 0.0;     // energy per period
    double panel_capacity = 0.0;  // energy per period per panel
};

using ScenarioDocument = std::variant<PlanningScenario, RooftopParams>;

// Scenario files are single JSON documents dispatched on the top-level
// "model" key:
//
//   {"model": "plants",
//    "discount_rate": 0.1, "required_count": 4,
//    "variant": {"unselected_terms": "selected_only", "surplus": "signed",
//                "discount_denominator_eq16": false, "eq16_lower_bound": 0.0},
//    "plants": [
//      {"id": "p1", "setup_cost": 5e9,
//       "periods": [{"npw": 35000, "transfer": 34000, "surplus_cost": 12000,
//                    "unit_cost": 0, "cap_min": 3000, "cap_max": 4000,
//                    "demand_lo": 4000, "demand_hi": 4000}, ...]}, ...]}
//
//   {"model": "rooftop", "interest": 0.25, "lifetime": 60,
//    "operation_cost": 80, "panel_price": 410,
//    "consumption": 456250, "panel_capacity": 250}
//
// The "variant" object is optional and defaults as above. Malformed JSON
// raises ParseError; a well-formed document that breaks any invariant raises
// ValidationError carrying every violation with its field path.
ScenarioDocument load_scenario(const std::string& json_text);
ScenarioDocument load_scenario_file(const std::filesystem::path& path);

// Invariant checks as data. Empty result means the scenario is valid.
std::vector<Violation> validate_scenario(const PlanningScenario& scenario);
std::vector<Violation> validate_rooftop(const RooftopParams& params);

// Serialize back to the schema above. load(write(x)) == x field-exact, and
// serialization is byte-deterministic.
std::string write_scenario(const PlanningScenario& scenario);
std::string write_scenario(const RooftopParams& params);

const char* to_string(UnselectedTerms v);
const char* to_string(SurplusRule v);

}  // namespace solarplan

#endif
