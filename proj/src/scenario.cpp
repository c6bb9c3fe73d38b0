#include "solarplan/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace solarplan {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_violations(const std::vector<Violation>& violations) {
    std::ostringstream out;
    out << violations.size() << " validation error(s)";
    for (const auto& v : violations) {
        out << "\n  " << v.path << ": " << v.message;
    }
    return out.str();
}

bool PlanningScenario::has_point_demands() const {
    for (const auto& plant : plants) {
        for (const auto& p : plant.periods) {
            if (p.demand_lo != p.demand_hi) return false;
        }
    }
    return true;
}

const char* to_string(UnselectedTerms v) {
    return v == UnselectedTerms::selected_only ? "selected_only" : "literal_signed";
}

const char* to_string(SurplusRule v) {
    return v == SurplusRule::signed_surplus ? "signed" : "clamped_nonneg";
}

namespace {

// Collects schema violations instead of bailing on the first problem, so a
// broken file reports everything wrong with it in one pass.
struct Reader {
    std::vector<Violation> violations;

    void fail(const std::string& path, const std::string& message) {
        violations.push_back({path, message});
    }

    double number(const json& parent, const std::string& key, const std::string& path,
                  double fallback = 0.0) {
        if (!parent.contains(key)) {
            fail(path + "." + key, "missing required number");
            return fallback;
        }
        const json& v = parent.at(key);
        if (!v.is_number()) {
            fail(path + "." + key, "expected a number");
            return fallback;
        }
        return v.get<double>();
    }

    int integer(const json& parent, const std::string& key, const std::string& path,
                int fallback = 0) {
        if (!parent.contains(key)) {
            fail(path + "." + key, "missing required integer");
            return fallback;
        }
        const json& v = parent.at(key);
        if (!v.is_number_integer()) {
            fail(path + "." + key, "expected an integer");
            return fallback;
        }
        return v.get<int>();
    }

    std::string text(const json& parent, const std::string& key, const std::string& path,
                     const std::string& fallback = "") {
        if (!parent.contains(key)) {
            fail(path + "." + key, "missing required string");
            return fallback;
        }
        const json& v = parent.at(key);
        if (!v.is_string()) {
            fail(path + "." + key, "expected a string");
            return fallback;
        }
        return v.get<std::string>();
    }
};

ModelVariant read_variant(Reader& r, const json& doc, const std::string& path) {
    ModelVariant variant;
    if (!doc.contains("variant")) return variant;
    const json& v = doc.at("variant");
    if (!v.is_object()) {
        r.fail(path, "expected an object");
        return variant;
    }
    if (v.contains("unselected_terms")) {
        const std::string s = r.text(v, "unselected_terms", path);
        if (s == "selected_only") {
            variant.unselected_terms = UnselectedTerms::selected_only;
        } else if (s == "literal_signed") {
            variant.unselected_terms = UnselectedTerms::literal_signed;
        } else {
            r.fail(path + ".unselected_terms",
                   "expected \"selected_only\" or \"literal_signed\", got \"" + s + "\"");
        }
    }
    if (v.contains("surplus")) {
        const std::string s = r.text(v, "surplus", path);
        if (s == "signed") {
            variant.surplus = SurplusRule::signed_surplus;
        } else if (s == "clamped_nonneg") {
            variant.surplus = SurplusRule::clamped_nonneg;
        } else {
            r.fail(path + ".surplus",
                   "expected \"signed\" or \"clamped_nonneg\", got \"" + s + "\"");
        }
    }
    if (v.contains("discount_denominator_eq16")) {
        const json& b = v.at("discount_denominator_eq16");
        if (!b.is_boolean()) {
            r.fail(path + ".discount_denominator_eq16", "expected a boolean");
        } else {
            variant.discount_denominator_eq16 = b.get<bool>();
        }
    }
    if (v.contains("eq16_lower_bound")) {
        variant.eq16_lower_bound = r.number(v, "eq16_lower_bound", path);
    }
    return variant;
}

PlanningScenario read_plants(Reader& r, const json& doc) {
    PlanningScenario s;
    s.discount_rate.value = r.number(doc, "discount_rate", "$");
    s.required_count = r.integer(doc, "required_count", "$");
    s.variant = read_variant(r, doc, "$.variant");

    if (!doc.contains("plants") || !doc.at("plants").is_array()) {
        r.fail("$.plants", "missing required array");
        return s;
    }
    int index = 0;
    for (const json& pj : doc.at("plants")) {
        const std::string path = "$.plants[" + std::to_string(index) + "]";
        PlantParams plant;
        if (!pj.is_object()) {
            r.fail(path, "expected an object");
            ++index;
            continue;
        }
        plant.id = r.text(pj, "id", path, "plant" + std::to_string(index));
        plant.setup_cost = r.number(pj, "setup_cost", path);
        if (!pj.contains("periods") || !pj.at("periods").is_array()) {
            r.fail(path + ".periods", "missing required array");
        } else {
            int t = 0;
            for (const json& qj : pj.at("periods")) {
                const std::string ppath = path + ".periods[" + std::to_string(t) + "]";
                PlantPeriodParams q;
                if (!qj.is_object()) {
                    r.fail(ppath, "expected an object");
                } else {
                    q.npw_operational = r.number(qj, "npw", ppath);
                    q.transfer_cost = r.number(qj, "transfer", ppath);
                    q.surplus_cost = r.number(qj, "surplus_cost", ppath);
                    q.unit_production_cost = r.number(qj, "unit_cost", ppath);
                    q.cap_min = r.number(qj, "cap_min", ppath);
                    q.cap_max = r.number(qj, "cap_max", ppath);
                    q.demand_lo = r.number(qj, "demand_lo", ppath);
                    q.demand_hi = r.number(qj, "demand_hi", ppath);
                }
                plant.periods.push_back(q);
                ++t;
            }
        }
        s.plants.push_back(std::move(plant));
        ++index;
    }
    s.period_count = s.plants.empty() ? 0 : static_cast<int>(s.plants.front().periods.size());
    return s;
}

RooftopParams read_rooftop(Reader& r, const json& doc) {
    RooftopParams p;
    p.interest.value = r.number(doc, "interest", "$");
    p.lifetime = r.integer(doc, "lifetime", "$", 1);
    p.operation_cost = r.number(doc, "operation_cost", "$");
    p.panel_price = r.number(doc, "panel_price", "$");
    p.consumption = r.number(doc, "consumption", "$");
    p.panel_capacity = r.number(doc, "panel_capacity", "$");
    return p;
}

void check_finite(std::vector<Violation>& out, const std::string& path, double v,
                  const std::string& name) {
    if (!std::isfinite(v)) {
        out.push_back({path, name + " must be finite"});
    }
}

}  // namespace

std::vector<Violation> validate_scenario(const PlanningScenario& s) {
    std::vector<Violation> out;
    check_finite(out, "$.discount_rate", s.discount_rate.value, "discount rate");
    if (std::isfinite(s.discount_rate.value) && s.discount_rate.value < 0.0) {
        out.push_back({"$.discount_rate", "discount rate must be non-negative"});
    }
    const int m = s.plant_count();
    if (m < 1) {
        out.push_back({"$.plants", "at least one plant is required"});
    }
    if (s.required_count < 1 || s.required_count > m) {
        out.push_back({"$.required_count",
                       "required_count must be in [1, " + std::to_string(m) + "], got " +
                           std::to_string(s.required_count)});
    }
    if (s.period_count < 1) {
        out.push_back({"$.plants", "at least one period is required"});
    }
    check_finite(out, "$.variant.eq16_lower_bound", s.variant.eq16_lower_bound,
                 "eq16_lower_bound");
    for (int j = 0; j < m; ++j) {
        const PlantParams& plant = s.plants[j];
        const std::string path = "$.plants[" + std::to_string(j) + "]";
        check_finite(out, path + ".setup_cost", plant.setup_cost, "setup cost");
        if (plant.setup_cost < 0.0) {
            out.push_back({path + ".setup_cost", "setup cost must be non-negative"});
        }
        if (static_cast<int>(plant.periods.size()) != s.period_count) {
            out.push_back({path + ".periods",
                           "expected " + std::to_string(s.period_count) + " periods, got " +
                               std::to_string(plant.periods.size())});
        }
        for (int t = 0; t < static_cast<int>(plant.periods.size()); ++t) {
            const PlantPeriodParams& q = plant.periods[t];
            const std::string ppath = path + ".periods[" + std::to_string(t) + "]";
            check_finite(out, ppath + ".npw", q.npw_operational, "npw");
            check_finite(out, ppath + ".transfer", q.transfer_cost, "transfer cost");
            check_finite(out, ppath + ".surplus_cost", q.surplus_cost, "surplus cost");
            check_finite(out, ppath + ".unit_cost", q.unit_production_cost, "unit cost");
            check_finite(out, ppath + ".cap_min", q.cap_min, "cap_min");
            check_finite(out, ppath + ".cap_max", q.cap_max, "cap_max");
            check_finite(out, ppath + ".demand_lo", q.demand_lo, "demand_lo");
            check_finite(out, ppath + ".demand_hi", q.demand_hi, "demand_hi");
            if (q.surplus_cost < 0.0) {
                out.push_back({ppath + ".surplus_cost", "surplus cost must be non-negative"});
            }
            if (q.cap_min < 0.0) {
                out.push_back({ppath + ".cap_min", "cap_min must be non-negative"});
            }
            if (q.cap_min > q.cap_max) {
                out.push_back({ppath, "cap_min exceeds cap_max for plant " + plant.id +
                                          " period " + std::to_string(t + 1)});
            }
            if (q.demand_lo < 0.0) {
                out.push_back({ppath + ".demand_lo", "demand_lo must be non-negative"});
            }
            if (q.demand_lo > q.demand_hi) {
                out.push_back({ppath, "demand_lo exceeds demand_hi for plant " + plant.id +
                                          " period " + std::to_string(t + 1)});
            }
        }
    }
    return out;
}

std::vector<Violation> validate_rooftop(const RooftopParams& p) {
    std::vector<Violation> out;
    check_finite(out, "$.interest", p.interest.value, "interest");
    if (std::isfinite(p.interest.value) && p.interest.value < 0.0) {
        out.push_back({"$.interest", "interest must be non-negative"});
    }
    if (p.lifetime < 1) {
        out.push_back({"$.lifetime", "lifetime must be >= 1"});
    }
    check_finite(out, "$.operation_cost", p.operation_cost, "operation cost");
    if (p.operation_cost < 0.0) {
        out.push_back({"$.operation_cost", "operation cost must be non-negative"});
    }
    check_finite(out, "$.panel_price", p.panel_price, "panel price");
    if (p.panel_price <= 0.0) {
        out.push_back({"$.panel_price", "panel price must be positive"});
    }
    check_finite(out, "$.consumption", p.consumption, "consumption");
    if (p.consumption <= 0.0) {
        out.push_back({"$.consumption", "consumption must be positive"});
    }
    check_finite(out, "$.panel_capacity", p.panel_capacity, "panel capacity");
    if (p.panel_capacity <= 0.0) {
        out.push_back({"$.panel_capacity", "panel capacity must be positive"});
    }
    return out;
}

ScenarioDocument load_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed scenario document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("scenario document must be a JSON object");
    }
    Reader r;
    const std::string model = r.text(doc, "model", "$");
    if (!r.violations.empty()) {
        throw ValidationError(std::move(r.violations));
    }
    if (model == "plants") {
        PlanningScenario s = read_plants(r, doc);
        if (r.violations.empty()) {
            auto more = validate_scenario(s);
            r.violations.insert(r.violations.end(), more.begin(), more.end());
        }
        if (!r.violations.empty()) {
            throw ValidationError(std::move(r.violations));
        }
        return s;
    }
    if (model == "rooftop") {
        RooftopParams p = read_rooftop(r, doc);
        if (r.violations.empty()) {
            auto more = validate_rooftop(p);
            r.violations.insert(r.violations.end(), more.begin(), more.end());
        }
        if (!r.violations.empty()) {
            throw ValidationError(std::move(r.violations));
        }
        return p;
    }
    throw ValidationError({{"$.model", "expected \"plants\" or \"rooftop\", got \"" + model + "\""}});
}

ScenarioDocument load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open scenario file: " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str());
}

namespace {

ordered_json variant_to_json(const ModelVariant& v) {
    ordered_json j;
    j["unselected_terms"] = to_string(v.unselected_terms);
    j["surplus"] = to_string(v.surplus);
    j["discount_denominator_eq16"] = v.discount_denominator_eq16;
    j["eq16_lower_bound"] = v.eq16_lower_bound;
    return j;
}

}  // namespace

std::string write_scenario(const PlanningScenario& s) {
    ordered_json doc;
    doc["model"] = "plants";
    doc["discount_rate"] = s.discount_rate.value;
    doc["required_count"] = s.required_count;
    doc["variant"] = variant_to_json(s.variant);
    ordered_json plants = ordered_json::array();
    for (const auto& plant : s.plants) {
        ordered_json pj;
        pj["id"] = plant.id;
        pj["setup_cost"] = plant.setup_cost;
        ordered_json periods = ordered_json::array();
        for (const auto& q : plant.periods) {
            ordered_json qj;
            qj["npw"] = q.npw_operational;
            qj["transfer"] = q.transfer_cost;
            qj["surplus_cost"] = q.surplus_cost;
            qj["unit_cost"] = q.unit_production_cost;
            qj["cap_min"] = q.cap_min;
            qj["cap_max"] = q.cap_max;
            qj["demand_lo"] = q.demand_lo;
            qj["demand_hi"] = q.demand_hi;
            periods.push_back(std::move(qj));
        }
        pj["periods"] = std::move(periods);
        plants.push_back(std::move(pj));
    }
    doc["plants"] = std::move(plants);
    return doc.dump(2) + "\n";
}

std::string write_scenario(const RooftopParams& p) {
    ordered_json doc;
    doc["model"] = "rooftop";
    doc["interest"] = p.interest.value;
    doc["lifetime"] = p.lifetime;
    doc["operation_cost"] = p.operation_cost;
    doc["panel_price"] = p.panel_price;
    doc["consumption"] = p.consumption;
    doc["panel_capacity"] = p.panel_capacity;
    return doc.dump(2) + "\n";
}

}  // namespace solarplan
