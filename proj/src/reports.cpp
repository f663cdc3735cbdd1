#include "padic/reports.hpp"

#include <cstdio>
#include <sstream>

namespace padic {

namespace {

std::string degrees_str(const std::vector<unsigned>& degrees) {
    std::ostringstream out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i > 0) out << "-";
        out << degrees[i];
    }
    return out.str();
}

std::string fixed9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

std::string rational_str(const mpq_class& q) {
    return q.get_num().get_str() + (q.get_den() == 1 ? "" : "/" + q.get_den().get_str());
}

}  // namespace

std::string count_csv_header() { return "property,p,k,degrees,favorable,total,predicted,match"; }

std::string count_csv_row(const CountReport& r) {
    std::ostringstream out;
    out << r.property_name << "," << r.p << "," << r.k << "," << degrees_str(r.degrees) << ","
        << r.favorable.get_str() << "," << r.total.get_str() << ",";
    if (r.predicted) {
        out << r.predicted->get_str() << "," << (r.matches_prediction() ? "true" : "false");
    } else {
        out << ",";
    }
    return out.str();
}

nlohmann::json count_json_row(const CountReport& r) {
    nlohmann::json row{
        {"property", r.property_name},
        {"p", r.p},
        {"k", r.k},
        {"degrees", r.degrees},
        {"favorable", r.favorable.get_str()},
        {"total", r.total.get_str()},
    };
    if (r.predicted) {
        row["predicted"] = r.predicted->get_str();
        row["match"] = r.matches_prediction();
    } else {
        row["predicted"] = nullptr;
        row["match"] = nullptr;
    }
    return row;
}

nlohmann::json count_json_report(const std::vector<CountReport>& rows) {
    nlohmann::json out{
        {"artifact", kArtifactName},
        {"version", kArtifactVersion},
        {"schema", "count-report"},
    };
    out["rows"] = nlohmann::json::array();
    for (const auto& r : rows) out["rows"].push_back(count_json_row(r));
    return out;
}

std::string estimate_csv_header() {
    return "property,p,k,degrees,N,hits,estimate,stderr,ci_low,ci_high,seed,theoretical";
}

std::string estimate_csv_row(const EstimateReport& r) {
    std::ostringstream out;
    out << r.property_name << "," << r.p << "," << r.k << "," << degrees_str(r.degrees) << ","
        << r.sample_count << "," << r.hits << "," << fixed9(r.estimate()) << ","
        << fixed9(r.standard_error()) << "," << fixed9(r.ci_low()) << "," << fixed9(r.ci_high())
        << "," << r.seed << ",";
    if (r.theoretical) out << rational_str(*r.theoretical);
    return out.str();
}

nlohmann::json estimate_json_row(const EstimateReport& r) {
    nlohmann::json row{
        {"property", r.property_name},
        {"p", r.p},
        {"k", r.k},
        {"degrees", r.degrees},
        {"N", r.sample_count},
        {"hits", r.hits},
        {"estimate", fixed9(r.estimate())},
        {"stderr", fixed9(r.standard_error())},
        {"ci_low", fixed9(r.ci_low())},
        {"ci_high", fixed9(r.ci_high())},
        {"seed", r.seed},
        {"lower_bound", r.lower_bound},
    };
    if (r.theoretical) {
        row["theoretical"] = rational_str(*r.theoretical);
    } else {
        row["theoretical"] = nullptr;
    }
    return row;
}

nlohmann::json estimate_json_report(const std::vector<EstimateReport>& rows) {
    nlohmann::json out{
        {"artifact", kArtifactName},
        {"version", kArtifactVersion},
        {"schema", "estimate-report"},
        {"rng", kRngAlgorithmId},
    };
    out["rows"] = nlohmann::json::array();
    for (const auto& r : rows) out["rows"].push_back(estimate_json_row(r));
    return out;
}

nlohmann::json trace_json(const LiftTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : trace.steps) {
        steps.push_back(nlohmann::json{
            {"precision", step.precision},
            {"r", to_string(step.r)},
            {"s", to_string(step.s)},
            {"Q", to_string(step.q_correction)},
            {"alpha", to_string(step.alpha)},
            {"beta", to_string(step.beta)},
        });
    }
    return nlohmann::json{{"steps", steps}};
}

nlohmann::json defect_json(const DefectReport& r) {
    return nlohmann::json{
        {"p", r.p},
        {"k", r.k},
        {"m", r.m},
        {"defect", rational_str(r.defect)},
        {"interval_low", rational_str(r.lower)},
        {"interval_high", rational_str(r.upper)},
        {"within_bound", r.within_bound},
        {"count", count_json_row(r.count)},
    };
}

std::string defect_text(const DefectReport& r) {
    std::ostringstream out;
    out << "defect p=" << r.p << " k=" << r.k << " m=" << r.m << " value="
        << rational_str(r.defect) << " interval=[" << rational_str(r.lower) << ","
        << rational_str(r.upper) << "] within_bound=" << (r.within_bound ? "true" : "false");
    return out.str();
}

}  // namespace padic
