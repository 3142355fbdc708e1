#pragma once

// Requests, reports and their JSON / text forms. Reports are deterministic:
// keys are sorted, exact values are strings and probe floats are rounded to
// four significant digits.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tamegamma/strata.hpp"

namespace tamegamma {

struct Request {
    /// analyze | check-family | stratify | probe | transform
    std::string command;
    std::string text;
    /// File name or "-" for stdin; echoed in the report.
    std::string source = "-";
    std::optional<std::size_t> n;
    Budget budget;
    ProbeOptions probe;
    std::optional<unsigned> power;
    std::vector<std::uint32_t> convenient;
};

struct Report {
    std::string command;
    nlohmann::json input;
    std::optional<nlohmann::json> polyhedron;
    std::optional<nlohmann::json> nondegeneracy;
    std::optional<nlohmann::json> tameness;
    std::optional<nlohmann::json> admissibility;
    std::optional<nlohmann::json> stratification;
    std::optional<nlohmann::json> probe;
    std::string verdict;
    std::optional<nlohmann::json> exhausted;
    nlohmann::json meta;

    bool is_unknown() const { return verdict == "unknown"; }
    friend bool operator==(const Report&, const Report&) = default;
};

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kCommands[] = {"analyze", "check-family", "stratify", "probe", "transform"};

/// Throws ParseError for malformed text and PreconditionError when the
/// command does not apply to the input.
Report run_request(const Request& request);

nlohmann::json polyhedron_json(const NewtonPolyhedron& poly, const CoordinateClassification& cls,
                               const std::vector<Face>& essential);
nlohmann::json radius_json(const std::optional<Radius>& r);
nlohmann::json nondegeneracy_json(const NondegeneracyReport& r);
nlohmann::json tameness_json(const TamenessSummary& s);
nlohmann::json admissibility_json(const AdmissibilityReport& r);
nlohmann::json stratification_json(const StratificationReport& r);
nlohmann::json probe_json(const ProbeReport& r);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

std::string emit_json(const Report& r);
Report parse_report(const std::string& text);
/// Human-readable form; the first line is the verdict.
std::string emit_text(const Report& r);

}  // namespace tamegamma
