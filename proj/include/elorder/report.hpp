#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "elorder/partition.hpp"
#include "elorder/psi_stats.hpp"
#include "elorder/structure.hpp"

namespace elorder {

inline constexpr const char* kReportVersion = "1.0.0";

// JSON views of the library types. Maps keyed by integers are emitted as
// arrays in ascending key order so output stays canonical.
nlohmann::json to_json(const PrimeSet& pi);
nlohmann::json to_json(const OrderSpectrum& s);
nlohmann::json to_json(const PsiReport& r);
nlohmann::json to_json(const EqualityStructure& s);
nlohmann::json to_json(const CorollaryCheck& c);
nlohmann::json to_json(const PartitionCertificate& c, const FiniteGroup& g);
nlohmann::json to_json(const CertificateCheck& c);
nlohmann::json to_json(const HallViolation& v);
nlohmann::json to_json(const SolutionCount& s);
nlohmann::json to_json(const GroupVerification& v);
nlohmann::json to_json(const QuestionVerdict& v);
nlohmann::json to_json(const RatioEntry& r);

using CheckMap = std::map<std::string, bool>;

/// {command, inputs, results, checks: {name: "pass"|"fail"}, version}
nlohmann::json make_report(const std::string& command, nlohmann::json inputs,
                           nlohmann::json results, const CheckMap& checks);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace elorder
