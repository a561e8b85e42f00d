#pragma once

#include "riskcad/model.hpp"

namespace riskcad {

enum class Severity { Error, Warning, Info };

const char* to_string(Severity s);

struct Problem {
    std::string rule;
    Severity severity = Severity::Info;
    std::vector<std::string> elements; // offending element ids, all resolvable
    std::string message;
};

bool operator==(const Problem& a, const Problem& b);

namespace rules {

// Errors: the model contradicts itself.
inline constexpr const char* e_ref = "E-REF";             // dangling reference
inline constexpr const char* e_score = "E-SCORE";         // fi or si outside the scale
inline constexpr const char* e_link_self = "E-LINK-SELF"; // link with equal endpoints
inline constexpr const char* e_flow_path = "E-FLOW-PATH"; // conveyance path does not hold together

// Warnings: the model disagrees with its own records.
inline constexpr const char* w_ri_mismatch = "W-RI-MISMATCH";             // reported vs computed risk index
inline constexpr const char* w_mit_threat_mismatch = "W-MIT-THREAT-MISMATCH"; // mitigation cites an unrelated control

// Info: gaps worth a look.
inline constexpr const char* i_flow_unconveyed = "I-FLOW-UNCONVEYED"; // flow with no conveying links
inline constexpr const char* i_accepted_no_mit = "I-ACCEPTED-NO-MIT"; // accepted without mitigation
inline constexpr const char* i_mit_available = "I-MIT-AVAILABLE";     // applicable control left unused

// Emitted by diff (see riskview.hpp), all Warnings.
inline constexpr const char* d_si_changed = "D-SI-CHANGED";
inline constexpr const char* d_fi_increased = "D-FI-INCREASED";
inline constexpr const char* d_still_high = "D-STILL-HIGH";

} // namespace rules

// Runs the whole rule catalog. Never throws; broken references degrade into
// E-REF problems and suppress the rules that would need them. Problems come
// back sorted by rule id, then by first element id (natural order).
std::vector<Problem> validate(const Model& model);

} // namespace riskcad
