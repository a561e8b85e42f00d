#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "riskcad/fixtures.hpp"
#include "riskcad/render.hpp"
#include "riskcad/validation.hpp"

using namespace riskcad;

namespace {

size_t count_rule(const std::vector<Problem>& problems, const char* rule) {
    return static_cast<size_t>(std::count_if(problems.begin(), problems.end(),
                                             [&](const Problem& p) { return p.rule == rule; }));
}

const Problem* find_rule(const std::vector<Problem>& problems, const char* rule) {
    for (const auto& p : problems)
        if (p.rule == rule) return &p;
    return nullptr;
}

ThreatAllocation* allocation(Model& model, const std::string& id) {
    for (auto& a : model.threat_allocations)
        if (a.id == id) return &a;
    return nullptr;
}

} // namespace

TEST_CASE("an empty model is quiet") {
    Model model;
    model.scoring.likelihood = {{1, "only"}};
    model.scoring.impact = {{1, "only"}};
    CHECK(validate(model).empty());
}

TEST_CASE("the baseline assessment raises exactly its known findings") {
    Model model = fixtures::build_baseline();
    auto problems = validate(model);
    REQUIRE(problems.size() == 3);

    // Deterministic order: rule id first, then first element id.
    CHECK(problems[0].rule == rules::i_flow_unconveyed);
    CHECK(problems[0].elements == std::vector<std::string>{"flow-ship-to-shore"});
    CHECK(problems[1].rule == rules::i_flow_unconveyed);
    CHECK(problems[1].elements == std::vector<std::string>{"flow-shore-to-ship"});
    CHECK(problems[2].rule == rules::w_ri_mismatch);
    CHECK(problems[2].severity == Severity::Warning);
    CHECK(problems[2].elements == std::vector<std::string>{"s7"});
    CHECK(problems[2].message.find("8") != std::string::npos);
    CHECK(problems[2].message.find("7") != std::string::npos);
}

TEST_CASE("validation output is deterministic") {
    Model model = fixtures::build_enhanced();
    auto first = validate(model);
    auto second = validate(model);
    CHECK(first == second);
    CHECK(render_problems(first, ReportFormat::Text) == render_problems(second, ReportFormat::Text));
    CHECK(render_problems(first, ReportFormat::Json) == render_problems(second, ReportFormat::Json));
}

TEST_CASE("dangling references are errors naming the referrer") {
    Model model = fixtures::build_baseline();
    model.links[0].type = "ghost-type";
    model.threat_allocations[0].threat = "ghost-threat";
    auto problems = validate(model);
    CHECK(count_rule(problems, rules::e_ref) == 2);
    const Problem* link_problem = find_rule(problems, rules::e_ref);
    REQUIRE(link_problem != nullptr);
    CHECK(link_problem->severity == Severity::Error);
    bool saw_link = false, saw_alloc = false;
    for (const auto& p : problems) {
        if (p.rule != rules::e_ref) continue;
        if (p.elements == std::vector<std::string>{"shore-comm-4g5g"}) saw_link = true;
        if (p.elements == std::vector<std::string>{"s1"}) saw_alloc = true;
        CHECK(p.message.find("ghost") != std::string::npos);
    }
    CHECK(saw_link);
    CHECK(saw_alloc);
}

TEST_CASE("scores outside the scales are errors") {
    Model model = fixtures::build_baseline();
    allocation(model, "s1")->fi = 0;
    allocation(model, "s2")->si = 9;
    auto problems = validate(model);
    CHECK(count_rule(problems, rules::e_score) == 2);
    const Problem* p = find_rule(problems, rules::e_score);
    REQUIRE(p != nullptr);
    CHECK(p->severity == Severity::Error);
}

TEST_CASE("self-loop links are errors") {
    Model model = fixtures::build_baseline();
    model.links[0].b = model.links[0].a;
    auto problems = validate(model);
    CHECK(count_rule(problems, rules::e_link_self) == 1);
    CHECK(find_rule(problems, rules::e_link_self)->elements ==
          std::vector<std::string>{"shore-comm-4g5g"});
}

TEST_CASE("a conveyance path that does not hold together is an error") {
    Model model = fixtures::build_baseline();
    model.data_flows[0].conveyed_by = {"generators-fuel-physical"};
    auto problems = validate(model);
    CHECK(count_rule(problems, rules::e_flow_path) == 1);
    const Problem* p = find_rule(problems, rules::e_flow_path);
    CHECK(p->severity == Severity::Error);
    CHECK(p->elements == std::vector<std::string>{"flow-shore-to-ship"});
    // The flow is conveyed now, badly; only the other one stays unconveyed.
    CHECK(count_rule(problems, rules::i_flow_unconveyed) == 1);
}

TEST_CASE("recording a valid path clears exactly the unconveyed note") {
    Model model = fixtures::build_baseline();
    auto before = validate(model);
    model.data_flows[0].conveyed_by = {"shore-comm-4g5g", "comm-cm-4g5g"};
    auto after = validate(model);
    CHECK(count_rule(before, rules::i_flow_unconveyed) == 2);
    CHECK(count_rule(after, rules::i_flow_unconveyed) == 1);
    CHECK(count_rule(after, rules::e_flow_path) == 0);
    CHECK(after.size() == before.size() - 1);
}

TEST_CASE("the enhanced assessment flags the unmitigated acceptance only") {
    Model model = fixtures::build_enhanced();
    auto problems = validate(model);
    CHECK(count_rule(problems, rules::i_accepted_no_mit) == 1);
    const Problem* p = find_rule(problems, rules::i_accepted_no_mit);
    CHECK(p->elements == std::vector<std::string>{"s7"});
    CHECK(p->severity == Severity::Info);
    // The other accepted allocation records its mitigation, and the control
    // covers neither s7's component nor an ancestor, so nothing else fires.
    CHECK(count_rule(problems, rules::i_mit_available) == 0);
    CHECK(count_rule(problems, rules::w_mit_threat_mismatch) == 0);
    CHECK(problems.size() == 3);
}

TEST_CASE("an applicable control on an ancestor is suggested") {
    Model model = fixtures::build_enhanced();
    for (auto& control : model.controls)
        if (control.id == "operate-in-kernel-function") control.allocated_to = {"ship-systems"};
    auto problems = validate(model);
    // s7 sits on connectivity-manager below ship-systems and lists no
    // mitigation; the freshly widened control now applies to it.
    CHECK(count_rule(problems, rules::i_mit_available) == 1);
    const Problem* p = find_rule(problems, rules::i_mit_available);
    CHECK(p->elements == std::vector<std::string>{"s7", "operate-in-kernel-function"});
}

TEST_CASE("mitigations must cite controls that list the threat") {
    Model model = fixtures::build_enhanced();
    allocation(model, "s1")->mitigated_by = {"operate-in-kernel-function"};
    auto problems = validate(model);
    CHECK(count_rule(problems, rules::w_mit_threat_mismatch) == 1);
    const Problem* p = find_rule(problems, rules::w_mit_threat_mismatch);
    CHECK(p->severity == Severity::Warning);
    CHECK(p->elements ==
          std::vector<std::string>{"s1", "operate-in-kernel-function"});
}

TEST_CASE("acceptance with a recorded mitigation is fine") {
    Model model = fixtures::build_enhanced();
    allocation(model, "s7")->mitigated_by = {"operate-in-kernel-function"};
    auto problems = validate(model);
    CHECK(count_rule(problems, rules::i_accepted_no_mit) == 0);
    // Citing a control that does list the threat raises no mismatch either.
    CHECK(count_rule(problems, rules::w_mit_threat_mismatch) == 0);
}
