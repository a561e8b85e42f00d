#include "riskcad/validation.hpp"

#include <algorithm>
#include <string>

#include "riskcad/queries.hpp"
#include "riskcad/scoring.hpp"

namespace riskcad {

const char* to_string(Severity s) {
    switch (s) {
    case Severity::Error: return "Error";
    case Severity::Warning: return "Warning";
    case Severity::Info: return "Info";
    }
    return "Info";
}

bool operator==(const Problem& a, const Problem& b) {
    return a.rule == b.rule && a.severity == b.severity && a.elements == b.elements &&
           a.message == b.message;
}

namespace {

bool elements_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (natural_less(a[i], b[i])) return true;
        if (natural_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

// The whole rule catalog over one model. Reference problems are collected
// first; rules that would chase a broken reference stay quiet about it so
// each defect surfaces exactly once.
struct Checker {
    const Model& model;
    std::vector<Problem> problems;

    void add(const char* rule, Severity severity, std::vector<std::string> elements,
             std::string message) {
        problems.push_back({rule, severity, std::move(elements), std::move(message)});
    }

    bool has_component(const std::string& id) const { return model.find_component(id) != nullptr; }

    void dangling(const char* owner_kind, const std::string& owner, const char* field,
                  const char* target_kind, const std::string& target) {
        add(rules::e_ref, Severity::Error, {owner},
            std::string(owner_kind) + " '" + owner + "' references unknown " + target_kind + " '" +
                target + "' in " + field);
    }

    void check_references() {
        for (const auto& link : model.links) {
            if (!model.find_link_type(link.type))
                dangling("link", link.id, "type", "link type", link.type);
            if (!has_component(link.a)) dangling("link", link.id, "a", "component", link.a);
            if (!has_component(link.b)) dangling("link", link.id, "b", "component", link.b);
        }
        for (const auto& flow : model.data_flows) {
            if (!has_component(flow.source))
                dangling("data flow", flow.id, "source", "component", flow.source);
            if (!has_component(flow.destination))
                dangling("data flow", flow.id, "destination", "component", flow.destination);
            for (const auto& item : flow.items)
                if (!model.find_data_item(item))
                    dangling("data flow", flow.id, "items", "data item", item);
            for (const auto& link : flow.conveyed_by)
                if (!model.find_link(link))
                    dangling("data flow", flow.id, "conveyed_by", "link", link);
        }
        for (const auto& threat : model.threats)
            if (threat.attacker && !model.find_attacker(*threat.attacker))
                dangling("threat", threat.id, "attacker", "attacker", *threat.attacker);
        for (const auto& control : model.controls) {
            for (const auto& component : control.allocated_to)
                if (!has_component(component))
                    dangling("control", control.id, "allocated_to", "component", component);
            for (const auto& threat : control.mitigates_threats)
                if (!model.find_threat(threat))
                    dangling("control", control.id, "mitigates_threats", "threat", threat);
        }
        for (const auto& alloc : model.threat_allocations) {
            if (!model.find_threat(alloc.threat))
                dangling("allocation", alloc.id, "threat", "threat", alloc.threat);
            if (!has_component(alloc.component))
                dangling("allocation", alloc.id, "component", "component", alloc.component);
            for (const auto& control : alloc.mitigated_by)
                if (!model.find_control(control))
                    dangling("allocation", alloc.id, "mitigated_by", "control", control);
        }
    }

    void check_scores() {
        int fi_max = static_cast<int>(model.scoring.likelihood.size());
        int si_max = static_cast<int>(model.scoring.impact.size());
        for (const auto& alloc : model.threat_allocations) {
            std::string parts;
            if (alloc.fi < 1 || alloc.fi > fi_max)
                parts += "fi " + std::to_string(alloc.fi) + " outside likelihood scale 1.." +
                         std::to_string(fi_max);
            if (alloc.si < 1 || alloc.si > si_max) {
                if (!parts.empty()) parts += "; ";
                parts += "si " + std::to_string(alloc.si) + " outside impact scale 1.." +
                         std::to_string(si_max);
            }
            if (!parts.empty()) add(rules::e_score, Severity::Error, {alloc.id}, parts);
        }
    }

    void check_links() {
        for (const auto& link : model.links)
            if (link.a == link.b)
                add(rules::e_link_self, Severity::Error, {link.id},
                    "link endpoints must differ, both are '" + link.a + "'");
    }

    void check_flows() {
        for (const auto& flow : model.data_flows) {
            if (flow.conveyed_by.empty()) {
                add(rules::i_flow_unconveyed, Severity::Info, {flow.id},
                    "no links convey this data flow");
                continue;
            }
            bool resolvable = has_component(flow.source) && has_component(flow.destination);
            for (const auto& id : flow.conveyed_by) {
                const Link* link = model.find_link(id);
                if (!link || !has_component(link->a) || !has_component(link->b))
                    resolvable = false;
            }
            if (!resolvable) continue; // E-REF already tells the story
            PathVerdict verdict = check_conveyance_path(model, flow);
            if (verdict.status == PathStatus::Invalid)
                add(rules::e_flow_path, Severity::Error, {flow.id},
                    "conveyance path does not hold together: " + verdict.reason);
        }
    }

    void check_reported_indices() {
        for (const auto& alloc : model.threat_allocations) {
            if (!alloc.reported_ri) continue;
            int computed = risk_index(alloc.fi, alloc.si);
            if (*alloc.reported_ri != computed)
                add(rules::w_ri_mismatch, Severity::Warning, {alloc.id},
                    "reported risk index " + std::to_string(*alloc.reported_ri) +
                        " does not match computed " + std::to_string(computed));
        }
    }

    void check_mitigations() {
        for (const auto& alloc : model.threat_allocations) {
            if (alloc.status == AllocationStatus::Accepted && alloc.mitigated_by.empty())
                add(rules::i_accepted_no_mit, Severity::Info, {alloc.id},
                    "accepted without any mitigation recorded");

            for (const auto& id : alloc.mitigated_by) {
                const Control* control = model.find_control(id);
                if (!control) continue;
                bool listed = std::find(control->mitigates_threats.begin(),
                                        control->mitigates_threats.end(),
                                        alloc.threat) != control->mitigates_threats.end();
                if (!listed)
                    add(rules::w_mit_threat_mismatch, Severity::Warning, {alloc.id, id},
                        "control '" + id + "' does not list this allocation's threat '" +
                            alloc.threat + "'");
            }

            if (!has_component(alloc.component)) continue;
            for (const auto& control : model.controls) {
                bool covers_threat = std::find(control.mitigates_threats.begin(),
                                               control.mitigates_threats.end(),
                                               alloc.threat) != control.mitigates_threats.end();
                if (!covers_threat) continue;
                bool covers_component = false;
                for (const auto& at : control.allocated_to)
                    if (has_component(at) && is_within(model, alloc.component, at))
                        covers_component = true;
                if (!covers_component) continue;
                bool already = std::find(alloc.mitigated_by.begin(), alloc.mitigated_by.end(),
                                         control.id) != alloc.mitigated_by.end();
                if (!already)
                    add(rules::i_mit_available, Severity::Info, {alloc.id, control.id},
                        "control '" + control.id +
                            "' covers this component and threat but is not recorded as mitigation");
            }
        }
    }

    std::vector<Problem> run() {
        check_references();
        check_scores();
        check_links();
        check_flows();
        check_reported_indices();
        check_mitigations();
        std::stable_sort(problems.begin(), problems.end(), [](const Problem& a, const Problem& b) {
            if (a.rule != b.rule) return a.rule < b.rule;
            if (a.elements != b.elements) return elements_less(a.elements, b.elements);
            return a.message < b.message;
        });
        return std::move(problems);
    }
};

} // namespace

std::vector<Problem> validate(const Model& model) { return Checker{model, {}}.run(); }

} // namespace riskcad
