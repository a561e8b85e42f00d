#include "riskcad/riskview.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "riskcad/scoring.hpp"

namespace riskcad {

namespace {

void ensure_in_range(const ScoringSystem& scoring, const ThreatAllocation& alloc) {
    int fi_max = static_cast<int>(scoring.likelihood.size());
    int si_max = static_cast<int>(scoring.impact.size());
    if (alloc.fi < 1 || alloc.fi > fi_max || alloc.si < 1 || alloc.si > si_max)
        throw RangeError("allocation '" + alloc.id + "' scores (" + std::to_string(alloc.fi) +
                         ", " + std::to_string(alloc.si) + ") lie outside the scales 1.." +
                         std::to_string(fi_max) + " x 1.." + std::to_string(si_max));
}

bool in_range(const ScoringSystem& scoring, const ThreatAllocation& alloc) {
    return alloc.fi >= 1 && alloc.fi <= static_cast<int>(scoring.likelihood.size()) &&
           alloc.si >= 1 && alloc.si <= static_cast<int>(scoring.impact.size());
}

bool elements_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (natural_less(a[i], b[i])) return true;
        if (natural_less(b[i], a[i])) return false;
    }
    return a.size() < b.size();
}

} // namespace

PopulatedMatrix build_matrix(const Model& model) {
    PopulatedMatrix matrix;
    matrix.scoring = model.scoring;
    for (const auto& [key, level] : generate_cells(model.scoring))
        matrix.cells[key] = {level, {}};
    for (const auto& alloc : model.threat_allocations) {
        ensure_in_range(model.scoring, alloc);
        matrix.cells[{alloc.fi, alloc.si}].allocations.push_back(alloc.id);
    }
    for (auto& [key, cell] : matrix.cells)
        std::sort(cell.allocations.begin(), cell.allocations.end(),
                  [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    return matrix;
}

std::vector<std::string> high_risk(const Model& model) {
    struct Entry {
        int ri;
        std::string id;
    };
    std::vector<Entry> entries;
    for (const auto& alloc : model.threat_allocations) {
        ensure_in_range(model.scoring, alloc);
        if (classify(model.scoring, alloc.fi, alloc.si) == Intolerance::High)
            entries.push_back({risk_index(alloc.fi, alloc.si), alloc.id});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.ri != b.ri) return a.ri > b.ri;
        return natural_less(a.id, b.id);
    });
    std::vector<std::string> ids;
    ids.reserve(entries.size());
    for (auto& entry : entries) ids.push_back(std::move(entry.id));
    return ids;
}

DiffReport diff(const Model& baseline, const Model& enhanced) {
    if (baseline.scoring.likelihood.size() != enhanced.scoring.likelihood.size())
        throw ScaleMismatchError("likelihood scales differ in size (" +
                                 std::to_string(baseline.scoring.likelihood.size()) + " vs " +
                                 std::to_string(enhanced.scoring.likelihood.size()) + ")");
    if (baseline.scoring.impact.size() != enhanced.scoring.impact.size())
        throw ScaleMismatchError("impact scales differ in size (" +
                                 std::to_string(baseline.scoring.impact.size()) + " vs " +
                                 std::to_string(enhanced.scoring.impact.size()) + ")");

    std::map<std::string, const ThreatAllocation*> before, after;
    for (const auto& alloc : baseline.threat_allocations) before.emplace(alloc.id, &alloc);
    for (const auto& alloc : enhanced.threat_allocations) after.emplace(alloc.id, &alloc);

    DiffReport report;
    for (const auto& [id, b] : before) {
        auto it = after.find(id);
        if (it == after.end()) {
            report.removed.push_back(id);
            continue;
        }
        const ThreatAllocation* a = it->second;
        report.matched.push_back({id, b->fi, a->fi, b->si, a->si, risk_index(b->fi, b->si),
                                  risk_index(a->fi, a->si)});
    }
    for (const auto& [id, a] : after)
        if (!before.count(id)) report.added.push_back(id);

    auto natural = [](const std::string& a, const std::string& b) { return natural_less(a, b); };
    std::sort(report.removed.begin(), report.removed.end(), natural);
    std::sort(report.added.begin(), report.added.end(), natural);
    std::sort(report.matched.begin(), report.matched.end(),
              [](const MatchedScore& a, const MatchedScore& b) { return natural_less(a.id, b.id); });

    for (const auto& m : report.matched) {
        if (m.si_before != m.si_after)
            report.findings.push_back({rules::d_si_changed, Severity::Warning, {m.id},
                                       "SI changed from " + std::to_string(m.si_before) + " to " +
                                           std::to_string(m.si_after)});
        if (m.fi_after > m.fi_before)
            report.findings.push_back({rules::d_fi_increased, Severity::Warning, {m.id},
                                       "FI increased from " + std::to_string(m.fi_before) +
                                           " to " + std::to_string(m.fi_after)});
    }
    for (const auto& alloc : enhanced.threat_allocations) {
        if (!in_range(enhanced.scoring, alloc)) continue; // validation reports these
        if (classify(enhanced.scoring, alloc.fi, alloc.si) == Intolerance::High)
            report.findings.push_back({rules::d_still_high, Severity::Warning, {alloc.id},
                                       "classified High in the enhanced model"});
    }
    std::stable_sort(report.findings.begin(), report.findings.end(),
                     [](const Problem& a, const Problem& b) {
                         if (a.rule != b.rule) return a.rule < b.rule;
                         if (a.elements != b.elements) return elements_less(a.elements, b.elements);
                         return a.message < b.message;
                     });
    return report;
}

} // namespace riskcad
