#include "riskcad/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "riskcad/scoring.hpp"

using nlohmann::json;

namespace riskcad {

namespace {

constexpr const char* ansi_reset = "\033[0m";

const char* ansi_for(Intolerance level) {
    switch (level) {
    case Intolerance::Low: return "\033[32m";
    case Intolerance::Medium: return "\033[33m";
    case Intolerance::High: return "\033[31m";
    }
    return "";
}

const char* ansi_for(Severity severity) {
    switch (severity) {
    case Severity::Error: return "\033[31m";
    case Severity::Warning: return "\033[33m";
    case Severity::Info: return "\033[34m";
    }
    return "";
}

char letter_of(Intolerance level) {
    switch (level) {
    case Intolerance::Low: return 'L';
    case Intolerance::Medium: return 'M';
    case Intolerance::High: return 'H';
    }
    return '?';
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string graph_name(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (c >= 'A' && c <= 'Z')
            out += static_cast<char>(c - 'A' + 'a');
        else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))
            out += c;
        else
            out += '_';
    }
    return out.empty() ? "model" : out;
}

void collect_subtree_ids(const Component& root, std::set<std::string>& out) {
    out.insert(root.id);
    for (const auto& child : root.children) collect_subtree_ids(child, out);
}

template <typename T>
std::vector<const T*> sorted_by_id(const std::vector<T>& items) {
    std::vector<const T*> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back(&item);
    std::sort(out.begin(), out.end(),
              [](const T* a, const T* b) { return natural_less(a->id, b->id); });
    return out;
}

std::string join(const std::vector<std::string>& parts, const char* separator) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += separator;
        out += parts[i];
    }
    return out;
}

// Everything emit_dot needs to know while walking the model.
struct DotWriter {
    const Model& model;
    const RenderOptions& options;
    std::ostringstream os;
    std::set<std::string> hidden;
    std::set<std::string> clustered;

    DotWriter(const Model& m, const RenderOptions& o) : model(m), options(o) {}

    bool visible(const std::string& component_id) const { return !hidden.count(component_id); }

    void resolve_hidden() {
        for (const auto& id : options.hide) {
            const Component* component = model.find_component(id);
            if (!component) throw ReferenceError("unknown component '" + id + "' in hide list");
            collect_subtree_ids(*component, hidden);
        }
    }

    // A component becomes a cluster when it keeps visible children, or when a
    // control has to be drawn inside it.
    void resolve_clusters() {
        for (const Component* component : model.all_components()) {
            if (!visible(component->id)) continue;
            for (const auto& child : component->children)
                if (visible(child.id)) clustered.insert(component->id);
        }
        if (!options.show_controls) return;
        for (const auto& control : model.controls)
            for (const auto& id : control.allocated_to)
                if (model.find_component(id) && visible(id)) clustered.insert(id);
    }

    std::string indent(int depth) const { return std::string(static_cast<size_t>(depth) * 2, ' '); }

    void emit_controls_inside(const std::string& component_id, int depth) {
        if (!options.show_controls) return;
        for (const Control* control : sorted_by_id(model.controls)) {
            bool here = std::find(control->allocated_to.begin(), control->allocated_to.end(),
                                  component_id) != control->allocated_to.end();
            if (!here) continue;
            os << indent(depth) << quoted(control->id + "__" + component_id)
               << " [label=" << quoted(control->name) << ", shape=hexagon, color=\"darkgreen\"];\n";
        }
    }

    void emit_component(const Component& component, int depth) {
        if (!visible(component.id)) return;
        if (clustered.count(component.id)) {
            os << indent(depth) << "subgraph " << quoted("cluster_" + component.id) << " {\n";
            os << indent(depth + 1) << "label=" << quoted(component.name) << ";\n";
            if (component.external) os << indent(depth + 1) << "style=dashed;\n";
            os << indent(depth + 1) << quoted(component.id) << " [shape=point, style=invis];\n";
            std::vector<const Component*> children;
            for (const auto& child : component.children) children.push_back(&child);
            std::sort(children.begin(), children.end(), [](const Component* a, const Component* b) {
                return natural_less(a->id, b->id);
            });
            for (const Component* child : children) emit_component(*child, depth + 1);
            emit_controls_inside(component.id, depth + 1);
            os << indent(depth) << "}\n";
        } else {
            os << indent(depth) << quoted(component.id) << " [label=" << quoted(component.name)
               << (component.external ? ", style=dashed" : "") << "];\n";
        }
    }

    // Edges attach to the component's node; when the component is a cluster
    // the invisible anchor plus lhead/ltail make the edge stop at the border.
    void emit_edge(const std::string& from, const std::string& to,
                   const std::vector<std::string>& attrs) {
        std::vector<std::string> all = attrs;
        if (clustered.count(from)) all.push_back("ltail=" + quoted("cluster_" + from));
        if (clustered.count(to)) all.push_back("lhead=" + quoted("cluster_" + to));
        os << "  " << quoted(from) << " -> " << quoted(to);
        if (!all.empty()) os << " [" << join(all, ", ") << "]";
        os << ";\n";
    }

    void emit_links() {
        for (const Link* link : sorted_by_id(model.links)) {
            if (!model.find_component(link->a) || !model.find_component(link->b)) continue;
            if (!visible(link->a) || !visible(link->b)) continue;
            const LinkType* type = model.find_link_type(link->type);
            std::vector<std::string> attrs;
            attrs.push_back("color=" + quoted(type ? type->color : "black"));
            if (link->directionality == Directionality::Bidirectional) attrs.push_back("dir=none");
            if (link->directionality == Directionality::BToA) attrs.push_back("dir=back");
            emit_edge(link->a, link->b, attrs);
        }
    }

    void emit_flows() {
        for (const DataFlow* flow : sorted_by_id(model.data_flows)) {
            if (!model.find_component(flow->source) || !model.find_component(flow->destination))
                continue;
            if (!visible(flow->source) || !visible(flow->destination)) continue;
            std::vector<std::string> attrs;
            attrs.push_back("style=bold");
            attrs.push_back("label=" + quoted(std::to_string(flow->items.size()) + " items"));
            emit_edge(flow->source, flow->destination, attrs);
        }
    }

    std::string allocation_color(const ThreatAllocation& alloc) const {
        if (alloc.status == AllocationStatus::Accepted) return "green";
        if (alloc.fi < 1 || alloc.fi > static_cast<int>(model.scoring.likelihood.size()) ||
            alloc.si < 1 || alloc.si > static_cast<int>(model.scoring.impact.size()))
            return "gray";
        switch (classify(model.scoring, alloc.fi, alloc.si)) {
        case Intolerance::High: return "red";
        case Intolerance::Medium: return "orange";
        case Intolerance::Low: return "green";
        }
        return "gray";
    }

    void emit_threats() {
        if (!options.show_threats) return;
        for (const Threat* threat : sorted_by_id(model.threats))
            os << "  " << quoted(threat->id) << " [label=" << quoted(threat->name)
               << ", shape=ellipse];\n";
        for (const ThreatAllocation* alloc : sorted_by_id(model.threat_allocations)) {
            if (!model.find_threat(alloc->threat) || !model.find_component(alloc->component))
                continue;
            if (!visible(alloc->component)) continue;
            std::vector<std::string> attrs;
            attrs.push_back("label=" + quoted(alloc->id));
            attrs.push_back("color=" + quoted(allocation_color(*alloc)));
            emit_edge(alloc->threat, alloc->component, attrs);
        }
    }

    void emit_mitigation_edges() {
        // Threat nodes only exist when threats are shown, so the green
        // mitigation arrows need both toggles.
        if (!options.show_controls || !options.show_threats) return;
        for (const Control* control : sorted_by_id(model.controls)) {
            std::vector<std::string> components = control->allocated_to;
            std::sort(components.begin(), components.end(),
                      [](const std::string& a, const std::string& b) { return natural_less(a, b); });
            for (const auto& component : components) {
                if (!model.find_component(component) || !visible(component)) continue;
                std::vector<std::string> threats = control->mitigates_threats;
                std::sort(threats.begin(), threats.end(),
                          [](const std::string& a, const std::string& b) {
                              return natural_less(a, b);
                          });
                for (const auto& threat : threats) {
                    if (!model.find_threat(threat)) continue;
                    os << "  " << quoted(control->id + "__" + component) << " -> " << quoted(threat)
                       << " [color=\"green\"];\n";
                }
            }
        }
    }

    std::string run() {
        resolve_hidden();
        resolve_clusters();
        os << "digraph " << graph_name(model.name) << " {\n";
        os << "  compound=true;\n";
        os << "  rankdir=LR;\n";
        os << "  node [shape=box];\n";
        std::vector<const Component*> roots;
        for (const auto& root : model.components) roots.push_back(&root);
        std::sort(roots.begin(), roots.end(), [](const Component* a, const Component* b) {
            return natural_less(a->id, b->id);
        });
        for (const Component* root : roots) emit_component(*root, 1);
        emit_links();
        emit_flows();
        emit_threats();
        emit_mitigation_edges();
        os << "}\n";
        return os.str();
    }
};

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

const MatrixCell* cell_at(const PopulatedMatrix& matrix, int fi, int si) {
    auto it = matrix.cells.find({fi, si});
    return it == matrix.cells.end() ? nullptr : &it->second;
}

std::string render_matrix_text(const PopulatedMatrix& matrix, bool color) {
    int fi_count = static_cast<int>(matrix.scoring.likelihood.size());
    int si_count = static_cast<int>(matrix.scoring.impact.size());

    // Plain cell contents first, then pad; ANSI codes are added per cell so
    // they never disturb the column widths.
    std::vector<std::vector<std::string>> grid(static_cast<size_t>(si_count) + 1);
    grid[0].push_back("si\\fi");
    for (int fi = 1; fi <= fi_count; ++fi) grid[0].push_back(std::to_string(fi));
    for (int si = 1; si <= si_count; ++si) {
        auto& row = grid[static_cast<size_t>(si)];
        row.push_back(std::to_string(si));
        for (int fi = 1; fi <= fi_count; ++fi) {
            const MatrixCell* cell = cell_at(matrix, fi, si);
            if (!cell) {
                row.emplace_back();
                continue;
            }
            std::string text(1, letter_of(cell->intolerance));
            if (!cell->allocations.empty()) text += " " + join(cell->allocations, ",");
            row.push_back(std::move(text));
        }
    }

    std::vector<size_t> widths(grid[0].size(), 0);
    for (const auto& row : grid)
        for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());

    std::ostringstream os;
    for (size_t r = 0; r < grid.size(); ++r) {
        std::string line;
        for (size_t c = 0; c < grid[r].size(); ++c) {
            std::string text = grid[r][c];
            size_t plain = text.size();
            if (color && r > 0 && c > 0 && !text.empty()) {
                const MatrixCell* cell =
                    cell_at(matrix, static_cast<int>(c), static_cast<int>(r));
                if (cell) text = std::string(ansi_for(cell->intolerance)) + text[0] + ansi_reset +
                                 text.substr(1);
            }
            line += text;
            if (c + 1 < grid[r].size()) line += std::string(widths[c] - plain + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

std::string render_matrix_csv(const PopulatedMatrix& matrix) {
    int fi_count = static_cast<int>(matrix.scoring.likelihood.size());
    int si_count = static_cast<int>(matrix.scoring.impact.size());
    std::ostringstream os;
    os << "si\\fi";
    for (int fi = 1; fi <= fi_count; ++fi) os << "," << fi;
    os << "\n";
    for (int si = 1; si <= si_count; ++si) {
        os << si;
        for (int fi = 1; fi <= fi_count; ++fi) {
            const MatrixCell* cell = cell_at(matrix, fi, si);
            std::string text;
            if (cell) {
                text = intolerance_name(cell->intolerance);
                if (!cell->allocations.empty()) text += ": " + join(cell->allocations, ",");
            }
            os << "," << csv_field(text);
        }
        os << "\n";
    }
    return os.str();
}

std::string html_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string render_matrix_html(const PopulatedMatrix& matrix) {
    int fi_count = static_cast<int>(matrix.scoring.likelihood.size());
    int si_count = static_cast<int>(matrix.scoring.impact.size());
    std::ostringstream os;
    os << "<table>\n";
    os << "  <tr><th>si\\fi</th>";
    for (int fi = 1; fi <= fi_count; ++fi) os << "<th>" << fi << "</th>";
    os << "</tr>\n";
    for (int si = 1; si <= si_count; ++si) {
        os << "  <tr><th>" << si << "</th>";
        for (int fi = 1; fi <= fi_count; ++fi) {
            const MatrixCell* cell = cell_at(matrix, fi, si);
            if (!cell) {
                os << "<td></td>";
                continue;
            }
            os << "<td style=\"background-color: " << intolerance_color(cell->intolerance) << "\">"
               << html_escape(join(cell->allocations, ",")) << "</td>";
        }
        os << "</tr>\n";
    }
    os << "</table>\n";
    return os.str();
}

std::string problem_line(const Problem& problem, bool color) {
    std::string severity = to_string(problem.severity);
    if (color) severity = std::string(ansi_for(problem.severity)) + severity + ansi_reset;
    std::string line = severity + " " + problem.rule;
    if (!problem.elements.empty()) line += " " + join(problem.elements, ",");
    line += ": " + problem.message;
    return line;
}

json problems_to_json(const std::vector<Problem>& problems) {
    json arr = json::array();
    for (const auto& problem : problems)
        arr.push_back({{"rule", problem.rule},
                       {"severity", to_string(problem.severity)},
                       {"elements", problem.elements},
                       {"message", problem.message}});
    return arr;
}

} // namespace

std::string emit_dot(const Model& model, const RenderOptions& options) {
    return DotWriter(model, options).run();
}

std::string render_matrix(const PopulatedMatrix& matrix, MatrixFormat format, bool color) {
    switch (format) {
    case MatrixFormat::Text: return render_matrix_text(matrix, color);
    case MatrixFormat::Csv: return render_matrix_csv(matrix);
    case MatrixFormat::Html: return render_matrix_html(matrix);
    }
    return "";
}

std::string render_problems(const std::vector<Problem>& problems, ReportFormat format, bool color) {
    if (format == ReportFormat::Json) return problems_to_json(problems).dump(2) + "\n";
    std::ostringstream os;
    for (const auto& problem : problems) os << problem_line(problem, color) << "\n";
    return os.str();
}

std::string render_diff(const DiffReport& report, ReportFormat format, bool color) {
    if (format == ReportFormat::Json) {
        json doc;
        doc["matched"] = json::array();
        for (const auto& m : report.matched)
            doc["matched"].push_back({{"id", m.id},
                                      {"fi_before", m.fi_before},
                                      {"fi_after", m.fi_after},
                                      {"si_before", m.si_before},
                                      {"si_after", m.si_after},
                                      {"ri_before", m.ri_before},
                                      {"ri_after", m.ri_after}});
        doc["added"] = report.added;
        doc["removed"] = report.removed;
        doc["findings"] = problems_to_json(report.findings);
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& m : report.matched)
        os << "matched " << m.id << " fi " << m.fi_before << "->" << m.fi_after << " si "
           << m.si_before << "->" << m.si_after << " ri " << m.ri_before << "->" << m.ri_after
           << "\n";
    for (const auto& id : report.added) os << "added " << id << "\n";
    for (const auto& id : report.removed) os << "removed " << id << "\n";
    for (const auto& problem : report.findings) os << problem_line(problem, color) << "\n";
    return os.str();
}

} // namespace riskcad
