#pragma once

#include "riskcad/model.hpp"
#include "riskcad/riskview.hpp"
#include "riskcad/validation.hpp"

namespace riskcad {

struct RenderOptions {
    // Component ids to leave out of the diagram; their descendants and any
    // edge touching them disappear too.
    std::vector<std::string> hide;
    bool show_threats = false;
    bool show_controls = false;
};

// Renders the model as a Graphviz digraph: nested clusters for the component
// hierarchy, link edges colored by link type, bold data flow edges. Output is
// byte-deterministic; elements appear in natural id order. Throws
// ReferenceError when a hide id does not resolve.
std::string emit_dot(const Model& model, const RenderOptions& options = {});

enum class MatrixFormat { Text, Csv, Html };

// Grid with impact rows ascending top to bottom and likelihood columns
// ascending left to right. Text shows L/M/H letters, CSV level names, HTML
// green/yellow/red cell backgrounds; each cell also lists its allocations.
// color adds ANSI codes to the text form only.
std::string render_matrix(const PopulatedMatrix& matrix, MatrixFormat format, bool color = false);

enum class ReportFormat { Text, Json };

// One line per problem (text) or a canonical JSON array.
std::string render_problems(const std::vector<Problem>& problems, ReportFormat format,
                            bool color = false);

// Matched score movements, added/removed ids, then findings.
std::string render_diff(const DiffReport& report, ReportFormat format, bool color = false);

} // namespace riskcad
