#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "riskcad/fixtures.hpp"
#include "riskcad/model_io.hpp"
#include "riskcad/render.hpp"
#include "riskcad/riskview.hpp"
#include "riskcad/validation.hpp"

using namespace riskcad;

namespace {

constexpr int exit_success = 0;  // no Error findings
constexpr int exit_findings = 1; // Error findings, or Warnings under --strict
constexpr int exit_usage = 2;    // bad invocation or unparseable input

bool color_enabled() {
    const char* no_color = std::getenv("NO_COLOR");
    if (no_color && *no_color) return false;
    return isatty(fileno(stdout)) != 0;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::optional<Model> load_model(const std::string& path) {
    auto text = read_file(path);
    if (!text) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return std::nullopt;
    }
    ParseResult result = parse_model(*text);
    if (!result.ok()) {
        for (const auto& error : result.errors)
            std::cerr << path << ":" << error.path << ": " << to_string(error.kind) << ": "
                      << error.message << "\n";
        return std::nullopt;
    }
    return std::move(result.model);
}

bool any_of_severity(const std::vector<Problem>& problems, Severity severity) {
    for (const auto& problem : problems)
        if (problem.severity == severity) return true;
    return false;
}

int cmd_validate(const std::string& path, const std::string& format, bool strict) {
    auto model = load_model(path);
    if (!model) return exit_usage;
    std::vector<Problem> problems = validate(*model);
    ReportFormat report_format = format == "json" ? ReportFormat::Json : ReportFormat::Text;
    bool color = report_format == ReportFormat::Text && color_enabled();
    std::cout << render_problems(problems, report_format, color);
    if (any_of_severity(problems, Severity::Error)) return exit_findings;
    if (strict && any_of_severity(problems, Severity::Warning)) return exit_findings;
    return exit_success;
}

int cmd_matrix(const std::string& path, const std::string& format) {
    auto model = load_model(path);
    if (!model) return exit_usage;
    try {
        PopulatedMatrix matrix = build_matrix(*model);
        MatrixFormat matrix_format = MatrixFormat::Text;
        if (format == "csv") matrix_format = MatrixFormat::Csv;
        if (format == "html") matrix_format = MatrixFormat::Html;
        bool color = matrix_format == MatrixFormat::Text && color_enabled();
        std::cout << render_matrix(matrix, matrix_format, color);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_success;
}

int cmd_diagram(const std::string& path, const std::string& out,
                const std::vector<std::string>& hide, bool threats, bool controls) {
    auto model = load_model(path);
    if (!model) return exit_usage;
    RenderOptions options;
    options.hide = hide;
    options.show_threats = threats;
    options.show_controls = controls;
    std::string dot;
    try {
        dot = emit_dot(*model, options);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    if (out.empty()) {
        std::cout << dot;
        return exit_success;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot write '" << out << "'\n";
        return exit_usage;
    }
    file << dot;
    return exit_success;
}

int cmd_diff(const std::string& baseline_path, const std::string& enhanced_path,
             const std::string& format) {
    auto baseline = load_model(baseline_path);
    if (!baseline) return exit_usage;
    auto enhanced = load_model(enhanced_path);
    if (!enhanced) return exit_usage;
    DiffReport report;
    try {
        report = diff(*baseline, *enhanced);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    ReportFormat report_format = format == "json" ? ReportFormat::Json : ReportFormat::Text;
    bool color = report_format == ReportFormat::Text && color_enabled();
    std::cout << render_diff(report, report_format, color);
    if (any_of_severity(report.findings, Severity::Error)) return exit_findings;
    return exit_success;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model-based security risk assessment"};
    app.require_subcommand(1);

    std::string model_path, out_path, baseline_path, enhanced_path;
    std::string format = "text";
    std::vector<std::string> hide;
    bool strict = false, threats = false, controls = false;

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Run the rule catalog over a model document");
    validate_cmd->add_option("model", model_path, "Model document")->required();
    validate_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    validate_cmd->add_flag("--strict", strict, "Treat warnings as failures");

    CLI::App* matrix_cmd = app.add_subcommand("matrix", "Render the populated risk matrix");
    matrix_cmd->add_option("model", model_path, "Model document")->required();
    matrix_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "html"}));

    CLI::App* diagram_cmd = app.add_subcommand("diagram", "Render the design as a Graphviz digraph");
    diagram_cmd->add_option("model", model_path, "Model document")->required();
    diagram_cmd->add_option("--out", out_path, "Write the diagram to a file instead of stdout");
    diagram_cmd->add_option("--hide", hide, "Component ids to leave out, descendants included");
    diagram_cmd->add_flag("--threats", threats, "Show threats and their allocations");
    diagram_cmd->add_flag("--controls", controls, "Show controls inside their components");

    CLI::App* diff_cmd = app.add_subcommand("diff", "Compare two assessments of the same system");
    diff_cmd->add_option("baseline", baseline_path, "Baseline model document")->required();
    diff_cmd->add_option("enhanced", enhanced_path, "Enhanced model document")->required();
    diff_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_success : exit_usage;
    }

    if (app.got_subcommand(validate_cmd)) return cmd_validate(model_path, format, strict);
    if (app.got_subcommand(matrix_cmd)) return cmd_matrix(model_path, format);
    if (app.got_subcommand(diagram_cmd))
        return cmd_diagram(model_path, out_path, hide, threats, controls);
    if (app.got_subcommand(diff_cmd)) return cmd_diff(baseline_path, enhanced_path, format);
    return exit_usage;
}
