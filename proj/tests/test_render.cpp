#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>

#include "riskcad/fixtures.hpp"
#include "riskcad/render.hpp"
#include "riskcad/riskview.hpp"
#include "riskcad/validation.hpp"

using namespace riskcad;

namespace {

std::string read_file(const std::string& name) {
    std::ifstream in(std::string(RISKCAD_DATA_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Model empty_seven_by_four() {
    Model model;
    model.scoring.likelihood = {{1, "Extremely remote"}, {2, "2"}, {3, "Remote"}, {4, "4"},
                                {5, "Reasonably probable"}, {6, "6"}, {7, "Frequent"}};
    model.scoring.impact = {{1, "Minor"}, {2, "Significant"}, {3, "Severe"}, {4, "Catastrophic"}};
    return model;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("the empty default grid renders the reference letters") {
    PopulatedMatrix matrix = build_matrix(empty_seven_by_four());
    std::string expected = "si\\fi  1  2  3  4  5  6  7\n"
                           "1      L  L  L  M  M  M  H\n"
                           "2      L  L  M  M  M  H  H\n"
                           "3      L  M  M  M  H  H  H\n"
                           "4      M  M  M  H  H  H  H\n";
    CHECK(render_matrix(matrix, MatrixFormat::Text) == expected);
}

TEST_CASE("allocations show up inside their text cell") {
    Model model = fixtures::build_baseline();
    PopulatedMatrix matrix = build_matrix(model);
    std::string text = render_matrix(matrix, MatrixFormat::Text);
    CHECK(contains(text, "H s1,s2,s10"));
    CHECK(contains(text, "M s7"));
}

TEST_CASE("a one-cell scale still renders") {
    Model model;
    model.scoring.likelihood = {{1, "only"}};
    model.scoring.impact = {{1, "only"}};
    PopulatedMatrix matrix = build_matrix(model);
    CHECK(render_matrix(matrix, MatrixFormat::Text) == "si\\fi  1\n1      L\n");
}

TEST_CASE("csv cells carry level names and quote embedded commas") {
    Model model = fixtures::build_baseline();
    PopulatedMatrix matrix = build_matrix(model);
    std::string csv = render_matrix(matrix, MatrixFormat::Csv);
    CHECK(contains(csv, "si\\fi,1,2,3,4,5,6,7\n"));
    CHECK(contains(csv, "\"High: s1,s2,s10\""));
    CHECK(contains(csv, "Medium: s7"));
    CHECK(!contains(csv, "\r\n"));
}

TEST_CASE("html cells are colored by intolerance") {
    Model model = fixtures::build_baseline();
    PopulatedMatrix matrix = build_matrix(model);
    std::string html = render_matrix(matrix, MatrixFormat::Html);
    CHECK(contains(html, "<td style=\"background-color: red\">s1,s2,s10</td>"));
    CHECK(contains(html, "<td style=\"background-color: yellow\">s7</td>"));
    CHECK(contains(html, "background-color: green"));
}

TEST_CASE("problems render one line each, severity first") {
    Model model = fixtures::build_baseline();
    model.links[0].type = "ghost";
    auto problems = validate(model);
    std::string text = render_problems(problems, ReportFormat::Text);
    CHECK(contains(text, "Error E-REF shore-comm-4g5g:"));
    CHECK(contains(text, "Warning W-RI-MISMATCH s7:"));
    CHECK(contains(text, "Info I-FLOW-UNCONVEYED flow-ship-to-shore:"));

    CHECK(render_problems({}, ReportFormat::Text).empty());
    CHECK(render_problems({}, ReportFormat::Json) == "[]\n");
}

TEST_CASE("problem json is canonical and stable") {
    Model model = fixtures::build_baseline();
    auto problems = validate(model);
    std::string json_text = render_problems(problems, ReportFormat::Json);
    CHECK(contains(json_text, "\"rule\": \"W-RI-MISMATCH\""));
    CHECK(contains(json_text, "\"severity\": \"Warning\""));
    CHECK(json_text.back() == '\n');
    CHECK(render_problems(problems, ReportFormat::Json) == json_text);
}

TEST_CASE("an empty model renders a bare digraph") {
    Model model;
    model.name = "Nothing Here";
    CHECK(emit_dot(model) == "digraph nothing_here {\n"
                             "  compound=true;\n"
                             "  rankdir=LR;\n"
                             "  node [shape=box];\n"
                             "}\n");
    model.name.clear();
    CHECK(contains(emit_dot(model), "digraph model {"));
}

TEST_CASE("the baseline diagram nests the ship and marks externals") {
    Model model = fixtures::build_baseline();
    std::string dot = emit_dot(model);
    CHECK(contains(dot, "digraph autonomous_ship_baseline {"));
    CHECK(contains(dot, "subgraph \"cluster_ship-systems\" {"));
    CHECK(contains(dot, "\"connectivity-manager\" [label=\"Connectivity Manager\"]"));
    CHECK(contains(dot, "\"internet\" [label=\"Internet\", style=dashed]"));
    CHECK(contains(dot, "color=\"orange\""));  // 4G/5G legend color
    CHECK(contains(dot, "dir=none"));  // bidirectional links
    // The generators-to-fuel link runs a to b, which is plain arrow direction.
    CHECK(!contains(dot, "dir=back"));
    CHECK(contains(dot, "label=\"5 items\"")); // shore-to-ship flow
    CHECK(contains(dot, "lhead=\"cluster_ship-systems\""));
    CHECK(emit_dot(model) == dot);
}

TEST_CASE("hiding a component removes its subtree and edges") {
    Model model = fixtures::build_baseline();
    RenderOptions options;
    options.hide = {"ship-systems"};
    std::string dot = emit_dot(model, options);
    CHECK(!contains(dot, "cluster_ship-systems"));
    CHECK(!contains(dot, "connectivity-manager"));
    CHECK(!contains(dot, "generators"));
    CHECK(contains(dot, "\"shore-control-centre\""));
    // The 4G/5G link into the hidden connectivity manager disappears with it.
    CHECK(!contains(dot, "\"communication-network\" -> \"connectivity-manager\""));

    RenderOptions bogus;
    bogus.hide = {"no-such-component"};
    CHECK_THROWS_AS(emit_dot(model, bogus), ReferenceError);
}

TEST_CASE("threat edges take the computed intolerance color") {
    Model model = fixtures::build_baseline();
    RenderOptions options;
    options.show_threats = true;
    std::string dot = emit_dot(model, options);
    CHECK(contains(dot, "\"malware-installation\" [label=\"Malware installation\", shape=ellipse]"));
    // s1 computes High, s7 computes Medium even though its reported index says High.
    CHECK(contains(dot, "label=\"s1\", color=\"red\""));
    CHECK(contains(dot, "label=\"s7\", color=\"orange\""));
}

TEST_CASE("accepted allocations turn green and controls sit inside their component") {
    Model model = fixtures::build_enhanced();
    RenderOptions options;
    options.show_threats = true;
    options.show_controls = true;
    std::string dot = emit_dot(model, options);
    CHECK(contains(dot, "label=\"s7\", color=\"green\""));
    CHECK(contains(dot, "label=\"asc-malware\", color=\"green\""));
    CHECK(contains(dot, "subgraph \"cluster_autonomous-ship-controller\" {"));
    CHECK(contains(dot,
                   "\"operate-in-kernel-function__autonomous-ship-controller\" "
                   "[label=\"Operate in a kernel function\", shape=hexagon, color=\"darkgreen\"]"));
    CHECK(contains(dot, "\"operate-in-kernel-function__autonomous-ship-controller\" -> "
                        "\"malware-installation\" [color=\"green\"]"));
}

TEST_CASE("diagram goldens stay frozen") {
    RenderOptions threats;
    threats.show_threats = true;
    CHECK(emit_dot(fixtures::build_baseline(), threats) == read_file("baseline-threats.dot"));

    RenderOptions full;
    full.show_threats = true;
    full.show_controls = true;
    CHECK(emit_dot(fixtures::build_enhanced(), full) == read_file("enhanced-controls.dot"));
}

TEST_CASE("diff reports render movement lines then findings") {
    DiffReport report = diff(fixtures::build_baseline(), fixtures::build_enhanced());
    std::string text = render_diff(report, ReportFormat::Text);
    CHECK(contains(text, "matched s1 fi 5->2 si 4->4 ri 9->6\n"));
    CHECK(contains(text, "added asc-malware\n"));
    CHECK(contains(text, "Warning D-SI-CHANGED s7:"));
    std::string json_text = render_diff(report, ReportFormat::Json);
    CHECK(contains(json_text, "\"fi_before\": 5"));
    CHECK(contains(json_text, "\"findings\""));
}
