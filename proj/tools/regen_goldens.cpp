// Regenerates the shipped documents and diagrams under data/ from the
// built-in fixtures. Run it after an intentional change to the fixtures or
// the renderers, review the diff by hand, and commit the result.

#include <fstream>
#include <iostream>
#include <string>

#include "riskcad/fixtures.hpp"
#include "riskcad/model_io.hpp"
#include "riskcad/render.hpp"

using namespace riskcad;

namespace {

bool write(const std::string& dir, const std::string& name, const std::string& content) {
    std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << path << "'\n";
        return false;
    }
    out << content;
    std::cout << "wrote " << path << "\n";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    std::string dir = argc > 1 ? argv[1] : "data";
    Model baseline = fixtures::build_baseline();
    Model enhanced = fixtures::build_enhanced();

    RenderOptions threats;
    threats.show_threats = true;
    RenderOptions full;
    full.show_threats = true;
    full.show_controls = true;

    bool ok = write(dir, "baseline.json", serialize_model(baseline));
    ok = write(dir, "enhanced.json", serialize_model(enhanced)) && ok;
    ok = write(dir, "baseline-threats.dot", emit_dot(baseline, threats)) && ok;
    ok = write(dir, "enhanced-controls.dot", emit_dot(enhanced, full)) && ok;
    return ok ? 0 : 1;
}
