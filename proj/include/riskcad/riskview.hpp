#pragma once

#include "riskcad/model.hpp"
#include "riskcad/validation.hpp"

namespace riskcad {

struct MatrixCell {
    Intolerance intolerance = Intolerance::Low;
    std::vector<std::string> allocations; // allocation ids, natural order
};

// A full likelihood x impact grid with every allocation placed in its cell.
// Carries its own copy of the scoring system, so it outlives the model.
struct PopulatedMatrix {
    ScoringSystem scoring;
    std::map<std::pair<int, int>, MatrixCell> cells; // keyed by (fi rank, si rank)
};

// Places every allocation at (fi, si). Throws RangeError, naming the
// allocation, when a score lies outside the scale.
PopulatedMatrix build_matrix(const Model& model);

// Allocation ids classifying High, by descending risk index then id.
std::vector<std::string> high_risk(const Model& model);

struct MatchedScore {
    std::string id;
    int fi_before = 0;
    int fi_after = 0;
    int si_before = 0;
    int si_after = 0;
    int ri_before = 0;
    int ri_after = 0;
};

struct DiffReport {
    std::vector<MatchedScore> matched; // allocations present on both sides, by id
    std::vector<std::string> added;    // only in the enhanced model
    std::vector<std::string> removed;  // only in the baseline model
    std::vector<Problem> findings;     // D-* rules, all Warnings
};

// Compares two assessments of the same system by allocation id. Throws
// ScaleMismatchError when the scoring scales differ in size.
DiffReport diff(const Model& baseline, const Model& enhanced);

} // namespace riskcad
