#pragma once

#include "riskcad/model.hpp"

namespace riskcad {

// Integrated risk index of a likelihood/impact pair. Pure arithmetic; range
// checking belongs to the callers and the validation rules.
int risk_index(int fi, int si);

// Intolerance of an in-range pair under the given scoring system. Uses the
// explicit cell map when present, the thresholds otherwise. Throws RangeError
// when a rank lies outside its scale.
Intolerance classify(const ScoringSystem& scoring, int fi, int si);

// The full cross product of ranks mapped through classify.
CellMap generate_cells(const ScoringSystem& scoring);

} // namespace riskcad
