#pragma once

#include "riskcad/model.hpp"

namespace riskcad {
namespace fixtures {

// Assessment of an autonomous cargo ship and its shore control centre, before
// any control is applied. Two data flows between shore and ship are left
// without conveying links, and one allocation carries a reported risk index
// that disagrees with its scores; both defects are deliberate, and the
// validation suite counts on them.
Model build_baseline();

// The same system after treatment: a kernel-level protection control is
// allocated to three on-board components, scores drop accordingly, and two
// allocations are accepted, one of them without any mitigation recorded.
Model build_enhanced();

} // namespace fixtures
} // namespace riskcad
