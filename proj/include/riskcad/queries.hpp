#pragma once

#include "riskcad/model.hpp"

namespace riskcad {

// True iff component x equals y or sits anywhere below y in the component
// forest. Throws ReferenceError when either id does not resolve.
bool is_within(const Model& model, const std::string& x, const std::string& y);

enum class PathStatus { Valid, Invalid, Unspecified };

struct PathVerdict {
    PathStatus status = PathStatus::Unspecified;
    std::string reason; // set when status is Invalid
};

// Checks whether a flow's conveyed_by link sequence plausibly carries it:
// the first link must touch the source, the last must touch the destination,
// and consecutive links must share a matching component. Two components
// match when one equals or contains the other. An empty sequence yields
// Unspecified. Throws ReferenceError when a link id does not resolve.
PathVerdict check_conveyance_path(const Model& model, const DataFlow& flow);

} // namespace riskcad
