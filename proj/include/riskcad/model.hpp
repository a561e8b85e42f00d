#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace riskcad {

// Thrown by model operations on contract violations. Document parsing never
// throws these; it reports ParseError lists instead (see model_io.hpp).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A likelihood or impact rank lies outside its scale.
class RangeError : public Error {
public:
    using Error::Error;
};

// An id does not resolve to a declared element.
class ReferenceError : public Error {
public:
    using Error::Error;
};

// Two models use different scoring scales and cannot be compared.
class ScaleMismatchError : public Error {
public:
    using Error::Error;
};

// The three intolerance levels, in increasing order of concern.
enum class Intolerance { Low, Medium, High };

const char* intolerance_name(Intolerance level);   // "Low" / "Medium" / "High"
const char* intolerance_color(Intolerance level);  // "green" / "yellow" / "red"
std::optional<Intolerance> intolerance_from(std::string_view name);

struct LikelihoodLevel {
    int rank = 0; // contiguous from 1 within the scale
    std::string name;
};

struct ImpactLevel {
    int rank = 0;
    std::string name;
};

// Explicit intolerance per (likelihood rank, impact rank) cell.
using CellMap = std::map<std::pair<int, int>, Intolerance>;

struct ScoringSystem {
    std::vector<LikelihoodLevel> likelihood; // sorted by rank
    std::vector<ImpactLevel> impact;         // sorted by rank
    int low_max = 4;  // risk index <= low_max classifies Low
    int high_min = 8; // risk index >= high_min classifies High
    // When present, overrides the thresholds and must cover the full
    // cross product of ranks.
    std::optional<CellMap> cells;
};

struct Component {
    std::string id;
    std::string name;
    std::vector<Component> children;
    bool external = false; // environment element, not part of the system under assessment
};

struct LinkType {
    std::string id;
    std::string name;
    std::string color; // edge color in diagrams
};

enum class Directionality { Bidirectional, AToB, BToA };

const char* to_string(Directionality d);
std::optional<Directionality> directionality_from(std::string_view s);

struct Link {
    std::string id;
    std::string type; // LinkType id
    std::string a;    // Component id
    std::string b;    // Component id, never equal to a
    Directionality directionality = Directionality::Bidirectional;
};

struct DataItem {
    std::string id;
    std::string name;
};

struct DataFlow {
    std::string id;
    std::string source;      // Component id
    std::string destination; // Component id, never equal to source
    std::vector<std::string> items;       // DataItem ids, nonempty
    std::vector<std::string> conveyed_by; // ordered Link ids; empty means unspecified
};

struct Attacker {
    std::string id;
    std::string name;
    int capability = 0; // opaque level, no arithmetic meaning
};

struct Threat {
    std::string id;
    std::string name;
    std::optional<std::string> attacker; // Attacker id
};

struct Control {
    std::string id;
    std::string name;
    std::vector<std::string> allocated_to;      // Component ids; empty = catalog entry
    std::vector<std::string> mitigates_threats; // Threat ids
};

enum class AllocationStatus { Open, Accepted };

const char* to_string(AllocationStatus s);
std::optional<AllocationStatus> allocation_status_from(std::string_view s);

// A threat placed on a concrete component, with its scores.
struct ThreatAllocation {
    std::string id;
    std::string threat;    // Threat id
    std::string component; // Component id
    int fi = 0;            // likelihood rank
    int si = 0;            // impact rank
    AllocationStatus status = AllocationStatus::Open;
    std::optional<int> reported_ri;        // risk index as published in a source document
    std::vector<std::string> mitigated_by; // Control ids
};

struct Model {
    std::string name;
    ScoringSystem scoring;
    std::vector<Component> components; // forest
    std::vector<LinkType> link_types;
    std::vector<Link> links;
    std::vector<DataItem> data_items;
    std::vector<DataFlow> data_flows;
    std::vector<Attacker> attackers;
    std::vector<Threat> threats;
    std::vector<Control> controls;
    std::vector<ThreatAllocation> threat_allocations;

    // Lookups return nullptr when the id is not declared.
    const Component* find_component(const std::string& id) const;
    const Component* parent_of(const std::string& id) const;
    std::vector<const Component*> all_components() const; // preorder
    const LinkType* find_link_type(const std::string& id) const;
    const Link* find_link(const std::string& id) const;
    const DataItem* find_data_item(const std::string& id) const;
    const DataFlow* find_data_flow(const std::string& id) const;
    const Attacker* find_attacker(const std::string& id) const;
    const Threat* find_threat(const std::string& id) const;
    const Control* find_control(const std::string& id) const;
    const ThreatAllocation* find_allocation(const std::string& id) const;
};

// Orders ids with digit runs compared numerically, so s2 sorts before s10.
// All id ordering in reports and renderings uses this.
bool natural_less(std::string_view a, std::string_view b);

} // namespace riskcad
