#include "riskcad/model.hpp"

#include <cctype>

namespace riskcad {

const char* intolerance_name(Intolerance level) {
    switch (level) {
    case Intolerance::Low: return "Low";
    case Intolerance::Medium: return "Medium";
    case Intolerance::High: return "High";
    }
    return "Low";
}

const char* intolerance_color(Intolerance level) {
    switch (level) {
    case Intolerance::Low: return "green";
    case Intolerance::Medium: return "yellow";
    case Intolerance::High: return "red";
    }
    return "green";
}

std::optional<Intolerance> intolerance_from(std::string_view name) {
    if (name == "Low") return Intolerance::Low;
    if (name == "Medium") return Intolerance::Medium;
    if (name == "High") return Intolerance::High;
    return std::nullopt;
}

const char* to_string(Directionality d) {
    switch (d) {
    case Directionality::Bidirectional: return "bidirectional";
    case Directionality::AToB: return "a_to_b";
    case Directionality::BToA: return "b_to_a";
    }
    return "bidirectional";
}

std::optional<Directionality> directionality_from(std::string_view s) {
    if (s == "bidirectional") return Directionality::Bidirectional;
    if (s == "a_to_b") return Directionality::AToB;
    if (s == "b_to_a") return Directionality::BToA;
    return std::nullopt;
}

const char* to_string(AllocationStatus s) {
    return s == AllocationStatus::Accepted ? "accepted" : "open";
}

std::optional<AllocationStatus> allocation_status_from(std::string_view s) {
    if (s == "open") return AllocationStatus::Open;
    if (s == "accepted") return AllocationStatus::Accepted;
    return std::nullopt;
}

namespace {

const Component* find_in_tree(const Component& root, const std::string& id) {
    if (root.id == id) return &root;
    for (const auto& child : root.children)
        if (const Component* hit = find_in_tree(child, id)) return hit;
    return nullptr;
}

const Component* find_parent_in_tree(const Component& root, const std::string& id) {
    for (const auto& child : root.children) {
        if (child.id == id) return &root;
        if (const Component* hit = find_parent_in_tree(child, id)) return hit;
    }
    return nullptr;
}

void preorder(const Component& root, std::vector<const Component*>& out) {
    out.push_back(&root);
    for (const auto& child : root.children) preorder(child, out);
}

template <typename T>
const T* find_by_id(const std::vector<T>& items, const std::string& id) {
    for (const auto& item : items)
        if (item.id == id) return &item;
    return nullptr;
}

} // namespace

const Component* Model::find_component(const std::string& id) const {
    for (const auto& root : components)
        if (const Component* hit = find_in_tree(root, id)) return hit;
    return nullptr;
}

const Component* Model::parent_of(const std::string& id) const {
    for (const auto& root : components)
        if (const Component* hit = find_parent_in_tree(root, id)) return hit;
    return nullptr;
}

std::vector<const Component*> Model::all_components() const {
    std::vector<const Component*> out;
    for (const auto& root : components) preorder(root, out);
    return out;
}

const LinkType* Model::find_link_type(const std::string& id) const { return find_by_id(link_types, id); }
const Link* Model::find_link(const std::string& id) const { return find_by_id(links, id); }
const DataItem* Model::find_data_item(const std::string& id) const { return find_by_id(data_items, id); }
const DataFlow* Model::find_data_flow(const std::string& id) const { return find_by_id(data_flows, id); }
const Attacker* Model::find_attacker(const std::string& id) const { return find_by_id(attackers, id); }
const Threat* Model::find_threat(const std::string& id) const { return find_by_id(threats, id); }
const Control* Model::find_control(const std::string& id) const { return find_by_id(controls, id); }
const ThreatAllocation* Model::find_allocation(const std::string& id) const {
    return find_by_id(threat_allocations, id);
}

bool natural_less(std::string_view a, std::string_view b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        char ca = a[i], cb = b[j];
        bool da = std::isdigit(static_cast<unsigned char>(ca));
        bool db = std::isdigit(static_cast<unsigned char>(cb));
        if (da && db) {
            // Compare whole digit runs numerically; shorter value wins, equal
            // values fall through to the next chunk.
            size_t ia = i, jb = j;
            while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
            while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
            std::string_view ra = a.substr(i, ia - i), rb = b.substr(j, jb - j);
            std::string_view ta = ra.substr(std::min(ra.find_first_not_of('0'), ra.size()));
            std::string_view tb = rb.substr(std::min(rb.find_first_not_of('0'), rb.size()));
            if (ta.size() != tb.size()) return ta.size() < tb.size();
            if (ta != tb) return ta < tb;
            i = ia;
            j = jb;
            continue;
        }
        if (ca != cb) return ca < cb;
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

} // namespace riskcad
