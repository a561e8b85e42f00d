#include "riskcad/queries.hpp"

namespace riskcad {

namespace {

bool subtree_contains(const Component& root, const std::string& id) {
    if (root.id == id) return true;
    for (const auto& child : root.children)
        if (subtree_contains(child, id)) return true;
    return false;
}

} // namespace

bool is_within(const Model& model, const std::string& x, const std::string& y) {
    if (!model.find_component(x)) throw ReferenceError("unknown component '" + x + "'");
    const Component* outer = model.find_component(y);
    if (!outer) throw ReferenceError("unknown component '" + y + "'");
    return subtree_contains(*outer, x);
}

PathVerdict check_conveyance_path(const Model& model, const DataFlow& flow) {
    if (flow.conveyed_by.empty()) return {PathStatus::Unspecified, ""};

    std::vector<const Link*> path;
    path.reserve(flow.conveyed_by.size());
    for (const auto& id : flow.conveyed_by) {
        const Link* link = model.find_link(id);
        if (!link)
            throw ReferenceError("data flow '" + flow.id + "' conveyed by unknown link '" + id + "'");
        path.push_back(link);
    }

    auto matches = [&](const std::string& x, const std::string& y) {
        return is_within(model, x, y) || is_within(model, y, x);
    };
    auto touches = [&](const Link& link, const std::string& component) {
        return matches(link.a, component) || matches(link.b, component);
    };

    if (!touches(*path.front(), flow.source))
        return {PathStatus::Invalid, "first link misses source"};
    if (!touches(*path.back(), flow.destination))
        return {PathStatus::Invalid, "last link misses destination"};
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        const Link& left = *path[i];
        const Link& right = *path[i + 1];
        bool chained = matches(left.a, right.a) || matches(left.a, right.b) ||
                       matches(left.b, right.a) || matches(left.b, right.b);
        if (!chained)
            return {PathStatus::Invalid, "links " + std::to_string(i + 1) + " and " +
                                             std::to_string(i + 2) + " share no matching component"};
    }
    return {PathStatus::Valid, ""};
}

} // namespace riskcad
