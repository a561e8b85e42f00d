#include "riskcad/model_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <set>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace riskcad {

const char* to_string(ParseError::Kind kind) {
    switch (kind) {
    case ParseError::Kind::Syntax: return "syntax";
    case ParseError::Kind::Schema: return "schema";
    case ParseError::Kind::DuplicateId: return "duplicate_id";
    case ParseError::Kind::DanglingReference: return "dangling_reference";
    case ParseError::Kind::Range: return "range";
    }
    return "schema";
}

namespace {

using Kind = ParseError::Kind;

bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-')) return false;
    return true;
}

// Walks the document and accumulates every independent defect; the model is
// only handed out when the error list stays empty.
struct Parser {
    std::vector<ParseError> errors;
    Model model;
    std::map<std::string, std::string> declared; // id -> declaring path
    bool scales_ok = false;

    // Document indexes of the entries that made it into the model, so the
    // reference and range phases can point back at the right node.
    std::vector<size_t> type_idx, link_idx, item_idx, flow_idx, attacker_idx, threat_idx,
        control_idx, alloc_idx;

    void fail(Kind kind, std::string path, std::string message) {
        errors.push_back({kind, std::move(path), std::move(message)});
    }

    void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& path) {
        for (const auto& [key, value] : obj.items()) {
            bool known = false;
            for (const char* k : allowed)
                if (key == k) known = true;
            if (!known) fail(Kind::Schema, path + "/" + key, "unknown field '" + key + "'");
        }
    }

    std::optional<std::string> req_string(const json& obj, const char* key,
                                          const std::string& path) {
        auto it = obj.find(key);
        if (it == obj.end()) {
            fail(Kind::Schema, path, std::string("required field '") + key + "' is missing");
            return std::nullopt;
        }
        if (!it->is_string()) {
            fail(Kind::Schema, path + "/" + key, std::string("field '") + key + "' must be a string");
            return std::nullopt;
        }
        return it->get<std::string>();
    }

    std::optional<std::string> opt_string(const json& obj, const char* key,
                                          const std::string& path) {
        auto it = obj.find(key);
        if (it == obj.end()) return std::nullopt;
        if (!it->is_string()) {
            fail(Kind::Schema, path + "/" + key, std::string("field '") + key + "' must be a string");
            return std::nullopt;
        }
        return it->get<std::string>();
    }

    std::optional<int> req_int(const json& obj, const char* key, const std::string& path) {
        auto it = obj.find(key);
        if (it == obj.end()) {
            fail(Kind::Schema, path, std::string("required field '") + key + "' is missing");
            return std::nullopt;
        }
        if (!it->is_number_integer()) {
            fail(Kind::Schema, path + "/" + key,
                 std::string("field '") + key + "' must be an integer");
            return std::nullopt;
        }
        return it->get<int>();
    }

    std::optional<int> opt_int(const json& obj, const char* key, const std::string& path) {
        auto it = obj.find(key);
        if (it == obj.end()) return std::nullopt;
        if (!it->is_number_integer()) {
            fail(Kind::Schema, path + "/" + key,
                 std::string("field '") + key + "' must be an integer");
            return std::nullopt;
        }
        return it->get<int>();
    }

    std::optional<bool> opt_bool(const json& obj, const char* key, const std::string& path) {
        auto it = obj.find(key);
        if (it == obj.end()) return std::nullopt;
        if (!it->is_boolean()) {
            fail(Kind::Schema, path + "/" + key,
                 std::string("field '") + key + "' must be a boolean");
            return std::nullopt;
        }
        return it->get<bool>();
    }

    // Required id field; charset violations are reported but the value is
    // still returned so the element stays addressable.
    std::optional<std::string> req_id(const json& obj, const std::string& path) {
        auto id = req_string(obj, "id", path);
        if (id && !valid_id(*id))
            fail(Kind::Schema, path + "/id",
                 "id '" + *id + "' must match [a-z0-9-] and be nonempty");
        return id;
    }

    void register_id(const std::string& id, const std::string& path) {
        auto [it, inserted] = declared.emplace(id, path);
        if (!inserted)
            fail(Kind::DuplicateId, path + "/id",
                 "id '" + id + "' already declared at " + it->second);
    }

    // Optional array of id strings. Ill-typed entries become empty strings so
    // later phases keep their document indexes aligned; empty ids are never
    // checked again because the schema error is already recorded.
    std::vector<std::string> id_list(const json& obj, const char* key, const std::string& path) {
        std::vector<std::string> out;
        auto it = obj.find(key);
        if (it == obj.end()) return out;
        if (!it->is_array()) {
            fail(Kind::Schema, path + "/" + key, std::string("field '") + key + "' must be an array");
            return out;
        }
        for (size_t i = 0; i < it->size(); ++i) {
            const json& entry = (*it)[i];
            if (!entry.is_string()) {
                fail(Kind::Schema, path + "/" + key + "/" + std::to_string(i),
                     "entries must be id strings");
                out.emplace_back();
                continue;
            }
            out.push_back(entry.get<std::string>());
        }
        return out;
    }

    // Returns the array under key, or nullptr. Missing keys are silent;
    // present non-arrays are schema errors.
    const json* opt_array(const json& obj, const char* key, const std::string& path) {
        auto it = obj.find(key);
        if (it == obj.end()) return nullptr;
        if (!it->is_array()) {
            fail(Kind::Schema, path + "/" + key, std::string("field '") + key + "' must be an array");
            return nullptr;
        }
        return &*it;
    }

    bool entry_object(const json& entry, const std::string& path) {
        if (entry.is_object()) return true;
        fail(Kind::Schema, path, "entry must be an object");
        return false;
    }

    template <typename Level>
    void parse_levels(const json& arr, const std::string& path, std::vector<Level>& out,
                      const char* scale) {
        for (size_t i = 0; i < arr.size(); ++i) {
            std::string entry_path = path + "/" + std::to_string(i);
            const json& entry = arr[i];
            if (!entry_object(entry, entry_path)) continue;
            check_keys(entry, {"rank", "name"}, entry_path);
            auto rank = req_int(entry, "rank", entry_path);
            auto name = req_string(entry, "name", entry_path);
            if (rank && name) out.push_back({*rank, *name});
        }
        std::sort(out.begin(), out.end(),
                  [](const Level& a, const Level& b) { return a.rank < b.rank; });
        if (out.empty()) {
            fail(Kind::Schema, path, std::string(scale) + " scale needs at least one level");
            return;
        }
        for (size_t i = 0; i < out.size(); ++i) {
            if (out[i].rank != static_cast<int>(i) + 1) {
                fail(Kind::Schema, path,
                     std::string(scale) + " ranks must be contiguous integers starting at 1");
                return;
            }
        }
        std::set<std::string> names;
        for (const auto& level : out)
            if (!names.insert(level.name).second)
                fail(Kind::Schema, path,
                     std::string(scale) + " level name '" + level.name + "' is not unique");
    }

    void parse_cells(const json& arr, const std::string& path) {
        CellMap cells;
        for (size_t i = 0; i < arr.size(); ++i) {
            std::string entry_path = path + "/" + std::to_string(i);
            const json& entry = arr[i];
            if (!entry_object(entry, entry_path)) continue;
            check_keys(entry, {"fi", "si", "level"}, entry_path);
            auto fi = req_int(entry, "fi", entry_path);
            auto si = req_int(entry, "si", entry_path);
            auto level_name = req_string(entry, "level", entry_path);
            std::optional<Intolerance> level;
            if (level_name) {
                level = intolerance_from(*level_name);
                if (!level)
                    fail(Kind::Schema, entry_path + "/level",
                         "level must be one of Low, Medium, High");
            }
            if (!fi || !si || !level) continue;
            if (scales_ok) {
                bool in_range = true;
                if (*fi < 1 || *fi > static_cast<int>(model.scoring.likelihood.size())) {
                    fail(Kind::Range, entry_path + "/fi",
                         "likelihood rank " + std::to_string(*fi) + " outside scale 1.." +
                             std::to_string(model.scoring.likelihood.size()));
                    in_range = false;
                }
                if (*si < 1 || *si > static_cast<int>(model.scoring.impact.size())) {
                    fail(Kind::Range, entry_path + "/si",
                         "impact rank " + std::to_string(*si) + " outside scale 1.." +
                             std::to_string(model.scoring.impact.size()));
                    in_range = false;
                }
                if (!in_range) continue;
            }
            if (!cells.emplace(std::make_pair(*fi, *si), *level).second)
                fail(Kind::Schema, entry_path,
                     "cell (" + std::to_string(*fi) + ", " + std::to_string(*si) +
                         ") declared twice");
        }
        if (scales_ok) {
            for (int fi = 1; fi <= static_cast<int>(model.scoring.likelihood.size()); ++fi) {
                for (int si = 1; si <= static_cast<int>(model.scoring.impact.size()); ++si) {
                    if (!cells.count({fi, si})) {
                        fail(Kind::Schema, path,
                             "cells must cover the full rank cross product; (" +
                                 std::to_string(fi) + ", " + std::to_string(si) + ") is missing");
                        model.scoring.cells = std::move(cells);
                        return;
                    }
                }
            }
        }
        model.scoring.cells = std::move(cells);
    }

    void parse_scoring(const json& root) {
        auto it = root.find("scoring");
        if (it == root.end()) {
            fail(Kind::Schema, "/", "required field 'scoring' is missing");
            return;
        }
        const std::string path = "/scoring";
        if (!it->is_object()) {
            fail(Kind::Schema, path, "field 'scoring' must be an object");
            return;
        }
        check_keys(*it, {"likelihood", "impact", "intolerance"}, path);
        size_t before = errors.size();
        if (const json* likelihood = opt_array(*it, "likelihood", path))
            parse_levels(*likelihood, path + "/likelihood", model.scoring.likelihood, "likelihood");
        else if (!it->contains("likelihood"))
            fail(Kind::Schema, path, "required field 'likelihood' is missing");
        if (const json* impact = opt_array(*it, "impact", path))
            parse_levels(*impact, path + "/impact", model.scoring.impact, "impact");
        else if (!it->contains("impact"))
            fail(Kind::Schema, path, "required field 'impact' is missing");
        scales_ok = errors.size() == before && !model.scoring.likelihood.empty() &&
                    !model.scoring.impact.empty();

        auto intolerance = it->find("intolerance");
        if (intolerance == it->end()) return;
        const std::string ipath = path + "/intolerance";
        if (!intolerance->is_object()) {
            fail(Kind::Schema, ipath, "field 'intolerance' must be an object");
            return;
        }
        check_keys(*intolerance, {"low_max", "high_min", "cells"}, ipath);
        if (auto low = opt_int(*intolerance, "low_max", ipath)) model.scoring.low_max = *low;
        if (auto high = opt_int(*intolerance, "high_min", ipath)) model.scoring.high_min = *high;
        if (model.scoring.low_max >= model.scoring.high_min)
            fail(Kind::Range, ipath,
                 "low_max " + std::to_string(model.scoring.low_max) +
                     " must be smaller than high_min " + std::to_string(model.scoring.high_min));
        if (const json* cells = opt_array(*intolerance, "cells", ipath))
            parse_cells(*cells, ipath + "/cells");
    }

    Component parse_component(const json& entry, const std::string& path, bool& usable) {
        Component c;
        if (!entry_object(entry, path)) {
            usable = false;
            return c;
        }
        check_keys(entry, {"id", "name", "children", "external"}, path);
        auto id = req_id(entry, path);
        auto name = req_string(entry, "name", path);
        if (!id) {
            usable = false;
            return c;
        }
        c.id = *id;
        register_id(c.id, path);
        c.name = name.value_or("");
        c.external = opt_bool(entry, "external", path).value_or(false);
        if (const json* children = opt_array(entry, "children", path)) {
            for (size_t i = 0; i < children->size(); ++i) {
                bool child_ok = true;
                Component child = parse_component((*children)[i],
                                                  path + "/children/" + std::to_string(i), child_ok);
                if (child_ok) c.children.push_back(std::move(child));
            }
        }
        usable = true;
        return c;
    }

    void parse_components(const json& root) {
        const json* arr = opt_array(root, "components", "");
        if (!arr) return;
        for (size_t i = 0; i < arr->size(); ++i) {
            bool ok = true;
            Component c = parse_component((*arr)[i], "/components/" + std::to_string(i), ok);
            if (ok) model.components.push_back(std::move(c));
        }
    }

    void parse_link_types(const json& root) {
        const json* arr = opt_array(root, "link_types", "");
        if (!arr) return;
        for (size_t i = 0; i < arr->size(); ++i) {
            std::string path = "/link_types/" + std::to_string(i);
            const json& entry = (*arr)[i];
            if (!entry_object(entry, path)) continue;
            check_keys(entry, {"id", "name", "color"}, path);
            auto id = req_id(entry, path);
            auto name = req_string(entry, "name", path);
            auto color = req_string(entry, "color", path);
            if (!id) continue;
            register_id(*id, path);
            model.link_types.push_back({*id, name.value_or(""), color.value_or("")});
            type_idx.push_back(i);
        }
    }

    void parse_links(const json& root) {
        const json* arr = opt_array(root, "links", "");
        if (!arr) return;
        for (size_t i = 0; i < arr->size(); ++i) {
            std::string path = "/links/" + std::to_string(i);
            const json& entry = (*arr)[i];
            if (!entry_object(entry, path)) continue;
            check_keys(entry, {"id", "type", "a", "b", "directionality"}, path);
            auto id = req_id(entry, path);
            auto type = req_string(entry, "type", path);
            auto a = req_string(entry, "a", path);
            auto b = req_string(entry, "b", path);
            Link link;
            if (auto d = opt_string(entry, "directionality", path)) {
                auto parsed = directionality_from(*d);
                if (!parsed)
                    fail(Kind::Schema, path + "/directionality",
                         "directionality must be one of bidirectional, a_to_b, b_to_a");
                else
                    link.directionality = *parsed;
            }
            if (!id) continue;
            register_id(*id, path);
            link.id = *id;
            link.type = type.value_or("");
            link.a = a.value_or("");
            link.b = b.value_or("");
            if (a && b && *a == *b)
                fail(Kind::Schema, path + "/b", "link endpoints must differ");
            model.links.push_back(std::move(link));
            link_idx.push_back(i);
        }
    }

    void parse_data_items(const json& root) {
        const json* arr = opt_array(root, "data_items", "");
        if (!arr) return;
        std::set<std::string> names;
        for (size_t i = 0; i < arr->size(); ++i) {
            std::string path = "/data_items/" + std::to_string(i);
            const json& entry = (*arr)[i];
            if (!entry_object(entry, path)) continue;
            check_keys(entry, {"id", "name"}, path);
            auto id = req_id(entry, path);
            auto name = req_string(entry, "name", path);
            if (name && !names.insert(*name).second)
                fail(Kind::Schema, path + "/name",
                     "data item name '" + *name + "' is not unique");
            if (!id) continue;
            register_id(*id, path);
            model.data_items.push_back({*id, name.value_or("")});
            item_idx.push_back(i);
        }
    }

    void parse_data_flows(const json& root) {
        const json* arr = opt_array(root, "data_flows", "");
        if (!arr) return;
        for (size_t i = 0; i < arr->size(); ++i) {
            std::string path = "/data_flows/" + std::to_string(i);
            const json& entry = (*arr)[i];
            if (!entry_object(entry, path)) continue;
            check_keys(entry, {"id", "source", "destination", "items", "conveyed_by"}, path);
            auto id = req_id(entry, path);
            auto source = req_string(entry, "source", path);
            auto destination = req_string(entry, "destination", path);
            DataFlow flow;
            if (!entry.contains("items"))
                fail(Kind::Schema, path, "required field 'items' is missing");
            else
                flow.items = id_list(entry, "items", path);
            if (entry.contains("items") && entry["items"].is_array() && flow.items.empty())
                fail(Kind::Schema, path + "/items", "a data flow must carry at least one item");
            flow.conveyed_by = id_list(entry, "conveyed_by", path);
            if (source && destination && *source == *destination)
                fail(Kind::Schema, path + "/destination",
                     "flow source and destination must differ");
            if (!id) continue;
            register_id(*id, path);
            flow.id = *id;
            flow.source = source.value_or("");
            flow.destination = destination.value_or("");
            model.data_flows.push_back(std::move(flow));
            flow_idx.push_back(i);
        }
    }

    void parse_attackers(const json& root) {
        const json* arr = opt_array(root, "attackers", "");
        if (!arr) return;
        for (size_t i = 0; i < arr->size(); ++i) {
            std::string path = "/attackers/" + std::to_string(i);
            const json& entry = (*arr)[i];
            if (!entry_object(entry, path)) continue;
            check_keys(entry, {"id", "name", "capability"}, path);
            auto id = req_id(entry, path);
            auto name = req_string(entry, "name", path);
            auto capability = req_int(entry, "capability", path);
            if (!id) continue;
            register_id(*id, path);
            model.attackers.push_back({*id, name.value_or(""), capability.value_or(0)});
            attacker_idx.push_back(i);
        }
    }

    void parse_threats(const json& root) {
        const json* arr = opt_array(root, "threats", "");
        if (!arr) return;
        for (size_t i = 0; i < arr->size(); ++i) {
            std::string path = "/threats/" + std::to_string(i);
            const json& entry = (*arr)[i];
            if (!entry_object(entry, path)) continue;
            check_keys(entry, {"id", "name", "attacker"}, path);
            auto id = req_id(entry, path);
            auto name = req_string(entry, "name", path);
            auto attacker = opt_string(entry, "attacker", path);
            if (!id) continue;
            register_id(*id, path);
            Threat threat;
            threat.id = *id;
            threat.name = name.value_or("");
            threat.attacker = attacker;
            model.threats.push_back(std::move(threat));
            threat_idx.push_back(i);
        }
    }

    void parse_controls(const json& root) {
        const json* arr = opt_array(root, "controls", "");
        if (!arr) return;
        for (size_t i = 0; i < arr->size(); ++i) {
            std::string path = "/controls/" + std::to_string(i);
            const json& entry = (*arr)[i];
            if (!entry_object(entry, path)) continue;
            check_keys(entry, {"id", "name", "allocated_to", "mitigates_threats"}, path);
            auto id = req_id(entry, path);
            auto name = req_string(entry, "name", path);
            Control control;
            control.allocated_to = id_list(entry, "allocated_to", path);
            control.mitigates_threats = id_list(entry, "mitigates_threats", path);
            if (!id) continue;
            register_id(*id, path);
            control.id = *id;
            control.name = name.value_or("");
            model.controls.push_back(std::move(control));
            control_idx.push_back(i);
        }
    }

    void parse_allocations(const json& root) {
        const json* arr = opt_array(root, "threat_allocations", "");
        if (!arr) return;
        for (size_t i = 0; i < arr->size(); ++i) {
            std::string path = "/threat_allocations/" + std::to_string(i);
            const json& entry = (*arr)[i];
            if (!entry_object(entry, path)) continue;
            check_keys(entry, {"id", "threat", "component", "fi", "si", "status", "reported_ri",
                               "mitigated_by"},
                       path);
            auto id = req_id(entry, path);
            auto threat = req_string(entry, "threat", path);
            auto component = req_string(entry, "component", path);
            auto fi = req_int(entry, "fi", path);
            auto si = req_int(entry, "si", path);
            auto status = req_string(entry, "status", path);
            ThreatAllocation alloc;
            if (status) {
                auto parsed = allocation_status_from(*status);
                if (!parsed)
                    fail(Kind::Schema, path + "/status", "status must be open or accepted");
                else
                    alloc.status = *parsed;
            }
            alloc.reported_ri = opt_int(entry, "reported_ri", path);
            alloc.mitigated_by = id_list(entry, "mitigated_by", path);
            if (!id) continue;
            register_id(*id, path);
            alloc.id = *id;
            alloc.threat = threat.value_or("");
            alloc.component = component.value_or("");
            alloc.fi = fi.value_or(1);
            alloc.si = si.value_or(1);
            model.threat_allocations.push_back(std::move(alloc));
            alloc_idx.push_back(i);
        }
    }

    void check_ranges() {
        if (!scales_ok) return;
        int fi_max = static_cast<int>(model.scoring.likelihood.size());
        int si_max = static_cast<int>(model.scoring.impact.size());
        for (size_t i = 0; i < model.threat_allocations.size(); ++i) {
            const auto& alloc = model.threat_allocations[i];
            std::string path = "/threat_allocations/" + std::to_string(alloc_idx[i]);
            if (alloc.fi < 1 || alloc.fi > fi_max)
                fail(Kind::Range, path + "/fi",
                     "likelihood rank " + std::to_string(alloc.fi) + " outside scale 1.." +
                         std::to_string(fi_max));
            if (alloc.si < 1 || alloc.si > si_max)
                fail(Kind::Range, path + "/si",
                     "impact rank " + std::to_string(alloc.si) + " outside scale 1.." +
                         std::to_string(si_max));
        }
    }

    void check_references() {
        auto dangle = [&](const std::string& path, const char* kind, const std::string& id) {
            if (id.empty()) return; // already reported as a schema error
            fail(Kind::DanglingReference, path, std::string("unknown ") + kind + " '" + id + "'");
        };
        for (size_t i = 0; i < model.links.size(); ++i) {
            const Link& link = model.links[i];
            std::string path = "/links/" + std::to_string(link_idx[i]);
            if (!model.find_link_type(link.type)) dangle(path + "/type", "link type", link.type);
            if (!model.find_component(link.a)) dangle(path + "/a", "component", link.a);
            if (!model.find_component(link.b)) dangle(path + "/b", "component", link.b);
        }
        for (size_t i = 0; i < model.data_flows.size(); ++i) {
            const DataFlow& flow = model.data_flows[i];
            std::string path = "/data_flows/" + std::to_string(flow_idx[i]);
            if (!model.find_component(flow.source))
                dangle(path + "/source", "component", flow.source);
            if (!model.find_component(flow.destination))
                dangle(path + "/destination", "component", flow.destination);
            for (size_t j = 0; j < flow.items.size(); ++j)
                if (!model.find_data_item(flow.items[j]))
                    dangle(path + "/items/" + std::to_string(j), "data item", flow.items[j]);
            for (size_t j = 0; j < flow.conveyed_by.size(); ++j)
                if (!model.find_link(flow.conveyed_by[j]))
                    dangle(path + "/conveyed_by/" + std::to_string(j), "link", flow.conveyed_by[j]);
        }
        for (size_t i = 0; i < model.threats.size(); ++i) {
            const Threat& threat = model.threats[i];
            if (threat.attacker && !model.find_attacker(*threat.attacker))
                dangle("/threats/" + std::to_string(threat_idx[i]) + "/attacker", "attacker",
                       *threat.attacker);
        }
        for (size_t i = 0; i < model.controls.size(); ++i) {
            const Control& control = model.controls[i];
            std::string path = "/controls/" + std::to_string(control_idx[i]);
            for (size_t j = 0; j < control.allocated_to.size(); ++j)
                if (!model.find_component(control.allocated_to[j]))
                    dangle(path + "/allocated_to/" + std::to_string(j), "component",
                           control.allocated_to[j]);
            for (size_t j = 0; j < control.mitigates_threats.size(); ++j)
                if (!model.find_threat(control.mitigates_threats[j]))
                    dangle(path + "/mitigates_threats/" + std::to_string(j), "threat",
                           control.mitigates_threats[j]);
        }
        for (size_t i = 0; i < model.threat_allocations.size(); ++i) {
            const ThreatAllocation& alloc = model.threat_allocations[i];
            std::string path = "/threat_allocations/" + std::to_string(alloc_idx[i]);
            if (!model.find_threat(alloc.threat)) dangle(path + "/threat", "threat", alloc.threat);
            if (!model.find_component(alloc.component))
                dangle(path + "/component", "component", alloc.component);
            for (size_t j = 0; j < alloc.mitigated_by.size(); ++j)
                if (!model.find_control(alloc.mitigated_by[j]))
                    dangle(path + "/mitigated_by/" + std::to_string(j), "control",
                           alloc.mitigated_by[j]);
        }
    }

    void run(const json& root) {
        if (!root.is_object()) {
            fail(Kind::Schema, "/", "document must be a JSON object");
            return;
        }
        check_keys(root,
                   {"schema_version", "name", "scoring", "link_types", "components", "links",
                    "data_items", "data_flows", "attackers", "threats", "controls",
                    "threat_allocations"},
                   "");
        auto version = req_string(root, "schema_version", "");
        if (version && *version != "1")
            fail(Kind::Schema, "/schema_version", "unsupported schema_version '" + *version + "'");
        model.name = opt_string(root, "name", "").value_or("");
        parse_scoring(root);
        parse_components(root);
        parse_link_types(root);
        parse_links(root);
        parse_data_items(root);
        parse_data_flows(root);
        parse_attackers(root);
        parse_threats(root);
        parse_controls(root);
        parse_allocations(root);
        check_ranges();
        check_references();
    }
};

json levels_to_json(const std::vector<LikelihoodLevel>& levels) {
    json arr = json::array();
    for (const auto& level : levels) arr.push_back({{"rank", level.rank}, {"name", level.name}});
    return arr;
}

json levels_to_json(const std::vector<ImpactLevel>& levels) {
    json arr = json::array();
    for (const auto& level : levels) arr.push_back({{"rank", level.rank}, {"name", level.name}});
    return arr;
}

json component_to_json(const Component& c) {
    json j;
    j["id"] = c.id;
    j["name"] = c.name;
    j["external"] = c.external;
    j["children"] = json::array();
    for (const auto& child : c.children) j["children"].push_back(component_to_json(child));
    return j;
}

} // namespace

ParseResult parse_model(const std::string& text) {
    ParseResult result;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        std::string message = e.what();
        // Drop the library's "[json.exception...]" tag, keep line and column.
        if (!message.empty() && message.front() == '[') {
            auto end = message.find("] ");
            if (end != std::string::npos) message = message.substr(end + 2);
        }
        result.errors.push_back({ParseError::Kind::Syntax, "/", std::move(message)});
        return result;
    }
    Parser parser;
    parser.run(doc);
    result.errors = std::move(parser.errors);
    if (result.errors.empty()) result.model = std::move(parser.model);
    return result;
}

std::string serialize_model(const Model& model) {
    json doc;
    doc["schema_version"] = "1";
    doc["name"] = model.name;

    json scoring;
    scoring["likelihood"] = levels_to_json(model.scoring.likelihood);
    scoring["impact"] = levels_to_json(model.scoring.impact);
    json intolerance;
    intolerance["low_max"] = model.scoring.low_max;
    intolerance["high_min"] = model.scoring.high_min;
    if (model.scoring.cells) {
        json cells = json::array();
        for (const auto& [key, level] : *model.scoring.cells)
            cells.push_back(
                {{"fi", key.first}, {"si", key.second}, {"level", intolerance_name(level)}});
        intolerance["cells"] = std::move(cells);
    }
    scoring["intolerance"] = std::move(intolerance);
    doc["scoring"] = std::move(scoring);

    doc["components"] = json::array();
    for (const auto& c : model.components) doc["components"].push_back(component_to_json(c));

    doc["link_types"] = json::array();
    for (const auto& t : model.link_types)
        doc["link_types"].push_back({{"id", t.id}, {"name", t.name}, {"color", t.color}});

    doc["links"] = json::array();
    for (const auto& l : model.links)
        doc["links"].push_back({{"id", l.id},
                                {"type", l.type},
                                {"a", l.a},
                                {"b", l.b},
                                {"directionality", to_string(l.directionality)}});

    doc["data_items"] = json::array();
    for (const auto& d : model.data_items)
        doc["data_items"].push_back({{"id", d.id}, {"name", d.name}});

    doc["data_flows"] = json::array();
    for (const auto& f : model.data_flows)
        doc["data_flows"].push_back({{"id", f.id},
                                     {"source", f.source},
                                     {"destination", f.destination},
                                     {"items", f.items},
                                     {"conveyed_by", f.conveyed_by}});

    doc["attackers"] = json::array();
    for (const auto& a : model.attackers)
        doc["attackers"].push_back({{"id", a.id}, {"name", a.name}, {"capability", a.capability}});

    doc["threats"] = json::array();
    for (const auto& t : model.threats) {
        json j = {{"id", t.id}, {"name", t.name}};
        if (t.attacker) j["attacker"] = *t.attacker;
        doc["threats"].push_back(std::move(j));
    }

    doc["controls"] = json::array();
    for (const auto& c : model.controls)
        doc["controls"].push_back({{"id", c.id},
                                   {"name", c.name},
                                   {"allocated_to", c.allocated_to},
                                   {"mitigates_threats", c.mitigates_threats}});

    doc["threat_allocations"] = json::array();
    for (const auto& a : model.threat_allocations) {
        json j = {{"id", a.id},
                  {"threat", a.threat},
                  {"component", a.component},
                  {"fi", a.fi},
                  {"si", a.si},
                  {"status", to_string(a.status)},
                  {"mitigated_by", a.mitigated_by}};
        if (a.reported_ri) j["reported_ri"] = *a.reported_ri;
        doc["threat_allocations"].push_back(std::move(j));
    }

    return doc.dump(2) + "\n";
}

} // namespace riskcad
