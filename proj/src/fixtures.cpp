#include "riskcad/fixtures.hpp"

namespace riskcad {
namespace fixtures {

namespace {

ScoringSystem ship_scoring() {
    ScoringSystem s;
    // Only the odd likelihood ranks carry descriptive labels; for the rest
    // the bare rank doubles as the display name.
    s.likelihood = {{1, "Extremely remote"}, {2, "2"}, {3, "Remote"}, {4, "4"},
                    {5, "Reasonably probable"}, {6, "6"}, {7, "Frequent"}};
    s.impact = {{1, "Minor"}, {2, "Significant"}, {3, "Severe"}, {4, "Catastrophic"}};
    s.low_max = 4;
    s.high_min = 8;
    return s;
}

Component leaf(std::string id, std::string name) {
    Component c;
    c.id = std::move(id);
    c.name = std::move(name);
    return c;
}

Component external(std::string id, std::string name) {
    Component c = leaf(std::move(id), std::move(name));
    c.external = true;
    return c;
}

Link link(std::string id, std::string type, std::string a, std::string b,
          Directionality direction = Directionality::Bidirectional) {
    Link l;
    l.id = std::move(id);
    l.type = std::move(type);
    l.a = std::move(a);
    l.b = std::move(b);
    l.directionality = direction;
    return l;
}

ThreatAllocation allocation(std::string id, std::string threat, std::string component, int fi,
                            int si, int reported_ri) {
    ThreatAllocation a;
    a.id = std::move(id);
    a.threat = std::move(threat);
    a.component = std::move(component);
    a.fi = fi;
    a.si = si;
    a.reported_ri = reported_ri;
    return a;
}

} // namespace

Model build_baseline() {
    Model m;
    m.name = "Autonomous ship baseline";
    m.scoring = ship_scoring();

    Component ship = leaf("ship-systems", "Ship systems");
    ship.children = {
        leaf("connectivity-manager", "Connectivity Manager"),
        leaf("ship-control-station", "Ship control station"),
        leaf("autonomous-ship-controller", "Autonomous Ship Controller"),
        leaf("navigation-system", "Navigation system"),
        leaf("intrusion-detection-system", "Intrusion detection system"),
        leaf("vessel-comm-systems", "Systems for communicating with other vessels"),
        leaf("generators", "Generators"),
        leaf("fuel-system", "Fuel system"),
    };
    m.components = {
        leaf("shore-control-centre", "Shore control centre"),
        leaf("communication-network", "Communication network"),
        external("internet", "Internet"),
        external("other-vessels", "Other vessels"),
        ship,
    };

    m.link_types = {
        {"ethernet", "Ethernet", "blue"},
        {"nmea", "NMEA", "purple"},
        {"4g-5g", "4G/5G", "orange"},
        {"ipv6", "IPv6", "brown"},
        {"physical", "physical", "black"},
    };

    m.links = {
        link("shore-comm-4g5g", "4g-5g", "shore-control-centre", "communication-network"),
        link("comm-cm-4g5g", "4g-5g", "communication-network", "connectivity-manager"),
        link("internet-comm-ipv6", "ipv6", "internet", "communication-network"),
        link("internet-shore-ipv6", "ipv6", "internet", "shore-control-centre"),
        link("ship-other-vessels-physical", "physical", "ship-systems", "other-vessels"),
        link("generators-fuel-physical", "physical", "generators", "fuel-system",
             Directionality::AToB),
    };

    m.data_items = {
        {"control-information-for-navigation", "Control information for navigation"},
        {"selected-route", "Selected route"},
        {"ship-operating-mode", "Ship operating mode"},
        {"control-status-of-equipment", "Control status of equipment (on/off)"},
        {"new-software", "New software"},
        {"equipment-health-status", "Equipment health status"},
        {"equipment-status", "Equipment status (on/off, loads, position)"},
        {"images-from-cameras", "Images from cameras"},
        {"vessel-position", "Vessel position"},
        {"vhf-data", "VHF data"},
        {"traffic-in-the-area", "Traffic in the area"},
        {"radar-ecdis-information", "Radar, ECDIS information"},
    };

    // Both flows are deliberately left without conveying links; finding that
    // gap is part of what the assessment is expected to surface.
    DataFlow to_ship;
    to_ship.id = "flow-shore-to-ship";
    to_ship.source = "shore-control-centre";
    to_ship.destination = "ship-systems";
    to_ship.items = {"control-information-for-navigation", "selected-route", "ship-operating-mode",
                     "control-status-of-equipment", "new-software"};
    DataFlow to_shore;
    to_shore.id = "flow-ship-to-shore";
    to_shore.source = "ship-systems";
    to_shore.destination = "shore-control-centre";
    to_shore.items = {"equipment-health-status", "equipment-status", "images-from-cameras",
                      "vessel-position", "vhf-data", "traffic-in-the-area",
                      "radar-ecdis-information"};
    m.data_flows = {to_ship, to_shore};

    m.attackers = {{"terrorists", "Terrorists", 4}};

    m.threats = {
        {"social-engineering-malware", "Combination of social engineering with malware installation",
         "terrorists"},
        {"shore-centre-access", "Getting access to the shore control centre", "terrorists"},
        {"physical-attack", "Physical attack", "terrorists"},
        {"malware-installation", "Malware installation", "terrorists"},
    };

    // s7 carries reported_ri 8 although 4 + 3 computes to 7; the mismatch is
    // in the source records and the validator is expected to flag it.
    m.threat_allocations = {
        allocation("s1", "social-engineering-malware", "shore-control-centre", 5, 4, 9),
        allocation("s2", "shore-centre-access", "shore-control-centre", 5, 4, 9),
        allocation("s10", "physical-attack", "ship-control-station", 5, 4, 9),
        allocation("s7", "malware-installation", "connectivity-manager", 4, 3, 8),
    };

    return m;
}

Model build_enhanced() {
    Model m = build_baseline();
    m.name = "Autonomous ship enhanced";

    Control kernel;
    kernel.id = "operate-in-kernel-function";
    kernel.name = "Operate in a kernel function";
    kernel.allocated_to = {"autonomous-ship-controller", "intrusion-detection-system",
                           "navigation-system"};
    kernel.mitigates_threats = {"malware-installation"};
    m.controls = {kernel};

    auto rescore = [&](const std::string& id, int fi, int si) {
        for (auto& a : m.threat_allocations) {
            if (a.id != id) continue;
            a.fi = fi;
            a.si = si;
            a.reported_ri = fi + si;
        }
    };
    rescore("s1", 2, 4);
    rescore("s2", 2, 4);
    rescore("s10", 1, 4);
    rescore("s7", 1, 4);

    // Accepted without any mitigation recorded; another gap the validator
    // should point out.
    for (auto& a : m.threat_allocations)
        if (a.id == "s7") a.status = AllocationStatus::Accepted;

    ThreatAllocation asc;
    asc.id = "asc-malware";
    asc.threat = "malware-installation";
    asc.component = "autonomous-ship-controller";
    asc.fi = 1;
    asc.si = 3;
    asc.status = AllocationStatus::Accepted;
    asc.mitigated_by = {"operate-in-kernel-function"};
    m.threat_allocations.push_back(asc);

    return m;
}

} // namespace fixtures
} // namespace riskcad
