#include "degstab/report.hpp"

#include <cstdio>

namespace degstab {

using nlohmann::json;

std::string hex_digest(std::uint64_t d) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d));
    return buf;
}

json partition_json(const Partition& p) {
    json out = json::array();
    for (const auto& c : p.canonical_classes()) out.push_back(c);
    return out;
}

json decision_json(const Decision& d) {
    json out;
    out["verdict"] = to_string(d.verdict);
    out["reason"] = d.reason;
    if (d.witness) {
        out["witness"] = partition_json(*d.witness);
        json sizes = json::array();
        for (const auto& c : d.witness->classes()) sizes.push_back(c.size());
        out["class_sizes"] = sizes;
    }
    if (d.violating_edge) out["violating_edge"] = *d.violating_edge;
    if (d.stuck_vertex) out["stuck_vertex"] = *d.stuck_vertex;
    if (d.precondition) {
        out["precondition"] = {{"condition", d.precondition->condition},
                               {"actual", d.precondition->actual},
                               {"bound", d.precondition->bound}};
    }
    out["stats"] = {{"distance_evaluations", d.stats.distance_evaluations},
                    {"distance_work", d.stats.distance_work},
                    {"edge_checks", d.stats.edge_checks},
                    {"work", d.stats.work},
                    {"peeled", d.stats.peeled},
                    {"used_oracle", d.stats.used_oracle}};
    if (!d.peel_order.empty()) out["peel_order"] = d.peel_order;
    return out;
}

namespace {

json manifest_fields(const RunManifest& m) {
    json inputs = json::object();
    for (const auto& [name, dig] : m.inputs) inputs[name] = dig;
    return {{"schema", kReportSchema},
            {"version", kToolVersion},
            {"command", m.command},
            {"parameters", m.parameters},
            {"seed", m.seed},
            {"inputs", inputs},
            {"wall_seconds", m.wall_seconds}};
}

}  // namespace

json report_json(const RunManifest& m, const Decision& d) {
    json out = manifest_fields(m);
    out.update(decision_json(d));
    return out;
}

json report_json(const RunManifest& m, const json& result) {
    json out = manifest_fields(m);
    out["result"] = result;
    return out;
}

std::string decision_text(const Decision& d) {
    std::string out = std::string("verdict: ") + to_string(d.verdict) + "\n";
    if (!d.reason.empty()) out += "reason: " + d.reason + "\n";
    if (d.precondition) {
        out += "precondition: " + d.precondition->condition + " (actual " + d.precondition->actual + ", bound " +
               d.precondition->bound + ")\n";
    }
    if (d.witness) {
        out += "witness:";
        for (const auto& c : d.witness->canonical_classes()) {
            out += " {";
            for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + std::to_string(c[i]);
            out += "}";
        }
        out += "\n";
    }
    if (d.violating_edge) {
        out += "violating edge:";
        for (auto v : *d.violating_edge) out += " " + std::to_string(v);
        out += "\n";
    }
    if (d.stuck_vertex) out += "stuck vertex: " + std::to_string(*d.stuck_vertex) + "\n";
    out += "distance evaluations: " + std::to_string(d.stats.distance_evaluations) + "\n";
    out += "work: " + std::to_string(d.stats.work) + "\n";
    if (d.stats.peeled) out += "peeled: " + std::to_string(d.stats.peeled) + "\n";
    if (d.stats.used_oracle) out += "oracle: yes\n";
    return out;
}

}  // namespace degstab
