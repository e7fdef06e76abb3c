#include "qpr/network_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace qpr {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

long long require_integer(const json& object, const std::string& key,
                          const std::string& where) {
    if (!object.contains(key)) {
        throw ParseError(where + ": missing field \"" + key + "\"");
    }
    const json& value = object.at(key);
    if (!value.is_number_integer()) {
        throw ParseError(where + ": field \"" + key + "\" must be an integer");
    }
    return value.get<long long>();
}

int require_int(const json& object, const std::string& key,
                const std::string& where) {
    const long long v = require_integer(object, key, where);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        throw ParseError(where + ": field \"" + key + "\" out of range");
    }
    return static_cast<int>(v);
}

}  // namespace

bool NetworkDocument::has_all_distributions() const {
    for (const auto& pmf : arc_pmfs) {
        if (!pmf.has_value()) {
            return false;
        }
    }
    return !arc_pmfs.empty();
}

std::vector<ArcStateDistribution> NetworkDocument::distributions() const {
    std::vector<ArcStateDistribution> dists;
    for (std::size_t i = 0; i < arc_pmfs.size(); ++i) {
        if (!arc_pmfs[i].has_value()) {
            throw ValidationError("arc " + std::to_string(i + 1) +
                                  " has no pmf; reliability needs one on every arc");
        }
        dists.push_back(*arc_pmfs[i]);
    }
    return dists;
}

NetworkDocument parse_network(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!root.is_object()) {
        throw ParseError("document root must be an object");
    }

    NetworkDocument doc;
    doc.name = root.value("name", std::string());
    doc.description = root.value("description", std::string());

    Network net;
    net.node_count = require_int(root, "node_count", "document");
    if (root.contains("directed")) {
        if (!root.at("directed").is_boolean()) {
            throw ParseError("document: field \"directed\" must be a boolean");
        }
        net.directed = root.at("directed").get<bool>();
    }

    if (!root.contains("arcs") || !root.at("arcs").is_array()) {
        throw ParseError("document: missing or non-array field \"arcs\"");
    }
    const json& arcs = root.at("arcs");
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const std::string where = "arc " + std::to_string(i + 1);
        const json& entry = arcs.at(i);
        if (!entry.is_object()) {
            throw ParseError(where + ": must be an object");
        }
        Arc arc;
        arc.from = require_int(entry, "from", where);
        arc.to = require_int(entry, "to", where);
        arc.max_capacity = require_int(entry, "max_capacity", where);
        arc.lead_time = require_int(entry, "lead_time", where);
        net.arcs.push_back(arc);

        if (entry.contains("pmf")) {
            const json& pmf = entry.at("pmf");
            if (!pmf.is_array()) {
                throw ParseError(where + ": field \"pmf\" must be an array");
            }
            if (static_cast<int>(pmf.size()) != arc.max_capacity + 1) {
                throw ParseError(where + ": pmf has " + std::to_string(pmf.size()) +
                                 " entries, expected max_capacity+1 = " +
                                 std::to_string(arc.max_capacity + 1));
            }
            ArcStateDistribution dist;
            for (const json& p : pmf) {
                if (!p.is_number()) {
                    throw ParseError(where + ": pmf entries must be numbers");
                }
                dist.pmf.push_back(p.get<double>());
            }
            doc.arc_pmfs.emplace_back(std::move(dist));
        } else {
            doc.arc_pmfs.emplace_back(std::nullopt);
        }
    }

    doc.network = validate_network(std::move(net));

    // Validate whatever pmfs are present; completeness is checked only by
    // the commands that need distributions.
    for (std::size_t i = 0; i < doc.arc_pmfs.size(); ++i) {
        if (doc.arc_pmfs[i].has_value()) {
            try {
                validate_pmf(*doc.arc_pmfs[i], doc.network.arcs[i].max_capacity);
            } catch (const ValidationError& e) {
                throw ValidationError("arc " + std::to_string(i + 1) + ": " +
                                      e.what());
            }
        }
    }
    return doc;
}

NetworkDocument load_network_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FileError("cannot read file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_network(buffer.str());
}

std::string serialize_network(const NetworkDocument& doc) {
    ordered_json root;
    if (!doc.name.empty()) {
        root["name"] = doc.name;
    }
    if (!doc.description.empty()) {
        root["description"] = doc.description;
    }
    root["node_count"] = doc.network.node_count;
    if (doc.network.directed) {
        root["directed"] = true;
    }
    root["arcs"] = ordered_json::array();
    for (int i = 0; i < doc.network.arc_count(); ++i) {
        const Arc& arc = doc.network.arcs[i];
        ordered_json entry;
        entry["from"] = arc.from;
        entry["to"] = arc.to;
        entry["max_capacity"] = arc.max_capacity;
        entry["lead_time"] = arc.lead_time;
        if (doc.arc_pmfs[i].has_value()) {
            entry["pmf"] = doc.arc_pmfs[i]->pmf;
        }
        root["arcs"].push_back(std::move(entry));
    }
    return root.dump(2) + "\n";
}

}  // namespace qpr
