#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpr/network.hpp"
#include "qpr/reliability.hpp"

namespace qpr {

// A parsed network document: the validated network (arc order = document
// order), per-arc optional capacity distributions, and metadata.
struct NetworkDocument {
    Network network;
    std::vector<std::optional<ArcStateDistribution>> arc_pmfs;
    std::string name;
    std::string description;

    bool has_all_distributions() const;

    // The per-arc distributions; throws ValidationError naming the first arc
    // without a pmf.
    std::vector<ArcStateDistribution> distributions() const;
};

// Parses a JSON network document:
//
//   {
//     "name": "demo",                 optional
//     "description": "...",           optional
//     "directed": false,              optional, default false
//     "node_count": 4,
//     "arcs": [
//       {"from": 1, "to": 2, "max_capacity": 5, "lead_time": 4,
//        "pmf": [0.1, ...]},          pmf optional, max_capacity+1 entries
//       ...
//     ]
//   }
//
// Throws ParseError with the offending field or arc named, and
// ValidationError for invariant violations (via validate_network and the
// distribution checks).
NetworkDocument parse_network(const std::string& text);

// parse_network over the file contents; throws ParseError when the file
// cannot be read.
NetworkDocument load_network_file(const std::string& path);

// Canonical JSON form of a document. parse_network(serialize_network(d))
// reproduces d exactly.
std::string serialize_network(const NetworkDocument& doc);

}  // namespace qpr
