#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qpr/network.hpp"
#include "qpr/path_math.hpp"

namespace qpr {

// One step of the backtracking search, reported through a SearchObserver.
// `lead` is the accumulated lead time before the attempted extension.
enum class SearchEventKind {
    kExtend,         // extension from -> to accepted
    kPruneLead,      // rejected: lead + arc lead time >= time budget
    kPruneCapacity,  // rejected: required capacity exceeds the path's ceiling
    kSkipRepeat,     // rejected: child already on the path
    kEmit,           // sink reached, one minimal vector emitted
    kBacktrack,      // row exhausted, leaving `from`
};

struct SearchEvent {
    SearchEventKind kind;
    int from = 0;
    int to = 0;
    long long lead = 0;
    std::optional<long long> required_capacity;  // set when it was computed
    std::vector<int> path;                       // kEmit only: node sequence
    StateVector vector;                          // kEmit only
};

using SearchObserver = std::function<void(const SearchEvent&)>;

// Directly enumerates the minimal system state vectors for the query: one
// vector per source-to-sink simple path whose lead time leaves room for the
// demand and whose arcs can carry the required capacity. Each vector holds
// the path's required capacity on the path arcs and zero elsewhere. The
// result is duplicate-free and sorted lexicographically.
//
// Expects a validated network. An observer, when given, receives every
// search step; pass nullptr to skip tracing.
std::vector<StateVector> find_minimal_vectors(const Network& net, const Query& query,
                                              const SearchObserver& observer = nullptr);

// Every simple source-to-sink path, in deterministic traversal order (the
// same walk as find_minimal_vectors with pruning disabled).
std::vector<MinimalPath> enumerate_all_mps(const Network& net);

}  // namespace qpr
