#include "qpr/enumerator.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace qpr {

namespace {

// O(1) arc lookup by node pair; the public arc_between scans the arc list.
class AdjacencyIndex {
public:
    explicit AdjacencyIndex(const Network& net) : n_(net.node_count) {
        table_.assign(static_cast<std::size_t>(n_ + 1) * (n_ + 1), -1);
        for (int i = 0; i < net.arc_count(); ++i) {
            const Arc& arc = net.arcs[i];
            table_[slot(arc.from, arc.to)] = i;
            if (!net.directed) {
                table_[slot(arc.to, arc.from)] = i;
            }
        }
    }

    int arc(int s, int t) const { return table_[slot(s, t)]; }

private:
    std::size_t slot(int s, int t) const {
        return static_cast<std::size_t>(s) * (n_ + 1) + t;
    }

    int n_;
    std::vector<int> table_;
};

// Depth-first walk over the node-child matrix. With a query it prunes on
// accumulated lead time and on the required capacity against the running
// capacity ceiling, and emits one state vector per surviving path; without a
// query it emits every simple source-to-sink path.
class Walker {
public:
    Walker(const Network& net, const Query* query, const SearchObserver& observer)
        : net_(net),
          matrix_(build_node_child_matrix(net)),
          adjacency_(net),
          query_(query),
          observer_(observer),
          on_path_(net.node_count + 1, false) {}

    void run(std::vector<StateVector>* vectors, std::vector<MinimalPath>* paths) {
        vectors_ = vectors;
        paths_ = paths;
        nodes_.assign(1, net_.source());
        on_path_[net_.source()] = true;
        visit(net_.source(), std::numeric_limits<long long>::max());
        on_path_[net_.source()] = false;
    }

private:
    void report(SearchEventKind kind, int from, int to,
                std::optional<long long> required = std::nullopt) const {
        if (observer_) {
            SearchEvent event;
            event.kind = kind;
            event.from = from;
            event.to = to;
            event.lead = lead_;
            event.required_capacity = required;
            observer_(event);
        }
    }

    void visit(int node, long long capacity_ceiling) {
        for (int child : matrix_.children(node)) {
            if (child == 0) {
                break;
            }
            if (on_path_[child]) {
                report(SearchEventKind::kSkipRepeat, node, child);
                continue;
            }
            const int arc_index = adjacency_.arc(node, child);
            assert(arc_index >= 0);
            const Arc& arc = net_.arcs[arc_index];

            long long required = 0;
            if (query_) {
                // lead_ < time_budget on every visit, so the difference is safe.
                if (arc.lead_time >= query_->time_budget - lead_) {
                    report(SearchEventKind::kPruneLead, node, child);
                    continue;
                }
                required = ceil_div(query_->demand,
                                    query_->time_budget - lead_ - arc.lead_time);
                const long long ceiling =
                    std::min<long long>(capacity_ceiling, arc.max_capacity);
                if (required > ceiling) {
                    report(SearchEventKind::kPruneCapacity, node, child, required);
                    continue;
                }
            }

            // kExtend reports the lead before the step, like the prunes.
            if (query_) {
                report(SearchEventKind::kExtend, node, child, required);
            } else {
                report(SearchEventKind::kExtend, node, child);
            }
            nodes_.push_back(child);
            arcs_.push_back(arc_index);
            on_path_[child] = true;
            const long long lead_before = lead_;
            lead_ += arc.lead_time;

            if (child == net_.sink()) {
                emit(required);
            } else {
                visit(child,
                      std::min<long long>(capacity_ceiling, arc.max_capacity));
            }

            lead_ = lead_before;
            on_path_[child] = false;
            arcs_.pop_back();
            nodes_.pop_back();
        }
        report(SearchEventKind::kBacktrack, node, 0);
    }

    void emit(long long required) {
        if (vectors_) {
            StateVector x(net_.arc_count(), 0);
            for (int a : arcs_) {
                x[a] = static_cast<int>(required);
            }
            if (observer_) {
                SearchEvent event;
                event.kind = SearchEventKind::kEmit;
                event.from = nodes_[nodes_.size() - 2];
                event.to = net_.sink();
                event.lead = lead_;
                event.required_capacity = required;
                event.path = nodes_;
                event.vector = x;
                observer_(event);
            }
            vectors_->push_back(std::move(x));
        }
        if (paths_) {
            if (observer_) {
                SearchEvent event;
                event.kind = SearchEventKind::kEmit;
                event.from = nodes_[nodes_.size() - 2];
                event.to = net_.sink();
                event.lead = lead_;
                event.path = nodes_;
                observer_(event);
            }
            paths_->push_back({nodes_, arcs_});
        }
    }

    const Network& net_;
    NodeChildMatrix matrix_;
    AdjacencyIndex adjacency_;
    const Query* query_;
    SearchObserver observer_;

    std::vector<bool> on_path_;
    std::vector<int> nodes_;
    std::vector<int> arcs_;
    long long lead_ = 0;

    std::vector<StateVector>* vectors_ = nullptr;
    std::vector<MinimalPath>* paths_ = nullptr;
};

}  // namespace

std::vector<StateVector> find_minimal_vectors(const Network& net, const Query& query,
                                              const SearchObserver& observer) {
    validate_query(query);
    std::vector<StateVector> vectors;
    Walker walker(net, &query, observer);
    walker.run(&vectors, nullptr);
    // Distinct paths have distinct supports, so no duplicates can occur;
    // canonical order is lexicographic.
    std::sort(vectors.begin(), vectors.end());
    assert(std::adjacent_find(vectors.begin(), vectors.end()) == vectors.end());
    return vectors;
}

std::vector<MinimalPath> enumerate_all_mps(const Network& net) {
    std::vector<MinimalPath> paths;
    Walker walker(net, nullptr, nullptr);
    walker.run(nullptr, &paths);
    return paths;
}

}  // namespace qpr
