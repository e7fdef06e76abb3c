#include "qpr/cli.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpr/enumerator.hpp"
#include "qpr/network_io.hpp"
#include "qpr/oracle.hpp"
#include "qpr/random_instance.hpp"
#include "qpr/reliability.hpp"
#include "qpr/rng.hpp"

namespace qpr {

namespace {

using nlohmann::ordered_json;

ordered_json query_json(const Query& q) {
    return {{"d", q.demand}, {"T", q.time_budget}};
}

ordered_json vectors_json(const std::vector<StateVector>& vectors) {
    ordered_json list = ordered_json::array();
    for (const StateVector& v : vectors) {
        list.push_back(v);
    }
    return list;
}

std::string format_probability(double p) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(12) << p;
    return out.str();
}

void print_trace_event(std::ostream& err, const SearchEvent& event) {
    switch (event.kind) {
        case SearchEventKind::kExtend:
            err << "trace: extend " << event.from << " -> " << event.to << "  lt "
                << event.lead;
            if (event.required_capacity) {
                err << "  eta " << *event.required_capacity;
            }
            err << "\n";
            break;
        case SearchEventKind::kPruneLead:
            err << "trace: prune-lead " << event.from << " -> " << event.to
                << "  lt " << event.lead << "\n";
            break;
        case SearchEventKind::kPruneCapacity:
            err << "trace: prune-capacity " << event.from << " -> " << event.to
                << "  lt " << event.lead << "  eta " << *event.required_capacity
                << "\n";
            break;
        case SearchEventKind::kSkipRepeat:
            err << "trace: skip-repeat " << event.from << " -> " << event.to << "\n";
            break;
        case SearchEventKind::kEmit: {
            err << "trace: emit " << format_state_vector(event.vector) << "  path";
            for (std::size_t i = 0; i < event.path.size(); ++i) {
                err << (i == 0 ? " " : " -> ") << event.path[i];
            }
            err << "\n";
            break;
        }
        case SearchEventKind::kBacktrack:
            err << "trace: backtrack " << event.from << "\n";
            break;
    }
}

struct VerifyReport {
    long long instances = 0;
    long long mismatches = 0;
    std::optional<std::string> counterexample;  // serialized document
    std::string detail;
};

// Compares the enumerator against the brute-force oracle on one instance,
// and the exact reliability against its brute-force sum when distributions
// are present. Appends a counterexample dump on the first mismatch.
bool verify_instance(const Network& net,
                     const std::vector<ArcStateDistribution>& dists,
                     const Query& query, long long state_cap, int sigma_cap,
                     VerifyReport& report, const std::string& label) {
    const auto enumerated = find_minimal_vectors(net, query);
    const auto expected = brute_force_theta_min(net, query, state_cap);

    std::ostringstream detail;
    bool ok = enumerated == expected;
    if (ok && !dists.empty()) {
        const auto exact = union_probability(net, dists, enumerated, sigma_cap);
        const double brute = brute_force_reliability(net, dists, query, state_cap);
        if (std::abs(exact.value - brute) > 1e-9) {
            ok = false;
            detail << label << ": reliability mismatch: exact "
                   << format_probability(exact.value) << " vs brute force "
                   << format_probability(brute) << "\n";
        }
    }

    report.instances++;
    if (!ok) {
        report.mismatches++;
        if (!report.counterexample) {
            if (detail.str().empty()) {
                detail << label << ": minimal vector sets differ\n";
                detail << "  enumerator (" << enumerated.size() << "):";
                for (const auto& v : enumerated) {
                    detail << " " << format_state_vector(v);
                }
                detail << "\n  brute force (" << expected.size() << "):";
                for (const auto& v : expected) {
                    detail << " " << format_state_vector(v);
                }
                detail << "\n";
            }
            NetworkDocument doc;
            doc.network = net;
            doc.name = label;
            for (std::size_t i = 0; i < net.arcs.size(); ++i) {
                if (dists.empty()) {
                    doc.arc_pmfs.emplace_back(std::nullopt);
                } else {
                    doc.arc_pmfs.emplace_back(dists[i]);
                }
            }
            report.counterexample = serialize_network(doc);
            report.detail = detail.str() + "query: d=" + std::to_string(query.demand) +
                            " T=" + std::to_string(query.time_budget) + "\n";
        }
    }
    return ok;
}

struct CommonOptions {
    std::string file;
    long long demand = 0;
    long long time_budget = 0;
    bool json = false;
};

int run_solve(const CommonOptions& opt, bool trace, std::ostream& out,
              std::ostream& err) {
    const NetworkDocument doc = load_network_file(opt.file);
    const Query query{opt.demand, opt.time_budget};

    SearchObserver observer;
    if (trace) {
        observer = [&err](const SearchEvent& event) { print_trace_event(err, event); };
    }
    const auto vectors = find_minimal_vectors(doc.network, query, observer);

    if (opt.json) {
        ordered_json result;
        result["query"] = query_json(query);
        result["minimal_vectors"] = vectors_json(vectors);
        result["sigma"] = vectors.size();
        out << result.dump() << "\n";
    } else {
        for (const StateVector& v : vectors) {
            out << format_state_vector(v) << "\n";
        }
        out << "count: " << vectors.size() << "\n";
    }
    return kExitOk;
}

int run_reliability(const CommonOptions& opt, const std::string& method,
                    long long samples, std::uint64_t seed, int sigma_cap,
                    std::ostream& out) {
    const NetworkDocument doc = load_network_file(opt.file);
    const Query query{opt.demand, opt.time_budget};
    validate_query(query);
    const auto dists = doc.distributions();

    const auto vectors = find_minimal_vectors(doc.network, query);
    const int sigma = static_cast<int>(vectors.size());

    // Exact is the default; fall back to sampling when the subset count
    // would explode and no method was forced.
    std::string chosen = method;
    if (chosen.empty()) {
        chosen = sigma <= sigma_cap ? "exact" : "mc";
    }

    double value = 0.0;
    std::optional<double> half_width;
    if (chosen == "exact") {
        value = union_probability(doc.network, dists, vectors, sigma_cap).value;
    } else {
        const auto mc = monte_carlo_reliability(doc.network, dists, query, samples, seed);
        value = mc.estimate;
        half_width = mc.half_width;
    }

    if (opt.json) {
        ordered_json result;
        result["query"] = query_json(query);
        result["minimal_vectors"] = vectors_json(vectors);
        result["sigma"] = sigma;
        result["reliability"] = value;
        result["method"] = chosen;
        result["half_width"] = half_width ? ordered_json(*half_width) : ordered_json();
        out << result.dump() << "\n";
    } else {
        out << "R = " << format_probability(value) << "\n";
        if (half_width) {
            out << "half_width = " << format_probability(*half_width) << "\n";
        }
        out << "method: " << chosen << "\n";
        out << "sigma: " << sigma << "\n";
        if (chosen == "mc") {
            out << "samples: " << samples << "\n";
        }
    }
    return kExitOk;
}

int run_mps(const std::string& file, std::optional<long long> demand,
            std::optional<long long> time_budget, bool json_mode, std::ostream& out) {
    const NetworkDocument doc = load_network_file(file);
    const auto mps = enumerate_all_mps(doc.network);

    std::optional<Query> query;
    if (demand) {
        query = Query{*demand, *time_budget};
        validate_query(*query);
    }

    ordered_json list = ordered_json::array();
    for (const MinimalPath& p : mps) {
        const long long lead = path_lead_time(doc.network, p);
        std::optional<long long> required;
        if (query) {
            required = min_required_capacity(lead, query->demand, query->time_budget);
        }

        if (json_mode) {
            ordered_json entry;
            entry["nodes"] = p.nodes;
            ordered_json arcs = ordered_json::array();
            for (int a : p.arcs) {
                arcs.push_back(a + 1);  // 1-based arc labels
            }
            entry["arcs"] = arcs;
            entry["lead_time"] = lead;
            if (query) {
                entry["eta"] = required ? ordered_json(*required) : ordered_json();
            }
            list.push_back(std::move(entry));
        } else {
            for (std::size_t i = 0; i < p.nodes.size(); ++i) {
                out << (i == 0 ? "" : " -> ") << p.nodes[i];
            }
            out << "  arcs:";
            for (int a : p.arcs) {
                out << " a" << a + 1;
            }
            out << "  lead: " << lead;
            if (query) {
                if (required) {
                    out << "  eta: " << *required;
                } else {
                    out << "  eta: infeasible";
                }
            }
            out << "\n";
        }
    }

    if (json_mode) {
        ordered_json result;
        if (query) {
            result["query"] = query_json(*query);
        }
        result["mps"] = std::move(list);
        out << result.dump() << "\n";
    } else {
        out << "count: " << mps.size() << "\n";
    }
    return kExitOk;
}

int run_verify(const std::string& file, bool random_mode, std::uint64_t seed,
               long long count, std::optional<long long> demand,
               std::optional<long long> time_budget, long long state_cap,
               int sigma_cap, bool json_mode, std::ostream& out, std::ostream& err) {
    VerifyReport report;

    if (random_mode) {
        RandomInstanceOptions options;
        if (demand) {
            options.max_demand = *demand;
        }
        if (time_budget) {
            options.max_time_budget = *time_budget;
        }
        validate_query({options.max_demand, options.max_time_budget});
        for (long long k = 0; k < count; ++k) {
            const auto instance = make_random_instance(derive_seed(seed, k), options);
            verify_instance(instance.network, instance.distributions, instance.query,
                            state_cap, sigma_cap, report,
                            "instance " + std::to_string(k) + " (seed " +
                                std::to_string(instance.seed) + ")");
        }
    } else {
        const NetworkDocument doc = load_network_file(file);
        const Query query{demand.value_or(0), time_budget.value_or(0)};
        validate_query(query);
        std::vector<ArcStateDistribution> dists;
        if (doc.has_all_distributions()) {
            dists = doc.distributions();
        }
        verify_instance(doc.network, dists, query, state_cap, sigma_cap, report,
                        doc.name.empty() ? file : doc.name);
    }

    if (json_mode) {
        ordered_json result;
        result["instances"] = report.instances;
        result["mismatches"] = report.mismatches;
        result["agree"] = report.mismatches == 0;
        out << result.dump() << "\n";
    } else {
        out << "instances: " << report.instances
            << "  mismatches: " << report.mismatches << "\n";
    }
    if (report.mismatches > 0) {
        err << report.detail;
        err << "counterexample document:\n" << *report.counterexample;
        return kExitMismatch;
    }
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"Quickest-path reliability toolkit for multi-state flow networks"};
    app.name("qpr");
    app.require_subcommand(1);

    CommonOptions solve_opt;
    bool solve_trace = false;
    auto* solve = app.add_subcommand(
        "solve", "Enumerate the minimal state vectors for a demand and time budget");
    solve->add_option("file", solve_opt.file, "network document (JSON)")->required();
    solve->add_option("-d,--demand", solve_opt.demand, "units of data")->required();
    solve->add_option("-T,--time-budget", solve_opt.time_budget, "time units")
        ->required();
    solve->add_flag("--json", solve_opt.json, "machine-readable output");
    solve->add_flag("--trace", solve_trace, "log every search step to stderr");

    CommonOptions rel_opt;
    std::string rel_method;
    long long rel_samples = 100000;
    std::uint64_t rel_seed = 1;
    int rel_sigma_cap = kDefaultUnionCap;
    auto* rel = app.add_subcommand("reliability",
                                   "Probability of meeting the demand in time");
    rel->add_option("file", rel_opt.file, "network document with pmfs")->required();
    rel->add_option("-d,--demand", rel_opt.demand, "units of data")->required();
    rel->add_option("-T,--time-budget", rel_opt.time_budget, "time units")->required();
    rel->add_option("--method", rel_method, "exact or mc (default: exact when feasible)")
        ->check(CLI::IsMember({"exact", "mc"}));
    rel->add_option("--samples", rel_samples, "Monte Carlo sample count")
        ->check(CLI::PositiveNumber);
    rel->add_option("--seed", rel_seed, "Monte Carlo seed");
    rel->add_option("--sigma-cap", rel_sigma_cap,
                    "max minimal vectors for the exact method");
    rel->add_flag("--json", rel_opt.json, "machine-readable output");

    std::string mps_file;
    std::optional<long long> mps_demand, mps_budget;
    bool mps_json = false;
    auto* mps = app.add_subcommand("mps", "List every minimal path");
    mps->add_option("file", mps_file, "network document (JSON)")->required();
    auto* mps_d = mps->add_option("-d,--demand", mps_demand, "units of data");
    auto* mps_t = mps->add_option("-T,--time-budget", mps_budget, "time units");
    mps_d->needs(mps_t);
    mps_t->needs(mps_d);
    mps->add_flag("--json", mps_json, "machine-readable output");

    std::string verify_file;
    bool verify_random = false;
    std::uint64_t verify_seed = 1;
    long long verify_count = 100;
    std::optional<long long> verify_demand, verify_budget;
    long long verify_state_cap = kDefaultStateSpaceCap;
    int verify_sigma_cap = kDefaultUnionCap;
    bool verify_json = false;
    auto* verify = app.add_subcommand(
        "verify", "Cross-check the enumerator against the brute-force oracle");
    auto* vf = verify->add_option("file", verify_file, "network document (JSON)");
    auto* vr = verify->add_flag("--random", verify_random,
                                "verify randomly generated instances instead");
    vf->excludes(vr);
    verify->add_option("--seed", verify_seed, "base seed for --random");
    verify->add_option("--count", verify_count, "instance count for --random")
        ->check(CLI::PositiveNumber);
    verify->add_option("-d,--demand", verify_demand,
                       "units of data (with --random: the maximum drawn)");
    verify->add_option("-T,--time-budget", verify_budget,
                       "time units (with --random: the maximum drawn)");
    verify->add_option("--state-cap", verify_state_cap,
                       "brute-force state space cap");
    verify->add_option("--sigma-cap", verify_sigma_cap,
                       "max minimal vectors for the exact method");
    verify->add_flag("--json", verify_json, "machine-readable output");

    std::vector<const char*> argv;
    argv.push_back("qpr");
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) {
            return run_solve(solve_opt, solve_trace, out, err);
        }
        if (rel->parsed()) {
            return run_reliability(rel_opt, rel_method, rel_samples, rel_seed,
                                   rel_sigma_cap, out);
        }
        if (mps->parsed()) {
            return run_mps(mps_file, mps_demand, mps_budget, mps_json, out);
        }
        if (verify->parsed()) {
            if (!verify_random && verify_file.empty()) {
                err << "error: verify needs a file or --random\n";
                return kExitUsage;
            }
            if (!verify_random && (!verify_demand || !verify_budget)) {
                err << "error: verify on a file needs -d and -T\n";
                return kExitUsage;
            }
            return run_verify(verify_file, verify_random, verify_seed, verify_count,
                              verify_demand, verify_budget, verify_state_cap,
                              verify_sigma_cap, verify_json, out, err);
        }
    } catch (const FileError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const CapExceededError& e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    }
    return kExitUsage;
}

}  // namespace qpr
