#pragma once

// Core domain types shared by every module: detector profiles, node
// budgets, the layered topology tree, schedules, deployment plans, and
// solver configuration. All types are immutable value objects once
// constructed and safe to share across threads.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace detopt {

// Tolerance for resource-cap and deadline comparisons (percent / MB / ms
// all live in sane magnitudes, so an absolute epsilon is enough).
inline constexpr double kEps = 1e-9;

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct UnknownNodeError : Error { using Error::Error; };
struct UnknownDetectorError : Error { using Error::Error; };
struct UnknownLayerError : Error { using Error::Error; };
struct InstanceTooLargeError : Error { using Error::Error; };
struct InvalidDeltaError : Error { using Error::Error; };
struct MismatchedProblemError : Error { using Error::Error; };

// A single detector violates a node cap on its own; carries the offender so
// upstream selection logic can exclude it.
struct DetectorTooLargeError : Error {
    DetectorTooLargeError(const std::string& detector, const std::string& msg)
        : Error(msg), detector_id(detector) {}
    std::string detector_id;
};

// ---------------------------------------------------------------------------
// Detectors and nodes

// One detector's declared performance and peak resource footprint.
// score is a generic [0,1] performance metric (F1 by default); cpu/ram are
// peak values held for the detector's whole run.
struct DetectorProfile {
    std::string id;
    std::string data_type;
    double score = 0.0;        // [0, 1]
    double exec_time_ms = 0.0; // > 0, per input
    double cpu_peak_pct = 0.0; // (0, 100]
    double ram_peak_mb = 0.0;  // >= 0
};

// One node's resource budgets. t_max is the end-to-end alert budget;
// ingest_delay is the delay receiving data from prior nodes. t_max >
// ingest_delay is deliberately not required: infeasible nodes must be
// representable.
struct NodeSpec {
    std::string id;
    double cpu_max_pct = 100.0; // (0, 100]
    double ram_max_mb = 0.0;    // > 0
    double t_max_ms = 0.0;      // > 0
    double ingest_delay_ms = 0.0;
};

enum class LayerKind { Leaf, Standard };

// A group of homogeneous nodes at one level of the topology tree.
// Leaf layers emit data (data_types) and have no children; standard layers
// aggregate child layers. hardware is an opaque label, never interpreted.
struct Layer {
    std::string id;
    LayerKind kind = LayerKind::Leaf;
    std::vector<NodeSpec> nodes;       // non-empty
    std::vector<std::string> children; // layer ids, empty iff leaf
    std::set<std::string> data_types;  // meaningful for leaf layers
    std::string hardware;
};

struct Topology {
    std::map<std::string, Layer> layers;
    std::string root;

    const Layer& layer(const std::string& id) const {
        auto it = layers.find(id);
        if (it == layers.end()) throw UnknownLayerError("unknown layer " + id);
        return it->second;
    }

    const NodeSpec* find_node(const std::string& node_id) const {
        for (const auto& [lid, layer] : layers)
            for (const auto& n : layer.nodes)
                if (n.id == node_id) return &n;
        return nullptr;
    }

    const Layer* find_layer_of_node(const std::string& node_id) const {
        for (const auto& [lid, layer] : layers)
            for (const auto& n : layer.nodes)
                if (n.id == node_id) return &layer;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// Schedules and plans

struct ScheduleEntry {
    std::string detector_id;
    double start_ms = 0.0;
};

// Start-time assignment for a detector set on one node. Detectors run
// contiguously from start_ms for their exec time; makespan is the last
// completion (0 when empty).
struct Schedule {
    std::vector<ScheduleEntry> entries;
    double makespan_ms = 0.0;

    bool empty() const { return entries.empty(); }
};

struct NodeAssignment {
    std::vector<std::string> detector_ids; // sorted
    Schedule schedule;
    double objective = 0.0; // sum of selected scores
};

// Per-node selected detectors + schedules. Within one standard layer the
// detector sets of distinct nodes are disjoint; leaf nodes of one layer
// deliberately share the same set.
struct DeploymentPlan {
    std::map<std::string, NodeAssignment> assignments; // node id ->
    double total_objective = 0.0;
};

// ---------------------------------------------------------------------------
// Solver configuration

enum class SolveMethod { LocalSearch, TabuSearch, AntColony, BruteForce };

inline const char* method_name(SolveMethod m) {
    switch (m) {
        case SolveMethod::LocalSearch: return "local";
        case SolveMethod::TabuSearch: return "tabu";
        case SolveMethod::AntColony: return "aco";
        case SolveMethod::BruteForce: return "brute";
    }
    return "?";
}

inline SolveMethod method_from_name(const std::string& s) {
    if (s == "local") return SolveMethod::LocalSearch;
    if (s == "tabu") return SolveMethod::TabuSearch;
    if (s == "aco") return SolveMethod::AntColony;
    if (s == "brute") return SolveMethod::BruteForce;
    throw ParseError("unknown solver '" + s + "' (expected local|tabu|aco|brute)");
}

struct AcoParams {
    int ants = 10;
    double evaporation = 0.1; // rho, in (0, 1)
    double alpha = 1.0;       // pheromone weight
    double beta = 1.0;        // desirability weight
};

struct SolverConfig {
    SolveMethod method = SolveMethod::TabuSearch;
    int max_iterations = 10;
    int patience = 2; // consecutive non-improving iterations tolerated
    std::uint64_t seed = 0;
    int tabu_tenure = 5;
    AcoParams aco;
    // Slot width for the discrete scheduling grid; plumbed from the CLI to
    // every ScheduleInstance built internally.
    double time_resolution_ms = 1.0;
};

// ---------------------------------------------------------------------------
// Pool helpers

using DetectorPool = std::vector<DetectorProfile>;

inline const DetectorProfile& find_detector(const DetectorPool& pool,
                                            const std::string& id) {
    for (const auto& d : pool)
        if (d.id == id) return d;
    throw UnknownDetectorError("unknown detector " + id);
}

inline void validate_pool(const DetectorPool& pool) {
    std::set<std::string> seen;
    for (const auto& d : pool) {
        if (!seen.insert(d.id).second)
            throw ValidationError("duplicate detector id " + d.id);
        if (d.score < 0.0 || d.score > 1.0)
            throw ValidationError("detector " + d.id + ": score outside [0,1]");
        if (d.exec_time_ms <= 0.0)
            throw ValidationError("detector " + d.id + ": exec_time_ms must be > 0");
        if (d.cpu_peak_pct <= 0.0 || d.cpu_peak_pct > 100.0)
            throw ValidationError("detector " + d.id + ": cpu_peak_pct outside (0,100]");
        if (d.ram_peak_mb < 0.0)
            throw ValidationError("detector " + d.id + ": ram_peak_mb must be >= 0");
    }
}

// Structural topology validation: tree rooted at root, leaf/standard child
// rules, non-empty layers, per-node budget ranges, globally unique node ids.
inline void validate_topology(const Topology& topo) {
    if (topo.layers.empty()) throw ValidationError("topology has no layers");
    if (!topo.layers.count(topo.root))
        throw ValidationError("root layer " + topo.root + " not defined");

    std::map<std::string, std::string> parent;
    std::set<std::string> node_ids;
    for (const auto& [id, layer] : topo.layers) {
        if (id != layer.id)
            throw ValidationError("layer map key " + id + " != layer id " + layer.id);
        if (layer.nodes.empty())
            throw ValidationError("layer " + id + " has no nodes");
        if (layer.kind == LayerKind::Leaf && !layer.children.empty())
            throw ValidationError("leaf layer " + id + " has children");
        if (layer.kind == LayerKind::Standard && layer.children.empty())
            throw ValidationError("standard layer " + id + " has no children");
        for (const auto& child : layer.children) {
            if (child == id) throw ValidationError("cycle at " + id);
            if (!topo.layers.count(child))
                throw ValidationError("layer " + id + " references unknown child " + child);
            auto [it, fresh] = parent.emplace(child, id);
            if (!fresh)
                throw ValidationError("layer " + child + " has multiple parents (" +
                                      it->second + ", " + id + ")");
        }
        for (const auto& n : layer.nodes) {
            if (!node_ids.insert(n.id).second)
                throw ValidationError("duplicate node id " + n.id);
            if (n.cpu_max_pct <= 0.0 || n.cpu_max_pct > 100.0)
                throw ValidationError("node " + n.id + ": cpu_max outside (0,100]");
            if (n.ram_max_mb <= 0.0)
                throw ValidationError("node " + n.id + ": ram_max must be > 0");
            if (n.t_max_ms <= 0.0)
                throw ValidationError("node " + n.id + ": t_max must be > 0");
            if (n.ingest_delay_ms < 0.0)
                throw ValidationError("node " + n.id + ": ingest_delay must be >= 0");
        }
    }
    if (parent.count(topo.root))
        throw ValidationError("root layer " + topo.root + " has a parent");

    // Reachability walk from the root; a back- or cross-edge is impossible
    // once single-parenthood holds, so only cycles through root-unreachable
    // components remain, and those show up as orphans.
    std::set<std::string> reached;
    std::vector<std::string> stack{topo.root};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        if (!reached.insert(cur).second) throw ValidationError("cycle at " + cur);
        for (const auto& c : topo.layers.at(cur).children) stack.push_back(c);
    }
    for (const auto& [id, layer] : topo.layers)
        if (!reached.count(id)) throw ValidationError("orphan layer " + id);
}

} // namespace detopt
