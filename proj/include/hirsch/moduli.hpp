#pragma once

#include <map>
#include <string>
#include <vector>

#include "hirsch/canonical.hpp"
#include "hirsch/deform.hpp"
#include "hirsch/sampler.hpp"

namespace hirsch {

enum class ModuliKind { Dantzig, PolytopeTypes };

// How FD arcs are attempted from a node: one try per facet, re-tilting the
// facet normal on ENonGeneric a few times with shrinking perturbations.
struct FdPolicy {
    Rational step = 1;
    int perturb_retries = 8;
    std::int64_t perturb_denom = 997;
};

struct FdAttempt {
    bool ok = false;
    std::string failure;  // error name when !ok
    FDRecord fd;          // valid when ok
    int source_x = -1, source_y = -1;  // marks in fd.source (may be a re-tilted copy)
    int result_x = -1, result_y = -1;  // transported marks (Dantzig inputs)
};

// One FD attempt on (p, facet) with the policy's perturbation retries.
// When marks are >= 0 the attempt runs as an FD of the Dantzig figure and
// transports the marks.
FdAttempt attempt_fd(const Polytope& p, int mark_x, int mark_y, int facet,
                     const FdPolicy& policy, std::uint64_t perturb_seed);

struct ModuliNode {
    std::string canon;  // dedup key (marked-unordered for Dantzig kind)
    Polytope rep;
    int x = -1, y = -1;
    bool expanded = false;
};

struct ModuliArc {
    int src = 0, dst = 0;
    int facet = 0;
    Rational step = 1;
    bool good = false;
};

struct ModuliGraph {
    ModuliKind kind = ModuliKind::Dantzig;
    int dim = 0;
    std::vector<ModuliNode> nodes;
    std::vector<ModuliArc> arcs;
    std::map<std::string, int> index;  // canon -> node id
    std::map<std::string, std::uint64_t> fd_failures;

    int add_node(ModuliNode node);  // dedups by canon, returns id
};

// Breadth-first expansion of FD arcs from the seed figures: every facet of
// every frontier node is attempted and successful deformations are recorded
// as arcs labeled good/not-good; new canonical types join the frontier.
// Expansion stops after `budget` nodes.
ModuliGraph explore_moduli(int d, ModuliKind kind, const std::vector<DantzigFigure>& seeds,
                           int budget, std::uint64_t seed, const FdPolicy& policy = {});

struct SccResult {
    std::vector<std::vector<int>> components;
    bool strongly_connected = false;
};

// Tarjan over the node set with all arcs or the good-labeled subset.
SccResult scc(const ModuliGraph& graph, bool good_only);
SccResult scc_of(int n, const std::vector<std::pair<int, int>>& arcs);

}  // namespace hirsch
