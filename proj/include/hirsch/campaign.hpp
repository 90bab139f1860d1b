#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "hirsch/graph.hpp"
#include "hirsch/moduli.hpp"

namespace hirsch {

// Graph-level metrics of a marked skeleton; everything the conjecture
// checks need apart from the non-revisiting search (which needs tight
// sets). Testable on synthetic non-polytopal graphs.
struct FigureMetrics {
    int n_vertices = 0;
    int n_facets = 0;
    int dim = 0;
    int diameter = 0;
    int dist_xy = 0;
    int m_disjoint = 0;
    int classifiable_edges = 0;
    int bad_edges = 0;
    bool hirsch = false;  // diameter <= n - d
};

FigureMetrics figure_metrics(const Skeleton& g, int x, int y, int n_facets, int dim);

enum class CampaignKind { ThreeGeodesic, StrongDantzig };

struct CampaignOptions {
    CampaignKind kind = CampaignKind::ThreeGeodesic;
    int dim = 3;
    int budget = 100;          // number of figures sampled
    std::uint64_t seed = 1;
    std::uint64_t sampler_draws = 20000;   // per-sample rejection budget
    std::uint64_t nr_budget = 10'000'000;  // non-revisiting state budget
    FdPolicy fd_policy;
    std::string cache_path;    // persistent type cache; empty disables it
};

struct CampaignResult {
    nlohmann::json report;
    int counterexamples = 0;
    int samples_valid = 0;
    int internal_inconsistencies = 0;
};

// Samples Dantzig figures, deduplicates their marked combinatorial types,
// computes per-type metrics, expands FD arcs from every sampled type, and
// verifies the campaign's conjecture on everything touched. Reports are a
// pure function of the options plus the cache contents.
CampaignResult run_campaign(const CampaignOptions& opt);

// Recomputes a counterexample certificate from its serialized data alone.
// Returns true when the recorded failure reproduces.
bool verify_certificate(const nlohmann::json& cert,
                        std::uint64_t nr_budget = 10'000'000);

}  // namespace hirsch
