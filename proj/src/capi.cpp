#include "hirsch.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <tuple>

#include "hirsch/campaign.hpp"
#include "hirsch/io.hpp"

using nlohmann::json;

struct hirsch_polytope {
    hirsch::Polytope poly;
    int mark_x = -1;
    int mark_y = -1;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_errmsg(char** errmsg, const std::string& text) {
    if (errmsg) *errmsg = dup_string(text);
}

hirsch_status status_of(const hirsch::Error& e) {
    return static_cast<hirsch_status>(static_cast<int>(e.code()));
}

// Wraps an operation body, translating exceptions into status codes.
template <typename Fn>
hirsch_status guarded(char** errmsg, Fn&& fn) {
    try {
        return fn();
    } catch (const hirsch::Error& e) {
        set_errmsg(errmsg, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_errmsg(errmsg, e.what());
        return HIRSCH_E_INTERNAL;
    }
}

json coords_json(const hirsch::RatVec& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(hirsch::rational_to_string(c));
    return arr;
}

// Marks resolution: explicit coordinate strings win over document marks.
std::pair<int, int> marks_of(const hirsch_polytope* p, const char* x, const char* y) {
    int ix = p->mark_x, iy = p->mark_y;
    if (x) {
        ix = p->poly.vertex_index(hirsch::parse_coords(x, p->poly.dim()));
        if (ix < 0)
            throw hirsch::Error(hirsch::ErrorCode::MarkNotVertex,
                                "x (" + std::string(x) + ") is not a vertex");
    }
    if (y) {
        iy = p->poly.vertex_index(hirsch::parse_coords(y, p->poly.dim()));
        if (iy < 0)
            throw hirsch::Error(hirsch::ErrorCode::MarkNotVertex,
                                "y (" + std::string(y) + ") is not a vertex");
    }
    if (ix < 0 || iy < 0)
        throw hirsch::Error(hirsch::ErrorCode::BadArgument,
                            "operation needs marks: pass --x/--y or add marks to the document");
    if (ix == iy)
        throw hirsch::Error(hirsch::ErrorCode::BadArgument, "marks must be distinct vertices");
    return {ix, iy};
}

json fd_record_json(const hirsch::FDRecord& fd) {
    json j;
    j["facet"] = fd.facet;
    j["step"] = hirsch::rational_to_string(fd.step);
    j["t0"] = hirsch::rational_to_string(fd.t0);
    j["t1"] = hirsch::rational_to_string(fd.t1);
    j["v"] = coords_json(fd.source.vertices()[fd.v].point);
    j["w"] = coords_json(fd.source.vertices()[fd.w].point);
    j["ridge_facet"] = fd.ridge_facet;
    j["source_vertices"] = fd.source.vertex_count();
    j["result_vertices"] = fd.result.vertex_count();
    j["result_facets"] = fd.result.facet_count();
    json ridge = json::array();
    for (const auto& r : hirsch::new_ridge_simplex(fd)) ridge.push_back(coords_json(r.point));
    j["ridge_simplex"] = std::move(ridge);
    return j;
}

}  // namespace

extern "C" {

const char* hirsch_status_name(hirsch_status s) {
    if (s == HIRSCH_OK) return "OK";
    return hirsch::error_code_name(static_cast<hirsch::ErrorCode>(static_cast<int>(s)));
}

const char* hirsch_version(void) { return "1.0.0"; }

void hirsch_string_free(char* s) { std::free(s); }

hirsch_status hirsch_polytope_parse(const char* text, hirsch_polytope** out, char** errmsg) {
    if (!text || !out) return HIRSCH_E_BAD_ARGUMENT;
    *out = nullptr;
    return guarded(errmsg, [&]() {
        hirsch::PolytopeDocument doc = hirsch::parse_polytope_document(text);
        auto handle = std::make_unique<hirsch_polytope>();
        handle->poly = hirsch::Polytope::validate(std::move(doc.system));
        if (doc.marks) {
            auto [ix, iy] =
                hirsch::resolve_marks(handle->poly, doc.marks->first, doc.marks->second);
            handle->mark_x = ix;
            handle->mark_y = iy;
        }
        *out = handle.release();
        return HIRSCH_OK;
    });
}

void hirsch_polytope_free(hirsch_polytope* p) { delete p; }

int hirsch_polytope_dim(const hirsch_polytope* p) { return p->poly.dim(); }
int hirsch_polytope_facets(const hirsch_polytope* p) { return p->poly.facet_count(); }
int hirsch_polytope_vertex_count(const hirsch_polytope* p) { return p->poly.vertex_count(); }
int hirsch_polytope_is_simple(const hirsch_polytope* p) { return p->poly.simple() ? 1 : 0; }
int hirsch_polytope_has_marks(const hirsch_polytope* p) { return p->mark_x >= 0 ? 1 : 0; }

hirsch_status hirsch_polytope_document(const hirsch_polytope* p, char** json_out) {
    return guarded(nullptr, [&]() {
        *json_out = dup_string(hirsch::polytope_to_json(p->poly, p->mark_x, p->mark_y).dump(1));
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_vertices_json(const hirsch_polytope* p, char** json_out, char** errmsg) {
    return guarded(errmsg, [&]() {
        json j;
        j["dim"] = p->poly.dim();
        j["n_facets"] = p->poly.facet_count();
        j["simple"] = p->poly.simple();
        json verts = json::array();
        for (const auto& v : p->poly.vertices())
            verts.push_back({{"point", coords_json(v.point)},
                             {"tight", hirsch::facet_list(v.tight)}});
        j["vertices"] = std::move(verts);
        *json_out = dup_string(j.dump(1));
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_check_hirsch(const hirsch_polytope* p, int* holds, char** json_out,
                                  char** errmsg) {
    return guarded(errmsg, [&]() {
        const hirsch::Skeleton g = hirsch::skeleton_of(p->poly);
        const int diam = hirsch::diameter(g);
        const int bound = p->poly.facet_count() - p->poly.dim();
        if (holds) *holds = diam <= bound ? 1 : 0;
        if (json_out) {
            json j{{"diameter", diam},
                   {"n", p->poly.facet_count()},
                   {"d", p->poly.dim()},
                   {"bound", bound},
                   {"holds", diam <= bound}};
            *json_out = dup_string(j.dump(1));
        }
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_check_nonrevisiting(const hirsch_polytope* p, const char* x, const char* y,
                                         uint64_t budget, int* holds, char** json_out,
                                         char** errmsg) {
    return guarded(errmsg, [&]() {
        auto [ix, iy] = marks_of(p, x, y);
        auto res = hirsch::check_nonrevisiting(p->poly, ix, iy,
                                               budget ? budget : 10'000'000ull);
        if (holds) *holds = res.exists ? 1 : 0;
        if (json_out) {
            json path = json::array();
            for (int v : res.path) path.push_back(coords_json(p->poly.vertices()[v].point));
            json j{{"holds", res.exists}, {"states", res.states}, {"path", std::move(path)}};
            *json_out = dup_string(j.dump(1));
        }
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_dantzig_find(const hirsch_polytope* p, char** json_out, char** errmsg) {
    return guarded(errmsg, [&]() {
        auto pairs = hirsch::find_dantzig_pairs(p->poly);
        json j;
        j["count"] = pairs.size();
        json arr = json::array();
        for (const auto& [x, y] : pairs)
            arr.push_back({{"x", coords_json(p->poly.vertices()[x].point)},
                           {"y", coords_json(p->poly.vertices()[y].point)},
                           {"x_tight", hirsch::facet_list(p->poly.vertices()[x].tight)},
                           {"y_tight", hirsch::facet_list(p->poly.vertices()[y].tight)}});
        j["pairs"] = std::move(arr);
        *json_out = dup_string(j.dump(1));
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_geodesics_count(const hirsch_polytope* p, const char* x, const char* y,
                                     char** json_out, char** errmsg) {
    return guarded(errmsg, [&]() {
        auto [ix, iy] = marks_of(p, x, y);
        const hirsch::Skeleton g = hirsch::skeleton_of(p->poly);
        const auto dag = hirsch::geodesic_dag(g, ix, iy);
        json j;
        j["dist"] = dag.distance;
        j["geodesic_count"] = hirsch::count_geodesics(dag);
        j["m_disjoint_geodesics"] = hirsch::count_disjoint_geodesics(g, ix, iy);
        j["min_degree_bound"] =
            std::min(g.adj[ix].size(), g.adj[iy].size());
        *json_out = dup_string(j.dump(1));
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_fd_apply(const hirsch_polytope* p, int facet, const char* step,
                              char** record_json_out, char** result_document_out, char** errmsg) {
    return guarded(errmsg, [&]() {
        const hirsch::Rational st = step ? hirsch::parse_rational(step) : hirsch::Rational(1);
        hirsch::FDRecord fd;
        int rx = -1, ry = -1;
        if (p->mark_x >= 0) {
            hirsch::DantzigFigure fig{p->poly, p->mark_x, p->mark_y};
            fd = hirsch::fd_of_dantzig(fig, facet, st);
            std::tie(rx, ry) = hirsch::transport_marks(fd, p->mark_x, p->mark_y);
        } else {
            fd = hirsch::fundamental_deformation(p->poly, facet, st);
        }
        if (record_json_out) {
            json rec = fd_record_json(fd);
            if (rx >= 0) rec["good_for_marks"] = hirsch::is_good(fd, p->mark_x, p->mark_y);
            *record_json_out = dup_string(rec.dump(1));
        }
        if (result_document_out)
            *result_document_out =
                dup_string(hirsch::polytope_to_json(fd.result, rx, ry).dump(1));
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_fd_good(const hirsch_polytope* p, int facet, const char* step, int all_pairs,
                             const char* x, const char* y, int* good, char** json_out,
                             char** errmsg) {
    return guarded(errmsg, [&]() {
        const hirsch::Rational st = step ? hirsch::parse_rational(step) : hirsch::Rational(1);
        json j;
        bool verdict;
        if (all_pairs) {
            hirsch::FDRecord fd = hirsch::fundamental_deformation(p->poly, facet, st);
            verdict = hirsch::goodness_for_all_pairs(fd);
            j["mode"] = "all-pairs";
            j["v"] = coords_json(fd.source.vertices()[fd.v].point);
            j["w"] = coords_json(fd.source.vertices()[fd.w].point);
        } else {
            auto [ix, iy] = marks_of(p, x, y);
            hirsch::DantzigFigure fig{p->poly, ix, iy};
            hirsch::FDRecord fd = hirsch::fd_of_dantzig(fig, facet, st);
            verdict = hirsch::is_good(fd, ix, iy);
            j["mode"] = "marks";
            j["v"] = coords_json(fd.source.vertices()[fd.v].point);
            j["w"] = coords_json(fd.source.vertices()[fd.w].point);
        }
        j["good"] = verdict;
        if (good) *good = verdict ? 1 : 0;
        if (json_out) *json_out = dup_string(j.dump(1));
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_campaign_run(const char* kind, int d, int budget, uint64_t seed,
                                  const char* cache_path, char** report_json_out,
                                  int* counterexamples, char** errmsg) {
    return guarded(errmsg, [&]() {
        hirsch::CampaignOptions opt;
        const std::string k = kind ? kind : "";
        if (k == "3geodesic") opt.kind = hirsch::CampaignKind::ThreeGeodesic;
        else if (k == "strong-dantzig") opt.kind = hirsch::CampaignKind::StrongDantzig;
        else throw hirsch::Error(hirsch::ErrorCode::BadArgument, "unknown campaign '" + k + "'");
        opt.dim = d;
        opt.budget = budget;
        opt.seed = seed;
        if (cache_path) opt.cache_path = cache_path;
        if (const char* env = std::getenv("HIRSCH_SAMPLER_RETRIES"))
            opt.sampler_draws = std::strtoull(env, nullptr, 10);
        if (const char* env = std::getenv("HIRSCH_NR_BUDGET"))
            opt.nr_budget = std::strtoull(env, nullptr, 10);
        if (const char* env = std::getenv("HIRSCH_FD_RETRIES"))
            opt.fd_policy.perturb_retries = static_cast<int>(std::strtol(env, nullptr, 10));
        hirsch::CampaignResult res = hirsch::run_campaign(opt);
        if (res.samples_valid == 0 && budget > 0)
            throw hirsch::Error(hirsch::ErrorCode::SamplerExhausted,
                                "no valid figure sampled in the whole campaign");
        if (report_json_out) *report_json_out = dup_string(res.report.dump(1));
        if (counterexamples) *counterexamples = res.counterexamples;
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_moduli_explore(const char* kind, int d, int n_facets, int n_seeds,
                                    int budget, uint64_t seed, char** graph_json_out,
                                    char** errmsg) {
    return guarded(errmsg, [&]() {
        const std::string k = kind ? kind : "";
        hirsch::ModuliKind mk;
        if (k == "dantzig") mk = hirsch::ModuliKind::Dantzig;
        else if (k == "polytope") mk = hirsch::ModuliKind::PolytopeTypes;
        else throw hirsch::Error(hirsch::ErrorCode::BadArgument, "unknown moduli kind '" + k + "'");
        std::uint64_t draws = 20000;
        if (const char* env = std::getenv("HIRSCH_SAMPLER_RETRIES"))
            draws = std::strtoull(env, nullptr, 10);
        std::vector<hirsch::DantzigFigure> seeds;
        for (int s = 0; s < (n_seeds > 0 ? n_seeds : 3); ++s) {
            if (mk == hirsch::ModuliKind::Dantzig) {
                seeds.push_back(
                    hirsch::random_dantzig(d, hirsch::Rng::derive_seed(seed, s), draws));
            } else {
                const int n = n_facets > 0 ? n_facets : 2 * d;
                seeds.push_back(hirsch::DantzigFigure{
                    hirsch::random_simple_polytope(d, n, hirsch::Rng::derive_seed(seed, s),
                                                   draws),
                    -1, -1});
            }
        }
        hirsch::FdPolicy policy;
        if (const char* env = std::getenv("HIRSCH_FD_RETRIES"))
            policy.perturb_retries = static_cast<int>(std::strtol(env, nullptr, 10));
        hirsch::ModuliGraph graph = hirsch::explore_moduli(d, mk, seeds, budget, seed, policy);
        json j;
        j["format"] = 1;
        j["kind"] = k;
        j["dim"] = d;
        j["budget"] = budget;
        j["seed"] = seed;
        json nodes = json::array();
        for (const auto& node : graph.nodes) {
            json nj;
            nj["canon"] = hirsch::to_hex(node.canon);
            nj["expanded"] = node.expanded;
            nj["representative"] = hirsch::polytope_to_json(node.rep, node.x, node.y);
            nodes.push_back(std::move(nj));
        }
        j["nodes"] = std::move(nodes);
        json arcs = json::array();
        for (const auto& arc : graph.arcs)
            arcs.push_back({{"src", arc.src},
                            {"dst", arc.dst},
                            {"facet", arc.facet},
                            {"step", hirsch::rational_to_string(arc.step)},
                            {"good", arc.good}});
        j["arcs"] = std::move(arcs);
        json failures = json::object();
        for (const auto& [name, count] : graph.fd_failures) failures[name] = count;
        j["fd_failures"] = std::move(failures);
        *graph_json_out = dup_string(j.dump(1));
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_moduli_scc(const char* graph_json, int good_only, char** json_out,
                                char** errmsg) {
    return guarded(errmsg, [&]() {
        json doc = json::parse(graph_json, nullptr, false);
        if (doc.is_discarded() || !doc.contains("nodes") || !doc.contains("arcs"))
            throw hirsch::Error(hirsch::ErrorCode::Parse, "not a moduli graph document");
        const int n = static_cast<int>(doc["nodes"].size());
        std::vector<std::pair<int, int>> arcs;
        for (const auto& arc : doc["arcs"]) {
            if (good_only && !arc["good"].get<bool>()) continue;
            arcs.emplace_back(arc["src"].get<int>(), arc["dst"].get<int>());
        }
        hirsch::SccResult res = hirsch::scc_of(n, arcs);
        json j;
        j["node_count"] = n;
        j["arcs_considered"] = arcs.size();
        j["good_only"] = static_cast<bool>(good_only);
        j["components"] = res.components;
        j["strongly_connected"] = res.strongly_connected;
        *json_out = dup_string(j.dump(1));
        return HIRSCH_OK;
    });
}

hirsch_status hirsch_certificate_verify(const char* cert_json, int* reproduced, char** errmsg) {
    return guarded(errmsg, [&]() {
        json cert = json::parse(cert_json, nullptr, false);
        if (cert.is_discarded())
            throw hirsch::Error(hirsch::ErrorCode::Parse, "malformed certificate JSON");
        std::uint64_t nr_budget = 10'000'000ull;
        if (const char* env = std::getenv("HIRSCH_NR_BUDGET"))
            nr_budget = std::strtoull(env, nullptr, 10);
        const bool ok = hirsch::verify_certificate(cert, nr_budget);
        if (reproduced) *reproduced = ok ? 1 : 0;
        return HIRSCH_OK;
    });
}

}  // extern "C"
