// hirschtool: command-line front end over the libhirsch C API.
//
// Exit codes: 0 pass/success, 1 counterexample found (certificate written),
// 2 input error, 3 budget or sampler exhausted.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hirsch.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;
constexpr int kExitExhausted = 3;

int exit_code_for(hirsch_status s) {
    switch (s) {
        case HIRSCH_OK:
            return kExitOk;
        case HIRSCH_E_SAMPLER_EXHAUSTED:
        case HIRSCH_E_BUDGET_EXCEEDED:
            return kExitExhausted;
        default:
            return kExitInputError;
    }
}

// Owned C string wrapper.
struct CStr {
    char* p = nullptr;
    ~CStr() { hirsch_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

int fail(hirsch_status s, const CStr& msg) {
    // detail messages from the library already carry the status name
    if (msg.p) std::cerr << "error: " << msg.p << "\n";
    else std::cerr << "error: " << hirsch_status_name(s) << "\n";
    return exit_code_for(s);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
}

struct PolytopeHandle {
    hirsch_polytope* p = nullptr;
    ~PolytopeHandle() { hirsch_polytope_free(p); }
};

int load_polytope(const std::string& path, PolytopeHandle& h) {
    std::string text;
    try {
        text = read_file(path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    CStr msg;
    hirsch_status s = hirsch_polytope_parse(text.c_str(), &h.p, &msg.p);
    if (s != HIRSCH_OK) return fail(s, msg);
    return kExitOk;
}

std::string coords_str(const json& arr) {
    std::string out;
    for (const auto& c : arr) {
        if (!out.empty()) out += ",";
        out += c.get<std::string>();
    }
    return out;
}

void print_table_row(const std::string& key, const std::string& value) {
    std::cout << "  " << key;
    for (std::size_t i = key.size(); i < 28; ++i) std::cout << ' ';
    std::cout << value << "\n";
}

// Human rendering of a campaign report; derived from the same JSON that is
// written to --out.
void print_report(const json& r) {
    std::cout << "campaign " << r["campaign"].get<std::string>() << " (d=" << r["dim"]
              << ", budget=" << r["budget"] << ", seed=" << r["seed"] << ")\n";
    const auto& samples = r["samples"];
    print_table_row("samples valid/attempted", std::to_string(samples["valid"].get<int>()) + "/" +
                                                   std::to_string(samples["attempted"].get<int>()));
    print_table_row("sampler draws", std::to_string(samples["draws"].get<std::uint64_t>()));
    print_table_row("distinct types", std::to_string(r["distinct_types"].get<int>()));
    print_table_row("distinct types (ordered)",
                    std::to_string(r["distinct_types_ordered_convention"].get<int>()));
    {
        std::string sat;
        for (const auto& v : r["saturation_new_types_per_100"]) {
            if (!sat.empty()) sat += " ";
            sat += std::to_string(v.get<int>());
        }
        print_table_row("new types per 100 samples", sat);
    }
    const auto& fd = r["fd_totals"];
    print_table_row("fd arcs tried/ok/good", std::to_string(fd["tried"].get<int>()) + "/" +
                                                 std::to_string(fd["ok"].get<int>()) + "/" +
                                                 std::to_string(fd["good"].get<int>()));
    print_table_row("scc (all arcs)",
                    r["scc_all_arcs"]["strongly_connected"].get<bool>() ? "strongly connected"
                                                                        : "not strongly connected");
    print_table_row("scc (good arcs)",
                    r["scc_good_arcs"]["strongly_connected"].get<bool>() ? "strongly connected"
                                                                         : "not strongly connected");
    std::cout << "  type  seen  V   diam  dist  m   bad  fd(ok/good)  hirsch  nonrev\n";
    int idx = 0;
    for (const auto& t : r["types"]) {
        std::ostringstream row;
        row << "  #" << idx++ << "    " << t["times_seen"].get<int>() << "     "
            << t["n_vertices"].get<int>() << "   " << t["diameter"].get<int>() << "     "
            << t["dist_xy"].get<int>() << "     " << t["m_disjoint_geodesics"].get<int>() << "   "
            << t["bad_edges"].get<int>() << "    " << t["fd"]["ok"].get<int>() << "/"
            << t["fd"]["good"].get<int>() << "          " << (t["hirsch"].get<bool>() ? "yes" : "NO")
            << "     "
            << (t["nonrevisiting_decided"].get<bool>()
                    ? (t["nonrevisiting"].get<bool>() ? "yes" : "NO")
                    : "?");
        std::cout << row.str() << "\n";
    }
    print_table_row("internal inconsistencies",
                    std::to_string(r["internal_inconsistencies"].get<int>()));
    print_table_row("counterexamples", std::to_string(r["counterexamples"].size()));
}

// Writes every embedded certificate next to the report; exit 1 is tied to
// a certificate file existing.
int emit_certificates(const json& report, const std::string& out_path) {
    const auto& cases = report["counterexamples"];
    if (cases.empty()) return kExitOk;
    const std::string stem =
        out_path.empty() ? std::string("campaign") : out_path.substr(0, out_path.rfind('.'));
    int k = 0;
    for (const auto& cert : cases) {
        const std::string path = stem + ".cert-" + std::to_string(k++) + ".json";
        write_file(path, cert.dump(1));
        std::cout << "counterexample certificate written: " << path << "\n";
    }
    return kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for polytope deformations, Dantzig figures and "
                 "disjoint-geodesic verification"};
    app.require_subcommand(1);

    std::string file, xs, ys, out, step = "1", kind, cache;
    int facet = 1, dim = 3, budget = 100, nfacets = 0, nseeds = 0;
    std::uint64_t seed = 1, nr_budget = 0;
    bool all_pairs = false, good_only = false;

    auto* vertices = app.add_subcommand("vertices", "List vertices with tight facet sets");
    vertices->add_option("file", file)->required();

    auto* check = app.add_subcommand("check", "Diameter-bound and path checks");
    auto* check_hirsch = check->add_subcommand("hirsch", "diameter <= n - d");
    check_hirsch->add_option("file", file)->required();
    check_hirsch->add_option("--cert", out, "certificate path on failure");
    auto* check_nr = check->add_subcommand("nonrevisiting", "non-revisiting path existence");
    check_nr->add_option("file", file)->required();
    check_nr->add_option("--x", xs, "x vertex coordinates a,b,c");
    check_nr->add_option("--y", ys, "y vertex coordinates");
    check_nr->add_option("--budget", nr_budget, "state budget (default 10^7)");
    check_nr->add_option("--cert", out, "certificate path on failure");

    auto* dantzig = app.add_subcommand("dantzig", "Dantzig figure recognition");
    auto* dantzig_find = dantzig->add_subcommand("find", "list complementary vertex pairs");
    dantzig_find->add_option("file", file)->required();

    auto* geodesics = app.add_subcommand("geodesics", "Geodesic statistics");
    auto* geo_count = geodesics->add_subcommand("count", "distance and disjoint-geodesic count");
    geo_count->add_option("file", file)->required();
    geo_count->add_option("--x", xs);
    geo_count->add_option("--y", ys);

    auto* fd = app.add_subcommand("fd", "Fundamental deformations");
    auto* fd_apply = fd->add_subcommand("apply", "deform one facet past one vertex");
    fd_apply->add_option("file", file)->required();
    fd_apply->add_option("--facet", facet)->required();
    fd_apply->add_option("--step", step, "inward step (positive rational)");
    fd_apply->add_option("--out", out, "result polytope document");
    auto* fd_good = fd->add_subcommand("good", "goodness of a deformation");
    fd_good->add_option("file", file)->required();
    fd_good->add_option("--facet", facet)->required();
    fd_good->add_option("--step", step);
    fd_good->add_flag("--all-pairs", all_pairs, "quantify over every vertex pair");
    fd_good->add_option("--x", xs);
    fd_good->add_option("--y", ys);
    fd_good->add_option("--cert", out, "certificate path when not good");

    auto* campaign = app.add_subcommand("campaign", "Randomized conjecture verification");
    auto* c3 = campaign->add_subcommand("3geodesic", "m(P:x,y) >= 3 over sampled figures");
    auto* cs = campaign->add_subcommand("strong-dantzig", "every FD of sampled figures is good");
    for (CLI::App* c : {c3, cs}) {
        c->add_option("--d", dim)->required();
        c->add_option("--budget", budget, "number of sampled figures");
        c->add_option("--seed", seed);
        c->add_option("--out", out, "report path (JSON)");
        c->add_option("--cache", cache, "persistent type-cache file");
    }

    auto* moduli = app.add_subcommand("moduli", "Moduli-graph exploration");
    auto* mex = moduli->add_subcommand("explore", "breadth-first FD expansion of types");
    mex->add_option("--d", dim)->required();
    mex->add_option("--kind", kind, "dantzig|polytope")->required();
    mex->add_option("--n", nfacets, "facet count for the polytope kind (default 2d)");
    mex->add_option("--seeds", nseeds, "number of sampled seed figures (default 3)");
    mex->add_option("--budget", budget, "nodes to expand");
    mex->add_option("--seed", seed);
    mex->add_option("--out", out, "graph path (JSON)");
    auto* mscc = moduli->add_subcommand("scc", "strongly connected components of a graph file");
    mscc->add_option("file", file)->required();
    mscc->add_flag("--good-only", good_only, "restrict to good arcs");

    auto* cert = app.add_subcommand("certificate", "Re-verify a counterexample certificate");
    auto* cert_verify = cert->add_subcommand("verify", "recompute the recorded failure");
    cert_verify->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    const char* cx = xs.empty() ? nullptr : xs.c_str();
    const char* cy = ys.empty() ? nullptr : ys.c_str();

    try {
        if (*vertices) {
            PolytopeHandle h;
            if (int rc = load_polytope(file, h)) return rc;
            CStr res, msg;
            hirsch_status s = hirsch_vertices_json(h.p, &res.p, &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            const json j = json::parse(res.str());
            std::cout << "dim " << j["dim"] << ", " << j["n_facets"] << " facets, "
                      << j["vertices"].size() << " vertices, "
                      << (j["simple"].get<bool>() ? "simple" : "not simple") << "\n";
            for (const auto& v : j["vertices"]) {
                std::cout << "  (" << coords_str(v["point"]) << ")  tight {";
                std::string t;
                for (const auto& f : v["tight"]) {
                    if (!t.empty()) t += ",";
                    t += std::to_string(f.get<int>());
                }
                std::cout << t << "}\n";
            }
            return kExitOk;
        }

        if (*check_hirsch) {
            PolytopeHandle h;
            if (int rc = load_polytope(file, h)) return rc;
            CStr res, msg;
            int holds = 0;
            hirsch_status s = hirsch_check_hirsch(h.p, &holds, &res.p, &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            const json j = json::parse(res.str());
            std::cout << "diameter " << j["diameter"] << ", bound n-d = " << j["bound"] << ": "
                      << (holds ? "holds" : "VIOLATED") << "\n";
            if (!holds) {
                CStr doc;
                hirsch_polytope_document(h.p, &doc.p);
                json certificate{{"kind", "hirsch"},
                                 {"document", json::parse(doc.str())},
                                 {"diameter", j["diameter"]},
                                 {"bound", j["bound"]}};
                const std::string path = out.empty() ? file + ".cert.json" : out;
                write_file(path, certificate.dump(1));
                std::cout << "counterexample certificate written: " << path << "\n";
                return kExitCounterexample;
            }
            return kExitOk;
        }

        if (*check_nr) {
            PolytopeHandle h;
            if (int rc = load_polytope(file, h)) return rc;
            CStr res, msg;
            int holds = 0;
            hirsch_status s =
                hirsch_check_nonrevisiting(h.p, cx, cy, nr_budget, &holds, &res.p, &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            const json j = json::parse(res.str());
            std::cout << "non-revisiting path: " << (holds ? "exists" : "NONE") << " ("
                      << j["states"] << " states)\n";
            if (holds) {
                for (const auto& v : j["path"]) std::cout << "  (" << coords_str(v) << ")\n";
                return kExitOk;
            }
            CStr doc;
            hirsch_polytope_document(h.p, &doc.p);
            json certificate{{"kind", "nonrevisiting"}, {"document", json::parse(doc.str())}};
            if (cx) certificate["x"] = xs;
            if (cy) certificate["y"] = ys;
            const std::string path = out.empty() ? file + ".cert.json" : out;
            write_file(path, certificate.dump(1));
            std::cout << "counterexample certificate written: " << path << "\n";
            return kExitCounterexample;
        }

        if (*dantzig_find) {
            PolytopeHandle h;
            if (int rc = load_polytope(file, h)) return rc;
            CStr res, msg;
            hirsch_status s = hirsch_dantzig_find(h.p, &res.p, &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            const json j = json::parse(res.str());
            std::cout << j["count"] << " Dantzig pair(s)\n";
            for (const auto& pr : j["pairs"])
                std::cout << "  x=(" << coords_str(pr["x"]) << ")  y=(" << coords_str(pr["y"])
                          << ")\n";
            return kExitOk;
        }

        if (*geo_count) {
            PolytopeHandle h;
            if (int rc = load_polytope(file, h)) return rc;
            CStr res, msg;
            hirsch_status s = hirsch_geodesics_count(h.p, cx, cy, &res.p, &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            const json j = json::parse(res.str());
            std::cout << "dist=" << j["dist"] << " m=" << j["m_disjoint_geodesics"]
                      << " (geodesics: " << j["geodesic_count"]
                      << ", min-degree bound: " << j["min_degree_bound"] << ")\n";
            return kExitOk;
        }

        if (*fd_apply) {
            PolytopeHandle h;
            if (int rc = load_polytope(file, h)) return rc;
            CStr rec, doc, msg;
            hirsch_status s =
                hirsch_fd_apply(h.p, facet, step.c_str(), &rec.p, &doc.p, &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            const json j = json::parse(rec.str());
            std::cout << "facet " << j["facet"] << " step " << j["step"].get<std::string>()
                      << ": t0=" << j["t0"].get<std::string>()
                      << " t1=" << j["t1"].get<std::string>() << "\n"
                      << "vanishing edge v=(" << coords_str(j["v"]) << ") w=("
                      << coords_str(j["w"]) << ")\n"
                      << "result: " << j["result_facets"] << " facets, " << j["result_vertices"]
                      << " vertices (source " << j["source_vertices"] << ")\n";
            if (j.contains("good_for_marks"))
                std::cout << "good for marks: " << (j["good_for_marks"].get<bool>() ? "yes" : "no")
                          << "\n";
            if (!out.empty()) {
                write_file(out, doc.str());
                std::cout << "result document written: " << out << "\n";
            }
            return kExitOk;
        }

        if (*fd_good) {
            PolytopeHandle h;
            if (int rc = load_polytope(file, h)) return rc;
            CStr res, msg;
            int good = 0;
            hirsch_status s = hirsch_fd_good(h.p, facet, step.c_str(), all_pairs ? 1 : 0, cx, cy,
                                             &good, &res.p, &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            const json j = json::parse(res.str());
            std::cout << "deformation of facet " << facet << " ("
                      << j["mode"].get<std::string>() << "): " << (good ? "good" : "NOT GOOD")
                      << "\n";
            if (!good) {
                CStr doc;
                hirsch_polytope_document(h.p, &doc.p);
                json certificate{{"kind", "strong-dantzig"},
                                 {"document", json::parse(doc.str())},
                                 {"facet", facet},
                                 {"step", step},
                                 {"vanishing_edge", {{"v", j["v"]}, {"w", j["w"]}}}};
                const std::string path = out.empty() ? file + ".cert.json" : out;
                write_file(path, certificate.dump(1));
                std::cout << "counterexample certificate written: " << path << "\n";
                return kExitCounterexample;
            }
            return kExitOk;
        }

        if (*c3 || *cs) {
            CStr rep, msg;
            int counterexamples = 0;
            hirsch_status s = hirsch_campaign_run(*c3 ? "3geodesic" : "strong-dantzig", dim,
                                                  budget, seed, cache.empty() ? nullptr : cache.c_str(),
                                                  &rep.p, &counterexamples, &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            const json report = json::parse(rep.str());
            print_report(report);
            if (!out.empty()) {
                write_file(out, rep.str());
                std::cout << "report written: " << out << "\n";
            }
            return emit_certificates(report, out);
        }

        if (*mex) {
            CStr res, msg;
            hirsch_status s =
                hirsch_moduli_explore(kind.c_str(), dim, nfacets, nseeds, budget, seed, &res.p,
                                      &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            const json j = json::parse(res.str());
            int good_arcs = 0;
            for (const auto& a : j["arcs"]) good_arcs += a["good"].get<bool>() ? 1 : 0;
            std::cout << "explored " << j["nodes"].size() << " type(s), " << j["arcs"].size()
                      << " arc(s) (" << good_arcs << " good)\n";
            if (!out.empty()) {
                write_file(out, res.str());
                std::cout << "graph written: " << out << "\n";
            }
            return kExitOk;
        }

        if (*mscc) {
            CStr res, msg;
            const std::string text = read_file(file);
            hirsch_status s = hirsch_moduli_scc(text.c_str(), good_only ? 1 : 0, &res.p, &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            const json j = json::parse(res.str());
            std::cout << j["components"].size() << " strongly connected component(s) over "
                      << j["node_count"] << " node(s)"
                      << (good_only ? " (good arcs only)" : "") << ": "
                      << (j["strongly_connected"].get<bool>() ? "strongly connected"
                                                              : "not strongly connected")
                      << "\n";
            for (const auto& comp : j["components"]) {
                std::cout << "  {";
                std::string t;
                for (const auto& v : comp) {
                    if (!t.empty()) t += ",";
                    t += std::to_string(v.get<int>());
                }
                std::cout << t << "}\n";
            }
            return kExitOk;
        }

        if (*cert_verify) {
            CStr msg;
            int reproduced = 0;
            const std::string text = read_file(file);
            hirsch_status s = hirsch_certificate_verify(text.c_str(), &reproduced, &msg.p);
            if (s != HIRSCH_OK) return fail(s, msg);
            std::cout << "certificate " << (reproduced ? "reproduces" : "does NOT reproduce")
                      << " the recorded failure\n";
            return reproduced ? kExitOk : kExitInputError;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    std::cerr << "no subcommand selected\n";
    return kExitInputError;
}
