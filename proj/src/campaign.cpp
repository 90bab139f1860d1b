#include "hirsch/campaign.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "hirsch/io.hpp"

namespace hirsch {

FigureMetrics figure_metrics(const Skeleton& g, int x, int y, int n_facets, int dim) {
    FigureMetrics m;
    m.n_vertices = g.n;
    m.n_facets = n_facets;
    m.dim = dim;
    m.diameter = diameter(g);
    m.dist_xy = dist(g, x, y);
    m.m_disjoint = count_disjoint_geodesics(g, x, y);
    const EdgeClassification cls = classify_edges(g, x, y);
    m.classifiable_edges = static_cast<int>(cls.good.size() + cls.bad.size());
    m.bad_edges = static_cast<int>(cls.bad.size());
    m.hirsch = m.diameter <= n_facets - dim;
    return m;
}

namespace {

const char* kind_name(CampaignKind kind) {
    return kind == CampaignKind::ThreeGeodesic ? "3geodesic" : "strong-dantzig";
}

struct TypeEntry {
    std::string canon_hex;
    std::string canon_ordered_hex;
    int first_sample = -1;  // -1 when first reached through an FD arc
    int times_seen = 0;
    FigureMetrics metrics;
    bool nr_decided = false;
    bool nr_holds = false;
    bool expanded = false;
    int fd_tried = 0, fd_ok = 0, fd_good = 0;
    std::map<std::string, int> fd_failures;
    nlohmann::json arcs = nlohmann::json::array();
    nlohmann::json representative;  // document with marks

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["canon"] = canon_hex;
        j["canon_ordered"] = canon_ordered_hex;
        j["first_sample"] = first_sample;
        j["times_seen"] = times_seen;
        j["n_vertices"] = metrics.n_vertices;
        j["n_facets"] = metrics.n_facets;
        j["diameter"] = metrics.diameter;
        j["dist_xy"] = metrics.dist_xy;
        j["m_disjoint_geodesics"] = metrics.m_disjoint;
        j["classifiable_edges"] = metrics.classifiable_edges;
        j["bad_edges"] = metrics.bad_edges;
        j["hirsch"] = metrics.hirsch;
        j["hirsch_bound"] = metrics.n_facets - metrics.dim;
        j["nonrevisiting_decided"] = nr_decided;
        j["nonrevisiting"] = nr_holds;
        j["fd"] = {{"expanded", expanded},
                   {"tried", fd_tried},
                   {"ok", fd_ok},
                   {"good", fd_good},
                   {"failures", fd_failures}};
        j["arcs"] = arcs;
        j["representative"] = representative;
        return j;
    }
};

// Rebuilds the validated figure from a stored representative document.
DantzigFigure figure_from_document(const nlohmann::json& doc) {
    PolytopeDocument pd = document_from_json(doc);
    Polytope p = Polytope::validate(std::move(pd.system));
    if (!pd.marks) throw Error(ErrorCode::Parse, "representative lacks marks");
    auto [x, y] = resolve_marks(p, pd.marks->first, pd.marks->second);
    return DantzigFigure::checked(std::move(p), x, y);
}

class CampaignRunner {
  public:
    explicit CampaignRunner(const CampaignOptions& opt) : opt_(opt) {}

    CampaignResult run() {
        load_cache();
        sample_loop();
        finish_report();
        save_cache();
        CampaignResult result;
        result.report = std::move(report_);
        result.counterexamples = counterexample_count_;
        result.samples_valid = samples_valid_;
        result.internal_inconsistencies = inconsistencies_;
        return result;
    }

  private:
    void load_cache() {
        if (opt_.cache_path.empty()) return;
        std::ifstream in(opt_.cache_path);
        if (!in) return;
        nlohmann::json cache = nlohmann::json::parse(in, nullptr, false);
        if (cache.is_discarded() || !cache.is_object() || !cache.contains("types")) return;
        if (!cache.contains("dim") || cache["dim"].get<int>() != opt_.dim) return;
        for (auto& [canon, rec] : cache["types"].items()) cache_[canon] = rec;
        // Only trust cached arcs whose destinations are themselves cached.
        for (auto& [canon, rec] : cache_) {
            if (!rec.value("expanded", false)) continue;
            for (const auto& arc : rec["arcs"]) {
                if (!cache_.count(arc["dst"].get<std::string>())) {
                    rec["expanded"] = false;
                    rec["arcs"] = nlohmann::json::array();
                    break;
                }
            }
        }
    }

    void save_cache() {
        if (opt_.cache_path.empty()) return;
        nlohmann::json cache;
        cache["format"] = 1;
        cache["dim"] = opt_.dim;
        nlohmann::json types = nlohmann::json::object();
        for (auto& [canon, rec] : cache_) types[canon] = rec;
        for (const auto& [canon, id] : index_) {
            const TypeEntry& t = entries_[id];
            nlohmann::json rec;
            rec["metrics"] = metrics_json(t);
            rec["expanded"] = t.expanded;
            rec["arcs"] = t.arcs;
            rec["fd"] = t.to_json()["fd"];
            rec["representative"] = t.representative;
            types[t.canon_hex] = rec;
        }
        cache["types"] = std::move(types);
        std::ofstream out(opt_.cache_path);
        out << cache.dump(1) << "\n";
    }

    static nlohmann::json metrics_json(const TypeEntry& t) {
        return {{"n_vertices", t.metrics.n_vertices},
                {"n_facets", t.metrics.n_facets},
                {"dim", t.metrics.dim},
                {"diameter", t.metrics.diameter},
                {"dist_xy", t.metrics.dist_xy},
                {"m_disjoint_geodesics", t.metrics.m_disjoint},
                {"classifiable_edges", t.metrics.classifiable_edges},
                {"bad_edges", t.metrics.bad_edges},
                {"hirsch", t.metrics.hirsch},
                {"nonrevisiting_decided", t.nr_decided},
                {"nonrevisiting", t.nr_holds}};
    }

    // Returns the type id for a live figure, creating and measuring the
    // entry on first contact.
    int touch(const DantzigFigure& fig) {
        const Incidence inc = incidence(fig.poly);
        const std::string canon_hex =
            to_hex(canonical_form_unordered(inc, fig.x, fig.y));
        ordered_touched_.insert(to_hex(canonical_form(inc, fig.x, fig.y)));
        auto it = index_.find(canon_hex);
        if (it != index_.end()) return it->second;

        TypeEntry t;
        t.canon_hex = canon_hex;
        t.canon_ordered_hex = to_hex(canonical_form(inc, fig.x, fig.y));
        t.representative = polytope_to_json(fig.poly, fig.x, fig.y);
        auto cached = cache_.find(canon_hex);
        if (cached != cache_.end()) {
            const nlohmann::json& m = cached->second["metrics"];
            t.metrics.n_vertices = m["n_vertices"].get<int>();
            t.metrics.n_facets = m["n_facets"].get<int>();
            t.metrics.dim = m["dim"].get<int>();
            t.metrics.diameter = m["diameter"].get<int>();
            t.metrics.dist_xy = m["dist_xy"].get<int>();
            t.metrics.m_disjoint = m["m_disjoint_geodesics"].get<int>();
            t.metrics.classifiable_edges = m["classifiable_edges"].get<int>();
            t.metrics.bad_edges = m["bad_edges"].get<int>();
            t.metrics.hirsch = m["hirsch"].get<bool>();
            t.nr_decided = m["nonrevisiting_decided"].get<bool>();
            t.nr_holds = m["nonrevisiting"].get<bool>();
            t.representative = cached->second["representative"];
        } else {
            const Skeleton g = skeleton(inc, fig.poly.dim());
            t.metrics = figure_metrics(g, fig.x, fig.y, fig.poly.facet_count(), fig.poly.dim());
            try {
                t.nr_holds = check_nonrevisiting(fig.poly, fig.x, fig.y, opt_.nr_budget).exists;
                t.nr_decided = true;
            } catch (const Error&) {
                t.nr_decided = false;
            }
        }
        const int id = static_cast<int>(entries_.size());
        index_.emplace(canon_hex, id);
        entries_.push_back(std::move(t));
        check_conjectures(id);
        return id;
    }

    void check_conjectures(int id) {
        TypeEntry& t = entries_[id];
        if (!t.metrics.hirsch)
            add_counterexample("hirsch", t.representative,
                               {{"diameter", t.metrics.diameter},
                                {"bound", t.metrics.n_facets - opt_.dim}});
        if (t.nr_decided && !t.nr_holds)
            add_counterexample("nonrevisiting", t.representative, {});
        if (opt_.kind == CampaignKind::ThreeGeodesic && t.metrics.m_disjoint < 3)
            add_counterexample("3geodesic", t.representative,
                               {{"m_disjoint_geodesics", t.metrics.m_disjoint}});
    }

    void add_counterexample(const std::string& kind, const nlohmann::json& document,
                            nlohmann::json details) {
        ++counterexample_count_;
        details["kind"] = kind;
        details["document"] = document;
        counterexamples_.push_back(std::move(details));
    }

    void expand(int id) {
        TypeEntry& t = entries_[id];
        if (t.expanded) return;
        t.expanded = true;
        auto cached = cache_.find(t.canon_hex);
        if (cached != cache_.end() && cached->second.value("expanded", false)) {
            expand_from_cache(id, cached->second);
            return;
        }
        const DantzigFigure fig = figure_from_document(t.representative);
        for (int facet = 1; facet <= fig.poly.facet_count(); ++facet) {
            FdAttempt at = attempt_fd(
                fig.poly, fig.x, fig.y, facet, opt_.fd_policy,
                Rng::derive_seed(opt_.seed, 0x100000ull + std::uint64_t(id) * 64 + facet));
            TypeEntry& te = entries_[id];  // re-fetch: touch() may reallocate
            ++te.fd_tried;
            if (!at.ok) {
                ++te.fd_failures[at.failure];
                continue;
            }
            ++te.fd_ok;
            const bool good = is_good(at.fd, at.source_x, at.source_y);
            if (good) ++te.fd_good;
            DantzigFigure dst{at.fd.result, at.result_x, at.result_y};
            const int dst_id = touch(dst);
            nlohmann::json arc;
            arc["facet"] = facet;
            arc["step"] = rational_to_string(opt_.fd_policy.step);
            arc["dst"] = entries_[dst_id].canon_hex;
            arc["good"] = good;
            if (!good) {
                arc["fd_source"] = polytope_to_json(at.fd.source, at.source_x, at.source_y);
                arc["vanishing_edge"] = {
                    {"v", nlohmann::json::array()}, {"w", nlohmann::json::array()}};
                for (const auto& c : at.fd.source.vertices()[at.fd.v].point)
                    arc["vanishing_edge"]["v"].push_back(rational_to_string(c));
                for (const auto& c : at.fd.source.vertices()[at.fd.w].point)
                    arc["vanishing_edge"]["w"].push_back(rational_to_string(c));
                if (opt_.kind == CampaignKind::StrongDantzig)
                    add_counterexample("strong-dantzig", arc["fd_source"],
                                       {{"facet", facet},
                                        {"step", rational_to_string(opt_.fd_policy.step)},
                                        {"vanishing_edge", arc["vanishing_edge"]}});
            }
            entries_[id].arcs.push_back(std::move(arc));
        }
    }

    void expand_from_cache(int id, const nlohmann::json& rec) {
        TypeEntry& t = entries_[id];
        t.arcs = rec["arcs"];
        t.fd_tried = rec["fd"]["tried"].get<int>();
        t.fd_ok = rec["fd"]["ok"].get<int>();
        t.fd_good = rec["fd"]["good"].get<int>();
        for (auto& [name, count] : rec["fd"]["failures"].items())
            t.fd_failures[name] = count.get<int>();
        for (const auto& arc : rec["arcs"]) {
            const std::string dst = arc["dst"].get<std::string>();
            if (!index_.count(dst))
                touch(figure_from_document(cache_.at(dst)["representative"]));
            if (!arc["good"].get<bool>() && opt_.kind == CampaignKind::StrongDantzig)
                add_counterexample("strong-dantzig", arc["fd_source"],
                                   {{"facet", arc["facet"]},
                                    {"step", arc["step"]},
                                    {"vanishing_edge", arc["vanishing_edge"]}});
        }
    }

    void sample_loop() {
        int samples_per_block = 0;
        int types_at_block_start = 0;
        for (int k = 0; k < opt_.budget; ++k) {
            ++samples_attempted_;
            ++samples_per_block;
            try {
                SamplerStats stats;
                DantzigFigure fig = random_dantzig(
                    opt_.dim, Rng::derive_seed(opt_.seed, k), opt_.sampler_draws, &stats);
                draws_ += stats.draws;
                ++samples_valid_;
                const int id = touch(fig);
                ++entries_[id].times_seen;
                if (entries_[id].first_sample < 0) entries_[id].first_sample = k;
                expand(id);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SamplerExhausted) throw;
                ++samples_exhausted_;
            }
            if (samples_per_block == 100) {
                saturation_.push_back(static_cast<int>(entries_.size()) - types_at_block_start);
                types_at_block_start = static_cast<int>(entries_.size());
                samples_per_block = 0;
            }
        }
        if (samples_per_block > 0)
            saturation_.push_back(static_cast<int>(entries_.size()) - types_at_block_start);
    }

    void finish_report() {
        // Theorem-consistency chain on every expanded type:
        // m >= 3 => no bad edge => every attempted FD good.
        for (const TypeEntry& t : entries_) {
            if (t.metrics.m_disjoint >= 3 && t.metrics.bad_edges > 0) ++inconsistencies_;
            if (t.expanded && t.metrics.bad_edges == 0 && t.fd_good != t.fd_ok) ++inconsistencies_;
        }
        report_["format"] = 1;
        report_["campaign"] = kind_name(opt_.kind);
        report_["dim"] = opt_.dim;
        report_["budget"] = opt_.budget;
        report_["seed"] = opt_.seed;
        report_["samples"] = {{"attempted", samples_attempted_},
                              {"valid", samples_valid_},
                              {"sampler_exhausted", samples_exhausted_},
                              {"draws", draws_}};
        report_["distinct_types"] = entries_.size();
        report_["distinct_types_ordered_convention"] = ordered_touched_.size();
        report_["saturation_new_types_per_100"] = saturation_;
        nlohmann::json types = nlohmann::json::array();
        for (const TypeEntry& t : entries_) types.push_back(t.to_json());
        report_["types"] = std::move(types);

        std::vector<std::pair<int, int>> all_arcs, good_arcs;
        int fd_tried = 0, fd_ok = 0, fd_good = 0;
        nlohmann::json failures = nlohmann::json::object();
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const TypeEntry& t = entries_[i];
            fd_tried += t.fd_tried;
            fd_ok += t.fd_ok;
            fd_good += t.fd_good;
            for (const auto& [name, count] : t.fd_failures)
                failures[name] = failures.value(name, 0) + count;
            for (const auto& arc : t.arcs) {
                const int dst = index_.at(arc["dst"].get<std::string>());
                all_arcs.emplace_back(static_cast<int>(i), dst);
                if (arc["good"].get<bool>()) good_arcs.emplace_back(static_cast<int>(i), dst);
            }
        }
        report_["fd_totals"] = {
            {"tried", fd_tried}, {"ok", fd_ok}, {"good", fd_good}, {"failures", failures}};
        const int n = static_cast<int>(entries_.size());
        SccResult sa = scc_of(n, all_arcs);
        SccResult sg = scc_of(n, good_arcs);
        report_["scc_all_arcs"] = {{"components", sa.components},
                                   {"strongly_connected", sa.strongly_connected}};
        report_["scc_good_arcs"] = {{"components", sg.components},
                                    {"strongly_connected", sg.strongly_connected}};
        report_["counterexamples"] = counterexamples_;
        report_["internal_inconsistencies"] = inconsistencies_;
    }

    CampaignOptions opt_;
    std::map<std::string, nlohmann::json> cache_;
    std::vector<TypeEntry> entries_;
    std::map<std::string, int> index_;
    std::set<std::string> ordered_touched_;
    nlohmann::json counterexamples_ = nlohmann::json::array();
    std::vector<int> saturation_;
    int samples_attempted_ = 0, samples_valid_ = 0, samples_exhausted_ = 0;
    std::uint64_t draws_ = 0;
    int counterexample_count_ = 0;
    int inconsistencies_ = 0;
    nlohmann::json report_;
};

}  // namespace

CampaignResult run_campaign(const CampaignOptions& opt) {
    if (opt.dim < 3) throw Error(ErrorCode::BadArgument, "campaigns require d >= 3");
    if (opt.budget < 0) throw Error(ErrorCode::BadArgument, "budget must be nonnegative");
    return CampaignRunner(opt).run();
}

bool verify_certificate(const nlohmann::json& cert, std::uint64_t nr_budget) {
    const std::string kind = cert.at("kind").get<std::string>();
    PolytopeDocument pd = document_from_json(cert.at("document"));
    Polytope p = Polytope::validate(std::move(pd.system));
    if (kind == "hirsch") {
        return diameter(skeleton_of(p)) > p.facet_count() - p.dim();
    }
    if (!pd.marks) throw Error(ErrorCode::Parse, "certificate document lacks marks");
    auto [x, y] = resolve_marks(p, pd.marks->first, pd.marks->second);
    if (kind == "3geodesic") {
        const int m = count_disjoint_geodesics(skeleton_of(p), x, y);
        return m == cert.at("m_disjoint_geodesics").get<int>() && m < 3;
    }
    if (kind == "nonrevisiting") {
        return !check_nonrevisiting(p, x, y, nr_budget).exists;
    }
    if (kind == "strong-dantzig") {
        DantzigFigure fig = DantzigFigure::checked(std::move(p), x, y);
        FDRecord fd = fd_of_dantzig(fig, cert.at("facet").get<int>(),
                                    parse_rational(cert.at("step").get<std::string>()));
        const auto& ve = cert.at("vanishing_edge");
        RatVec v_claimed, w_claimed;
        for (const auto& c : ve.at("v")) v_claimed.push_back(parse_rational(c.get<std::string>()));
        for (const auto& c : ve.at("w")) w_claimed.push_back(parse_rational(c.get<std::string>()));
        if (fd.source.vertices()[fd.v].point != v_claimed ||
            fd.source.vertices()[fd.w].point != w_claimed)
            return false;
        return !is_good(fd, fig.x, fig.y);
    }
    throw Error(ErrorCode::Parse, "unknown certificate kind '" + kind + "'");
}

}  // namespace hirsch
