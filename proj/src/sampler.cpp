#include "hirsch/sampler.hpp"

#include <algorithm>

namespace hirsch {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span);
    std::uint64_t r;
    do {
        r = gen_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
}

std::uint64_t Rng::derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined value
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

Integer rounded_norm(const std::vector<std::int64_t>& z) {
    Integer sq = 0;
    for (auto c : z) sq += Integer(c) * c;
    Integer root = sqrt(sq);  // floor
    if (sq - root * root > (root + 1) * (root + 1) - sq) ++root;
    return root == 0 ? Integer(1) : root;
}

Halfspace make_halfspace(const std::vector<std::int64_t>& z) {
    const Integer q = rounded_norm(z);
    RatVec normal(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) normal[j] = Rational(Integer(z[j]), q);
    return {std::move(normal), 1};
}

std::vector<std::int64_t> random_int_vector(Rng& rng, int d, std::int64_t box) {
    std::vector<std::int64_t> z(d);
    bool nonzero = false;
    do {
        for (int j = 0; j < d; ++j) {
            z[j] = rng.uniform(-box, box);
            if (z[j] != 0) nonzero = true;
        }
    } while (!nonzero);
    return z;
}

std::optional<Polytope> try_validate_simple(HalfspaceSystem sys) {
    try {
        Polytope p = Polytope::validate(std::move(sys));
        if (!p.simple()) return std::nullopt;
        return p;
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

Polytope random_simple_polytope(int d, int n, std::uint64_t seed, std::uint64_t max_draws,
                                SamplerStats* stats) {
    if (d < 3) throw Error(ErrorCode::BadArgument, "sampler requires d >= 3");
    if (n < d + 1) throw Error(ErrorCode::BadArgument, "need at least d+1 facets to bound");
    Rng rng(seed);
    for (std::uint64_t attempt = 0; attempt < max_draws; ++attempt) {
        if (stats) ++stats->draws;
        HalfspaceSystem sys;
        sys.dim = d;
        for (int i = 0; i < n; ++i) sys.halfspaces.push_back(make_halfspace(random_int_vector(rng, d, 10)));
        if (auto p = try_validate_simple(std::move(sys))) return std::move(*p);
    }
    throw Error(ErrorCode::SamplerExhausted,
                "no simple polytope after " + std::to_string(max_draws) + " draws");
}

DantzigFigure random_dantzig(int d, std::uint64_t seed, std::uint64_t max_draws,
                             SamplerStats* stats) {
    if (d < 3) throw Error(ErrorCode::BadArgument, "sampler requires d >= 3");
    std::uint64_t used = 0;
    for (std::uint64_t round = 0; used < max_draws; ++round) {
        SamplerStats local;
        Polytope p;
        try {
            p = random_simple_polytope(d, 2 * d, Rng::derive_seed(seed, round),
                                       max_draws - used, &local);
        } catch (const Error&) {
            if (stats) stats->draws += local.draws;
            break;
        }
        used += local.draws;
        if (stats) stats->draws += local.draws;
        auto pairs = find_dantzig_pairs(p);
        if (!pairs.empty())
            return DantzigFigure{std::move(p), pairs[0].first, pairs[0].second};
    }
    throw Error(ErrorCode::SamplerExhausted,
                "no Dantzig figure after " + std::to_string(max_draws) + " draws");
}

std::optional<Polytope> perturb_facet(const Polytope& p, int facet, Rng& rng,
                                      const Integer& denom) {
    HalfspaceSystem sys = p.system();
    RatVec& normal = sys.halfspaces[facet - 1].normal;
    // Power-of-two magnitudes with random signs: subset sums of distinct
    // powers never cancel, so crossing-parameter ties on 0/1-coordinate
    // differences cannot survive the re-tilt.
    for (std::size_t j = 0; j < normal.size(); ++j) {
        const std::int64_t sign = rng.uniform(0, 1) ? 1 : -1;
        normal[j] += Rational(Integer(sign * (std::int64_t(1) << j)), denom);
    }
    if (is_zero_vec(normal)) return std::nullopt;
    auto q = try_validate_simple(std::move(sys));
    if (!q) return std::nullopt;
    if (q->vertex_count() != p.vertex_count()) return std::nullopt;
    for (const VertexData& v : p.vertices())
        if (q->vertex_by_tight(v.tight) < 0) return std::nullopt;
    return q;
}

}  // namespace hirsch
