#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "hirsch/dantzig.hpp"
#include "hirsch/polytope.hpp"

namespace hirsch {

// Deterministic RNG wrapper. uniform() uses explicit rejection sampling so
// the stream is reproducible independent of the standard library's
// distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    // Independent substream: mixes the base seed with the stream index.
    static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

  private:
    std::mt19937_64 gen_;
};

struct SamplerStats {
    std::uint64_t draws = 0;  // candidate systems generated
};

// Random simple polytope with n facets: integer normals near the unit
// sphere (scaled by the rounded Euclidean norm), offsets 1, rejection until
// bounded, full-dimensional, irredundant and simple. Deterministic per
// seed. Throws ESamplerExhausted after max_draws candidate systems.
Polytope random_simple_polytope(int d, int n, std::uint64_t seed,
                                std::uint64_t max_draws = 20000,
                                SamplerStats* stats = nullptr);

// Random Dantzig figure: draws random simple (2d, d)-polytopes until one
// admits a complementary pair, then marks the first pair in canonical
// order. max_draws bounds the total candidate systems across all draws.
DantzigFigure random_dantzig(int d, std::uint64_t seed, std::uint64_t max_draws = 20000,
                             SamplerStats* stats = nullptr);

// Re-tilts one facet normal by a small rational perturbation (entry j gets
// +-2^j / denom with random signs) and revalidates. Returns nullopt when
// the result is not a simple polytope with the same vertex-facet incidence
// under the tight-set correspondence (marks therefore survive unchanged).
std::optional<Polytope> perturb_facet(const Polytope& p, int facet, Rng& rng,
                                      const Integer& denom);

}  // namespace hirsch
