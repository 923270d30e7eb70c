#ifndef HLBIP_GENERATE_HPP
#define HLBIP_GENERATE_HPP

#include <hlbip/graphs.hpp>
#include <hlbip/l2.hpp>
#include <hlbip/matrix.hpp>

#include <cstdint>
#include <random>

namespace hlbip {

// Deterministic random instances for tests and the corpus generator. All
// draws go through raw engine output with masking/rejection, never through
// distribution adapters, so a (seed, parameters) pair pins the result bytes
// on every platform.

// splitmix64-style mixer; decorrelates (seed, salt) pairs.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits(int k);             // k low bits of one draw, k <= 64
    std::uint64_t below(std::uint64_t m);  // uniform in [0, m) by rejection
    bool coin() { return bits(1) != 0; }
    long sign_entry();                     // uniform over {-1, 0, 1}
    // Uniform over [lo, hi], inclusive.
    long in_range(long lo, long hi);

private:
    std::mt19937_64 eng_;
};

Graph random_graph(int n, std::uint64_t seed);
Tournament random_tournament(int n, std::uint64_t seed);

// Zero diagonal, off-diagonal entries uniform over {-1,0,1}; resamples until
// irreducible when required (and mirrors entries when symmetric).
Matrix random_sign_matrix(int n, std::uint64_t seed, bool symmetric,
                          bool require_irreducible);

// Zero diagonal, off-diagonal entries p/q with p in [-8,8], q in [1,8].
Matrix random_rational_matrix(int n, std::uint64_t seed, bool symmetric,
                              bool require_irreducible);

// Entries p/q as above, resampled until invertible.
Matrix random_invertible_matrix(int n, std::uint64_t seed);

// Diagonal of nonzero rationals.
Matrix random_invertible_diagonal(int n, std::uint64_t seed);
// Diagonal of arbitrary rationals (zeros allowed).
Matrix random_diagonal(int n, std::uint64_t seed);

// HL family of a random irreducible sign matrix: always weakly bipartitive.
BipartitionFamily random_weakly_bipartitive_family(int n, std::uint64_t seed);
// Clan family of a random sign-labelled structure: always weakly partitive.
SetFamily random_weakly_partitive_family(int n, std::uint64_t seed);

} // namespace hlbip

#endif
