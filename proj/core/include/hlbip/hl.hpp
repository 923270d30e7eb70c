#ifndef HLBIP_HL_HPP
#define HLBIP_HL_HPP

#include <hlbip/families.hpp>
#include <hlbip/matrix.hpp>

#include <cstdint>
#include <vector>

namespace hlbip {

// {X,Y} with both off-diagonal blocks A[X,Y], A[Y,X] of rank at most one.
bool is_hl_bipartition(const Matrix& A, const Bipartition& b);

// Exhaustive scan over all 2^(n-1) - 1 bipartitions of [n].
BipartitionFamily hl_family(const Matrix& A);

// Row v and column v are all ones off the diagonal.
bool is_normalized_at(const Matrix& A, int v);

struct NormalizationResult {
    Matrix matrix;             // v-normalized, every entry nonzero
    int vertex;                // the chosen v
    int retries_used;          // resample rounds burned on a zero inverse entry
    std::vector<Scalar> shift; // the diagonal d added to reach dominance
};

// Same HL-bipartitions as A, v-normalized, all entries nonzero. Rationals
// only; A must be irreducible. Pipeline: add a random strictly dominant
// diagonal (seeded, deterministic), invert, resample while the inverse has a
// zero entry (cap 32), then scale rows/columns to put ones in row/column v.
// Symmetric input yields a symmetric result.
NormalizationResult normalize(const Matrix& A, int v, std::uint64_t seed);

// The clan route: {I, [n]∖I} for each clan I of the structure induced on
// [n]∖{v} by the off-diagonal entries. Equals hl_family(A) whenever A is
// v-normalized.
BipartitionFamily hl_via_clans(const Matrix& A, int v);

// Computes the HL family of an irreducible matrix and checks the axioms it is
// guaranteed to satisfy: Q1+Q2 always, Q3 additionally when A is symmetric.
// A failed report indicates an implementation defect.
AxiomReport verify_forward(const Matrix& A);

// For invertible T with invertible leading k-by-k block: the off-diagonal
// blocks of T and of W = T^{-1} under the ({1..k}, {k+1..n}) split have equal
// ranks. Test-support operation.
bool inverse_block_rank_check(const Matrix& T, int k);

} // namespace hlbip

#endif
