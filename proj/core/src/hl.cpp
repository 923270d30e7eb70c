#include <hlbip/hl.hpp>

#include <hlbip/generate.hpp>
#include <hlbip/l2.hpp>

namespace hlbip {

bool is_hl_bipartition(const Matrix& A, const Bipartition& b) {
    if (!A.is_square()) throw input_error("HL-bipartitions are for square matrices");
    if (b.ground_size() != A.rows())
        throw input_error("bipartition ground differs from matrix size");
    return A.submatrix(b.first(), b.second()).is_rank_at_most_one()
        && A.submatrix(b.second(), b.first()).is_rank_at_most_one();
}

BipartitionFamily hl_family(const Matrix& A) {
    if (!A.is_square() || A.rows() < 2)
        throw input_error("HL family needs a square matrix of size >= 2");
    BipartitionFamily F(A.rows());
    for_each_bipartition(A.rows(), [&](const Bipartition& b) {
        if (is_hl_bipartition(A, b)) F.add(b);
    });
    return F;
}

bool is_normalized_at(const Matrix& A, int v) {
    if (!A.is_square()) return false;
    if (v < 1 || v > A.rows()) throw input_error("vertex outside matrix range");
    for (int j = 1; j <= A.rows(); ++j) {
        if (j == v) continue;
        if (!A.at(v, j).is_one() || !A.at(j, v).is_one()) return false;
    }
    return true;
}

NormalizationResult normalize(const Matrix& A, int v, std::uint64_t seed) {
    if (!A.is_square()) throw input_error("normalization is for square matrices");
    int n = A.rows();
    if (v < 1 || v > n) throw input_error("vertex outside matrix range");
    if (A.field().kind() != FieldKind::rational)
        throw input_error("normalization needs the rational field");
    if (!A.is_irreducible())
        throw input_error("normalization needs an irreducible matrix");

    for (int attempt = 0; attempt <= 32; ++attempt) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        // d_i = r_i * (1 + |a_ii| + sum_{j != i} |a_ij|) with r_i in [1, 2^20]
        // makes A + diag(d) strictly diagonally dominant, so it and all its
        // principal submatrices are invertible.
        std::vector<Scalar> shift;
        Matrix B = A;
        for (int i = 1; i <= n; ++i) {
            Scalar row_abs = Scalar::rational(1);
            for (int j = 1; j <= n; ++j) row_abs += A.at(i, j).abs();
            Scalar r = Scalar::rational(static_cast<long>(rng.bits(20)) + 1);
            Scalar d = r * row_abs;
            shift.push_back(d);
            B.set(i, i, A.at(i, i) + d);
        }
        auto W_opt = B.inverse();
        if (!W_opt) throw internal_error("dominant matrix failed to invert");
        const Matrix& W = *W_opt;

        bool has_zero = false;
        for (int i = 1; i <= n && !has_zero; ++i)
            for (int j = 1; j <= n; ++j)
                if (W.at(i, j).is_zero()) { has_zero = true; break; }
        if (has_zero) continue; // resample the diagonal

        std::vector<Scalar> dl, dr;
        for (int i = 1; i <= n; ++i) {
            dl.push_back(i == v ? Scalar::rational(1) : W.at(i, v).inverse());
            dr.push_back(i == v ? Scalar::rational(1) : W.at(v, i).inverse());
        }
        Matrix result = Matrix::diagonal(dl, A.field()) * W
                      * Matrix::diagonal(dr, A.field());
        if (!is_normalized_at(result, v))
            throw internal_error("normalization postcondition failed");
        return {result, v, attempt, std::move(shift)};
    }
    throw internal_error("normalization exhausted 32 diagonal resamples");
}

BipartitionFamily hl_via_clans(const Matrix& A, int v) {
    if (!A.is_square() || A.rows() < 2)
        throw input_error("clan route needs a square matrix of size >= 2");
    if (!is_normalized_at(A, v))
        throw input_error("clan route needs a v-normalized matrix");
    int n = A.rows();
    L2Structure g = L2Structure::from_matrix(A).induce(IndexSet::range(n).without(v));
    BipartitionFamily F(n);
    for (const IndexSet& clan : g.clans()) F.add(Bipartition::of(clan, n));
    return F;
}

AxiomReport verify_forward(const Matrix& A) {
    if (!A.is_square() || A.rows() < 2)
        throw input_error("forward verification needs a square matrix of size >= 2");
    if (!A.is_irreducible())
        throw input_error("forward verification needs an irreducible matrix");
    BipartitionFamily F = hl_family(A);
    return A.is_symmetric() ? check_bipartitive(F) : check_weakly_bipartitive(F);
}

bool inverse_block_rank_check(const Matrix& T, int k) {
    if (!T.is_square()) throw input_error("block-rank check needs a square matrix");
    int n = T.rows();
    if (k < 1 || k >= n) throw input_error("block size must satisfy 1 <= k < n");
    IndexSet X = IndexSet::range(k);
    IndexSet Y = IndexSet::range(n).set_difference(X);
    if (T.submatrix(X, X).rank() != k)
        throw input_error("leading block is singular");
    auto W_opt = T.inverse();
    if (!W_opt) throw input_error("matrix is singular");
    const Matrix& W = *W_opt;
    return W.submatrix(X, Y).rank() == T.submatrix(X, Y).rank()
        && W.submatrix(Y, X).rank() == T.submatrix(Y, X).rank();
}

} // namespace hlbip
