#include <hlbip/generate.hpp>

#include <hlbip/hl.hpp>

namespace hlbip {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::bits(int k) {
    std::uint64_t v = eng_();
    if (k >= 64) return v;
    return v & ((std::uint64_t{1} << k) - 1);
}

std::uint64_t Rng::below(std::uint64_t m) {
    if (m == 0) throw internal_error("empty draw range");
    // Smallest power-of-two mask covering m, rejection on overshoot.
    int k = 1;
    while ((std::uint64_t{1} << k) < m && k < 63) ++k;
    for (;;) {
        std::uint64_t v = bits(k);
        if (v < m) return v;
    }
}

long Rng::sign_entry() {
    static const long table[3] = {0, 1, -1};
    return table[below(3)];
}

long Rng::in_range(long lo, long hi) {
    if (lo > hi) throw internal_error("empty draw range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Graph random_graph(int n, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x67726170));
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.coin()) g.add_edge(i, j);
    return g;
}

Tournament random_tournament(int n, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x746f7572));
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            arcs.emplace_back(rng.coin() ? std::make_pair(i, j)
                                         : std::make_pair(j, i));
    return Tournament::from_arcs(n, arcs);
}

namespace {

Matrix draw_sign_matrix(int n, Rng& rng, bool symmetric) {
    Matrix A(n, n, FieldSpec::rationals());
    for (int i = 1; i <= n; ++i)
        for (int j = symmetric ? i + 1 : 1; j <= n; ++j) {
            if (i == j) continue;
            Scalar v = Scalar::rational(rng.sign_entry());
            A.set(i, j, v);
            if (symmetric) A.set(j, i, v);
        }
    return A;
}

Matrix draw_rational_matrix(int n, Rng& rng, bool symmetric) {
    Matrix A(n, n, FieldSpec::rationals());
    for (int i = 1; i <= n; ++i)
        for (int j = symmetric ? i : 1; j <= n; ++j) {
            Scalar v = Scalar::rational(rng.in_range(-8, 8), rng.in_range(1, 8));
            A.set(i, j, v);
            if (symmetric) A.set(j, i, v);
        }
    return A;
}

} // namespace

Matrix random_sign_matrix(int n, std::uint64_t seed, bool symmetric,
                          bool require_irreducible) {
    for (std::uint64_t attempt = 0; attempt < 4096; ++attempt) {
        Rng rng(mix_seed(seed, 0x7369676e00 + attempt));
        Matrix A = draw_sign_matrix(n, rng, symmetric);
        if (!require_irreducible || A.is_irreducible()) return A;
    }
    throw internal_error("sign-matrix sampling failed to reach irreducibility");
}

Matrix random_rational_matrix(int n, std::uint64_t seed, bool symmetric,
                              bool require_irreducible) {
    for (std::uint64_t attempt = 0; attempt < 4096; ++attempt) {
        Rng rng(mix_seed(seed, 0x7261740000 + attempt));
        Matrix A = draw_rational_matrix(n, rng, symmetric);
        if (!require_irreducible || A.is_irreducible()) return A;
    }
    throw internal_error("rational-matrix sampling failed to reach irreducibility");
}

Matrix random_invertible_matrix(int n, std::uint64_t seed) {
    for (std::uint64_t attempt = 0; attempt < 4096; ++attempt) {
        Rng rng(mix_seed(seed, 0x696e760000 + attempt));
        Matrix A = draw_rational_matrix(n, rng, false);
        if (A.rank() == n) return A;
    }
    throw internal_error("invertible-matrix sampling failed");
}

Matrix random_invertible_diagonal(int n, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x64696131));
    std::vector<Scalar> d;
    for (int i = 0; i < n; ++i) {
        long num = 0;
        while (num == 0) num = rng.in_range(-8, 8);
        d.push_back(Scalar::rational(num, rng.in_range(1, 8)));
    }
    return Matrix::diagonal(d, FieldSpec::rationals());
}

Matrix random_diagonal(int n, std::uint64_t seed) {
    Rng rng(mix_seed(seed, 0x64696130));
    std::vector<Scalar> d;
    for (int i = 0; i < n; ++i)
        d.push_back(Scalar::rational(rng.in_range(-8, 8), rng.in_range(1, 8)));
    return Matrix::diagonal(d, FieldSpec::rationals());
}

BipartitionFamily random_weakly_bipartitive_family(int n, std::uint64_t seed) {
    return hl_family(random_sign_matrix(n, seed, false, true));
}

SetFamily random_weakly_partitive_family(int n, std::uint64_t seed) {
    Matrix A = random_sign_matrix(n, seed, false, false);
    return L2Structure::from_matrix(A).clans();
}

} // namespace hlbip
