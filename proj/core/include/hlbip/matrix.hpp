#ifndef HLBIP_MATRIX_HPP
#define HLBIP_MATRIX_HPP

#include <hlbip/index_set.hpp>
#include <hlbip/scalar.hpp>

#include <optional>
#include <vector>

namespace hlbip {

// Dense matrix over one FieldSpec. All arithmetic is exact; rank and inverse
// are Gaussian elimination in the field, never floating point.
class Matrix {
public:
    Matrix(int rows, int cols, const FieldSpec& field); // zero-filled

    static Matrix identity(int n, const FieldSpec& field);
    static Matrix diagonal(const std::vector<Scalar>& d, const FieldSpec& field);
    // Entries as small ints, rationals field. Row-major initializer helper.
    static Matrix from_ints(const std::vector<std::vector<long>>& rows,
                            const FieldSpec& field = FieldSpec::rationals());

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const FieldSpec& field() const { return field_; }

    // 1-based access, matching the index-set convention.
    const Scalar& at(int i, int j) const;
    void set(int i, int j, const Scalar& v);

    Matrix submatrix(const IndexSet& row_idx, const IndexSet& col_idx) const;
    Matrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // Exact rank by full elimination. Pivot choice: first nonzero entry in
    // row-major scan of the remaining block, so runs are reproducible.
    int rank() const;
    // Gauss-Jordan; nullopt when singular. Square only.
    std::optional<Matrix> inverse() const;
    // rank <= 1 without elimination: anchor at the first nonzero entry and
    // check all 2x2 minors through it vanish. Zero matrices qualify.
    bool is_rank_at_most_one() const;
    // Strong connectivity of the nonzero-pattern digraph (i -> j when
    // a_ij != 0). Square only; the 1x1 matrix counts as irreducible.
    bool is_irreducible() const;

    std::string str() const; // human-readable grid for diagnostics

private:
    std::size_t pos(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_)
             + static_cast<std::size_t>(j - 1);
    }

    int rows_ = 0;
    int cols_ = 0;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

} // namespace hlbip

#endif
