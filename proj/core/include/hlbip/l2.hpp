#ifndef HLBIP_L2_HPP
#define HLBIP_L2_HPP

#include <hlbip/families.hpp>
#include <hlbip/matrix.hpp>

namespace hlbip {

// Labelled 2-structure: a total label function on ordered distinct pairs of
// a ground set, with field-scalar labels. The ground keeps arbitrary labels
// (not necessarily 1..k) so induced substructures stay addressable.
class L2Structure {
public:
    // All-zero labels to start with.
    L2Structure(IndexSet ground, const FieldSpec& field);

    // Off-diagonal entries become labels; the diagonal is ignored.
    static L2Structure from_matrix(const Matrix& A);
    // Zero-diagonal matrix of the labels; ground must be exactly {1..k}.
    Matrix to_matrix() const;

    const IndexSet& ground() const { return ground_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& label(int x, int y) const; // x != y, both in ground
    void set_label(int x, int y, const Scalar& v);
    bool is_symmetric() const; // label(x,y) = label(y,x) everywhere

    L2Structure induce(const IndexSet& sub) const; // sub ⊆ ground

    // X indistinguishable from outside: for a,b in X and z outside,
    // label(a,z) = label(b,z) and label(z,a) = label(z,b).
    bool is_clan(const IndexSet& X) const;
    // All nonempty clans by subset scan with early exit. Always contains the
    // singletons and the ground set; always weakly partitive, and partitive
    // when the structure is symmetric.
    SetFamily clans() const;

    bool operator==(const L2Structure& o) const;

private:
    int slot(int x) const; // position of x in the sorted ground

    IndexSet ground_;
    FieldSpec field_;
    std::vector<Scalar> labels_; // k*k row-major over ground positions
};

} // namespace hlbip

#endif
