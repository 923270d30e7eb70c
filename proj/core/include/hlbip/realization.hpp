#ifndef HLBIP_REALIZATION_HPP
#define HLBIP_REALIZATION_HPP

#include <hlbip/families.hpp>
#include <hlbip/l2.hpp>
#include <hlbip/matrix.hpp>

#include <vector>

namespace hlbip {

enum class NodeKind { leaf, complete, linear, prime };

struct TreeNode {
    IndexSet member;
    NodeKind kind = NodeKind::leaf;
    int parent = -1;                 // -1 at the root
    std::vector<int> children;       // node ids, sorted by member
    std::vector<int> linear_order;   // ids in path order; linear nodes only
};

// Inclusion tree of the strong members of a weakly partitive family. Node
// members strictly nest along edges, children partition their parent, leaves
// are singletons, the root is the ground set. Parents always carry smaller
// ids than their children.
class PartitiveTree {
public:
    PartitiveTree(std::vector<TreeNode> nodes, int root, SetFamily family);

    const TreeNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int root() const { return root_; }
    const IndexSet& ground() const { return family_.ground(); }
    const SetFamily& family() const { return family_; }
    bool has_linear_node() const;

private:
    std::vector<TreeNode> nodes_;
    int root_;
    SetFamily family_;
};

// Members overlapping no other member. Requires a weakly partitive input.
SetFamily strong_members(const SetFamily& P);

// Builds the inclusion tree and classifies each internal node by which child
// unions belong to P: all of them (complete; also the k = 2 convention), none
// (prime), or exactly the intervals of a path order on the children (linear).
PartitiveTree build_tree(const SetFamily& P);

// Labels in {-1,0,1} making the clans of the result exactly the tree's
// family. Complete nodes get one constant, linear nodes an ordered pair of
// distinct labels, prime nodes a primitive template (3 distinct pair labels
// at arity 3, a path pattern at arity 4 and up). Chosen greedily under
// non-merging constraints against the parent node, then verified by a full
// clan scan, with a bounded exhaustive search as fallback. With symmetric
// set, the tree must be linear-free and the result is symmetric.
L2Structure assign_labels(const PartitiveTree& tree, bool symmetric);

// The converse construction: for a weakly bipartitive family F on [n], an
// irreducible matrix with entries in {-1,0,1} whose HL-bipartition family is
// exactly F, built by labeling the tree of the family's restriction away from
// element n and bordering the label matrix with a final row and column of
// ones. Symmetric whenever F is bipartitive.
Matrix realize(const BipartitionFamily& F);

} // namespace hlbip

#endif
