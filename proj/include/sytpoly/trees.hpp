#ifndef SYTPOLY_TREES_HPP
#define SYTPOLY_TREES_HPP

#include "sytpoly/numbers.hpp"
#include "sytpoly/polytope.hpp"
#include "sytpoly/shapes.hpp"
#include "sytpoly/tableaux.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sytpoly {

/// Plane binary tree on nodes 1..n carrying the binary search labeling:
/// every label in the left branch of v is smaller than v, every label in the
/// right branch larger. The labeling is forced by the shape, so left/right
/// child links per label describe the tree completely. n = 0 (empty tree) is
/// allowed; it only arises as the λ = ∅, n = 1 witness.
struct LabeledBinaryTree {
    int n = 0;
    int root = 0;                 // 0 = empty
    std::vector<int> left, right; // indexed by label, entry 0 = no child

    int left_child(int v) const { return left[static_cast<size_t>(v)]; }
    int right_child(int v) const { return right[static_cast<size_t>(v)]; }
};

/// All plane binary trees on n nodes with the binary search labeling,
/// in a fixed recursive order (roots ascending, left subtree varying
/// outermost). Count = Catalan(n).
std::vector<LabeledBinaryTree> enumerate_trees(int n);

/// Checks the parent/child wiring and the binary-search labeling.
bool is_valid_tree(const LabeledBinaryTree& t);

/// |L_v| and |R_v| (left/right branch sizes) for every label, 1-based.
struct BranchSizes {
    std::vector<int> left_size, right_size;
    int left(int v) const { return left_size[static_cast<size_t>(v)]; }
    int right(int v) const { return right_size[static_cast<size_t>(v)]; }
};
BranchSizes branch_sizes(const LabeledBinaryTree& t);

/// Depth of every node (root = 0).
std::vector<int> node_depths(const LabeledBinaryTree& t);

/// The contiguous label interval [i − |L_i|, i + |R_i|] of the subtree of i.
std::pair<int, int> descendants(const LabeledBinaryTree& t, int label);

/// Balanced-parentheses preorder encoding of the shape: every node emits
/// "(", its left subtree, ")", then its right subtree. Labels are derivable.
std::string encode_tree(const LabeledBinaryTree& t);

/// |L_n| ≥ n − k: node n's left branch reaches back to row k, i.e. every
/// descendant interval [a, n] on the rightmost path has a ≤ k. Requires
/// k ≥ 1; the k = 0 case is handled by enumerate_vertices.
bool is_bk_forest(const LabeledBinaryTree& t, int k);

/// The y-sum vertex of an arbitrary generalized permutohedron read off a
/// tree: coordinate i collects the weights of the terms whose index set has
/// i as its topmost tree node (i ∈ I ⊆ desc(i)). Every term's index set must
/// lie inside [1, t.n].
LatticePoint tree_vertex(const LabeledBinaryTree& t, const GenPermutohedron& p);

/// Vertex of P_λ read off a binary search tree on n nodes via the y-sum
/// formula. Defined for every tree (the result is always a vertex); only the
/// tableau construction needs the B_k condition.
LatticePoint vertex_from_tree(const LabeledBinaryTree& t, const Partition& lambda);

struct VertexPoint {
    LatticePoint coords;
    LabeledBinaryTree tree; // witness; for λ = ∅ a tree on n−1 nodes
};

/// The exact vertex set of P_λ, sorted lex by coordinates. Computed as the
/// deduplicated y-sum over all binary search trees (the associahedron fan
/// refines the fan of P_λ, so the sweep hits every vertex); for λ = ∅ the
/// trees live on labels 1..n−1 and coordinate n is identically zero. Each
/// vertex keeps the first witness tree in enumeration order, preferring one
/// that passes the B_k test.
std::vector<VertexPoint> enumerate_vertices(int n, const Partition& lambda);

/// Σ_{i=1}^{k} C_{i−1} C_{n−i}: the number of trees passing is_bk_forest.
BigInt vertex_count_closed_form(int n, int k);

/// The index-shifted variant Σ_{i=1}^{k} C_i C_{n−i}; disagrees with the
/// forest enumeration for most (n, k) and is only reported informationally.
BigInt catalan_convolution_variant(int n, int k);

/// Axis-aligned box of diagram cells, all bounds inclusive.
struct Rect {
    int row_lo, row_hi, col_lo, col_hi;
    bool contains(int r, int c) const {
        return row_lo <= r && r <= row_hi && col_lo <= c && c <= col_hi;
    }
};

/// Tiling of D_∅ into n rectangles; rectangle i spans rows [i−|L_i|, i] and
/// cols [i, i+|R_i|] and contains the diagonal box (i, i) and no other.
struct Subdivision {
    int n = 0;
    std::vector<Rect> rects; // rects[i-1] is rectangle i
};

Subdivision tree_to_subdivision(const LabeledBinaryTree& t);

/// Explicit shifted tableau whose diagonal vector is
/// diag_from_gaps(vertex_from_tree(t, λ)): diagonal boxes carry the d_i and
/// region i of the re-addressed subdivision is filled with d_i+1 … d_{i+1}−1
/// in row-major order. Requires a B_k-forest with k ≥ 1; the result is
/// validate_tableau-checked and a failure is reported as a defect.
ShiftedTableau construct_vertex_tableau(const LabeledBinaryTree& t,
                                        const Partition& lambda);

} // namespace sytpoly

#endif
