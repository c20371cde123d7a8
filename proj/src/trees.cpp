#include "sytpoly/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace sytpoly {

namespace {

struct TreeGen {
    int n;
    std::vector<int> left, right;
    std::vector<LabeledBinaryTree>* out;

    void gen(int lo, int hi, const std::function<void(int)>& emit) {
        if (lo > hi) {
            emit(0);
            return;
        }
        for (int r = lo; r <= hi; ++r) {
            gen(lo, r - 1, [&](int lroot) {
                left[static_cast<size_t>(r)] = lroot;
                gen(r + 1, hi, [&](int rroot) {
                    right[static_cast<size_t>(r)] = rroot;
                    emit(r);
                });
            });
        }
    }
};

} // namespace

std::vector<LabeledBinaryTree> enumerate_trees(int n) {
    if (n < 0) throw std::invalid_argument("trees: negative n");
    std::vector<LabeledBinaryTree> out;
    if (n == 0) {
        out.push_back(LabeledBinaryTree{0, 0, {0}, {0}});
        return out;
    }
    TreeGen g;
    g.n = n;
    g.left.assign(static_cast<size_t>(n) + 1, 0);
    g.right.assign(static_cast<size_t>(n) + 1, 0);
    g.out = &out;
    g.gen(1, n, [&](int root) {
        out.push_back(LabeledBinaryTree{n, root, g.left, g.right});
    });
    return out;
}

namespace {

/// Verifies that the subtree rooted at v covers exactly the labels [lo, hi];
/// this is the binary search property.
bool check_span(const LabeledBinaryTree& t, int v, int lo, int hi) {
    if (v == 0) return lo > hi;
    if (v < lo || v > hi) return false;
    return check_span(t, t.left_child(v), lo, v - 1) &&
           check_span(t, t.right_child(v), v + 1, hi);
}

} // namespace

bool is_valid_tree(const LabeledBinaryTree& t) {
    if (t.n < 0) return false;
    if (static_cast<int>(t.left.size()) != t.n + 1 ||
        static_cast<int>(t.right.size()) != t.n + 1)
        return false;
    if (t.n == 0) return t.root == 0;
    return t.root >= 1 && t.root <= t.n && check_span(t, t.root, 1, t.n);
}

BranchSizes branch_sizes(const LabeledBinaryTree& t) {
    BranchSizes b;
    b.left_size.assign(static_cast<size_t>(t.n) + 1, 0);
    b.right_size.assign(static_cast<size_t>(t.n) + 1, 0);
    std::function<int(int)> size = [&](int v) -> int {
        if (v == 0) return 0;
        const int l = size(t.left_child(v));
        const int r = size(t.right_child(v));
        b.left_size[static_cast<size_t>(v)] = l;
        b.right_size[static_cast<size_t>(v)] = r;
        return 1 + l + r;
    };
    size(t.root);
    return b;
}

std::vector<int> node_depths(const LabeledBinaryTree& t) {
    std::vector<int> depth(static_cast<size_t>(t.n) + 1, 0);
    std::function<void(int, int)> walk = [&](int v, int d) {
        if (v == 0) return;
        depth[static_cast<size_t>(v)] = d;
        walk(t.left_child(v), d + 1);
        walk(t.right_child(v), d + 1);
    };
    walk(t.root, 0);
    return depth;
}

std::pair<int, int> descendants(const LabeledBinaryTree& t, int label) {
    if (label < 1 || label > t.n)
        throw std::invalid_argument("descendants: label out of range");
    const BranchSizes b = branch_sizes(t);
    return {label - b.left(label), label + b.right(label)};
}

std::string encode_tree(const LabeledBinaryTree& t) {
    std::string s;
    std::function<void(int)> walk = [&](int v) {
        if (v == 0) return;
        s += '(';
        walk(t.left_child(v));
        s += ')';
        walk(t.right_child(v));
    };
    walk(t.root);
    return s;
}

bool is_bk_forest(const LabeledBinaryTree& t, int k) {
    if (k < 1) throw std::invalid_argument("is_bk_forest: k must be >= 1");
    if (t.n < 1) throw std::invalid_argument("is_bk_forest: empty tree");
    const BranchSizes b = branch_sizes(t);
    return b.left(t.n) >= t.n - k;
}

LatticePoint tree_vertex(const LabeledBinaryTree& t, const GenPermutohedron& p) {
    const BranchSizes b = branch_sizes(t);
    LatticePoint out(static_cast<size_t>(p.n()), 0);
    for (const SimplexTerm& term : p.terms()) {
        int top = 0;
        for (int i : term.indices) {
            if (i > t.n) throw std::invalid_argument("tree_vertex: index beyond tree");
            if (i - b.left(i) <= term.indices.front() &&
                term.indices.back() <= i + b.right(i)) {
                top = i;
                break;
            }
        }
        if (top == 0) throw std::logic_error("tree_vertex: no topmost node for term");
        out[static_cast<size_t>(top - 1)] += term.weight;
    }
    return out;
}

LatticePoint vertex_from_tree(const LabeledBinaryTree& t, const Partition& lambda) {
    const int n = t.n;
    if (lambda.n() != n)
        throw std::invalid_argument("vertex_from_tree: partition length != tree size");
    if (!is_valid_tree(t))
        throw std::invalid_argument("vertex_from_tree: malformed tree");
    // the y-sum of any binary search tree is a vertex of P_λ, B_k-forest or
    // not; the B_k condition is only required by the tableau construction
    return tree_vertex(t, p_lambda(n, lambda));
}

std::vector<VertexPoint> enumerate_vertices(int n, const Partition& lambda) {
    if (lambda.n() != n)
        throw std::invalid_argument("enumerate_vertices: partition length != n");
    const int k = lambda.positive_part_count();
    const int m = (k == 0) ? n - 1 : n;
    const GenPermutohedron p = p_lambda(n, lambda);

    // first witness in tree-enumeration order wins, except that a witness
    // passing the B_k test replaces one that does not
    std::map<LatticePoint, std::pair<LabeledBinaryTree, bool>> found;
    for (const LabeledBinaryTree& t : enumerate_trees(m)) {
        const LatticePoint v = tree_vertex(t, p);
        const bool qualifies = (k >= 1) && is_bk_forest(t, k);
        auto it = found.find(v);
        if (it == found.end())
            found.emplace(v, std::make_pair(t, qualifies));
        else if (qualifies && !it->second.second)
            it->second = std::make_pair(t, true);
    }

    std::vector<VertexPoint> out;
    out.reserve(found.size());
    for (const auto& [coords, wit] : found)
        out.push_back(VertexPoint{coords, wit.first});
    return out;
}

BigInt vertex_count_closed_form(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("vertex_count_closed_form: need 1 <= k <= n");
    BigInt total(0);
    for (int i = 1; i <= k; ++i) total += catalan(i - 1) * catalan(n - i);
    return total;
}

BigInt catalan_convolution_variant(int n, int k) {
    if (k < 1 || k > n)
        throw std::invalid_argument("catalan_convolution_variant: need 1 <= k <= n");
    BigInt total(0);
    for (int i = 1; i <= k; ++i) total += catalan(i) * catalan(n - i);
    return total;
}

Subdivision tree_to_subdivision(const LabeledBinaryTree& t) {
    if (t.n < 1) throw std::invalid_argument("subdivision: empty tree");
    const BranchSizes b = branch_sizes(t);
    Subdivision s;
    s.n = t.n;
    for (int i = 1; i <= t.n; ++i)
        s.rects.push_back(Rect{i - b.left(i), i, i, i + b.right(i)});
    return s;
}

ShiftedTableau construct_vertex_tableau(const LabeledBinaryTree& t,
                                        const Partition& lambda) {
    const int n = t.n;
    const int k = lambda.positive_part_count();
    if (k < 1)
        throw std::invalid_argument("construct_vertex_tableau: needs k >= 1");
    if (!is_bk_forest(t, k))
        throw std::invalid_argument("construct_vertex_tableau: not a B_k-forest");

    const LatticePoint gaps = vertex_from_tree(t, lambda);
    const DiagonalVector diag = diag_from_gaps(gaps);
    const Subdivision sub = tree_to_subdivision(t);

    auto shared = std::make_shared<const ShiftedDiagram>(build_diagram(n, lambda));
    const ShiftedDiagram& dia = *shared;
    std::vector<int> entries(static_cast<size_t>(dia.size()), 0);
    for (int i = 1; i <= n; ++i)
        entries[static_cast<size_t>(dia.box_index(i, i))] =
            diag[static_cast<size_t>(i - 1)];

    for (int i = 1; i <= n; ++i) {
        const Rect& rc = sub.rects[static_cast<size_t>(i - 1)];
        std::vector<Box> region;
        for (int r = rc.row_lo; r <= rc.row_hi; ++r) {
            // rectangle boxes, re-addressed one column right; the boxes that
            // leave D_λ (column n of rows beyond k) are exactly the trim
            for (int c = rc.col_lo; c <= rc.col_hi; ++c)
                if (dia.contains(r, c + 1)) region.push_back(Box{r, c + 1});
            // λ-extension boxes of the rows the rectangle borders on column n
            if (rc.col_hi == n)
                for (int c = n + 2; c <= dia.row_end(r); ++c)
                    region.push_back(Box{r, c});
        }
        std::sort(region.begin(), region.end());
        if (static_cast<int>(region.size()) != gaps[static_cast<size_t>(i - 1)])
            throw std::logic_error("construct_vertex_tableau: region size != gap");
        int value = diag[static_cast<size_t>(i - 1)];
        for (const Box& bx : region)
            entries[static_cast<size_t>(dia.box_index(bx.row, bx.col))] = ++value;
    }

    ShiftedTableau result(shared, std::move(entries));
    if (!validate_tableau(result))
        throw std::logic_error("construct_vertex_tableau: invalid filling");
    return result;
}

} // namespace sytpoly
