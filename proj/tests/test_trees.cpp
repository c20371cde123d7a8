#include "sytpoly/trees.hpp"
#include "sytpoly/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace sytpoly;

namespace {

LabeledBinaryTree make_tree(int n, int root,
                            std::vector<std::pair<int, std::pair<int, int>>> edges) {
    LabeledBinaryTree t;
    t.n = n;
    t.root = root;
    t.left.assign(static_cast<size_t>(n) + 1, 0);
    t.right.assign(static_cast<size_t>(n) + 1, 0);
    for (const auto& [v, lr] : edges) {
        t.left[static_cast<size_t>(v)] = lr.first;
        t.right[static_cast<size_t>(v)] = lr.second;
    }
    return t;
}

// the Example 3.5 tree: root 2, left 1, right 4, 4's left child 3
const LabeledBinaryTree kExampleTree =
    make_tree(4, 2, {{2, {1, 4}}, {4, {3, 0}}});

} // namespace

TEST_CASE("tree enumeration counts and validity") {
    CHECK(enumerate_trees(1).size() == 1);
    const auto two = enumerate_trees(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].root == 1);
    CHECK(two[0].right_child(1) == 2);
    CHECK(two[1].root == 2);
    CHECK(two[1].left_child(2) == 1);
    CHECK(enumerate_trees(3).size() == 5);
    for (int n = 1; n <= 8; ++n) {
        const auto trees = enumerate_trees(n);
        CHECK(BigInt(static_cast<long>(trees.size())) == catalan(n));
        std::set<std::string> codes;
        for (const auto& t : trees) {
            CHECK(is_valid_tree(t));
            codes.insert(encode_tree(t));
        }
        CHECK(codes.size() == trees.size());
    }
}

TEST_CASE("descendants") {
    CHECK(descendants(kExampleTree, 1) == std::pair<int, int>{1, 1}); // leaf
    CHECK(descendants(kExampleTree, 2) == std::pair<int, int>{1, 4}); // root
    CHECK(descendants(kExampleTree, 4) == std::pair<int, int>{3, 4});
    for (const auto& t : enumerate_trees(5)) {
        CHECK(descendants(t, t.root) == std::pair<int, int>{1, 5});
        const BranchSizes b = branch_sizes(t);
        for (int v = 1; v <= 5; ++v)
            if (b.left(v) == 0 && b.right(v) == 0)
                CHECK(descendants(t, v) == std::pair<int, int>{v, v});
    }
}

TEST_CASE("is_bk_forest") {
    int pass_k1 = 0;
    for (const auto& t : enumerate_trees(3)) {
        CHECK(is_bk_forest(t, 3)); // vacuous at k = n
        if (is_bk_forest(t, 1)) ++pass_k1;
    }
    CHECK(pass_k1 == 2);

    const auto two = enumerate_trees(2);
    CHECK_FALSE(is_bk_forest(two[0], 1)); // root 1, right 2
    CHECK(is_bk_forest(two[1], 1));       // root 2, left 1
    CHECK_THROWS_AS(is_bk_forest(two[0], 0), std::invalid_argument);
}

TEST_CASE("vertex_from_tree") {
    const Partition ex({4, 2, 1, 0}, 4);
    CHECK(vertex_from_tree(kExampleTree, ex) == LatticePoint{1, 10, 1, 1});
    CHECK(diag_from_gaps(vertex_from_tree(kExampleTree, ex)) ==
          DiagonalVector{1, 3, 14, 16});

    for (int m = 0; m <= 3; ++m) {
        const auto one = enumerate_trees(1);
        CHECK(vertex_from_tree(one[0], Partition({m}, 1)) == LatticePoint{m});
    }

    const auto two = enumerate_trees(2);
    const Partition hook({1, 0}, 2);
    CHECK(vertex_from_tree(two[1], hook) == LatticePoint{1, 1});
    CHECK(vertex_from_tree(two[0], hook) == LatticePoint{2, 0});
}

TEST_CASE("enumerate_vertices") {
    const auto hook = enumerate_vertices(2, Partition({1, 0}, 2));
    REQUIRE(hook.size() == 2);
    CHECK(hook[0].coords == LatticePoint{1, 1});
    CHECK(hook[1].coords == LatticePoint{2, 0});

    CHECK(enumerate_vertices(3, Partition({1, 1, 1}, 3)).size() == 5);
    CHECK(enumerate_vertices(1, Partition({}, 1)).size() == 1);
    CHECK(enumerate_vertices(1, Partition({5}, 1)).size() == 1);

    // full-length lambda: one vertex per tree, Catalan-many
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> parts(static_cast<size_t>(n), 1);
        CHECK(BigInt(static_cast<long>(
                  enumerate_vertices(n, Partition(parts, n)).size())) ==
              catalan(n));
    }
    // empty lambda: associahedron on the first n-1 coordinates
    for (int n = 2; n <= 5; ++n) {
        const auto vs = enumerate_vertices(n, Partition({}, n));
        CHECK(BigInt(static_cast<long>(vs.size())) == catalan(n - 1));
        for (const auto& v : vs) CHECK(v.coords.back() == 0);
    }
}

TEST_CASE("every vertex is a lattice point with a B_k witness preferred") {
    const Partition l({2, 0, 0}, 3);
    const auto pts = lattice_points(p_lambda(3, l));
    const auto vs = enumerate_vertices(3, l);
    CHECK(vs.size() == 4); // the two tree vertices plus the two boundary ones
    for (const auto& v : vs) {
        CHECK(pts.count(v.coords) == 1);
        CHECK(vertex_from_tree(v.tree, l) == v.coords);
    }
}

TEST_CASE("vertex set equals the ordering-chamber maximizer sweep") {
    // independent route: one strictly ordered functional per permutation of
    // the coordinates reaches every vertex of a Minkowski sum of simplices,
    // and each maximizer is a vertex
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& l : partition_grid(n, 3)) {
            const GenPermutohedron p = p_lambda(n, l);
            std::set<LatticePoint> swept;
            std::vector<int> order(static_cast<size_t>(n));
            std::iota(order.begin(), order.end(), 0);
            do {
                std::vector<Rational> w(static_cast<size_t>(n));
                for (int j = 0; j < n; ++j)
                    w[static_cast<size_t>(order[static_cast<size_t>(j)])] =
                        Rational(n - j);
                swept.insert(maximize(p, w));
            } while (std::next_permutation(order.begin(), order.end()));

            std::set<LatticePoint> enumerated;
            for (const auto& v : enumerate_vertices(n, l))
                enumerated.insert(v.coords);
            CHECK(enumerated == swept);
        }
    }
}

TEST_CASE("vertex_count_closed_form") {
    CHECK(vertex_count_closed_form(3, 1) == 2);
    CHECK(vertex_count_closed_form(3, 2) == 3);
    CHECK(vertex_count_closed_form(3, 3) == 5);
    CHECK(catalan_convolution_variant(3, 2) == 4); // shifted indices disagree
    for (int n = 1; n <= 6; ++n) {
        const auto trees = enumerate_trees(n);
        for (int k = 1; k <= n; ++k) {
            long enumerated = 0;
            for (const auto& t : trees)
                if (is_bk_forest(t, k)) ++enumerated;
            CHECK(vertex_count_closed_form(n, k) == BigInt(enumerated));
        }
        CHECK(vertex_count_closed_form(n, n) == catalan(n));
    }
}

TEST_CASE("tree_to_subdivision") {
    const auto sub1 = tree_to_subdivision(enumerate_trees(1)[0]);
    REQUIRE(sub1.rects.size() == 1);
    CHECK(sub1.rects[0].row_lo == 1);
    CHECK(sub1.rects[0].col_hi == 1);

    const Subdivision ex = tree_to_subdivision(kExampleTree);
    CHECK(ex.rects[0] .row_lo == 1);
    CHECK(ex.rects[0].col_hi == 1);
    CHECK(ex.rects[1].row_lo == 1);
    CHECK(ex.rects[1].row_hi == 2);
    CHECK(ex.rects[1].col_lo == 2);
    CHECK(ex.rects[1].col_hi == 4);
    CHECK(ex.rects[2].row_lo == 3);
    CHECK(ex.rects[2].col_hi == 3);
    CHECK(ex.rects[3].row_lo == 3);
    CHECK(ex.rects[3].row_hi == 4);
    CHECK(ex.rects[3].col_lo == 4);

    // right comb: rectangle i is row i spanning columns i..n
    LabeledBinaryTree comb;
    comb.n = 4;
    comb.root = 1;
    comb.left.assign(5, 0);
    comb.right = {0, 2, 3, 4, 0};
    const Subdivision comb_sub = tree_to_subdivision(comb);
    for (int i = 1; i <= 4; ++i) {
        const Rect& r = comb_sub.rects[static_cast<size_t>(i - 1)];
        CHECK(r.row_lo == i);
        CHECK(r.row_hi == i);
        CHECK(r.col_lo == i);
        CHECK(r.col_hi == 4);
    }
}

TEST_CASE("subdivisions tile the empty diagram") {
    for (int n = 1; n <= 6; ++n) {
        const ShiftedDiagram empty = build_diagram(n, Partition({}, n));
        for (const auto& t : enumerate_trees(n)) {
            const Subdivision sub = tree_to_subdivision(t);
            for (const Box& b : empty.boxes()) {
                int covered = 0;
                for (const Rect& r : sub.rects)
                    if (r.contains(b.row, b.col)) ++covered;
                CHECK(covered == 1);
            }
        }
    }
}

TEST_CASE("construct_vertex_tableau") {
    // single row: 1..m+1
    for (int m = 1; m <= 3; ++m) {
        const auto t = construct_vertex_tableau(enumerate_trees(1)[0],
                                                Partition({m}, 1));
        std::vector<int> expect(static_cast<size_t>(m + 1));
        for (int i = 0; i <= m; ++i) expect[static_cast<size_t>(i)] = i + 1;
        CHECK(t.entries() == expect);
    }

    // the worked 17-box example, frozen by hand evaluation
    const ShiftedTableau ex =
        construct_vertex_tableau(kExampleTree, Partition({4, 2, 1, 0}, 4));
    CHECK(validate_tableau(ex));
    CHECK(diagonal_vector(ex) == DiagonalVector{1, 3, 14, 16});
    const std::vector<int> frozen = {1, 2, 4, 5, 6, 7, 8, 9,
                                     3, 10, 11, 12, 13,
                                     14, 15, 17,
                                     16};
    CHECK(ex.entries() == frozen);

    const auto two = enumerate_trees(2);
    const ShiftedTableau hook = construct_vertex_tableau(two[1], Partition({1, 0}, 2));
    CHECK(validate_tableau(hook));
    CHECK(diagonal_vector(hook) == DiagonalVector{1, 3});
    CHECK_THROWS_AS(construct_vertex_tableau(two[0], Partition({1, 0}, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(construct_vertex_tableau(two[1], Partition({}, 2)),
                    std::invalid_argument);
}

TEST_CASE("constructed tableaux across the small grid") {
    for (int n = 1; n <= 3; ++n) {
        for (const Partition& l : partition_grid(n, 2)) {
            const int k = l.positive_part_count();
            if (k < 1) continue;
            for (const auto& t : enumerate_trees(n)) {
                if (!is_bk_forest(t, k)) continue;
                const ShiftedTableau tab = construct_vertex_tableau(t, l);
                CHECK(validate_tableau(tab));
                CHECK(diagonal_vector(tab) ==
                      diag_from_gaps(vertex_from_tree(t, l)));
            }
        }
    }
}
