#include "sytpoly/shapes.hpp"
#include "sytpoly/verify.hpp"

#include <doctest.h>

#include <set>

using namespace sytpoly;

TEST_CASE("build_diagram basic shapes") {
    const ShiftedDiagram one = build_diagram(1, Partition({}, 1));
    CHECK(one.size() == 1);
    CHECK(one.boxes().front() == Box{1, 1});

    const ShiftedDiagram ex = build_diagram(4, Partition({4, 2, 1, 0}, 4));
    CHECK(ex.size() == 17);
    CHECK(ex.row_end(1) == 8);
    CHECK(ex.row_end(2) == 6);
    CHECK(ex.row_end(3) == 5);
    CHECK(ex.row_end(4) == 4);

    const ShiftedDiagram small = build_diagram(2, Partition({1, 0}, 2));
    const std::vector<Box> expect = {{1, 1}, {1, 2}, {1, 3}, {2, 2}};
    CHECK(small.boxes() == expect);
}

TEST_CASE("diagram rejects bad input") {
    CHECK_THROWS_AS(build_diagram(0, Partition({}, 1)), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition({1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("diagram_size examples") {
    CHECK(diagram_size(build_diagram(1, Partition({}, 1))) == 1);
    CHECK(diagram_size(build_diagram(4, Partition({4, 2, 1, 0}, 4))) == 17);
    CHECK(diagram_size(build_diagram(3, Partition({}, 3))) == 6);
}

TEST_CASE("positive_part_count") {
    CHECK(positive_part_count(Partition({4, 2, 1, 0}, 4)) == 3);
    CHECK(positive_part_count(Partition({0, 0}, 2)) == 0);
    CHECK(positive_part_count(Partition({5, 5, 5}, 3)) == 3);
}

TEST_CASE("size formula and diagonal membership over the grid") {
    for (int n = 1; n <= 6; ++n) {
        const ShiftedDiagram empty = build_diagram(n, Partition({}, n));
        for (const Partition& l : partition_grid(n, 4)) {
            const ShiftedDiagram d = build_diagram(n, l);
            CHECK(d.size() == n * (n + 1) / 2 + l.sum());
            for (int i = 1; i <= n; ++i) CHECK(d.contains(i, i));
            for (const Box& b : empty.boxes()) CHECK(d.contains(b.row, b.col));
        }
    }
}

TEST_CASE("partition parsing") {
    CHECK(Partition::parse("4,2,1,0", 4).parts() == std::vector<int>{4, 2, 1, 0});
    CHECK(Partition::parse("3", 3).parts() == std::vector<int>{3, 0, 0});
    CHECK(Partition::parse("", 2).parts() == std::vector<int>{0, 0});
    CHECK_THROWS_AS(Partition::parse("1,2", 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("a", 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,,1", 3), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("-2", 2), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,1,1", 2), std::invalid_argument);
}
