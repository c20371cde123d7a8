#include "sytpoly/verify.hpp"

#include <doctest.h>

using namespace sytpoly;

TEST_CASE("partition_grid") {
    const auto g = partition_grid(2, 3);
    CHECK(g.size() == 10);
    CHECK(g.front().parts() == std::vector<int>{0, 0});
    CHECK(g.back().parts() == std::vector<int>{3, 3});
    for (const auto& l : g) CHECK(l.n() == 2);
}

TEST_CASE("single-case verifications pass") {
    CHECK(verify_identity_case(2, Partition({1, 0}, 2)).pass);
    CHECK(verify_identity_case(3, Partition({2, 2, 1}, 3)).pass);
    CHECK(verify_bijection_case(2, Partition({1, 0}, 2)).pass);
    CHECK(verify_bijection_case(3, Partition({}, 3)).pass);
}

TEST_CASE("worked examples pass") {
    CHECK(verify_example_diagonal().pass);
    CHECK(verify_example_vertex().pass);
}

TEST_CASE("vertex counts and the variant-formula discrepancy") {
    CHECK(verify_vertex_counts(6).pass);
    const VerificationReport variant = verify_count_variant(6);
    CHECK(variant.pass); // informational
    CHECK(!variant.witness["mismatches"].empty());
}

TEST_CASE("extremity, supports, structural checks at small scale") {
    CHECK(verify_vertex_extremity(3, 2, 1729, 50).pass);
    CHECK(verify_product_supports(10, 1729).pass);
    CHECK(verify_schur_supports(3, 2).pass);
    CHECK(verify_catalan_counts(7).pass);
    CHECK(verify_subdivision_tiling(5).pass);
    CHECK(verify_roundtrip_and_validity(3, 2).pass);
    CHECK(verify_constructed_tableaux(3, 2).pass);
}

TEST_CASE("report serialization shape") {
    const VerificationReport r = verify_identity_case(2, Partition({1, 0}, 2));
    const auto j = r.to_json();
    CHECK(j["claim"] == "identity");
    CHECK(j["status"] == "pass");
    CHECK(j["witness"].is_null());
    CHECK(j.contains("ms"));
    CHECK(j["params"]["n"] == 2);
}
