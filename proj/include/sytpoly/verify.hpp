#ifndef SYTPOLY_VERIFY_HPP
#define SYTPOLY_VERIFY_HPP

#include "sytpoly/shapes.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace sytpoly {

/// One mechanically checked claim. `witness` carries counterexample data
/// whenever status is fail (and optional informational data on pass).
struct VerificationReport {
    std::string claim;
    nlohmann::ordered_json params;
    bool pass = false;
    nlohmann::ordered_json witness; // null unless populated
    long long ms = 0;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// All partitions of length n with parts ≤ max_part, weakly decreasing,
/// in lex order (λ = ∅ first).
std::vector<Partition> partition_grid(int n, int max_part);

// the main identity, exact polynomial equality
VerificationReport verify_identity_case(int n, const Partition& lambda);
VerificationReport verify_identity_grid(int max_n, int max_part);

// gap-vector set = lattice-point set
VerificationReport verify_bijection_case(int n, const Partition& lambda);
VerificationReport verify_bijection_grid(int max_n, int max_part);

// the two worked examples
VerificationReport verify_example_diagonal();       // (1,4,7,17) reachability
VerificationReport verify_example_vertex();         // the (1,10,1,1) tree vertex

// B_k-forest counts against the closed form, plus the informational report
// on the index-shifted convolution variant
VerificationReport verify_vertex_counts(int max_n);
VerificationReport verify_count_variant(int max_n);

// every vertex is a lattice point and a certified unique maximizer;
// random generic functionals never escape the vertex set
VerificationReport verify_vertex_extremity(int max_n, int max_part,
                                           std::uint64_t seed, int trials);

// Newton-support cross-checks
VerificationReport verify_product_supports(int families, std::uint64_t seed);
VerificationReport verify_schur_supports(int max_n, int max_part);

// structural suites
VerificationReport verify_catalan_counts(int max_n);
VerificationReport verify_subdivision_tiling(int max_n);
VerificationReport verify_roundtrip_and_validity(int max_n, int max_part);
VerificationReport verify_constructed_tableaux(int max_n, int max_part);

/// Every cross-module property at the given desk scale.
std::vector<VerificationReport> verify_all(int max_n, int max_part,
                                           std::uint64_t seed);

} // namespace sytpoly

#endif
