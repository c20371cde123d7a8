#ifndef SYTPOLY_POLYTOPE_HPP
#define SYTPOLY_POLYTOPE_HPP

#include "sytpoly/numbers.hpp"
#include "sytpoly/shapes.hpp"

#include <set>
#include <vector>

namespace sytpoly {

/// y · Δ_I: the coordinate simplex on a non-empty index set, scaled by a
/// non-negative integer weight.
struct SimplexTerm {
    std::vector<int> indices; // sorted, 1-based, non-empty
    int weight = 0;
};

/// Formal Minkowski sum of scaled coordinate simplices in R^n.
/// Zero-weight terms are dropped at construction.
class GenPermutohedron {
public:
    GenPermutohedron(int n, std::vector<SimplexTerm> terms);

    int n() const { return n_; }
    const std::vector<SimplexTerm>& terms() const { return terms_; }

private:
    int n_;
    std::vector<SimplexTerm> terms_;
};

using LatticePoint = std::vector<int>;

/// P_λ = Σ_{1≤i≤j≤n−1} Δ_[i,j] + Σ_{λ_i>0} λ_i Δ_[i,n].
GenPermutohedron p_lambda(int n, const Partition& lambda);

/// Σ_i λ_i Δ_[i,n] alone (the Schur support polytope).
GenPermutohedron lambda_simplex_sum(int n, const Partition& lambda);

/// Exact integer-point set of the Minkowski sum, as sorted (lex) points.
/// Each scaled term is processed as `weight` unit steps with deduplication.
std::set<LatticePoint> lattice_points(const GenPermutohedron& p);

/// Σ of term weights; the coordinate sum shared by every lattice point.
int coordinate_sum(const GenPermutohedron& p);

/// Greedy maximizer of w·x: picks the w-best index inside every term.
/// A tie for the maximum inside any term's index set is rejected as
/// non-generic (throws std::invalid_argument).
LatticePoint maximize(const GenPermutohedron& p, const std::vector<Rational>& w);

} // namespace sytpoly

#endif
