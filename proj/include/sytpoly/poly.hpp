#ifndef SYTPOLY_POLY_HPP
#define SYTPOLY_POLY_HPP

#include "sytpoly/numbers.hpp"
#include "sytpoly/shapes.hpp"
#include "sytpoly/tableaux.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace sytpoly {

/// Exponent vector of a monomial t_1^{e_1} ⋯ t_n^{e_n}; fixed length n.
using Exponent = std::vector<int>;

/// Graded lexicographic: total degree first, then lex. Gives terms a
/// deterministic serialization order.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over exact rationals in t_1..t_n.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class RationalPolynomial {
public:
    RationalPolynomial() : n_(0) {}
    explicit RationalPolynomial(int n) : n_(n) {}

    static RationalPolynomial constant(int n, const Rational& c);
    static RationalPolynomial monomial(Exponent e, const Rational& c);

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Rational, GrlexLess>& terms() const { return terms_; }

    Rational coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);

    RationalPolynomial& operator+=(const RationalPolynomial& o);
    RationalPolynomial& operator-=(const RationalPolynomial& o);
    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const Rational& c) const;
    bool operator==(const RationalPolynomial& o) const;

    RationalPolynomial pow(int k) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    std::set<Exponent> support() const;
    std::string to_string() const;

private:
    int n_;
    std::map<Exponent, Rational, GrlexLess> terms_;
};

/// Σ_{i ∈ indices} t_i. Indices are 1-based and must be non-empty.
RationalPolynomial linear_form(int n, const std::vector<int>& indices);

/// ∏_{1 ≤ i < j ≤ n} (t_i + … + t_{j−1}); the empty product 1 for n = 1.
RationalPolynomial staircase_product(int n);

/// Semistandard Young tableau of an (unshifted) shape: rows weakly increase,
/// columns strictly increase, entries in 1..max_entry.
struct Ssyt {
    std::vector<std::vector<int>> rows;
    /// w_i = number of entries equal to i, i = 1..n.
    std::vector<int> weight(int n) const;
};

/// All SSYT of the shape with entries ≤ max_entry, deterministic order.
std::vector<Ssyt> enumerate_ssyt(const Partition& shape, int max_entry);

/// s_λ evaluated at the prefix sums (t_1+…+t_n, t_2+…+t_n, …, t_n),
/// computed as Σ over SSYT of ∏_i (t_i+…+t_n)^{w_i}.
RationalPolynomial schur_substituted(const Partition& lambda, int n);

/// Right side of the main identity:
/// (1/∏_i (λ_i+n−i)!) · staircase_product(n) · schur_substituted(λ, n).
RationalPolynomial rhs_polynomial(const Partition& lambda, int n);

/// Left side of the main identity: Σ_a N_λ(a) · ∏ t_i^{a_i}/a_i!.
RationalPolynomial lhs_polynomial(const std::map<GapVector, BigInt>& table, int n);

std::set<Exponent> support(const RationalPolynomial& p);

/// Terms in graded-lex order as [{"exp": [a_1..a_n], "num": "...", "den": "..."}]
/// with the integers rendered as decimal strings.
nlohmann::ordered_json poly_to_json(const RationalPolynomial& p);

} // namespace sytpoly

#endif
