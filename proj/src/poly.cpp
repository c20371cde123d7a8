#include "sytpoly/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sytpoly {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

RationalPolynomial RationalPolynomial::constant(int n, const Rational& c) {
    RationalPolynomial p(n);
    p.add_term(Exponent(static_cast<size_t>(n), 0), c);
    return p;
}

RationalPolynomial RationalPolynomial::monomial(Exponent e, const Rational& c) {
    RationalPolynomial p(static_cast<int>(e.size()));
    p.add_term(std::move(e), c);
    return p;
}

Rational RationalPolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void RationalPolynomial::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != n_)
        throw std::invalid_argument("poly: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("poly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
    if (n_ != o.n_) throw std::invalid_argument("poly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    RationalPolynomial r = *this;
    r += o;
    return r;
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
    RationalPolynomial r = *this;
    r -= o;
    return r;
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("poly: variable count mismatch");
    RationalPolynomial r(n_);
    Exponent e(static_cast<size_t>(n_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

RationalPolynomial RationalPolynomial::operator*(const Rational& c) const {
    RationalPolynomial r(n_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.add_term(e, coef * c);
    return r;
}

bool RationalPolynomial::operator==(const RationalPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

RationalPolynomial RationalPolynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("poly: negative power");
    RationalPolynomial r = constant(n_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Rational RationalPolynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != n_)
        throw std::invalid_argument("poly: evaluation point length mismatch");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (size_t i = 0; i < point.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        total += term;
    }
    return total;
}

std::set<Exponent> RationalPolynomial::support() const {
    std::set<Exponent> s;
    for (const auto& [e, c] : terms_) s.insert(e);
    return s;
}

std::string RationalPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*t" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

RationalPolynomial linear_form(int n, const std::vector<int>& indices) {
    if (indices.empty()) throw std::invalid_argument("linear_form: empty index set");
    RationalPolynomial p(n);
    for (int i : indices) {
        if (i < 1 || i > n) throw std::invalid_argument("linear_form: index out of range");
        Exponent e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(i - 1)] = 1;
        p.add_term(e, Rational(1));
    }
    return p;
}

RationalPolynomial staircase_product(int n) {
    RationalPolynomial p = RationalPolynomial::constant(n, 1);
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            std::vector<int> idx;
            for (int v = i; v <= j - 1; ++v) idx.push_back(v);
            p = p * linear_form(n, idx);
        }
    }
    return p;
}

std::vector<int> Ssyt::weight(int n) const {
    std::vector<int> w(static_cast<size_t>(n), 0);
    for (const auto& row : rows)
        for (int v : row) ++w[static_cast<size_t>(v - 1)];
    return w;
}

namespace {

void fill_ssyt(const std::vector<int>& shape, int max_entry, size_t r, size_t c,
               Ssyt& cur, std::vector<Ssyt>& out) {
    if (r == shape.size()) {
        out.push_back(cur);
        return;
    }
    size_t nr = r, nc = c + 1;
    if (nc >= static_cast<size_t>(shape[r])) {
        nr = r + 1;
        nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, cur.rows[r][c - 1]);           // weak rows
    if (r > 0 && static_cast<size_t>(shape[r - 1]) > c)
        lo = std::max(lo, cur.rows[r - 1][c] + 1);              // strict columns
    for (int v = lo; v <= max_entry; ++v) {
        cur.rows[r][c] = v;
        fill_ssyt(shape, max_entry, nr, nc, cur, out);
    }
    cur.rows[r][c] = 0;
}

} // namespace

std::vector<Ssyt> enumerate_ssyt(const Partition& shape, int max_entry) {
    std::vector<int> rows;
    for (int p : shape.parts())
        if (p > 0) rows.push_back(p);
    std::vector<Ssyt> out;
    Ssyt cur;
    for (int len : rows) cur.rows.emplace_back(static_cast<size_t>(len), 0);
    if (rows.empty()) {
        out.push_back(cur); // the empty tableau; s_∅ = 1
        return out;
    }
    fill_ssyt(rows, max_entry, 0, 0, cur, out);
    return out;
}

RationalPolynomial schur_substituted(const Partition& lambda, int n) {
    if (lambda.positive_part_count() > n)
        throw std::invalid_argument("schur: shape has more than n parts");
    // group SSYT by weight; each weight w contributes ∏_i (t_i+…+t_n)^{w_i}
    std::map<std::vector<int>, BigInt> kostka;
    for (const Ssyt& t : enumerate_ssyt(lambda, n)) kostka[t.weight(n)] += 1;

    std::vector<RationalPolynomial> suffix; // suffix[i] = t_{i+1} + … + t_n
    for (int i = 1; i <= n; ++i) {
        std::vector<int> idx;
        for (int v = i; v <= n; ++v) idx.push_back(v);
        suffix.push_back(linear_form(n, idx));
    }

    RationalPolynomial total(n);
    for (const auto& [w, count] : kostka) {
        RationalPolynomial term = RationalPolynomial::constant(n, 1);
        for (int i = 0; i < n; ++i)
            term = term * suffix[static_cast<size_t>(i)].pow(w[static_cast<size_t>(i)]);
        total += term * Rational(count);
    }
    return total;
}

RationalPolynomial rhs_polynomial(const Partition& lambda, int n) {
    BigInt denom(1);
    for (int i = 1; i <= n; ++i) denom *= factorial(lambda.part(i) + n - i);
    Rational pre = Rational(1) / Rational(denom);
    return (staircase_product(n) * schur_substituted(lambda, n)) * pre;
}

RationalPolynomial lhs_polynomial(const std::map<GapVector, BigInt>& table, int n) {
    RationalPolynomial total(n);
    for (const auto& [a, count] : table) {
        if (static_cast<int>(a.size()) != n)
            throw std::invalid_argument("lhs: gap vector length mismatch");
        BigInt denom(1);
        for (int ai : a) denom *= factorial(ai);
        total.add_term(a, Rational(count) / Rational(denom));
    }
    return total;
}

std::set<Exponent> support(const RationalPolynomial& p) { return p.support(); }

nlohmann::ordered_json poly_to_json(const RationalPolynomial& p) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back({{"exp", e},
                       {"num", c.get_num().get_str()},
                       {"den", c.get_den().get_str()}});
    return out;
}

} // namespace sytpoly
