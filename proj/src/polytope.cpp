#include "sytpoly/polytope.hpp"

#include <stdexcept>

namespace sytpoly {

GenPermutohedron::GenPermutohedron(int n, std::vector<SimplexTerm> terms) : n_(n) {
    if (n <= 0) throw std::invalid_argument("polytope: n must be positive");
    for (SimplexTerm& t : terms) {
        if (t.weight < 0) throw std::invalid_argument("polytope: negative weight");
        if (t.weight == 0) continue;
        if (t.indices.empty())
            throw std::invalid_argument("polytope: empty index set");
        for (size_t i = 0; i < t.indices.size(); ++i) {
            if (t.indices[i] < 1 || t.indices[i] > n)
                throw std::invalid_argument("polytope: index out of range");
            if (i > 0 && t.indices[i] <= t.indices[i - 1])
                throw std::invalid_argument("polytope: indices must be sorted");
        }
        terms_.push_back(std::move(t));
    }
}

namespace {

std::vector<int> interval(int a, int b) {
    std::vector<int> v;
    for (int i = a; i <= b; ++i) v.push_back(i);
    return v;
}

} // namespace

GenPermutohedron p_lambda(int n, const Partition& lambda) {
    if (lambda.n() != n) throw std::invalid_argument("p_lambda: partition length != n");
    std::vector<SimplexTerm> terms;
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
            terms.push_back(SimplexTerm{interval(i, j), 1});
    for (int i = 1; i <= n; ++i)
        if (lambda.part(i) > 0)
            terms.push_back(SimplexTerm{interval(i, n), lambda.part(i)});
    return GenPermutohedron(n, std::move(terms));
}

GenPermutohedron lambda_simplex_sum(int n, const Partition& lambda) {
    if (lambda.n() != n)
        throw std::invalid_argument("lambda_simplex_sum: partition length != n");
    std::vector<SimplexTerm> terms;
    for (int i = 1; i <= n; ++i)
        if (lambda.part(i) > 0)
            terms.push_back(SimplexTerm{interval(i, n), lambda.part(i)});
    return GenPermutohedron(n, std::move(terms));
}

std::set<LatticePoint> lattice_points(const GenPermutohedron& p) {
    std::set<LatticePoint> points;
    points.insert(LatticePoint(static_cast<size_t>(p.n()), 0));
    for (const SimplexTerm& term : p.terms()) {
        for (int step = 0; step < term.weight; ++step) {
            std::set<LatticePoint> next;
            for (const LatticePoint& pt : points) {
                LatticePoint q = pt;
                for (int i : term.indices) {
                    ++q[static_cast<size_t>(i - 1)];
                    next.insert(q);
                    --q[static_cast<size_t>(i - 1)];
                }
            }
            points.swap(next);
        }
    }
    return points;
}

int coordinate_sum(const GenPermutohedron& p) {
    int s = 0;
    for (const SimplexTerm& t : p.terms()) s += t.weight;
    return s;
}

LatticePoint maximize(const GenPermutohedron& p, const std::vector<Rational>& w) {
    if (static_cast<int>(w.size()) != p.n())
        throw std::invalid_argument("maximize: functional length != n");
    LatticePoint out(static_cast<size_t>(p.n()), 0);
    for (const SimplexTerm& term : p.terms()) {
        int best = term.indices.front();
        bool tie = false;
        for (size_t i = 1; i < term.indices.size(); ++i) {
            const int idx = term.indices[i];
            const Rational& cand = w[static_cast<size_t>(idx - 1)];
            const Rational& cur = w[static_cast<size_t>(best - 1)];
            if (cand > cur) {
                best = idx;
                tie = false;
            } else if (cand == cur) {
                tie = true;
            }
        }
        if (tie)
            throw std::invalid_argument(
                "maximize: non-generic functional (tie inside a term)");
        out[static_cast<size_t>(best - 1)] += term.weight;
    }
    return out;
}

} // namespace sytpoly
