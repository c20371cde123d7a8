#include "sytpoly/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace sytpoly {

ShiftedTableau::ShiftedTableau(std::shared_ptr<const ShiftedDiagram> diagram,
                               std::vector<int> entries)
    : diagram_(std::move(diagram)), entries_(std::move(entries)) {
    if (!diagram_) throw std::invalid_argument("tableau: null diagram");
    if (static_cast<int>(entries_.size()) != diagram_->size())
        throw std::invalid_argument("tableau: entry count != diagram size");
}

namespace {

struct Dfs {
    const ShiftedDiagram* d;
    int n;
    int total;
    std::shared_ptr<const ShiftedDiagram> shared;
    std::vector<int> entries;   // row-major, 0 = empty
    std::vector<int> next_col;  // per row, first empty column (1-based)
    const std::function<void(const ShiftedTableau&)>* fn;

    void place(int value) {
        if (value > total) {
            const ShiftedTableau t(shared, entries);
            (*fn)(t);
            return;
        }
        for (int r = 1; r <= n; ++r) {
            const int c = next_col[static_cast<size_t>(r - 1)];
            if (c > d->row_end(r)) continue;           // row already full
            if (r > 1) {
                // the box above is (r-1, c); rows fill left to right, so it
                // is filled iff row r-1 has moved past column c
                if (next_col[static_cast<size_t>(r - 2)] <= c) continue;
            }
            entries[static_cast<size_t>(d->box_index(r, c))] = value;
            next_col[static_cast<size_t>(r - 1)] = c + 1;
            place(value + 1);
            next_col[static_cast<size_t>(r - 1)] = c;
            entries[static_cast<size_t>(d->box_index(r, c))] = 0;
        }
    }
};

} // namespace

void visit_tableaux(const ShiftedDiagram& d,
                    const std::function<void(const ShiftedTableau&)>& fn) {
    Dfs dfs;
    dfs.d = &d;
    dfs.n = d.n();
    dfs.total = d.size();
    dfs.shared = std::make_shared<const ShiftedDiagram>(d);
    dfs.entries.assign(static_cast<size_t>(d.size()), 0);
    dfs.next_col.resize(static_cast<size_t>(d.n()));
    for (int r = 1; r <= d.n(); ++r) dfs.next_col[static_cast<size_t>(r - 1)] = r;
    dfs.fn = &fn;
    dfs.place(1);
}

std::vector<ShiftedTableau> enumerate_tableaux(const ShiftedDiagram& d) {
    std::vector<ShiftedTableau> out;
    visit_tableaux(d, [&](const ShiftedTableau& t) { out.push_back(t); });
    std::sort(out.begin(), out.end());
    return out;
}

bool validate_tableau(const ShiftedTableau& t) {
    const ShiftedDiagram& d = t.diagram();
    const std::vector<int>& e = t.entries();
    const int total = d.size();
    std::vector<char> seen(static_cast<size_t>(total) + 1, 0);
    for (int v : e) {
        if (v < 1 || v > total) return false;
        if (seen[static_cast<size_t>(v)]) return false;
        seen[static_cast<size_t>(v)] = 1;
    }
    for (const Box& b : d.boxes()) {
        const int v = e[static_cast<size_t>(d.box_index(b.row, b.col))];
        if (b.col > b.row && t.at(b.row, b.col - 1) >= v) return false;
        if (b.row > 1 && d.contains(b.row - 1, b.col) &&
            t.at(b.row - 1, b.col) >= v)
            return false;
    }
    return true;
}

DiagonalVector diagonal_vector(const ShiftedTableau& t) {
    const int n = t.diagram().n();
    DiagonalVector d(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) d[static_cast<size_t>(i - 1)] = t.at(i, i);
    return d;
}

GapVector gaps_from_diag(const DiagonalVector& d, int size) {
    const int n = static_cast<int>(d.size());
    GapVector a(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int next = (i == n) ? size + 1 : d[static_cast<size_t>(i)];
        a[static_cast<size_t>(i - 1)] = next - d[static_cast<size_t>(i - 1)] - 1;
    }
    return a;
}

GapVector gap_vector(const ShiftedTableau& t) {
    return gaps_from_diag(diagonal_vector(t), t.diagram().size());
}

DiagonalVector diag_from_gaps(const GapVector& a) {
    DiagonalVector d(a.size());
    int acc = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0) throw std::invalid_argument("gaps: negative entry");
        d[i] = static_cast<int>(i) + 1 + acc;
        acc += a[i];
    }
    return d;
}

std::map<GapVector, BigInt> count_by_gaps(const ShiftedDiagram& d) {
    std::map<GapVector, BigInt> table;
    visit_tableaux(d, [&](const ShiftedTableau& t) { table[gap_vector(t)] += 1; });
    return table;
}

} // namespace sytpoly
