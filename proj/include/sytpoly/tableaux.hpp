#ifndef SYTPOLY_TABLEAUX_HPP
#define SYTPOLY_TABLEAUX_HPP

#include "sytpoly/numbers.hpp"
#include "sytpoly/shapes.hpp"

#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace sytpoly {

/// d_i = T(i, i); always starts at 1, strictly increasing.
using DiagonalVector = std::vector<int>;
/// a_i = d_{i+1} − d_i − 1 with the sentinel d_{n+1} = |D_λ| + 1;
/// Σ a_i = |D_λ| − n.
using GapVector = std::vector<int>;

/// Standard filling of a shifted diagram by 1..|D_λ|, strictly increasing
/// along rows and down columns. Entries are stored row-major, parallel to
/// the diagram's box list; the diagram is shared and immutable.
class ShiftedTableau {
public:
    ShiftedTableau(std::shared_ptr<const ShiftedDiagram> diagram,
                   std::vector<int> entries);

    const ShiftedDiagram& diagram() const { return *diagram_; }
    const std::vector<int>& entries() const { return entries_; }
    int at(int r, int c) const {
        return entries_[static_cast<size_t>(diagram_->box_index(r, c))];
    }

    bool operator<(const ShiftedTableau& o) const { return entries_ < o.entries_; }
    bool operator==(const ShiftedTableau& o) const { return entries_ == o.entries_; }

private:
    std::shared_ptr<const ShiftedDiagram> diagram_;
    std::vector<int> entries_;
};

/// Walks every standard shifted tableau of d exactly once (deterministic
/// generation order, not the canonical one). Backbone of the enumeration:
/// values 1..|D| are placed in increasing order, so each row fills left to
/// right and the only candidate in row r is its leftmost empty box.
void visit_tableaux(const ShiftedDiagram& d,
                    const std::function<void(const ShiftedTableau&)>& fn);

/// All tableaux in canonical order: lexicographic by row-major entry sequence.
std::vector<ShiftedTableau> enumerate_tableaux(const ShiftedDiagram& d);

/// True iff entries are a bijection onto 1..|D| and strictly increase along
/// rows and down columns. Throws if the entry vector does not structurally
/// match the diagram.
bool validate_tableau(const ShiftedTableau& t);

DiagonalVector diagonal_vector(const ShiftedTableau& t);
GapVector gap_vector(const ShiftedTableau& t);

/// Gap vector of a diagonal vector inside a diagram with `size` boxes.
GapVector gaps_from_diag(const DiagonalVector& d, int size);
/// Inverse of the gap construction: d_i = i + Σ_{j<i} a_j.
DiagonalVector diag_from_gaps(const GapVector& a);

/// The table N_λ: gap vector → number of tableaux attaining it.
std::map<GapVector, BigInt> count_by_gaps(const ShiftedDiagram& d);

} // namespace sytpoly

#endif
