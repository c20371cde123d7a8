#ifndef SYTPOLY_SHAPES_HPP
#define SYTPOLY_SHAPES_HPP

#include <string>
#include <vector>

namespace sytpoly {

/// Partition λ = (λ_1 ≥ … ≥ λ_n ≥ 0), stored zero-padded to exactly n parts.
/// Fewer input parts are padded; more than n parts or a non-monotone input is
/// rejected.
class Partition {
public:
    Partition(std::vector<int> parts, int n);

    /// Comma-separated non-negative integers, e.g. "4,2,1,0"; "" for λ = ∅.
    static Partition parse(const std::string& text, int n);

    int n() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[static_cast<size_t>(i - 1)]; } // 1-based
    const std::vector<int>& parts() const { return parts_; }

    int sum() const;
    /// k such that λ_1,…,λ_k > 0 and λ_{k+1} = … = λ_n = 0.
    int positive_part_count() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
};

/// One box of a shifted diagram, 1-based, row ≤ col.
struct Box {
    int row = 0;
    int col = 0;
    bool operator==(const Box& o) const { return row == o.row && col == o.col; }
    bool operator<(const Box& o) const {
        return row != o.row ? row < o.row : col < o.col;
    }
};

/// Shifted Young diagram D_λ: row r holds the boxes (r, r) … (r, n + λ_r),
/// i.e. n + 1 − r + λ_r boxes starting on the main diagonal.
class ShiftedDiagram {
public:
    ShiftedDiagram(int n, Partition lambda);

    int n() const { return n_; }
    const Partition& lambda() const { return lambda_; }
    const std::vector<Box>& boxes() const { return boxes_; }

    int size() const { return static_cast<int>(boxes_.size()); }
    int row_end(int r) const { return n_ + lambda_.part(r); } // last column of row r
    bool contains(int r, int c) const {
        return r >= 1 && r <= n_ && c >= r && c <= row_end(r);
    }
    /// Index of (r, c) in the row-major box order; caller guarantees membership.
    int box_index(int r, int c) const {
        return row_offset_[static_cast<size_t>(r - 1)] + (c - r);
    }

private:
    int n_;
    Partition lambda_;
    std::vector<Box> boxes_;       // row-major
    std::vector<int> row_offset_;  // index of (r, r) in boxes_
};

ShiftedDiagram build_diagram(int n, const Partition& lambda);
int diagram_size(const ShiftedDiagram& d);
int positive_part_count(const Partition& lambda);

} // namespace sytpoly

#endif
