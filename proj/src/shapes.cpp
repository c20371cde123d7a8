#include "sytpoly/shapes.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace sytpoly {

Partition::Partition(std::vector<int> parts, int n) {
    if (n <= 0) throw std::invalid_argument("partition: n must be positive");
    if (static_cast<int>(parts.size()) > n)
        throw std::invalid_argument("partition: more than n parts");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("partition: negative part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition: parts must be weakly decreasing");
    }
    parts.resize(static_cast<size_t>(n), 0);
    parts_ = std::move(parts);
}

Partition Partition::parse(const std::string& text, int n) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        if (tok.empty())
            throw std::invalid_argument("partition: empty component in '" + text + "'");
        size_t used = 0;
        int v;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("partition: bad integer '" + tok + "'");
        }
        if (used != tok.size())
            throw std::invalid_argument("partition: bad integer '" + tok + "'");
        parts.push_back(v);
        pos = comma + 1;
    }
    return Partition(std::move(parts), n);
}

int Partition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::positive_part_count() const {
    int k = 0;
    while (k < n() && parts_[static_cast<size_t>(k)] > 0) ++k;
    return k;
}

ShiftedDiagram::ShiftedDiagram(int n, Partition lambda)
    : n_(n), lambda_(std::move(lambda)) {
    if (n_ <= 0) throw std::invalid_argument("diagram: n must be positive");
    if (lambda_.n() != n_)
        throw std::invalid_argument("diagram: partition length != n");
    row_offset_.reserve(static_cast<size_t>(n_));
    for (int r = 1; r <= n_; ++r) {
        row_offset_.push_back(static_cast<int>(boxes_.size()));
        for (int c = r; c <= row_end(r); ++c) boxes_.push_back(Box{r, c});
    }
}

ShiftedDiagram build_diagram(int n, const Partition& lambda) {
    return ShiftedDiagram(n, lambda);
}

int diagram_size(const ShiftedDiagram& d) { return d.size(); }

int positive_part_count(const Partition& lambda) {
    return lambda.positive_part_count();
}

} // namespace sytpoly
