#include "logtb/linalg.hpp"

namespace logtb::exact {

namespace {

size_t common_length(const std::vector<std::vector<ExactComplex>>& vectors) {
    if (vectors.empty()) return 0;
    const size_t n = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != n) throw DimensionMismatch("vectors of unequal length");
    return n;
}

}  // namespace

int real_rank(const std::vector<std::vector<ExactComplex>>& vectors) {
    const size_t n = common_length(vectors);
    std::vector<std::vector<QuadExt>> realified;
    realified.reserve(vectors.size());
    for (const auto& v : vectors) {
        std::vector<QuadExt> row;
        row.reserve(2 * n);
        for (const auto& z : v) row.push_back(z.re());
        for (const auto& z : v) row.push_back(z.im());
        realified.push_back(std::move(row));
    }
    return row_rank(std::move(realified));
}

int complex_rank(const std::vector<std::vector<ExactComplex>>& vectors) {
    common_length(vectors);
    return row_rank(vectors);
}

}  // namespace logtb::exact
