#include "hirsch/linalg.hpp"

namespace hirsch {

std::optional<RatVec> solve_square(RatMatrix a, RatVec b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = a[col][col];
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col] / inv;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    RatVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

int matrix_rank(RatMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            const Rational factor = a[r][col] / a[row][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::optional<RatMatrix> invert(RatMatrix a) {
    const std::size_t n = a.size();
    RatMatrix inv(n, RatVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational p = a[col][col];
        for (std::size_t c = 0; c < n; ++c) {
            a[col][c] /= p;
            inv[col][c] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t c = 0; c < n; ++c) {
                a[r][c] -= factor * a[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return inv;
}

int affine_rank(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    RatMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[i].size());
        for (std::size_t c = 0; c < d.size(); ++c) d[c] = points[i][c] - points[0][c];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return matrix_rank(diffs);
}

}  // namespace hirsch
