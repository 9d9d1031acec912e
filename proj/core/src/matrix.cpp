#include "qpt/matrix.hpp"

#include <stdexcept>

namespace qpt {

long long int_det(const std::vector<IntVec>& m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("int_det: not square");
    // Bareiss fraction-free elimination.
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    __int128 det = sign * a[n - 1][n - 1];
    if (det > INT64_MAX || det < INT64_MIN) throw std::overflow_error("int_det: overflow");
    return (long long)det;
}

std::vector<IntVec> pairing_product(const std::vector<IntVec>& g_cols,
                                    const std::vector<IntVec>& c_cols) {
    std::size_t n = g_cols.size();
    std::vector<IntVec> out(n, IntVec(c_cols.size(), 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < c_cols.size(); ++j) {
            long long s = 0;
            for (std::size_t k = 0; k < g_cols[i].size(); ++k) s += g_cols[i][k] * c_cols[j][k];
            out[i][j] = s;
        }
    return out;
}

bool is_identity(const std::vector<IntVec>& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            if (m[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

} // namespace qpt
