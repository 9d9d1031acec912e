#ifndef QPT_MATRIX_HPP
#define QPT_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "qpt/rational.hpp"

namespace qpt {

using IntVec = std::vector<long long>;

// Dense matrix over the rationals. Sizes in this library are tiny (quivers
// with a handful of vertices, path spaces with a few dozen paths), so the
// implementation favours exactness and clarity over speed.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    static RatMatrix identity(std::size_t n) {
        RatMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
        return m;
    }

    // In-place reduced row echelon form; returns the rank.
    std::size_t rref() {
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
            std::size_t pivot = rank;
            while (pivot < rows_ && at(pivot, c).is_zero()) ++pivot;
            if (pivot == rows_) continue;
            swap_rows(pivot, rank);
            Rat inv = at(rank, c).inv();
            for (std::size_t j = c; j < cols_; ++j) at(rank, j) *= inv;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == rank || at(r, c).is_zero()) continue;
                Rat f = at(r, c);
                for (std::size_t j = c; j < cols_; ++j) at(r, j) -= f * at(rank, j);
            }
            ++rank;
        }
        return rank;
    }

    std::size_t rank() const {
        RatMatrix tmp(*this);
        return tmp.rref();
    }

    // Dimension of the null space {x : A x = 0}.
    std::size_t kernel_dim() const { return cols_ - rank(); }

    // Basis of the null space.
    std::vector<std::vector<Rat>> nullspace() const {
        RatMatrix red(*this);
        red.rref();
        std::vector<std::size_t> pivots; // pivot column per nonzero row
        for (std::size_t r = 0; r < red.rows(); ++r) {
            std::size_t c = 0;
            while (c < red.cols() && red.at(r, c).is_zero()) ++c;
            if (c < red.cols()) pivots.push_back(c);
        }
        std::vector<char> is_pivot(cols_, 0);
        for (std::size_t c : pivots) is_pivot[c] = 1;
        std::vector<std::vector<Rat>> basis;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (is_pivot[c]) continue;
            std::vector<Rat> v(cols_);
            v[c] = Rat(1);
            for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, c);
            basis.push_back(std::move(v));
        }
        return basis;
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }

    std::size_t rows_, cols_;
    std::vector<Rat> data_;
};

// Row space tracker: maintains an echelonized basis of the span of inserted
// vectors, used for incremental rank / membership queries.
class RowSpace {
public:
    explicit RowSpace(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces v against the current basis in place; returns true if a nonzero
    // residue remains (v was independent).
    bool reduce(std::vector<Rat>& v) const {
        for (const auto& row : rows_) {
            if (v[row.pivot].is_zero()) continue;
            Rat f = v[row.pivot];
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= f * row.v[j];
        }
        for (std::size_t j = 0; j < dim_; ++j)
            if (!v[j].is_zero()) return true;
        return false;
    }

    // Inserts v; returns true if it enlarged the span.
    bool insert(std::vector<Rat> v) {
        if (!reduce(v)) return false;
        std::size_t p = 0;
        while (v[p].is_zero()) ++p;
        Rat inv = v[p].inv();
        for (std::size_t j = 0; j < dim_; ++j) v[j] *= inv;
        for (auto& row : rows_) {
            if (row.v[p].is_zero()) continue;
            Rat f = row.v[p];
            for (std::size_t j = 0; j < dim_; ++j) row.v[j] -= f * v[j];
        }
        rows_.push_back({p, std::move(v)});
        return true;
    }

    bool contains(std::vector<Rat> v) const { return !reduce(v); }

private:
    struct Row {
        std::size_t pivot;
        std::vector<Rat> v;
    };
    std::size_t dim_;
    std::vector<Row> rows_;
};

// Determinant of a square integer matrix (fraction-free Bareiss).
long long int_det(const std::vector<IntVec>& m);

// product g^T c of two n x n integer matrices given as column lists.
std::vector<IntVec> pairing_product(const std::vector<IntVec>& g_cols,
                                    const std::vector<IntVec>& c_cols);

bool is_identity(const std::vector<IntVec>& m);

} // namespace qpt

#endif
