#include "thetalift/linalg.hpp"

#include <utility>

namespace thetalift {

std::optional<DenseMatrix> invert(DenseMatrix m) {
    const std::size_t n = m.size();
    DenseMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);

        const Rational scale = 1 / m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= factor * m[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

DenseMatrix transpose(const DenseMatrix& m) {
    if (m.empty()) return {};
    DenseMatrix t(m[0].size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
    if (a == 0) return;
    for (const auto& [idx, value] : x) {
        auto [it, inserted] = y.try_emplace(idx, 0);
        it->second += a * value;
        if (it->second == 0) y.erase(it);
    }
}

void EchelonBasis::reduce(SparseVector& v) const {
    // Pivots are visited in increasing order; eliminating pivot p only
    // touches entries at indices >= p, so a single forward sweep suffices.
    auto it = v.begin();
    while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
            ++it;
            continue;
        }
        const std::size_t pivot = it->first;
        const Rational coeff = it->second;
        axpy(v, -coeff, row->second);
        it = v.upper_bound(pivot);
    }
}

bool EchelonBasis::insert(SparseVector v) {
    reduce(v);
    if (v.empty()) return false;
    const std::size_t pivot = v.begin()->first;
    const Rational lead = v.begin()->second;
    for (auto& [idx, value] : v) value /= lead;
    rows_.emplace(pivot, std::move(v));
    return true;
}

bool EchelonBasis::contains(SparseVector v) const {
    reduce(v);
    return v.empty();
}

std::size_t exact_rank(const std::vector<SparseVector>& vectors) {
    EchelonBasis basis;
    for (const auto& v : vectors) basis.insert(v);
    return basis.rank();
}

void SparseMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
    if (value == 0) {
        rows_[row].erase(col);
        cols_[col].erase(row);
    } else {
        rows_[row][col] = value;
        cols_[col][row] = value;
    }
}

void SparseMatrix::rebuild_columns() {
    cols_.assign(rows_.size(), {});
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r]) cols_[c].emplace(r, v);
}

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
    set(row, col, get(row, col) + value);
}

Rational SparseMatrix::get(std::size_t row, std::size_t col) const {
    auto it = rows_[row].find(col);
    return it == rows_[row].end() ? Rational(0) : it->second;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
    SparseVector y;
    for (const auto& [c, value] : x) axpy(y, value, cols_[c]);
    return y;
}

SparseVector SparseMatrix::column(std::size_t c) const {
    return cols_[c];
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        SparseVector acc;
        for (const auto& [k, av] : a.rows_[r]) axpy(acc, av, b.rows_[k]);
        out.rows_[r] = std::move(acc);
    }
    out.rebuild_columns();
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out = a;
    for (std::size_t r = 0; r < b.size(); ++r) axpy(out.rows_[r], 1, b.rows_[r]);
    out.rebuild_columns();
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix out = a;
    for (std::size_t r = 0; r < b.size(); ++r) axpy(out.rows_[r], -1, b.rows_[r]);
    out.rebuild_columns();
    return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
    SparseMatrix out(size());
    for (std::size_t r = 0; r < size(); ++r) axpy(out.rows_[r], s, rows_[r]);
    out.rebuild_columns();
    return out;
}

bool SparseMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (const auto& [c, v] : rows_[r])
            if (c != r) return false;
    return true;
}

}  // namespace thetalift
