#pragma once

#include "thetalift/weight.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace thetalift {

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Gauss-Jordan inverse over Q. Returns nullopt for singular input.
std::optional<DenseMatrix> invert(DenseMatrix m);

DenseMatrix transpose(const DenseMatrix& m);

/// Sparse vector over Q; absent entries are zero, stored entries nonzero.
using SparseVector = std::map<std::size_t, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Incrementally maintained row-echelon basis of a subspace of Q^n.
///
/// Each stored row is normalized to have leading coefficient 1 at its pivot.
/// Inserting reduces the new vector against existing pivots; the rank grows
/// iff a nonzero remainder survives.
class EchelonBasis {
public:
    /// Returns true iff v was independent of the current span.
    bool insert(SparseVector v);
    std::size_t rank() const { return rows_.size(); }
    bool contains(SparseVector v) const;

private:
    void reduce(SparseVector& v) const;
    std::map<std::size_t, SparseVector> rows_;  // pivot -> row
};

/// Exact rank of a family of sparse vectors.
std::size_t exact_rank(const std::vector<SparseVector>& vectors);

/// Square matrix over Q stored row-wise sparsely.
class SparseMatrix {
public:
    SparseMatrix() = default;
    explicit SparseMatrix(std::size_t n) : rows_(n), cols_(n) {}

    std::size_t size() const { return rows_.size(); }
    void set(std::size_t row, std::size_t col, const Rational& value);
    void add(std::size_t row, std::size_t col, const Rational& value);
    Rational get(std::size_t row, std::size_t col) const;
    const SparseVector& row(std::size_t r) const { return rows_[r]; }

    /// Matrix times column vector.
    SparseVector apply(const SparseVector& x) const;
    SparseVector column(std::size_t c) const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    SparseMatrix scaled(const Rational& s) const;
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) { return a.rows_ == b.rows_; }

    bool is_diagonal() const;

private:
    void rebuild_columns();
    std::vector<SparseVector> rows_;
    std::vector<SparseVector> cols_;
};

}  // namespace thetalift
