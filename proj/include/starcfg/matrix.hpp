#pragma once

#include <vector>

#include "starcfg/form.hpp"
#include "starcfg/rational.hpp"

namespace starcfg {

/// Dense exact-rational matrix, row-major.
class Matrix {
public:
    Matrix(int rows, int cols);
    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_, cols_;
    std::vector<Rational> entries_;
};

/// Exact rank over the rationals.
///
/// A full-rank result modulo a fixed 61-bit prime already pins the answer
/// (the modular rank is a lower bound and min(rows, cols) an upper bound);
/// otherwise fraction-free integer elimination decides. Either way the value
/// returned is the exact rational rank, deterministically.
int rank(const Matrix& m);

struct RowReduction {
    Matrix rref;              ///< reduced row-echelon form (canonical)
    std::vector<int> pivots;  ///< pivot columns, strictly increasing
};

RowReduction row_reduce(const Matrix& m);

/// Basis of the right null space; size is cols - rank.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m);

/// Dimension of the linear span of the given degree-d forms inside the space
/// of all degree-d forms. Throws DegreeError naming any form of wrong degree.
int span_dimension(const std::vector<Form>& forms, int d);

}  // namespace starcfg
