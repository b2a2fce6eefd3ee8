#include "starcfg/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "starcfg/errors.hpp"
#include "starcfg/monomial.hpp"

namespace starcfg {

Matrix::Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

namespace {

// 2^61 - 1, a Mersenne prime. Products of two residues fit in 128 bits.
constexpr unsigned long kPrime = 2305843009213693951UL;

unsigned long mulmod(unsigned long a, unsigned long b) {
    return static_cast<unsigned long>(static_cast<unsigned __int128>(a) * b % kPrime);
}

unsigned long powmod(unsigned long base, unsigned long exp) {
    unsigned long out = 1;
    while (exp) {
        if (exp & 1) out = mulmod(out, base);
        base = mulmod(base, base);
        exp >>= 1;
    }
    return out;
}

unsigned long invmod(unsigned long a) { return powmod(a, kPrime - 2); }

/// Per-row primitive integer scaling: clear denominators, divide out the
/// content. Row scaling preserves rank.
std::vector<std::vector<Int>> primitive_rows(const Matrix& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    Int lcm, content;
    for (int r = 0; r < m.rows(); ++r) {
        lcm = 1;
        for (int c = 0; c < m.cols(); ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den_mpz_t());
        content = 0;
        for (int c = 0; c < m.cols(); ++c) {
            rows[r][c] = m.at(r, c).get_num() * (lcm / m.at(r, c).get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), rows[r][c].get_mpz_t());
        }
        if (content > 1)
            for (int c = 0; c < m.cols(); ++c)
                mpz_divexact(rows[r][c].get_mpz_t(), rows[r][c].get_mpz_t(),
                             content.get_mpz_t());
    }
    return rows;
}

int rank_mod_p(const std::vector<std::vector<Int>>& rows, int cols) {
    const int n = static_cast<int>(rows.size());
    std::vector<std::vector<unsigned long>> a(n, std::vector<unsigned long>(cols));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < cols; ++c)
            a[r][c] = mpz_fdiv_ui(rows[r][c].get_mpz_t(), kPrime);
    int rank = 0;
    for (int col = 0; col < cols && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (a[r][col]) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        const unsigned long inv = invmod(a[rank][col]);
        for (int r = rank + 1; r < n; ++r) {
            if (!a[r][col]) continue;
            const unsigned long factor = mulmod(a[r][col], inv);
            a[r][col] = 0;
            for (int c = col + 1; c < cols; ++c) {
                const unsigned long sub = mulmod(factor, a[rank][c]);
                a[r][c] = a[r][c] >= sub ? a[r][c] - sub : a[r][c] + (kPrime - sub);
            }
        }
        ++rank;
    }
    return rank;
}

/// Fraction-free Gaussian elimination (division by the previous pivot is
/// exact). Pivot choice: largest absolute value in the current column,
/// lowest row index on ties.
int rank_fraction_free(std::vector<std::vector<Int>> a, int cols) {
    const int n = static_cast<int>(a.size());
    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < cols && rank < n; ++col) {
        int pivot = -1;
        for (int r = rank; r < n; ++r) {
            if (a[r][col] == 0) continue;
            if (pivot < 0 ||
                mpz_cmpabs(a[r][col].get_mpz_t(), a[pivot][col].get_mpz_t()) > 0)
                pivot = r;
        }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[rank]);
        for (int r = rank + 1; r < n; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                a[r][c] = a[r][c] * a[rank][col] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace

int rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const auto rows = primitive_rows(m);
    const int modular = rank_mod_p(rows, m.cols());
    if (modular == std::min(m.rows(), m.cols())) return modular;
    return rank_fraction_free(rows, m.cols());
}

RowReduction row_reduce(const Matrix& m) {
    RowReduction out{m, {}};
    Matrix& a = out.rref;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int pivot = -1;
        for (int r = row; r < a.rows(); ++r)
            if (a.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(row, c));
        const Rational scale = 1 / a.at(row, col);
        for (int c = col; c < a.cols(); ++c) a.at(row, c) *= scale;
        for (int r = 0; r < a.rows(); ++r) {
            if (r == row || a.at(r, col) == 0) continue;
            const Rational factor = a.at(r, col);
            for (int c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(row, c);
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m) {
    const RowReduction red = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : red.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t k = 0; k < red.pivots.size(); ++k)
            v[red.pivots[k]] = -red.rref.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

int span_dimension(const std::vector<Form>& forms, int d) {
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (forms[i].degree() != d)
            throw DegreeError("form " + std::to_string(i + 1) + " has degree " +
                              std::to_string(forms[i].degree()) + ", expected " +
                              std::to_string(d));
    Matrix m(static_cast<int>(forms.size()), monomial_count(d));
    for (std::size_t r = 0; r < forms.size(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(static_cast<int>(r), c) = forms[r].coeff_at(c);
    return rank(m);
}

}  // namespace starcfg
