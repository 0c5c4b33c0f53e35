#ifndef MAXDET_MATRIX_HPP
#define MAXDET_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace maxdet {

// Arbitrary-precision signed integer; determinants reach h^{h/2}.
using ExactInt = mpz_class;

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violated operation precondition (bad index sets, wrong congruence, ...).
class precondition_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

// Dense square matrix with entries in {+1,-1}, row-major.
class SignMatrix {
public:
    explicit SignMatrix(int order, std::int8_t fill = +1);

    int order() const { return order_; }
    std::int8_t at(int i, int j) const { return entries_[idx(i, j)]; }
    void set(int i, int j, std::int8_t v);

    void negate_row(int i);
    void negate_col(int j);

    bool operator==(const SignMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * order_ + j;
    }
    int order_;
    std::vector<std::int8_t> entries_;
};

// Dense square {0,1} matrix; image of the beta map.
class BinMatrix {
public:
    explicit BinMatrix(int order, std::uint8_t fill = 0);

    int order() const { return order_; }
    std::uint8_t at(int i, int j) const { return entries_[idx(i, j)]; }
    void set(int i, int j, std::uint8_t v);

    bool operator==(const BinMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * order_ + j;
    }
    int order_;
    std::vector<std::uint8_t> entries_;
};

// Exact determinant by fraction-free Bareiss elimination.  Pivot is the
// first nonzero entry in row-major scan of the remaining column.
ExactInt det_exact(const SignMatrix& m);
ExactInt det_exact(const BinMatrix& m);

// True iff M * M^T = order * I (exact integer arithmetic).
bool is_hadamard(const SignMatrix& m);

// Normalize the first row and column to +1 by negations, drop them, then
// map -1 -> 1, +1 -> 0.  Satisfies |det A| = 2^{n-1} |det beta_map(A)|.
BinMatrix beta_map(const SignMatrix& a);

// Right inverse of beta_map: border with a +1 row and column and map
// 1 -> -1, 0 -> +1 in the interior.  |det| gains the factor 2^{n-1}.
SignMatrix beta_inverse(const BinMatrix& b);

// Sum of all entries (the excess sigma).
ExactInt excess(const SignMatrix& a);

struct Split {
    SignMatrix minor;       // H[rows, cols], order d
    SignMatrix complement;  // H[~rows, ~cols], order h-d
};

// Extract the d x d minor on (rows, cols) and the complementary block on
// the remaining rows and columns; original order preserved within each.
Split complementary_split(const SignMatrix& h, const std::vector<int>& rows,
                          const std::vector<int>& cols);

struct PivotSets {
    std::vector<int> rows;
    std::vector<int> cols;
};

// Deterministic pivot-greedy fraction-free elimination; returns the first d
// pivot rows/columns, whose d x d submatrix is guaranteed nonsingular.
PivotSets nonsingular_complement(const SignMatrix& h, int d);

// Matrix text format: line 1 = order, then order lines of '+'/'-'
// (or '1'/'0' for BinMatrix).  No trailing content.
SignMatrix read_sign_matrix(std::istream& in);
BinMatrix read_bin_matrix(std::istream& in);
SignMatrix parse_sign_matrix(const std::string& text);
void write_matrix(std::ostream& out, const SignMatrix& m);
void write_matrix(std::ostream& out, const BinMatrix& m);
std::string to_text(const SignMatrix& m);

}  // namespace maxdet

#endif
