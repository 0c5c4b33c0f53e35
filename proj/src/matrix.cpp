#include "maxdet/matrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace maxdet {

SignMatrix::SignMatrix(int order, std::int8_t fill)
    : order_(order), entries_(static_cast<std::size_t>(order) * order, fill) {
    if (order < 1) throw precondition_error("SignMatrix order must be >= 1");
    if (fill != 1 && fill != -1)
        throw precondition_error("SignMatrix entries must be +1 or -1");
}

void SignMatrix::set(int i, int j, std::int8_t v) {
    if (v != 1 && v != -1)
        throw precondition_error("SignMatrix entries must be +1 or -1");
    entries_[idx(i, j)] = v;
}

void SignMatrix::negate_row(int i) {
    for (int j = 0; j < order_; ++j) entries_[idx(i, j)] = -entries_[idx(i, j)];
}

void SignMatrix::negate_col(int j) {
    for (int i = 0; i < order_; ++i) entries_[idx(i, j)] = -entries_[idx(i, j)];
}

BinMatrix::BinMatrix(int order, std::uint8_t fill)
    : order_(order), entries_(static_cast<std::size_t>(order) * order, fill) {
    if (order < 1) throw precondition_error("BinMatrix order must be >= 1");
    if (fill > 1) throw precondition_error("BinMatrix entries must be 0 or 1");
}

void BinMatrix::set(int i, int j, std::uint8_t v) {
    if (v > 1) throw precondition_error("BinMatrix entries must be 0 or 1");
    entries_[idx(i, j)] = v;
}

namespace {

// Bareiss: w[i][j] <- (w[i][j]*pivot - w[i][k]*w[k][j]) / prev, all exact.
ExactInt bareiss_det(std::vector<ExactInt>& w, int n) {
    auto at = [&](int i, int j) -> ExactInt& {
        return w[static_cast<std::size_t>(i) * n + j];
    };
    int sign = 1;
    ExactInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i) {
            if (at(i, k) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) return 0;
        if (pr != k) {
            for (int j = k; j < n; ++j) std::swap(at(pr, j), at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                at(i, j) = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(),
                             prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

template <typename M>
ExactInt det_via_bareiss(const M& m) {
    const int n = m.order();
    std::vector<ExactInt> w(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            w[static_cast<std::size_t>(i) * n + j] = static_cast<int>(m.at(i, j));
    return bareiss_det(w, n);
}

}  // namespace

ExactInt det_exact(const SignMatrix& m) { return det_via_bareiss(m); }
ExactInt det_exact(const BinMatrix& m) { return det_via_bareiss(m); }

bool is_hadamard(const SignMatrix& m) {
    const int n = m.order();
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            long dot = 0;
            for (int k = 0; k < n; ++k)
                dot += static_cast<long>(m.at(i, k)) * m.at(j, k);
            if (dot != (i == j ? n : 0)) return false;
        }
    }
    return true;
}

BinMatrix beta_map(const SignMatrix& a) {
    const int n = a.order();
    if (n < 2) throw precondition_error("beta_map needs order >= 2");
    SignMatrix t = a;
    for (int i = 0; i < n; ++i)
        if (t.at(i, 0) < 0) t.negate_row(i);
    for (int j = 1; j < n; ++j)
        if (t.at(0, j) < 0) t.negate_col(j);
    BinMatrix b(n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j)
            b.set(i - 1, j - 1, t.at(i, j) < 0 ? 1 : 0);
    return b;
}

SignMatrix beta_inverse(const BinMatrix& b) {
    const int m = b.order();
    SignMatrix a(m + 1, +1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a.set(i + 1, j + 1, b.at(i, j) ? -1 : +1);
    return a;
}

ExactInt excess(const SignMatrix& a) {
    long s = 0;
    for (int i = 0; i < a.order(); ++i)
        for (int j = 0; j < a.order(); ++j) s += a.at(i, j);
    return ExactInt(s);
}

namespace {

void check_index_set(const std::vector<int>& s, int h, const char* what) {
    if (s.empty() || s.size() >= static_cast<std::size_t>(h))
        throw precondition_error(std::string(what) + ": size must be in (0, order)");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 0 || s[k] >= h)
            throw precondition_error(std::string(what) + ": index out of range");
        if (k > 0 && s[k] <= s[k - 1])
            throw precondition_error(std::string(what) +
                                     ": indices must be strictly increasing");
    }
}

std::vector<int> complement_of(const std::vector<int>& s, int h) {
    std::vector<bool> in(h, false);
    for (int v : s) in[v] = true;
    std::vector<int> c;
    c.reserve(h - s.size());
    for (int v = 0; v < h; ++v)
        if (!in[v]) c.push_back(v);
    return c;
}

SignMatrix submatrix(const SignMatrix& m, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
    SignMatrix out(static_cast<int>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.set(static_cast<int>(i), static_cast<int>(j),
                    m.at(rows[i], cols[j]));
    return out;
}

}  // namespace

Split complementary_split(const SignMatrix& h, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
    const int n = h.order();
    check_index_set(rows, n, "rows");
    check_index_set(cols, n, "cols");
    if (rows.size() != cols.size())
        throw precondition_error("rows and cols must have equal size");
    return Split{submatrix(h, rows, cols),
                 submatrix(h, complement_of(rows, n), complement_of(cols, n))};
}

PivotSets nonsingular_complement(const SignMatrix& h, int d) {
    const int n = h.order();
    if (d <= 0 || d >= n)
        throw precondition_error("nonsingular_complement: need 0 < d < order");
    std::vector<ExactInt> w(static_cast<std::size_t>(n) * n);
    auto at = [&](int i, int j) -> ExactInt& {
        return w[static_cast<std::size_t>(i) * n + j];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) at(i, j) = static_cast<int>(h.at(i, j));

    std::vector<bool> row_used(n, false), col_used(n, false);
    PivotSets out;
    ExactInt prev = 1;
    for (int k = 0; k < d; ++k) {
        int pr = -1, pc = -1;
        for (int i = 0; i < n && pr < 0; ++i) {
            if (row_used[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (col_used[j]) continue;
                if (at(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
            }
        }
        if (pr < 0) throw error("nonsingular_complement: matrix is singular");
        row_used[pr] = true;
        col_used[pc] = true;
        out.rows.push_back(pr);
        out.cols.push_back(pc);
        for (int i = 0; i < n; ++i) {
            if (row_used[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (col_used[j]) continue;
                at(i, j) = at(i, j) * at(pr, pc) - at(i, pc) * at(pr, j);
                mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(),
                             prev.get_mpz_t());
            }
        }
        prev = at(pr, pc);
    }
    std::sort(out.rows.begin(), out.rows.end());
    std::sort(out.cols.begin(), out.cols.end());
    return out;
}

namespace {

template <typename M, typename Decode>
M read_matrix(std::istream& in, Decode decode, const char* kind) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("empty matrix file");
    int n = 0;
    try {
        std::size_t pos = 0;
        n = std::stoi(line, &pos);
        if (pos != line.size()) throw parse_error("bad order line");
    } catch (const std::exception&) {
        throw parse_error(std::string(kind) + ": bad order line '" + line + "'");
    }
    if (n < 1) throw parse_error("matrix order must be >= 1");
    M m(n);
    for (int i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw parse_error("unexpected end of matrix data");
        if (static_cast<int>(line.size()) != n)
            throw parse_error("row " + std::to_string(i) + " has length " +
                              std::to_string(line.size()) + ", expected " +
                              std::to_string(n));
        for (int j = 0; j < n; ++j) m.set(i, j, decode(line[j], i, j));
    }
    while (std::getline(in, line))
        if (!line.empty()) throw parse_error("trailing content after matrix");
    return m;
}

}  // namespace

SignMatrix read_sign_matrix(std::istream& in) {
    return read_matrix<SignMatrix>(
        in,
        [](char c, int i, int j) -> std::int8_t {
            if (c == '+') return +1;
            if (c == '-') return -1;
            throw parse_error("bad sign character at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
        },
        "SignMatrix");
}

BinMatrix read_bin_matrix(std::istream& in) {
    return read_matrix<BinMatrix>(
        in,
        [](char c, int i, int j) -> std::uint8_t {
            if (c == '1') return 1;
            if (c == '0') return 0;
            throw parse_error("bad bit character at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
        },
        "BinMatrix");
}

SignMatrix parse_sign_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_sign_matrix(in);
}

void write_matrix(std::ostream& out, const SignMatrix& m) {
    out << m.order() << '\n';
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) out << (m.at(i, j) > 0 ? '+' : '-');
        out << '\n';
    }
}

void write_matrix(std::ostream& out, const BinMatrix& m) {
    out << m.order() << '\n';
    for (int i = 0; i < m.order(); ++i) {
        for (int j = 0; j < m.order(); ++j) out << (m.at(i, j) ? '1' : '0');
        out << '\n';
    }
}

std::string to_text(const SignMatrix& m) {
    std::ostringstream out;
    write_matrix(out, m);
    return out.str();
}

}  // namespace maxdet
