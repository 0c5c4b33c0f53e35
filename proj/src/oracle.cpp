#include "maxdet/oracle.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "maxdet/bounds.hpp"

namespace maxdet {

namespace {

// Determinant of a k x k {0,1} matrix given as row bitmasks, by cofactor
// expansion along the first remaining row.  k <= 5 keeps this exact in
// machine integers.
long det01(const std::array<unsigned, 5>& rows, int k) {
    if (k == 1) return rows[0] & 1;
    long det = 0;
    int sign = 1;
    for (int j = 0; j < k; ++j) {
        if ((rows[0] >> j) & 1) {
            std::array<unsigned, 5> sub{};
            for (int i = 1; i < k; ++i) {
                const unsigned r = rows[i];
                const unsigned low = r & ((1u << j) - 1);
                const unsigned high = (r >> (j + 1)) << j;
                sub[i - 1] = low | high;
            }
            det += sign * det01(sub, k - 1);
        }
        sign = -sign;
    }
    return det;
}

long max_det01(int m) {
    if (m == 0) return 1;  // empty matrix
    long best = 0;
    const unsigned row_count = 1u << m;
    std::array<unsigned, 5> rows{};
    // Enumerate the first m-1 rows; for each prefix, precompute the
    // last-row cofactors once and sweep all 2^m last rows.
    const unsigned long prefixes = 1ul << (m * (m - 1));
    for (unsigned long p = 0; p < prefixes; ++p) {
        unsigned long bits = p;
        for (int i = 0; i < m - 1; ++i) {
            rows[i] = static_cast<unsigned>(bits & (row_count - 1));
            bits >>= m;
        }
        std::array<long, 5> cof{};
        int sign = (m % 2 == 0) ? -1 : 1;  // (-1)^{m+1+1} for column 0
        for (int j = 0; j < m; ++j) {
            std::array<unsigned, 5> sub{};
            for (int i = 0; i < m - 1; ++i) {
                const unsigned r = rows[i];
                const unsigned low = r & ((1u << j) - 1);
                const unsigned high = (r >> (j + 1)) << j;
                sub[i] = low | high;
            }
            cof[j] = sign * (m == 1 ? 1 : det01(sub, m - 1));
            sign = -sign;
        }
        for (unsigned last = 0; last < row_count; ++last) {
            long det = 0;
            for (int j = 0; j < m; ++j)
                if ((last >> j) & 1) det += cof[j];
            best = std::max(best, std::abs(det));
        }
    }
    return best;
}

std::map<int, ExactInt>& loaded_refs() {
    static std::map<int, ExactInt> refs;
    return refs;
}

}  // namespace

ExactInt brute_force_D(int n, int hard_cap) {
    if (n < 1) throw precondition_error("brute_force_D: n must be >= 1");
    if (n > hard_cap)
        throw precondition_error("brute_force_D: n exceeds the exhaustive cap");
    const long best01 = max_det01(n - 1);
    return ExactInt(best01) * (ExactInt(1) << (n - 1));
}

std::optional<ExactInt> reference_D(int n) {
    if (n >= 1 && n <= 6) return brute_force_D(n);
    if (n == 13) return ExactInt(14929920);
    auto it = loaded_refs().find(n);
    if (it != loaded_refs().end()) return it->second;
    return std::nullopt;
}

int load_reference_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open reference file '" + path + "'");
    std::string line;
    int accepted = 0;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string n_field, d_field, source;
        if (!std::getline(row, n_field, ',') ||
            !std::getline(row, d_field, ',') || !std::getline(row, source))
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": expected 'n,D,source'");
        if (n_field == "n") continue;  // header
        int n = 0;
        ExactInt d;
        try {
            n = std::stoi(n_field);
            d = ExactInt(d_field);
        } catch (const std::exception&) {
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": bad numeric field");
        }
        if (n < 1 || d <= 0 || source.empty())
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": invalid row");
        // Reject claims above the Hadamard upper bound.
        if (ln_exact(d) > upper_bounds(n).hadamard + 1e-9)
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": claimed D exceeds the upper bound");
        loaded_refs()[n] = d;
        ++accepted;
    }
    return accepted;
}

void clear_loaded_references() { loaded_refs().clear(); }

}  // namespace maxdet
