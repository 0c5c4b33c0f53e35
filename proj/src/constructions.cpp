#include "maxdet/constructions.hpp"

#include <string>

namespace maxdet {

namespace {

void check_cap(long order, int cap, const char* what) {
    if (order > cap)
        throw precondition_error(std::string(what) + ": order " +
                                 std::to_string(order) + " exceeds cap " +
                                 std::to_string(cap));
}

long pow_mod(long base, long exp, long mod) {
    long r = 1;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// Column-negate so the first row becomes all +1.
SignMatrix normalize_first_row(SignMatrix h) {
    for (int j = 0; j < h.order(); ++j)
        if (h.at(0, j) < 0) h.negate_col(j);
    return h;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

SignMatrix sylvester(int k, int order_cap) {
    if (k < 0) throw precondition_error("sylvester: k must be >= 0");
    if (k >= 31) throw precondition_error("sylvester: k too large");
    check_cap(1L << k, order_cap, "sylvester");
    SignMatrix h(1);
    for (int step = 0; step < k; ++step) {
        const int n = h.order();
        SignMatrix next(2 * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const std::int8_t v = h.at(i, j);
                next.set(i, j, v);
                next.set(i, j + n, v);
                next.set(i + n, j, v);
                next.set(i + n, j + n, static_cast<std::int8_t>(-v));
            }
        }
        h = std::move(next);
    }
    return h;
}

int quadratic_character(long a, long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw precondition_error("quadratic_character: p must be an odd prime");
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? +1 : -1;
}

SignMatrix paley_one(long p, int order_cap) {
    if (!is_prime(p) || p % 4 != 3)
        throw precondition_error("paley_one: p must be a prime = 3 (mod 4)");
    check_cap(p + 1, order_cap, "paley_one");
    const int n = static_cast<int>(p) + 1;
    // H = I + S with S the antisymmetric conference matrix built from the
    // Jacobsthal circulant Q[i][j] = chi(i - j).
    SignMatrix h(n, +1);
    for (int j = 1; j < n; ++j) h.set(0, j, +1);
    for (int i = 1; i < n; ++i) h.set(i, 0, -1);
    h.set(0, 0, +1);
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            if (i == j) {
                h.set(i, j, +1);
            } else {
                h.set(i, j, static_cast<std::int8_t>(
                                quadratic_character(i - j, p)));
            }
        }
    }
    return normalize_first_row(h);
}

SignMatrix paley_two(long p, int order_cap) {
    if (!is_prime(p) || p % 4 != 1)
        throw precondition_error("paley_two: p must be a prime = 1 (mod 4)");
    check_cap(2 * (p + 1), order_cap, "paley_two");
    const int q = static_cast<int>(p) + 1;
    // Symmetric conference matrix C of order p+1.
    std::vector<std::vector<int>> c(q, std::vector<int>(q, 0));
    for (int j = 1; j < q; ++j) {
        c[0][j] = 1;
        c[j][0] = 1;
    }
    for (int i = 1; i < q; ++i)
        for (int j = 1; j < q; ++j)
            if (i != j) c[i][j] = quadratic_character(i - j, p);
    // Each entry expands to a 2x2 block: 0 -> [[1,-1],[-1,-1]],
    // +1 -> [[1,1],[1,-1]], -1 -> the negated +1 block.
    SignMatrix h(2 * q);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            int a, b, d, e;
            if (c[i][j] == 0) {
                a = 1, b = -1, d = -1, e = -1;
            } else {
                a = c[i][j], b = c[i][j], d = c[i][j], e = -c[i][j];
            }
            h.set(2 * i, 2 * j, static_cast<std::int8_t>(a));
            h.set(2 * i, 2 * j + 1, static_cast<std::int8_t>(b));
            h.set(2 * i + 1, 2 * j, static_cast<std::int8_t>(d));
            h.set(2 * i + 1, 2 * j + 1, static_cast<std::int8_t>(e));
        }
    }
    return normalize_first_row(h);
}

SignMatrix kronecker(const SignMatrix& h1, const SignMatrix& h2,
                     int order_cap) {
    if (!is_hadamard(h1) || !is_hadamard(h2))
        throw precondition_error("kronecker: both factors must be Hadamard");
    const long order = static_cast<long>(h1.order()) * h2.order();
    check_cap(order, order_cap, "kronecker");
    const int n1 = h1.order(), n2 = h2.order();
    SignMatrix out(static_cast<int>(order));
    for (int i1 = 0; i1 < n1; ++i1)
        for (int j1 = 0; j1 < n1; ++j1)
            for (int i2 = 0; i2 < n2; ++i2)
                for (int j2 = 0; j2 < n2; ++j2)
                    out.set(i1 * n2 + i2, j1 * n2 + j2,
                            static_cast<std::int8_t>(h1.at(i1, j1) *
                                                     h2.at(i2, j2)));
    return out;
}

}  // namespace maxdet
