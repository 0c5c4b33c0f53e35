#ifndef MAXDET_BOUNDS_HPP
#define MAXDET_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "maxdet/orders.hpp"

namespace maxdet {

// Natural log of a positive quantity, with the exact integer alongside
// when it is small enough to materialize.
struct LogValue {
    double ln = 0.0;
    std::optional<ExactInt> exact;
};

// Accurate ln of a (large) positive integer.
double ln_exact(const ExactInt& v);

// One named lower bound on D(n), stored in log-space together with its
// normalized form ln R = ln D - (n/2) ln n.
struct BoundEntry {
    std::string name;
    std::string source;
    double ln_d = 0.0;
    double ln_r = 0.0;
};

struct UpperBounds {
    double hadamard = 0.0;          // (n/2) ln n
    std::optional<double> barba;    // n = 1 (mod 4) only
};

struct BoundReport {
    int n = 0;
    int delta_used = 0;
    RegistryMode mode = RegistryMode::conjecture;
    std::vector<BoundEntry> entries;
    UpperBounds upper;
};

// Numerically verifies (n-a)^{n-a} / n^n > (ne)^{-a} in log-space.
bool check_ineq1(double alpha, int n);

// ln(2^{d-1} h^{h/2-d}) with d = h - n, for 0 < n < h.
LogValue minor_bound(int h, int n);

// ln(2^{n-h} h^{h/2}) for n > h >= 1.
LogValue major_bound(int h, int n);

// Distance-delta bound: the better of the minor/major branch values,
// never below the closed-form floor ln R >= (delta/2) ln(4/(ne)).
struct UnconditionalResult {
    int delta = 0;
    double ln_r_floor = 0.0;    // closed form
    double ln_r = 0.0;          // branch max
    double ln_d = 0.0;
    std::optional<double> minor_branch;  // ln D via h = n + delta
    std::optional<double> major_branch;  // ln D via h = n - delta
};
UnconditionalResult unconditional_bound(int n, const OrderRegistry& reg);

// ln((2/pi)^{1/2} h^{3/2}), the excess floor sigma(h) >= (2/pi)^{1/2} h^{3/2}.
LogValue excess_lower(int h);

// ln(h^{h/2} (1 + (2h/pi)^{1/2})), a lower bound on D(h+1).
LogValue plus_one_bound(int h);

// Same plus ln 2, a lower bound on D(h+2).
LogValue plus_two_bound(int h);

// Hadamard-conjecture case bound by n mod 4.  ln_r is the case value as
// stated (the reported R-lower); ln_r_construction is the sharper value
// the explicit construction achieves, which strictly exceeds the case
// constant when n = 1 or 2 (mod 4).
struct ConditionalResult {
    int n_mod_4 = 0;
    double ln_r = 0.0;
    double ln_d = 0.0;
    double ln_r_construction = 0.0;
};
ConditionalResult conditional_bound(int n);

// R(n) >= (3n)^{-1/2}; the constant 3 could be sharpened to
// pi e^2 / 8 = 2.9017.
bool inverse_sqrt_floor_check(int n);

// Koukouvinos-Mitrouli-Seberry comparison bounds: with 4t = v + 1 a
// Hadamard order, D >= (4t)^{2t-1}, 2(4t)^{2t-2}, 4(4t)^{2t-3} for
// n = v, v-1, v-2.  Undefined for n = 0 (mod 4).
LogValue kms_bound(int n);

// de Launey-Levin comparison: ln R = -(d/2) ln n with d the distance to
// the next registry order above n.  n itself must not be a registry order.
LogValue ll_bound(int n, const OrderRegistry& reg);

// Clements-Lindstrom comparison: ln R = -(n/2) ln(4/3).
LogValue cl_bound(int n);

UpperBounds upper_bounds(int n);

// Assemble the full report for one n.
BoundReport bound_report(int n, const OrderRegistry& reg);

}  // namespace maxdet

#endif
