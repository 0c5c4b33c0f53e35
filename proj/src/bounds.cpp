#include "maxdet/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace maxdet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-12;

double half_n_ln_n(int n) { return 0.5 * n * std::log(static_cast<double>(n)); }

}  // namespace

double ln_exact(const ExactInt& v) {
    if (v <= 0) throw precondition_error("ln_exact: value must be positive");
    signed long exp2;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

bool check_ineq1(double alpha, int n) {
    if (!(n > std::abs(alpha)) || alpha == 0.0)
        throw precondition_error("check_ineq1: need n > |alpha| > 0");
    const double lhs =
        (n - alpha) * std::log(n - alpha) - n * std::log(static_cast<double>(n));
    const double rhs = -alpha * (std::log(static_cast<double>(n)) + 1.0);
    return lhs - rhs > -kTol;
}

LogValue minor_bound(int h, int n) {
    if (!(0 < n && n < h)) throw precondition_error("minor_bound: need 0 < n < h");
    const int d = h - n;
    LogValue v;
    v.ln = (d - 1) * std::numbers::ln2 +
           (0.5 * h - d) * std::log(static_cast<double>(h));
    if (h <= 64 && h / 2 - d >= 0) {
        ExactInt e = 1;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(h),
                      static_cast<unsigned long>(h / 2 - d));
        e <<= (d - 1);
        v.exact = e;
    }
    return v;
}

LogValue major_bound(int h, int n) {
    if (!(0 < h && h < n)) throw precondition_error("major_bound: need 0 < h < n");
    LogValue v;
    v.ln = (n - h) * std::numbers::ln2 + half_n_ln_n(h);
    if (n <= 64) {
        ExactInt e = 1;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(h),
                      static_cast<unsigned long>(h / 2));
        e <<= (n - h);
        v.exact = e;
    }
    return v;
}

UnconditionalResult unconditional_bound(int n, const OrderRegistry& reg) {
    UnconditionalResult r;
    const DeltaResult dr = reg.delta(n);
    r.delta = dr.delta;
    const double upper = half_n_ln_n(n);
    if (r.delta == 0) {
        r.ln_r = 0.0;
        r.ln_r_floor = 0.0;
        r.ln_d = upper;
        return r;
    }
    r.ln_r_floor = 0.5 * r.delta *
                   (std::log(4.0) - std::log(static_cast<double>(n)) - 1.0);
    double best = -std::numeric_limits<double>::infinity();
    if (reg.contains(n + r.delta)) {
        r.minor_branch = minor_bound(n + r.delta, n).ln;
        best = std::max(best, *r.minor_branch);
    }
    if (n - r.delta >= 1 && reg.contains(n - r.delta)) {
        r.major_branch = major_bound(n - r.delta, n).ln;
        best = std::max(best, *r.major_branch);
    }
    if (!std::isfinite(best))
        throw error("unconditional_bound: no realizable branch order");
    r.ln_d = best;
    r.ln_r = best - upper;
    if (r.ln_r < r.ln_r_floor - kTol)
        throw error("unconditional_bound: branch max fell below the floor");
    return r;
}

LogValue excess_lower(int h) {
    if (h < 4 || h % 4 != 0)
        throw precondition_error("excess_lower: need h >= 4, h = 0 (mod 4)");
    LogValue v;
    v.ln = 0.5 * std::log(2.0 / kPi) + 1.5 * std::log(static_cast<double>(h));
    return v;
}

LogValue plus_one_bound(int h) {
    if (h < 4 || h % 4 != 0)
        throw precondition_error("plus_one_bound: need h >= 4, h = 0 (mod 4)");
    LogValue v;
    v.ln = half_n_ln_n(h) + std::log1p(std::sqrt(2.0 * h / kPi));
    return v;
}

LogValue plus_two_bound(int h) {
    LogValue v = plus_one_bound(h);
    v.ln += std::numbers::ln2;
    return v;
}

ConditionalResult conditional_bound(int n) {
    if (n < 1) throw precondition_error("conditional_bound: n must be >= 1");
    ConditionalResult r;
    r.n_mod_4 = n % 4;
    const double upper = half_n_ln_n(n);
    if (n <= 2) {
        r.n_mod_4 = n % 4;
        r.ln_r = 0.0;
        r.ln_r_construction = 0.0;
        r.ln_d = upper;
        return r;
    }
    switch (n % 4) {
        case 0:
            r.ln_r = 0.0;
            r.ln_r_construction = 0.0;
            break;
        case 1:
            r.ln_r = 0.5 * std::log(2.0 / (kPi * std::numbers::e));
            r.ln_r_construction = plus_one_bound(n - 1).ln - upper;
            break;
        case 2:
            r.ln_r = 0.5 * std::log(8.0 / (kPi * std::numbers::e *
                                           std::numbers::e * n));
            r.ln_r_construction = plus_two_bound(n - 2).ln - upper;
            break;
        case 3:
            // Exact case value (n+1)^{(n-1)/2} / n^{n/2}; its simplified
            // form (e/n)^{1/2} is only an asymptotic equivalent.
            r.ln_r = 0.5 * (n - 1) * std::log(n + 1.0) - upper;
            r.ln_r_construction = r.ln_r;
            break;
    }
    if ((n % 4 == 1 || n % 4 == 2) && r.ln_r_construction <= r.ln_r)
        throw error("conditional_bound: construction value did not exceed "
                    "the case constant");
    r.ln_d = r.ln_r + upper;
    return r;
}

bool inverse_sqrt_floor_check(int n) {
    if (n < 1) throw precondition_error("n must be >= 1");
    const ConditionalResult r = conditional_bound(n);
    const double floor = -0.5 * std::log(3.0 * n);
    return std::max(r.ln_r, r.ln_r_construction) >= floor - kTol;
}

LogValue kms_bound(int n) {
    if (n < 1 || n % 4 == 0)
        throw precondition_error("kms_bound: undefined for n = 0 (mod 4)");
    // 4t = v + 1 with v = n, n+1, n+2 for n = 3, 2, 1 (mod 4).
    LogValue v;
    long t4, coeff;
    switch (n % 4) {
        case 3: t4 = n + 1; coeff = 1; break;
        case 2: t4 = n + 2; coeff = 2; break;
        default: t4 = n + 3; coeff = 4; break;
    }
    const long exp = t4 / 2 - 1 - (coeff == 2 ? 1 : 0) - (coeff == 4 ? 2 : 0);
    v.ln = std::log(static_cast<double>(coeff)) +
           static_cast<double>(exp) * std::log(static_cast<double>(t4));
    if (n <= 64 && exp >= 0) {
        ExactInt e;
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(t4),
                      static_cast<unsigned long>(exp));
        v.exact = coeff * e;
    }
    return v;
}

LogValue ll_bound(int n, const OrderRegistry& reg) {
    if (reg.contains(n))
        throw precondition_error("ll_bound: n is itself a registry order");
    int above = -1;
    for (int h : reg.orders())
        if (h > n) { above = h; break; }
    if (above < 0)
        throw error_registry_too_small("ll_bound: no registry order above n");
    const int d = above - n;
    LogValue v;
    v.ln = -0.5 * d * std::log(static_cast<double>(n));
    return v;
}

LogValue cl_bound(int n) {
    if (n < 1) throw precondition_error("cl_bound: n must be >= 1");
    LogValue v;
    v.ln = -0.5 * n * std::log(4.0 / 3.0);
    return v;
}

UpperBounds upper_bounds(int n) {
    if (n < 1) throw precondition_error("upper_bounds: n must be >= 1");
    UpperBounds u;
    u.hadamard = half_n_ln_n(n);
    if (n % 4 == 1 && n > 1) {
        const int h = n - 1;
        u.barba = 0.5 * std::log(2.0 * h + 1.0) + half_n_ln_n(h);
    }
    return u;
}

BoundReport bound_report(int n, const OrderRegistry& reg) {
    BoundReport rep;
    rep.n = n;
    rep.mode = reg.mode();
    rep.upper = upper_bounds(n);
    const double upper = rep.upper.hadamard;
    auto add = [&](const std::string& name, const std::string& source,
                   double ln_d) {
        rep.entries.push_back({name, source, ln_d, ln_d - upper});
    };

    const UnconditionalResult u = unconditional_bound(n, reg);
    rep.delta_used = u.delta;
    add("unconditional", "distance-delta branch max", u.ln_d);
    add("unconditional-floor", "closed form (4/(ne))^{delta/2}",
        u.ln_r_floor + upper);

    if (reg.mode() == RegistryMode::conjecture) {
        const ConditionalResult c = conditional_bound(n);
        add("conditional", "case constant by n mod 4", c.ln_d);
        if (n % 4 == 1 || n % 4 == 2)
            add("conditional-construction", "excess border construction",
                c.ln_r_construction + upper);
        if (n % 4 != 0) add("kms", "Koukouvinos-Mitrouli-Seberry", kms_bound(n).ln);
        if (n % 8 == 2 && (n / 2) % 4 == 1 && n >= 10) {
            // Doubling an order-n/2 excess-border matrix keeps R bounded
            // below by 2/(pi e).
            add("sylvester-doubling", "doubled excess border",
                std::log(2.0 / (kPi * std::numbers::e)) + upper);
        }
    }
    if (!reg.contains(n))
        add("de-launey-levin", "next order above", ll_bound(n, reg).ln + upper);
    add("clements-lindstrom", "binary expansion bound", cl_bound(n).ln + upper);
    return rep;
}

}  // namespace maxdet
