#include "maxdet/orders.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "maxdet/constructions.hpp"

namespace maxdet {

RegistryMode parse_mode(const std::string& s) {
    if (s == "constructive") return RegistryMode::constructive;
    if (s == "known-orders") return RegistryMode::known_orders;
    if (s == "conjecture") return RegistryMode::conjecture;
    throw parse_error("unknown registry mode '" + s + "'");
}

std::string to_string(RegistryMode m) {
    switch (m) {
        case RegistryMode::constructive: return "constructive";
        case RegistryMode::known_orders: return "known-orders";
        case RegistryMode::conjecture: return "conjecture";
    }
    return "?";
}

std::string Realization::tag() const {
    switch (kind) {
        case Kind::sylvester: return "sylvester";
        case Kind::paley1: return "paley1(" + std::to_string(p) + ")";
        case Kind::paley2: return "paley2(" + std::to_string(p) + ")";
        case Kind::kronecker:
            return "kronecker(" + std::to_string(factor_a) + "," +
                   std::to_string(factor_b) + ")";
        case Kind::loaded: return "loaded(" + file + ")";
        case Kind::assumed: return "assumed";
    }
    return "?";
}

namespace {

// (kind rank, parameter) ordering for deterministic tag choice.
std::pair<int, long> rank(const Realization& r) {
    switch (r.kind) {
        case Realization::Kind::sylvester: return {0, r.p};
        case Realization::Kind::paley1: return {1, r.p};
        case Realization::Kind::paley2: return {2, r.p};
        case Realization::Kind::kronecker: return {3, r.factor_a};
        case Realization::Kind::loaded: return {4, 0};
        case Realization::Kind::assumed: return {5, 0};
    }
    return {9, 0};
}

}  // namespace

void OrderRegistry::insert(int order, Realization r) {
    auto it = realization_.find(order);
    if (it == realization_.end()) {
        realization_[order] = std::move(r);
        orders_.push_back(order);
        std::sort(orders_.begin(), orders_.end());
    } else if (rank(r) < rank(it->second)) {
        it->second = std::move(r);
    }
}

OrderRegistry OrderRegistry::build(int cap, RegistryMode mode) {
    if (cap < 2) throw precondition_error("registry cap must be >= 2");
    OrderRegistry reg;
    reg.cap_ = cap;
    reg.mode_ = mode;

    // Constructive closure of Sylvester and Paley orders under Kronecker
    // products.  The wider modes add assumed orders on top, so every mode
    // keeps an explicit matrix wherever one is constructible.
    for (int k = 0; (1L << k) <= cap; ++k) {
        Realization r{Realization::Kind::sylvester};
        r.p = k;
        reg.insert(1 << k, r);
    }
    for (long p = 3; p + 1 <= cap; p += 2) {
        if (!is_prime(p)) continue;
        if (p % 4 == 3) {
            Realization r{Realization::Kind::paley1};
            r.p = p;
            reg.insert(static_cast<int>(p + 1), r);
        }
    }
    for (long p = 5; 2 * (p + 1) <= cap; p += 2) {
        if (!is_prime(p)) continue;
        if (p % 4 == 1) {
            Realization r{Realization::Kind::paley2};
            r.p = p;
            reg.insert(static_cast<int>(2 * (p + 1)), r);
        }
    }
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<int> snapshot = reg.orders_;
        for (std::size_t a = 0; a < snapshot.size(); ++a) {
            for (std::size_t b = a; b < snapshot.size(); ++b) {
                const long prod = static_cast<long>(snapshot[a]) * snapshot[b];
                if (snapshot[a] == 1 || prod > cap) continue;
                if (!reg.realization_.count(static_cast<int>(prod))) {
                    Realization r{Realization::Kind::kronecker};
                    r.factor_a = snapshot[a];
                    r.factor_b = snapshot[b];
                    reg.insert(static_cast<int>(prod), r);
                    grew = true;
                }
            }
        }
    }

    if (mode == RegistryMode::known_orders) {
        for (int n = 4; n <= std::min(cap, 664); n += 4)
            if (!reg.realization_.count(n))
                reg.insert(n, {Realization::Kind::assumed});
    } else if (mode == RegistryMode::conjecture) {
        for (int n = 4; n <= cap; n += 4)
            if (!reg.realization_.count(n))
                reg.insert(n, {Realization::Kind::assumed});
    }
    return reg;
}

bool OrderRegistry::contains(int n) const { return realization_.count(n) > 0; }

const Realization& OrderRegistry::realization(int n) const {
    auto it = realization_.find(n);
    if (it == realization_.end())
        throw precondition_error("order " + std::to_string(n) +
                                 " not in registry");
    return it->second;
}

std::optional<SignMatrix> OrderRegistry::materialize(int n) const {
    const Realization& r = realization(n);
    switch (r.kind) {
        case Realization::Kind::sylvester:
            return sylvester(static_cast<int>(r.p), cap_);
        case Realization::Kind::paley1: return paley_one(r.p, cap_);
        case Realization::Kind::paley2: return paley_two(r.p, cap_);
        case Realization::Kind::kronecker: {
            auto a = materialize(r.factor_a);
            auto b = materialize(r.factor_b);
            if (!a || !b) return std::nullopt;
            return kronecker(*a, *b, cap_);
        }
        case Realization::Kind::loaded: return loaded_.at(n);
        case Realization::Kind::assumed: return std::nullopt;
    }
    return std::nullopt;
}

void OrderRegistry::load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file '" + path + "'");
    SignMatrix m = read_sign_matrix(in);
    if (!is_hadamard(m))
        throw error("matrix in '" + path + "' fails the Gram check");
    if (m.order() > cap_)
        throw error_registry_too_small("loaded order exceeds registry cap");
    Realization r{Realization::Kind::loaded};
    r.file = path;
    loaded_.insert_or_assign(m.order(), m);
    // A loaded matrix overrides an assumed tag but not a constructive one.
    insert(m.order(), r);
}

DeltaResult OrderRegistry::delta(int n) const {
    if (n < 1) throw precondition_error("delta: n must be >= 1");
    if (2 * n > cap_)
        throw error_registry_too_small(
            "delta(" + std::to_string(n) + ") needs registry cap >= " +
            std::to_string(2 * n));
    DeltaResult best;
    best.delta = -1;
    for (int h : orders_) {
        const int d = std::abs(n - h);
        if (best.delta < 0 || d < best.delta) {
            best.delta = d;
            best.h_primary = h;
            best.h_secondary.reset();
        } else if (d == best.delta && h != best.h_primary) {
            // Tie: prefer h < n as primary, report the other too.
            if (h < n) {
                best.h_secondary = best.h_primary;
                best.h_primary = h;
            } else {
                best.h_secondary = h;
            }
        }
    }
    return best;
}

int OrderRegistry::gamma(double x) const {
    if (x < 1) return 0;
    int best = 0;
    bool have_successor = false;
    for (std::size_t i = 0; i + 1 < orders_.size(); ++i) {
        if (orders_[i] > x) break;
        best = std::max(best, orders_[i + 1] - orders_[i]);
        have_successor = true;
    }
    if (!have_successor || orders_.back() <= x)
        throw error_registry_too_small("gamma: no successor order beyond x");
    return best;
}

std::vector<int> OrderRegistry::materializable_orders() const {
    std::vector<int> out;
    for (int n : orders_)
        if (realization_.at(n).kind != Realization::Kind::assumed)
            out.push_back(n);
    return out;
}

GapTable::GapTable(long sieve_bound) : bound_(sieve_bound) {
    if (sieve_bound < 3) throw precondition_error("sieve bound must be >= 3");
    std::vector<bool> composite(static_cast<std::size_t>(sieve_bound) + 1,
                                false);
    for (long i = 2; i * i <= sieve_bound; ++i)
        if (!composite[i])
            for (long j = i * i; j <= sieve_bound; j += i) composite[j] = true;
    for (long i = 2; i <= sieve_bound; ++i)
        if (!composite[i]) primes_.push_back(i);
    gap_cummax_.resize(primes_.size(), 0);
    int cm = 0;
    for (std::size_t i = 0; i + 1 < primes_.size(); ++i) {
        cm = std::max(cm, static_cast<int>(primes_[i + 1] - primes_[i]));
        gap_cummax_[i] = cm;
    }
    if (!primes_.empty()) gap_cummax_.back() = cm;  // successor unknown
}

int GapTable::lambda(double x) const {
    if (x < 2) return 0;
    auto it = std::upper_bound(primes_.begin(), primes_.end(),
                               static_cast<long>(std::floor(x)));
    const std::size_t idx = static_cast<std::size_t>(it - primes_.begin());
    if (idx == 0) return 0;
    if (idx >= primes_.size())
        throw precondition_error(
            "lambda: x reaches the last sieved prime; raise the sieve bound");
    return gap_cummax_[idx - 1];
}

}  // namespace maxdet
