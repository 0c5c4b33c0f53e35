#ifndef MAXDET_ORDERS_HPP
#define MAXDET_ORDERS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "maxdet/matrix.hpp"

namespace maxdet {

enum class RegistryMode { constructive, known_orders, conjecture };

RegistryMode parse_mode(const std::string& s);
std::string to_string(RegistryMode m);

// How a registry order is realized.  Preference when several constructions
// reach the same order: sylvester < paley1 < paley2 < kronecker < loaded
// < assumed, then smallest parameter.
struct Realization {
    enum class Kind { sylvester, paley1, paley2, kronecker, loaded, assumed };
    Kind kind = Kind::assumed;
    long p = 0;            // paley1 / paley2 prime, or sylvester exponent
    int factor_a = 0;      // kronecker factors
    int factor_b = 0;
    std::string file;      // loaded

    std::string tag() const;
};

class error_registry_too_small : public error {
public:
    using error::error;
};

struct DeltaResult {
    int delta = 0;
    int h_primary = 0;               // tie broken to h < n
    std::optional<int> h_secondary;  // the other achieving order, if any
};

// The set H of realizable Hadamard orders up to a cap, each order tagged
// with how it is realized.
class OrderRegistry {
public:
    static OrderRegistry build(int cap, RegistryMode mode);

    int cap() const { return cap_; }
    RegistryMode mode() const { return mode_; }
    const std::vector<int>& orders() const { return orders_; }
    bool contains(int n) const;
    const Realization& realization(int n) const;

    // Replays the realization tag to an explicit matrix; nullopt for
    // assumed orders with no stored matrix.
    std::optional<SignMatrix> materialize(int n) const;

    // Validates the file against is_hadamard, then adds the order with a
    // loaded(file) tag.  Rejection leaves the registry unchanged.
    void load_matrix(const std::string& path);

    // Nearest realizable order; requires cap >= 2n so the minimum cannot
    // be clipped.
    DeltaResult delta(int n) const;

    // Max gap n_{i+1} - n_i over registry orders n_i <= x; 0 when x < 1.
    int gamma(double x) const;

    // Orders that have an explicit matrix (non-assumed realization).
    std::vector<int> materializable_orders() const;

private:
    int cap_ = 0;
    RegistryMode mode_ = RegistryMode::conjecture;
    std::vector<int> orders_;
    std::map<int, Realization> realization_;
    std::map<int, SignMatrix> loaded_;

    void insert(int order, Realization r);
};

// Primes and maximal prime gaps up to a sieve bound.
class GapTable {
public:
    explicit GapTable(long sieve_bound = 1000000);

    long bound() const { return bound_; }
    const std::vector<long>& primes() const { return primes_; }

    // Max gap p_{i+1} - p_i with p_i <= x; 0 when x < 2.  x must be small
    // enough that the successor of the largest prime <= x was sieved.
    int lambda(double x) const;

private:
    long bound_;
    std::vector<long> primes_;
    std::vector<int> gap_cummax_;  // gap_cummax_[i] = max gap over p_0..p_i
};

}  // namespace maxdet

#endif
