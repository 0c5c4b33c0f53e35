#ifndef MAXDET_WITNESSES_HPP
#define MAXDET_WITNESSES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "maxdet/bounds.hpp"
#include "maxdet/orders.hpp"

namespace maxdet {

// How a witness matrix was produced.
struct Construction {
    enum class Kind {
        minor,            // complement of a nonsingular d x d block of H
        major,            // identity border through the beta domain
        excess_border,    // all-+1 border on an excess-maximized H
        double_border,    // excess border plus one major border step
        sylvester_double, // order-2 Kronecker factor on an excess border
        hadamard,         // the Hadamard matrix itself
        loaded
    };
    Kind kind = Kind::hadamard;
    int h = 0;                   // base Hadamard order, when applicable
    std::vector<int> rows;       // minor pivot sets
    std::vector<int> cols;
    std::string tag() const;
};

Construction::Kind parse_construction_kind(const std::string& s);

// An explicit matrix certifying a lower bound on D(n), with its exactly
// computed determinant.
struct WitnessCertificate {
    int n = 0;
    SignMatrix matrix{1};
    ExactInt det_abs;
    double ln_det = 0.0;
    double claimed_bound = 0.0;  // ln D claimed by the construction
    Construction construction;
    std::optional<ExactInt> sigma_achieved;
    bool verified = false;
};

class no_witness_error : public error {
public:
    using error::error;
};

struct SearchParams {
    int restarts = 32;
    std::uint64_t seed = 0;
};

// Hill climbing over single row/column negations, first-improvement
// sweeps until stable, multi-restart; exhaustive over the switching
// class for h <= 8.  Never decreases the excess, never breaks the
// Hadamard property, deterministic for fixed (H, params).
SignMatrix maximize_excess(const SignMatrix& h, const SearchParams& params = {});

// Exact maximum excess over the switching class of H: for each row-sign
// pattern the optimal column signs are forced, so 2^{h-1} patterns
// suffice.  Intended for tests; guarded at h <= 24.
long switching_excess_max(const SignMatrix& h);

// Bound-realizing witnesses.
WitnessCertificate witness_minor(const SignMatrix& h_matrix, int n);
WitnessCertificate witness_major(const SignMatrix& h_matrix, int n);
WitnessCertificate witness_excess_border(const SignMatrix& h_matrix,
                                         const SearchParams& params = {});
WitnessCertificate witness_double_border(const SignMatrix& h_matrix,
                                         const SearchParams& params = {});

// Builds every applicable candidate (minor from the nearest larger
// materializable order, major from the nearest smaller, excess border for
// n = 1 (mod 4), double border for n = 2 (mod 4), the doubled excess
// border for n = 2 (mod 8), the Hadamard matrix itself) and returns the
// one with the largest exact determinant.
WitnessCertificate best_witness(int n, const OrderRegistry& reg,
                                const SearchParams& params = {});

// Checks the exact integer identity det(A)^2 h^{2d} = det(D)^2 h^h for
// the complementary split of a Hadamard matrix on (rows, cols).
bool verify_block_identity(const SignMatrix& h, const std::vector<int>& rows,
                           const std::vector<int>& cols);

// Re-derives det_abs and the claimed-bound inequality from the stored
// matrix; used by certificate re-verification.
bool reverify(const WitnessCertificate& cert);

}  // namespace maxdet

#endif
