#ifndef MAXDET_CONSTRUCTIONS_HPP
#define MAXDET_CONSTRUCTIONS_HPP

#include "maxdet/matrix.hpp"

namespace maxdet {

// Largest order constructed or eliminated exactly by default; entries of
// intermediate determinants grow to thousands of digits beyond this.
inline constexpr int kDefaultOrderCap = 256;

// k-fold Kronecker power of [[+1,+1],[+1,-1]]; order 2^k.
SignMatrix sylvester(int k, int order_cap = kDefaultOrderCap);

// Legendre symbol via Euler's criterion: 0 if p | a, +1 for nonzero
// quadratic residues, -1 otherwise.  p must be an odd prime.
int quadratic_character(long a, long p);

bool is_prime(long n);

// First Paley construction, p prime, p = 3 (mod 4); order p+1 Hadamard
// matrix, normalized to an all-+1 first row.
SignMatrix paley_one(long p, int order_cap = kDefaultOrderCap);

// Second Paley construction, p prime, p = 1 (mod 4); order 2(p+1).
SignMatrix paley_two(long p, int order_cap = kDefaultOrderCap);

// Kronecker product of two Hadamard matrices.
SignMatrix kronecker(const SignMatrix& h1, const SignMatrix& h2,
                     int order_cap = kDefaultOrderCap);

}  // namespace maxdet

#endif
