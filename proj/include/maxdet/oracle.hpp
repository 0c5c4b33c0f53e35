#ifndef MAXDET_ORACLE_HPP
#define MAXDET_ORACLE_HPP

#include <optional>
#include <string>

#include "maxdet/matrix.hpp"

namespace maxdet {

// Exhaustive D(n) for tiny orders: enumerate {0,1} matrices of order n-1
// and scale by 2^{n-1}.  Hard cap at n = 6 (2^25 candidates).
ExactInt brute_force_D(int n, int hard_cap = 6);

// Stored reference value for D(n) when one exists: exhaustively computed
// for n <= 6, D(13) = 14929920 from the literature, further values only
// via a user-supplied CSV (lines "n,D,source"; entries above the Hadamard
// upper bound are rejected).  Absent is a valid answer.
std::optional<ExactInt> reference_D(int n);

// Ingest extra reference values from a CSV file.  Returns how many rows
// were accepted; throws parse_error on malformed input.
int load_reference_csv(const std::string& path);

// Drop all ingested CSV values (test isolation).
void clear_loaded_references();

}  // namespace maxdet

#endif
