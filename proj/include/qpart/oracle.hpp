#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace qpart {

// Brute-force partition counts, kept deliberately independent of the series
// engine. These exist for trust, not throughput; bounds are small by default.
struct OracleCount {
    std::int64_t n = 0;
    long long r = 0;
    mpz_class value;
    mpz_class even_count;  // populated iff r < 0
    mpz_class odd_count;   // populated iff r < 0
};

inline constexpr std::int64_t kColourOracleBound = 60;
inline constexpr std::int64_t kSignedOracleBound = 40;
inline constexpr std::int64_t kClassicalPBound = 10'000;

// Multisets of coloured parts (value in [1,n], colour in [1,r]) summing to n,
// by dynamic programming over coloured part types in a fixed order. r >= 1.
OracleCount count_colour_partitions(std::int64_t n, long long r,
                                    std::int64_t bound = kColourOracleBound);

// Sets of distinct (part, colour) pairs with colour in [1,|r|] summing to n,
// split by parity of the set size; value = even_count - odd_count. r <= -1.
// Enumeration is explicit backtracking over part values.
OracleCount count_signed_distinct(std::int64_t n, long long r,
                                  std::int64_t bound = kSignedOracleBound);

// p(n) by the standard coin-style dynamic program. n <= 10^4.
mpz_class classical_p(std::int64_t n);

// p(0..n) in one pass; same recurrence as classical_p.
std::vector<mpz_class> classical_p_table(std::int64_t n);

}  // namespace qpart
