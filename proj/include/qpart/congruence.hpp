#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpart/series.hpp"

namespace qpart {

// Asserts p_r(A*n + B) == 0 (mod M) for all n >= 0.
struct CongruenceClaim {
    long long r = 0;
    std::int64_t A = 1;
    std::int64_t B = 0;
    std::uint64_t M = 2;

    friend bool operator==(const CongruenceClaim&, const CongruenceClaim&) = default;
};

std::string describe(const CongruenceClaim& claim);

enum class VerifyStatus { HoldsToDepth, Counterexample };

struct Witness {
    std::int64_t n = 0;     // index (or exponent, for identity checks)
    mpz_class value;        // nonzero residue / coefficient difference found
};

// Outcome of checking one claim or identity to finite depth. Holding to depth
// is evidence, not proof; a counterexample is definitive.
struct VerifyReport {
    std::string subject;
    std::optional<CongruenceClaim> claim;
    std::int64_t depth = 0;  // largest n (claims) or series order (identities) checked
    VerifyStatus status = VerifyStatus::HoldsToDepth;
    std::optional<Witness> witness;

    bool holds() const { return status == VerifyStatus::HoldsToDepth; }
};

// Checks the claim for all 0 <= n <= n_max, working in Z/M end to end.
VerifyReport verify_claim(const CongruenceClaim& claim, std::int64_t n_max);

// Built-in congruence families, all modulo 5, indexed by an integer lambda
// of either sign:
//   T1: r = -(5*lambda+1),  p_r(5n+l) for l = 3, 4
//   T2: r = -(5*lambda+3),  p_r(5n+l) for l = 2, 3, 4
//   T3: r = -(5*lambda+4),  p_r(5n+4)
//   T4: r = -(25*lambda+1), p_r(25n+5l+1) for l = 1..4
//   T5: r = -(25*lambda+2), p_r(25n+5l+2) for l = 1..4
enum class TheoremId { T1, T2, T3, T4, T5 };

std::vector<CongruenceClaim> theorem_claims(TheoremId id, long long lambda);

std::vector<VerifyReport> verify_theorem(TheoremId id, long long lambda_min, long long lambda_max,
                                         std::int64_t n_max);

// (q;q)_inf == (q^25;q^25)_inf * (R(q^5) - q - q^2/R(q^5)) to order N.
VerifyReport check_identity_dissection5(std::int64_t N);

// The exponents of eta^k that are divisible by 5 carry a single constant:
// -1, -1, 5, -5 for k = 1..4. Checked exactly to order N.
VerifyReport check_lemma_h5(int k, std::int64_t N);

// (q;q)_inf^p == (q^p;q^p)_inf (mod p) to order N, for prime p.
VerifyReport check_frobenius(long long p, std::int64_t N);

// (q;q)_inf^3 equals the triangular-number series to order N.
VerifyReport check_jacobi(std::int64_t N);

// p_{-4}(w*n - (w+1)/6) == 0 (mod w) for n in [1, n_max], for each prime
// w == 5 (mod 6) in w_list.
std::vector<VerifyReport> check_ramanujan_pm4(const std::vector<long long>& w_list,
                                              std::int64_t n_max);

// Emits every claim (r, A, B, M) with r in [r_min, r_max]\{0} and B in [0, A)
// that holds for all n <= n_max. Finite-depth evidence only: callers must
// label results as candidates, never as proved.
std::vector<CongruenceClaim> scan(long long r_min, long long r_max, std::uint64_t M,
                                  std::int64_t A, std::int64_t n_max);

bool is_prime_u64(std::uint64_t n);

}  // namespace qpart
