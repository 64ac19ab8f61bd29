#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "qpart/ring.hpp"

namespace qpart {

using ExactCoeffs = std::vector<mpz_class>;
using ModCoeffs = std::vector<std::uint64_t>;

// A truncated Laurent series in one variable q.
//
// coeffs[i] holds the coefficient of q^(valuation + i). Coefficients below the
// valuation are exactly zero; coefficients at exponents >= order are unknown.
// The truncation order is exclusive: every exponent e < order is known exactly.
//
// Series are immutable values and are never auto-normalized: stored leading
// zeros are kept, and equality is always a bounded comparison (equal_up_to).
// Every operation computes the largest order it can guarantee for its result.
class TruncSeries {
public:
    TruncSeries(RingSpec ring, std::int64_t valuation, ExactCoeffs coeffs);
    TruncSeries(RingSpec ring, std::int64_t valuation, ModCoeffs coeffs);

    const RingSpec& ring() const noexcept { return ring_; }
    std::int64_t valuation() const noexcept { return valuation_; }
    std::int64_t length() const noexcept;
    std::int64_t order() const noexcept { return valuation_ + length(); }

    // Raw coefficient access; the accessor must match the ring kind.
    const ExactCoeffs& exact_coeffs() const;
    const ModCoeffs& mod_coeffs() const;
    const std::variant<ExactCoeffs, ModCoeffs>& storage() const noexcept { return coeffs_; }

private:
    RingSpec ring_;
    std::int64_t valuation_;
    std::variant<ExactCoeffs, ModCoeffs> coeffs_;
};

// --- construction ---------------------------------------------------------

// Builds the series with coeffs[i] at q^(valuation+i), reduced into the ring.
// Requires coeffs.size() == order - valuation >= 0.
TruncSeries make_series(const RingSpec& ring, std::int64_t valuation,
                        const std::vector<long long>& coeffs, std::int64_t order);
TruncSeries make_series(const RingSpec& ring, std::int64_t valuation,
                        const std::vector<mpz_class>& coeffs, std::int64_t order);

// The constant 1 (resp. 0), known for all exponents below `order`.
TruncSeries one_series(const RingSpec& ring, std::int64_t order);
TruncSeries zero_series(const RingSpec& ring, std::int64_t order);

// c * q^e, known below `order` (requires e < order).
TruncSeries monomial(const RingSpec& ring, long long c, std::int64_t e, std::int64_t order);

// --- ring operations ------------------------------------------------------

// Coefficientwise sum/difference: valuation = min(valuations), order = min(orders).
TruncSeries add(const TruncSeries& f, const TruncSeries& g);
TruncSeries sub(const TruncSeries& f, const TruncSeries& g);
TruncSeries negate(const TruncSeries& f);

// Cauchy product: valuation = val(f)+val(g),
// order = min(val(f)+order(g), val(g)+order(f)).
TruncSeries mul(const TruncSeries& f, const TruncSeries& g);

// Multiplicative inverse. Requires the stored coefficient at f's valuation to
// be a unit (+-1 in the exact ring, a residue coprime to m modulo m).
// Result: valuation = -val(f), same coefficient count as f.
TruncSeries invert(const TruncSeries& f);

// f^r for any integer r. Exact ring: Miller's recurrence, one exact division
// per coefficient (divisibility is asserted, failure is an internal error).
// Modular ring: binary exponentiation by truncated multiplication; r < 0
// inverts first. r < 0 requires a unit stored leading coefficient.
TruncSeries pow_int(const TruncSeries& f, long long r);

// g(q) = f(q^k), k >= 1. Valuation and order scale by k.
TruncSeries substitute_power(const TruncSeries& f, std::int64_t k);

// Multiply by q^d: shifts valuation and order, keeps coefficients.
TruncSeries shift(const TruncSeries& f, std::int64_t d);

// Terms of f whose exponent is congruent to j (mod m), kept at their original
// exponents; other coefficients zeroed. Truncation is unchanged.
TruncSeries component(const TruncSeries& f, std::int64_t m, std::int64_t j);

// g with g_n = coefficient of q^(m*n+j) in f, for 0 <= j < m.
// Restricted to ordinary series (valuation >= 0); order(g) = ceil((order(f)-j)/m).
TruncSeries dissect(const TruncSeries& f, std::int64_t m, std::int64_t j);

// Maps an exact-integer series into Z/m (m >= 2), residues in [0, m).
TruncSeries reduce_mod(const TruncSeries& f, std::uint64_t m);

// Exact coefficient of q^e. Below the valuation: zero. At or past the order:
// TruncationError. Modular residues are returned embedded in [0, m).
mpz_class coeff(const TruncSeries& f, std::int64_t e);

// True iff all coefficients of q^e agree for e < limit. Both series must have
// order >= limit (insufficient truncation is an error, not a false).
bool equal_up_to(const TruncSeries& f, const TruncSeries& g, std::int64_t limit);

// First exponent below `limit` where f and g disagree, with the difference
// (exact ring) or the pair of residues packed as f-g mod m (modular ring).
struct CoeffMismatch {
    std::int64_t exponent;
    mpz_class difference;
};
bool first_difference(const TruncSeries& f, const TruncSeries& g, std::int64_t limit,
                      CoeffMismatch& out);

// --- sugar ----------------------------------------------------------------

inline TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) { return add(f, g); }
inline TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) { return sub(f, g); }
inline TruncSeries operator-(const TruncSeries& f) { return negate(f); }
inline TruncSeries operator*(const TruncSeries& f, const TruncSeries& g) { return mul(f, g); }

std::string to_string(const TruncSeries& f);
std::ostream& operator<<(std::ostream& os, const TruncSeries& f);

}  // namespace qpart
