#pragma once

#include <cstdint>
#include <vector>

#include "qpart/series.hpp"

namespace qpart {

// A finite product of q-Pochhammer factors (q^a; q^m)_inf^exponent times an
// explicit q^leading_power prefactor.
struct ProductSpec {
    struct Factor {
        std::int64_t a;     // >= 1
        std::int64_t m;     // >= 1
        std::int64_t exponent;
    };
    std::vector<Factor> factors;
    std::int64_t leading_power = 0;
};

// Expands the product to truncation order N.
TruncSeries expand_product(const ProductSpec& spec, const RingSpec& ring, std::int64_t N);

// (q;q)_inf to order N, generated directly from the generalized pentagonal
// numbers k(3k-1)/2 with sign (-1)^k, not by multiplying factors.
TruncSeries euler_phi(const RingSpec& ring, std::int64_t N);

// (q^a; q^m)_inf = prod_{k>=0} (1 - q^(a+km)) to order N, by iterated sparse
// multiplication.
TruncSeries euler_product_ap(const RingSpec& ring, std::int64_t a, std::int64_t m, std::int64_t N);

// Sum of p_r(n) q^n to order N, i.e. (q;q)_inf^(-r). Requires r != 0.
TruncSeries pr_series(const RingSpec& ring, long long r, std::int64_t N);

// R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5)), constant term 1.
TruncSeries rogers_ramanujan(const RingSpec& ring, std::int64_t N);

// (q;q)_inf / (q * (q^25;q^25)_inf): a Laurent series with valuation -1.
TruncSeries eta_quotient(const RingSpec& ring, std::int64_t N);

// (q;q)_inf^3 = sum_k (-1)^k (2k+1) q^(k(k+1)/2), generated directly from the
// triangular numbers.
TruncSeries jacobi_cube(const RingSpec& ring, std::int64_t N);

}  // namespace qpart
