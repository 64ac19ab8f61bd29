#include "qpart/products.hpp"

#include <stdexcept>
#include <string>

#include "ring_ops.hpp"

namespace qpart {

using detail::ExactOps;
using detail::ModOps;

namespace {

void require_order(std::int64_t N, const char* op) {
    if (N < 1) throw std::invalid_argument(std::string(op) + ": truncation order must be >= 1");
    detail::check_length(N, op);
}

template <class Ops>
auto pentagonal_coeffs(const Ops& ops, std::int64_t N) {
    std::vector<typename Ops::Elem> c(static_cast<std::size_t>(N));
    c[0] = ops.from_ll(1);
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t e1 = k * (3 * k - 1) / 2;
        if (e1 >= N) break;
        const long long sign = (k % 2 != 0) ? -1 : 1;
        c[static_cast<std::size_t>(e1)] = ops.from_ll(sign);
        const std::int64_t e2 = k * (3 * k + 1) / 2;
        if (e2 < N) c[static_cast<std::size_t>(e2)] = ops.from_ll(sign);
    }
    return c;
}

template <class Ops>
auto triangular_coeffs(const Ops& ops, std::int64_t N) {
    std::vector<typename Ops::Elem> c(static_cast<std::size_t>(N));
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t e = k * (k + 1) / 2;
        if (e >= N) break;
        const long long v = (k % 2 != 0) ? -(2 * k + 1) : (2 * k + 1);
        c[static_cast<std::size_t>(e)] = ops.from_ll(v);
    }
    return c;
}

// acc *= (1 - q^e), in place, truncated at acc.size().
template <class Ops>
void apply_sparse_factor(const Ops& ops, std::vector<typename Ops::Elem>& acc, std::int64_t e) {
    for (std::int64_t i = static_cast<std::int64_t>(acc.size()) - 1; i >= e; --i)
        ops.sub_assign(acc[static_cast<std::size_t>(i)], acc[static_cast<std::size_t>(i - e)]);
}

template <class Ops>
auto euler_ap_coeffs(const Ops& ops, std::int64_t a, std::int64_t m, std::int64_t N) {
    std::vector<typename Ops::Elem> c(static_cast<std::size_t>(N));
    c[0] = ops.from_ll(1);
    for (std::int64_t e = a; e < N; e += m) apply_sparse_factor(ops, c, e);
    return c;
}

}  // namespace

TruncSeries euler_phi(const RingSpec& ring, std::int64_t N) {
    require_order(N, "euler_phi");
    if (ring.is_modular())
        return TruncSeries(ring, 0, pentagonal_coeffs(ModOps{ring.modulus()}, N));
    return TruncSeries(ring, 0, pentagonal_coeffs(ExactOps{}, N));
}

TruncSeries euler_product_ap(const RingSpec& ring, std::int64_t a, std::int64_t m, std::int64_t N) {
    if (a < 1) throw std::invalid_argument("euler_product_ap: a must be >= 1");
    if (m < 1) throw std::invalid_argument("euler_product_ap: m must be >= 1");
    require_order(N, "euler_product_ap");
    if (ring.is_modular())
        return TruncSeries(ring, 0, euler_ap_coeffs(ModOps{ring.modulus()}, a, m, N));
    return TruncSeries(ring, 0, euler_ap_coeffs(ExactOps{}, a, m, N));
}

TruncSeries expand_product(const ProductSpec& spec, const RingSpec& ring, std::int64_t N) {
    require_order(N, "expand_product");
    const std::int64_t inner = N - spec.leading_power;
    if (inner < 1)
        throw std::invalid_argument("expand_product: order does not reach past the q^" +
                                    std::to_string(spec.leading_power) + " prefactor");
    TruncSeries acc = one_series(ring, inner);
    for (const ProductSpec::Factor& f : spec.factors) {
        TruncSeries p = euler_product_ap(ring, f.a, f.m, inner);
        if (f.exponent != 1) p = pow_int(p, f.exponent);
        acc = mul(acc, p);
    }
    return shift(acc, spec.leading_power);
}

TruncSeries pr_series(const RingSpec& ring, long long r, std::int64_t N) {
    if (r == 0) throw std::invalid_argument("pr_series: r must be nonzero");
    require_order(N, "pr_series");
    return pow_int(euler_phi(ring, N), -r);
}

TruncSeries rogers_ramanujan(const RingSpec& ring, std::int64_t N) {
    require_order(N, "rogers_ramanujan");
    return expand_product({{{2, 5, 1}, {3, 5, 1}, {1, 5, -1}, {4, 5, -1}}, 0}, ring, N);
}

TruncSeries eta_quotient(const RingSpec& ring, std::int64_t N) {
    require_order(N, "eta_quotient");
    return expand_product({{{1, 1, 1}, {25, 25, -1}}, -1}, ring, N);
}

TruncSeries jacobi_cube(const RingSpec& ring, std::int64_t N) {
    require_order(N, "jacobi_cube");
    if (ring.is_modular())
        return TruncSeries(ring, 0, triangular_coeffs(ModOps{ring.modulus()}, N));
    return TruncSeries(ring, 0, triangular_coeffs(ExactOps{}, N));
}

}  // namespace qpart
