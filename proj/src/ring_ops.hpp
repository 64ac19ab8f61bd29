#pragma once

// Private coefficient-ring kernels shared by the series and product code.
// Elem is the stored coefficient type, Acc an accumulator wide enough to sum
// length-many products without overflow (mpz for exact, 128-bit for modular).

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpart::detail {

inline constexpr std::int64_t kMaxSeriesLength = 20'000'000;

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// ceil(a / b) for b >= 1 and any sign of a.
inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

inline void check_length(std::int64_t len, const char* what) {
    if (len < 0 || len > kMaxSeriesLength)
        throw std::invalid_argument(std::string(what) + ": requested series length " +
                                    std::to_string(len) + " exceeds the engine limit " +
                                    std::to_string(kMaxSeriesLength));
}

struct ExactOps {
    using Elem = mpz_class;
    using Acc = mpz_class;

    Elem from_ll(long long v) const { return mpz_class(static_cast<long>(v)); }
    bool is_zero(const Elem& a) const { return mpz_sgn(a.get_mpz_t()) == 0; }
    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
    Elem inv_unit(const Elem& a) const { return a; }  // +-1 are self-inverse
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    void add_assign(Elem& a, const Elem& b) const { a += b; }
    void sub_assign(Elem& a, const Elem& b) const { a -= b; }

    void acc_addmul(Acc& s, const Elem& a, const Elem& b) const {
        mpz_addmul(s.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    }
    Elem acc_reduce(Acc& s) const { return std::move(s); }
};

struct ModOps {
    using Elem = std::uint64_t;
    using Acc = unsigned __int128;

    std::uint64_t m;  // 2 <= m < 2^32, so Elem products fit 64 bits

    Elem from_ll(long long v) const {
        long long r = v % static_cast<long long>(m);
        if (r < 0) r += static_cast<long long>(m);
        return static_cast<Elem>(r);
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_unit(Elem a) const { return std::gcd(a, m) == 1; }
    Elem inv_unit(Elem a) const;
    Elem neg(Elem a) const { return a == 0 ? 0 : m - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % m; }
    void add_assign(Elem& a, Elem b) const {
        a += b;
        if (a >= m) a -= m;
    }
    void sub_assign(Elem& a, Elem b) const { a = a >= b ? a - b : a + m - b; }

    void acc_addmul(Acc& s, Elem a, Elem b) const { s += static_cast<Acc>(a) * b; }
    Elem acc_reduce(const Acc& s) const { return static_cast<Elem>(s % m); }
};

// Extended Euclid. Callers check is_unit first; a non-unit here is a misuse.
inline ModOps::Elem ModOps::inv_unit(Elem a) const {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1)
        throw std::invalid_argument("modular inverse of non-unit residue " + std::to_string(a) +
                                    " modulo " + std::to_string(m));
    return static_cast<Elem>(t < 0 ? t + static_cast<std::int64_t>(m) : t);
}

// Schoolbook convolution of the first out_len coefficients, with a zero-skip
// on the left operand (bit-identical to the plain double loop).
template <class Ops>
std::vector<typename Ops::Elem> convolve(const Ops& ops, const std::vector<typename Ops::Elem>& a,
                                         const std::vector<typename Ops::Elem>& b,
                                         std::size_t out_len) {
    std::vector<typename Ops::Acc> acc(out_len);
    for (std::size_t j = 0; j < a.size() && j < out_len; ++j) {
        if (ops.is_zero(a[j])) continue;
        const std::size_t kmax = std::min(b.size(), out_len - j);
        for (std::size_t k = 0; k < kmax; ++k) ops.acc_addmul(acc[j + k], a[j], b[k]);
    }
    std::vector<typename Ops::Elem> out;
    out.reserve(out_len);
    for (auto& s : acc) out.push_back(ops.acc_reduce(s));
    return out;
}

inline std::vector<std::int64_t> support_from_one(const auto& ops, const auto& f) {
    std::vector<std::int64_t> supp;
    for (std::size_t k = 1; k < f.size(); ++k)
        if (!ops.is_zero(f[k])) supp.push_back(static_cast<std::int64_t>(k));
    return supp;
}

// g with f*g = 1 to f.size() coefficients. Requires f[0] to be a unit.
// g_n = -f_0^{-1} * sum_{k in supp(f), k<=n} f_k g_{n-k}.
template <class Ops>
std::vector<typename Ops::Elem> invert_kernel(const Ops& ops,
                                              const std::vector<typename Ops::Elem>& f) {
    const auto inv0 = ops.inv_unit(f[0]);
    const auto supp = support_from_one(ops, f);
    std::vector<typename Ops::Elem> g(f.size());
    g[0] = inv0;
    for (std::size_t n = 1; n < f.size(); ++n) {
        typename Ops::Acc s{};
        for (std::int64_t k : supp) {
            if (k > static_cast<std::int64_t>(n)) break;
            ops.acc_addmul(s, f[k], g[n - k]);
        }
        auto t = ops.acc_reduce(s);
        g[n] = ops.neg(ops.mul(inv0, t));
    }
    return g;
}

// f^r over the exact integers by Miller's recurrence:
//   n * f_0 * g_n = sum_{k=1..n} (k*(r+1) - n) * f_k * g_{n-k},  g_0 = f_0^r.
// Each division is exact because f^r has integer coefficients; a failed
// divisibility check is an internal bug, never bad input. Requires f_0 != 0,
// and |f_0| = 1 when r < 0.
std::vector<mpz_class> miller_pow(const std::vector<mpz_class>& f, long long r);

// Truncated binary exponentiation, e >= 0, over f.size() coefficients.
template <class Ops>
std::vector<typename Ops::Elem> binexp_pow(const Ops& ops, std::vector<typename Ops::Elem> base,
                                           unsigned long long e) {
    const std::size_t len = base.size();
    std::vector<typename Ops::Elem> result(len);
    if (len > 0) result[0] = ops.from_ll(1);
    while (e > 0) {
        if (e & 1) result = convolve(ops, result, base, len);
        e >>= 1;
        if (e > 0) base = convolve(ops, base, base, len);
    }
    return result;
}

}  // namespace qpart::detail
