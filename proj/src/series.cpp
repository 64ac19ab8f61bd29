#include "qpart/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <utility>

#include "ring_ops.hpp"

namespace qpart {

using detail::ExactOps;
using detail::ModOps;

namespace {

// Largest exponent magnitude accepted by pow_int. Keeps k*(r+1) multipliers in
// 64 bits and bounds the size of f_0^r in the exact ring.
constexpr long long kMaxPowExponent = 1'000'000;

void require_same_ring(const TruncSeries& f, const TruncSeries& g, const char* op) {
    if (!(f.ring() == g.ring()))
        throw RingMismatchError(std::string(op) + ": ring mismatch (" + f.ring().describe() +
                                " vs " + g.ring().describe() + ")");
}

// Coefficient of q^e with the implicit zeros below the valuation.
template <class Vec>
const typename Vec::value_type& at_exponent(const Vec& c, std::int64_t valuation, std::int64_t e) {
    static const typename Vec::value_type zero{};
    if (e < valuation || e >= valuation + static_cast<std::int64_t>(c.size())) return zero;
    return c[static_cast<std::size_t>(e - valuation)];
}

template <class Ops>
auto combine_impl(const Ops& ops, const std::vector<typename Ops::Elem>& fc, std::int64_t vf,
                  const std::vector<typename Ops::Elem>& gc, std::int64_t vg, std::int64_t val,
                  std::int64_t len, bool subtract) {
    std::vector<typename Ops::Elem> out;
    out.reserve(static_cast<std::size_t>(len));
    for (std::int64_t i = 0; i < len; ++i) {
        const std::int64_t e = val + i;
        typename Ops::Elem v = at_exponent(fc, vf, e);
        if (subtract)
            ops.sub_assign(v, at_exponent(gc, vg, e));
        else
            ops.add_assign(v, at_exponent(gc, vg, e));
        out.push_back(std::move(v));
    }
    return out;
}

TruncSeries combine(const TruncSeries& f, const TruncSeries& g, bool subtract, const char* op) {
    require_same_ring(f, g, op);
    const std::int64_t val = std::min(f.valuation(), g.valuation());
    const std::int64_t len = std::min(f.order(), g.order()) - val;
    if (f.ring().is_modular()) {
        ModOps ops{f.ring().modulus()};
        return TruncSeries(f.ring(), val,
                           combine_impl(ops, f.mod_coeffs(), f.valuation(), g.mod_coeffs(),
                                        g.valuation(), val, len, subtract));
    }
    return TruncSeries(f.ring(), val,
                       combine_impl(ExactOps{}, f.exact_coeffs(), f.valuation(), g.exact_coeffs(),
                                    g.valuation(), val, len, subtract));
}

template <class Elem>
std::size_t count_leading_zeros(const std::vector<Elem>& c) {
    std::size_t t = 0;
    if constexpr (std::is_same_v<Elem, mpz_class>) {
        while (t < c.size() && mpz_sgn(c[t].get_mpz_t()) == 0) ++t;
    } else {
        while (t < c.size() && c[t] == 0) ++t;
    }
    return t;
}

}  // namespace

// --- TruncSeries ------------------------------------------------------------

TruncSeries::TruncSeries(RingSpec ring, std::int64_t valuation, ExactCoeffs coeffs)
    : ring_(ring), valuation_(valuation), coeffs_(std::move(coeffs)) {
    if (ring_.is_modular())
        throw std::invalid_argument("TruncSeries: exact coefficient storage in a modular ring");
    detail::check_length(static_cast<std::int64_t>(std::get<ExactCoeffs>(coeffs_).size()),
                         "TruncSeries");
}

TruncSeries::TruncSeries(RingSpec ring, std::int64_t valuation, ModCoeffs coeffs)
    : ring_(ring), valuation_(valuation), coeffs_(std::move(coeffs)) {
    if (!ring_.is_modular())
        throw std::invalid_argument("TruncSeries: modular coefficient storage in the exact ring");
    const auto& c = std::get<ModCoeffs>(coeffs_);
    detail::check_length(static_cast<std::int64_t>(c.size()), "TruncSeries");
    for (std::uint64_t v : c)
        if (v >= ring_.modulus())
            throw std::invalid_argument("TruncSeries: residue " + std::to_string(v) +
                                        " out of range for modulus " +
                                        std::to_string(ring_.modulus()));
}

std::int64_t TruncSeries::length() const noexcept {
    return std::visit([](const auto& c) { return static_cast<std::int64_t>(c.size()); }, coeffs_);
}

const ExactCoeffs& TruncSeries::exact_coeffs() const {
    if (ring_.is_modular())
        throw std::logic_error("TruncSeries: exact_coeffs() on a modular series");
    return std::get<ExactCoeffs>(coeffs_);
}

const ModCoeffs& TruncSeries::mod_coeffs() const {
    if (!ring_.is_modular()) throw std::logic_error("TruncSeries: mod_coeffs() on an exact series");
    return std::get<ModCoeffs>(coeffs_);
}

// --- construction -----------------------------------------------------------

TruncSeries make_series(const RingSpec& ring, std::int64_t valuation,
                        const std::vector<long long>& coeffs, std::int64_t order) {
    if (order - valuation != static_cast<std::int64_t>(coeffs.size()))
        throw std::invalid_argument("make_series: " + std::to_string(coeffs.size()) +
                                    " coefficients do not span [" + std::to_string(valuation) +
                                    ", " + std::to_string(order) + ")");
    if (ring.is_modular()) {
        ModOps ops{ring.modulus()};
        ModCoeffs c;
        c.reserve(coeffs.size());
        for (long long v : coeffs) c.push_back(ops.from_ll(v));
        return TruncSeries(ring, valuation, std::move(c));
    }
    ExactCoeffs c;
    c.reserve(coeffs.size());
    for (long long v : coeffs) c.emplace_back(static_cast<long>(v));
    return TruncSeries(ring, valuation, std::move(c));
}

TruncSeries make_series(const RingSpec& ring, std::int64_t valuation,
                        const std::vector<mpz_class>& coeffs, std::int64_t order) {
    if (order - valuation != static_cast<std::int64_t>(coeffs.size()))
        throw std::invalid_argument("make_series: " + std::to_string(coeffs.size()) +
                                    " coefficients do not span [" + std::to_string(valuation) +
                                    ", " + std::to_string(order) + ")");
    if (ring.is_modular()) {
        ModCoeffs c;
        c.reserve(coeffs.size());
        for (const mpz_class& v : coeffs) c.push_back(mpz_fdiv_ui(v.get_mpz_t(), ring.modulus()));
        return TruncSeries(ring, valuation, std::move(c));
    }
    return TruncSeries(ring, valuation, coeffs);
}

TruncSeries zero_series(const RingSpec& ring, std::int64_t order) {
    if (order < 0) throw std::invalid_argument("zero_series: negative order");
    if (ring.is_modular()) return TruncSeries(ring, 0, ModCoeffs(static_cast<std::size_t>(order)));
    return TruncSeries(ring, 0, ExactCoeffs(static_cast<std::size_t>(order)));
}

TruncSeries one_series(const RingSpec& ring, std::int64_t order) {
    if (order < 0) throw std::invalid_argument("one_series: negative order");
    if (ring.is_modular()) {
        ModCoeffs c(static_cast<std::size_t>(order));
        if (order > 0) c[0] = 1;
        return TruncSeries(ring, 0, std::move(c));
    }
    ExactCoeffs c(static_cast<std::size_t>(order));
    if (order > 0) c[0] = 1;
    return TruncSeries(ring, 0, std::move(c));
}

TruncSeries monomial(const RingSpec& ring, long long c, std::int64_t e, std::int64_t order) {
    if (order <= e) throw std::invalid_argument("monomial: order must exceed the exponent");
    std::vector<long long> coeffs(static_cast<std::size_t>(order - e));
    coeffs[0] = c;
    return make_series(ring, e, coeffs, order);
}

// --- arithmetic -------------------------------------------------------------

TruncSeries add(const TruncSeries& f, const TruncSeries& g) { return combine(f, g, false, "add"); }

TruncSeries sub(const TruncSeries& f, const TruncSeries& g) { return combine(f, g, true, "sub"); }

TruncSeries negate(const TruncSeries& f) {
    if (f.ring().is_modular()) {
        ModOps ops{f.ring().modulus()};
        ModCoeffs out;
        out.reserve(f.mod_coeffs().size());
        for (std::uint64_t v : f.mod_coeffs()) out.push_back(ops.neg(v));
        return TruncSeries(f.ring(), f.valuation(), std::move(out));
    }
    ExactCoeffs out;
    out.reserve(f.exact_coeffs().size());
    for (const mpz_class& v : f.exact_coeffs()) out.push_back(-v);
    return TruncSeries(f.ring(), f.valuation(), std::move(out));
}

TruncSeries mul(const TruncSeries& f, const TruncSeries& g) {
    require_same_ring(f, g, "mul");
    const std::int64_t val = f.valuation() + g.valuation();
    const std::size_t len = static_cast<std::size_t>(std::min(f.length(), g.length()));
    if (f.ring().is_modular()) {
        ModOps ops{f.ring().modulus()};
        return TruncSeries(f.ring(), val, detail::convolve(ops, f.mod_coeffs(), g.mod_coeffs(), len));
    }
    return TruncSeries(f.ring(), val,
                       detail::convolve(ExactOps{}, f.exact_coeffs(), g.exact_coeffs(), len));
}

namespace {

[[noreturn]] void throw_non_unit_lead(const TruncSeries& f, const char* op) {
    std::string lead = "none stored";
    if (f.length() > 0)
        lead = f.ring().is_modular() ? std::to_string(f.mod_coeffs()[0])
                                     : f.exact_coeffs()[0].get_str();
    throw std::invalid_argument(std::string(op) + ": leading coefficient " + lead +
                                " at q^" + std::to_string(f.valuation()) + " is not a unit in " +
                                f.ring().describe());
}

bool has_unit_lead(const TruncSeries& f) {
    if (f.length() == 0) return false;
    if (f.ring().is_modular())
        return ModOps{f.ring().modulus()}.is_unit(f.mod_coeffs()[0]);
    return ExactOps{}.is_unit(f.exact_coeffs()[0]);
}

}  // namespace

TruncSeries invert(const TruncSeries& f) {
    if (!has_unit_lead(f)) throw_non_unit_lead(f, "invert");
    if (f.ring().is_modular()) {
        ModOps ops{f.ring().modulus()};
        return TruncSeries(f.ring(), -f.valuation(), detail::invert_kernel(ops, f.mod_coeffs()));
    }
    return TruncSeries(f.ring(), -f.valuation(), detail::invert_kernel(ExactOps{}, f.exact_coeffs()));
}

TruncSeries pow_int(const TruncSeries& f, long long r) {
    if (r > kMaxPowExponent || r < -kMaxPowExponent)
        throw std::invalid_argument("pow_int: |exponent| exceeds engine limit " +
                                    std::to_string(kMaxPowExponent));
    if (r == 0) return one_series(f.ring(), f.length());

    if (r < 0) {
        if (!has_unit_lead(f)) throw_non_unit_lead(f, "pow_int");
        if (f.ring().is_modular()) {
            ModOps ops{f.ring().modulus()};
            auto inv = detail::invert_kernel(ops, f.mod_coeffs());
            return TruncSeries(f.ring(), r * f.valuation(),
                               detail::binexp_pow(ops, std::move(inv),
                                                  static_cast<unsigned long long>(-r)));
        }
        return TruncSeries(f.ring(), r * f.valuation(), detail::miller_pow(f.exact_coeffs(), r));
    }

    // r >= 1. Stored leading zeros move into the valuation of the result.
    return std::visit(
        [&](const auto& c) {
            using Vec = std::decay_t<decltype(c)>;
            const std::size_t t = count_leading_zeros(c);
            if (t == c.size()) {
                // f is zero below its order, so f^r is zero below r*order.
                const std::int64_t val = r * f.valuation();
                const std::int64_t len = r * f.length();
                detail::check_length(len, "pow_int");
                return TruncSeries(f.ring(), val, Vec(static_cast<std::size_t>(len)));
            }
            Vec base(c.begin() + static_cast<std::ptrdiff_t>(t), c.end());
            const std::int64_t val = r * (f.valuation() + static_cast<std::int64_t>(t));
            if constexpr (std::is_same_v<Vec, ModCoeffs>) {
                ModOps ops{f.ring().modulus()};
                return TruncSeries(f.ring(), val,
                                   detail::binexp_pow(ops, std::move(base),
                                                      static_cast<unsigned long long>(r)));
            } else {
                return TruncSeries(f.ring(), val, detail::miller_pow(base, r));
            }
        },
        f.storage());
}

// --- reindexing -------------------------------------------------------------

TruncSeries substitute_power(const TruncSeries& f, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("substitute_power: k must be >= 1");
    if (k == 1) return f;
    detail::check_length(k * f.length(), "substitute_power");
    return std::visit(
        [&](const auto& c) {
            std::decay_t<decltype(c)> out(static_cast<std::size_t>(k) * c.size());
            for (std::size_t i = 0; i < c.size(); ++i) out[static_cast<std::size_t>(k) * i] = c[i];
            return TruncSeries(f.ring(), k * f.valuation(), std::move(out));
        },
        f.storage());
}

TruncSeries shift(const TruncSeries& f, std::int64_t d) {
    return std::visit(
        [&](const auto& c) { return TruncSeries(f.ring(), f.valuation() + d, c); }, f.storage());
}

TruncSeries component(const TruncSeries& f, std::int64_t m, std::int64_t j) {
    if (m < 1) throw std::invalid_argument("component: m must be >= 1");
    const std::int64_t jm = detail::floor_mod(j, m);
    return std::visit(
        [&](const auto& c) {
            auto out = c;
            using Elem = typename std::decay_t<decltype(out)>::value_type;
            for (std::size_t i = 0; i < out.size(); ++i)
                if (detail::floor_mod(f.valuation() + static_cast<std::int64_t>(i), m) != jm)
                    out[i] = Elem{};
            return TruncSeries(f.ring(), f.valuation(), std::move(out));
        },
        f.storage());
}

TruncSeries dissect(const TruncSeries& f, std::int64_t m, std::int64_t j) {
    if (m < 1) throw std::invalid_argument("dissect: m must be >= 1");
    if (j < 0 || j >= m)
        throw std::invalid_argument("dissect: residue j must satisfy 0 <= j < m");
    if (f.valuation() < 0)
        throw std::invalid_argument(
            "dissect: Laurent series (valuation < 0) are not reindexed; use component");
    const std::int64_t len = detail::ceil_div(f.order() - j, m);
    return std::visit(
        [&](const auto& c) {
            std::decay_t<decltype(c)> out(static_cast<std::size_t>(len));
            for (std::int64_t n = 0; n < len; ++n) {
                const std::int64_t e = m * n + j;
                if (e >= f.valuation()) out[static_cast<std::size_t>(n)] =
                    c[static_cast<std::size_t>(e - f.valuation())];
            }
            return TruncSeries(f.ring(), 0, std::move(out));
        },
        f.storage());
}

TruncSeries reduce_mod(const TruncSeries& f, std::uint64_t m) {
    if (f.ring().is_modular())
        throw std::invalid_argument("reduce_mod: input must live in the exact-integer ring");
    const RingSpec ring = RingSpec::modular(m);
    ModCoeffs out;
    out.reserve(f.exact_coeffs().size());
    for (const mpz_class& v : f.exact_coeffs()) out.push_back(mpz_fdiv_ui(v.get_mpz_t(), m));
    return TruncSeries(ring, f.valuation(), std::move(out));
}

// --- inspection -------------------------------------------------------------

mpz_class coeff(const TruncSeries& f, std::int64_t e) {
    if (e >= f.order())
        throw TruncationError("coeff: exponent " + std::to_string(e) +
                              " is at or beyond the truncation order " + std::to_string(f.order()));
    if (e < f.valuation()) return mpz_class(0);
    const std::size_t i = static_cast<std::size_t>(e - f.valuation());
    if (f.ring().is_modular()) return mpz_class(static_cast<unsigned long>(f.mod_coeffs()[i]));
    return f.exact_coeffs()[i];
}

bool first_difference(const TruncSeries& f, const TruncSeries& g, std::int64_t limit,
                      CoeffMismatch& out) {
    require_same_ring(f, g, "first_difference");
    if (f.order() < limit || g.order() < limit)
        throw TruncationError("comparison up to " + std::to_string(limit) +
                              " needs orders >= " + std::to_string(limit) + ", have " +
                              std::to_string(f.order()) + " and " + std::to_string(g.order()));
    const std::int64_t start = std::min(f.valuation(), g.valuation());
    if (f.ring().is_modular()) {
        ModOps ops{f.ring().modulus()};
        for (std::int64_t e = start; e < limit; ++e) {
            std::uint64_t a = at_exponent(f.mod_coeffs(), f.valuation(), e);
            std::uint64_t b = at_exponent(g.mod_coeffs(), g.valuation(), e);
            if (a != b) {
                ops.sub_assign(a, b);
                out = CoeffMismatch{e, mpz_class(static_cast<unsigned long>(a))};
                return true;
            }
        }
        return false;
    }
    for (std::int64_t e = start; e < limit; ++e) {
        const mpz_class& a = at_exponent(f.exact_coeffs(), f.valuation(), e);
        const mpz_class& b = at_exponent(g.exact_coeffs(), g.valuation(), e);
        if (a != b) {
            out = CoeffMismatch{e, mpz_class(a - b)};
            return true;
        }
    }
    return false;
}

bool equal_up_to(const TruncSeries& f, const TruncSeries& g, std::int64_t limit) {
    CoeffMismatch scratch;
    return !first_difference(f, g, limit, scratch);
}

std::string to_string(const TruncSeries& f) {
    std::ostringstream os;
    int printed = 0;
    for (std::int64_t e = f.valuation(); e < f.order() && printed < 8; ++e) {
        mpz_class c = coeff(f, e);
        if (c == 0) continue;
        if (printed == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpz_class a = abs(c);
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        ++printed;
    }
    if (printed == 0) os << "0";
    if (printed == 8) os << " + ...";
    os << " + O(q^" << f.order() << ") over " << f.ring().describe();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& f) { return os << to_string(f); }

}  // namespace qpart

// --- exact power recurrence ---------------------------------------------------

namespace qpart::detail {

std::vector<mpz_class> miller_pow(const std::vector<mpz_class>& f, long long r) {
    const mpz_class& lead = f[0];
    const std::size_t len = f.size();
    std::vector<mpz_class> g(len);
    if (r >= 0) {
        mpz_pow_ui(g[0].get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(r));
    } else {
        g[0] = (r % 2 == 0) ? mpz_class(1) : lead;  // callers guarantee lead = +-1 here
    }
    const auto supp = support_from_one(ExactOps{}, f);
    mpz_class sum, term, divisor;
    for (std::size_t n = 1; n < len; ++n) {
        sum = 0;
        for (std::int64_t k : supp) {
            if (k > static_cast<std::int64_t>(n)) break;
            mpz_mul(term.get_mpz_t(), f[static_cast<std::size_t>(k)].get_mpz_t(),
                    g[n - static_cast<std::size_t>(k)].get_mpz_t());
            const long long w = k * (r + 1) - static_cast<long long>(n);
            if (w > 0)
                mpz_addmul_ui(sum.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(w));
            else if (w < 0)
                mpz_submul_ui(sum.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(-w));
        }
        if (mpz_sgn(sum.get_mpz_t()) == 0) continue;  // g[n] stays 0
        mpz_mul_ui(divisor.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(n));
        if (!mpz_divisible_p(sum.get_mpz_t(), divisor.get_mpz_t()))
            throw std::logic_error(
                "miller_pow: inexact division by n*f0 — internal consistency failure");
        mpz_divexact(g[n].get_mpz_t(), sum.get_mpz_t(), divisor.get_mpz_t());
    }
    return g;
}

}  // namespace qpart::detail
