#include "qpart/congruence.hpp"

#include <array>
#include <stdexcept>

#include "qpart/products.hpp"
#include "ring_ops.hpp"

namespace qpart {

namespace {

std::int64_t required_depth(const CongruenceClaim& claim, std::int64_t n_max, const char* op) {
    const __int128 depth = static_cast<__int128>(claim.A) * n_max + claim.B + 1;
    if (depth > detail::kMaxSeriesLength)
        throw std::invalid_argument(std::string(op) + ": requested series order " +
                                    std::to_string(static_cast<long long>(depth)) +
                                    " is infeasible (limit " +
                                    std::to_string(detail::kMaxSeriesLength) + ")");
    return static_cast<std::int64_t>(depth);
}

void validate_claim(const CongruenceClaim& claim) {
    if (claim.r == 0) throw std::invalid_argument("verify_claim: r must be nonzero");
    if (claim.A < 1) throw std::invalid_argument("verify_claim: A must be >= 1");
    if (claim.B < 0 || claim.B >= claim.A)
        throw std::invalid_argument("verify_claim: B must satisfy 0 <= B < A");
    RingSpec::modular(claim.M);  // validates the modulus range
}

VerifyReport identity_report(std::string subject, std::int64_t depth, const TruncSeries& lhs,
                             const TruncSeries& rhs) {
    VerifyReport report;
    report.subject = std::move(subject);
    report.depth = depth;
    CoeffMismatch mismatch;
    if (first_difference(lhs, rhs, depth, mismatch)) {
        report.status = VerifyStatus::Counterexample;
        report.witness = Witness{mismatch.exponent, mismatch.difference};
    }
    return report;
}

}  // namespace

std::string describe(const CongruenceClaim& c) {
    return "p_{" + std::to_string(c.r) + "}(" + std::to_string(c.A) + "n+" + std::to_string(c.B) +
           ") == 0 (mod " + std::to_string(c.M) + ")";
}

VerifyReport verify_claim(const CongruenceClaim& claim, std::int64_t n_max) {
    validate_claim(claim);
    if (n_max < 0) throw std::invalid_argument("verify_claim: n_max must be >= 0");
    const std::int64_t depth = required_depth(claim, n_max, "verify_claim");

    const TruncSeries series = pr_series(RingSpec::modular(claim.M), claim.r, depth);
    const TruncSeries progression = dissect(series, claim.A, claim.B);
    const ModCoeffs& residues = progression.mod_coeffs();

    VerifyReport report;
    report.subject = describe(claim);
    report.claim = claim;
    report.depth = n_max;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const std::uint64_t residue = residues[static_cast<std::size_t>(n)];
        if (residue != 0) {
            report.status = VerifyStatus::Counterexample;
            report.witness = Witness{n, mpz_class(static_cast<unsigned long>(residue))};
            break;
        }
    }
    return report;
}

std::vector<CongruenceClaim> theorem_claims(TheoremId id, long long lambda) {
    long long r = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> targets;
    switch (id) {
        case TheoremId::T1:
            r = -(5 * lambda + 1);
            targets = {{5, 3}, {5, 4}};
            break;
        case TheoremId::T2:
            r = -(5 * lambda + 3);
            targets = {{5, 2}, {5, 3}, {5, 4}};
            break;
        case TheoremId::T3:
            r = -(5 * lambda + 4);
            targets = {{5, 4}};
            break;
        case TheoremId::T4:
            r = -(25 * lambda + 1);
            for (std::int64_t l = 1; l <= 4; ++l) targets.emplace_back(25, 5 * l + 1);
            break;
        case TheoremId::T5:
            r = -(25 * lambda + 2);
            for (std::int64_t l = 1; l <= 4; ++l) targets.emplace_back(25, 5 * l + 2);
            break;
    }
    std::vector<CongruenceClaim> claims;
    if (r == 0) return claims;  // guard; unreachable for these linear forms
    claims.reserve(targets.size());
    for (auto [A, B] : targets) claims.push_back({r, A, B, 5});
    return claims;
}

std::vector<VerifyReport> verify_theorem(TheoremId id, long long lambda_min, long long lambda_max,
                                         std::int64_t n_max) {
    if (lambda_min > lambda_max)
        throw std::invalid_argument("verify_theorem: empty lambda range");
    std::vector<VerifyReport> reports;
    for (long long lambda = lambda_min; lambda <= lambda_max; ++lambda)
        for (const CongruenceClaim& claim : theorem_claims(id, lambda))
            reports.push_back(verify_claim(claim, n_max));
    return reports;
}

VerifyReport check_identity_dissection5(std::int64_t N) {
    if (N < 3) throw std::invalid_argument("check_identity_dissection5: N must be >= 3");
    const RingSpec ring = RingSpec::exact_integers();
    const std::int64_t inner = N / 5 + 2;  // 5*inner > N

    const TruncSeries quotient = rogers_ramanujan(ring, inner);
    const TruncSeries r5 = substitute_power(quotient, 5);
    const TruncSeries r5_inv = substitute_power(invert(quotient), 5);
    const TruncSeries lhs = euler_phi(ring, N);
    const TruncSeries rhs = mul(euler_product_ap(ring, 25, 25, N),
                                sub(sub(r5, monomial(ring, 1, 1, 5 * inner)), shift(r5_inv, 2)));
    return identity_report("dissection5", N, lhs, rhs);
}

VerifyReport check_lemma_h5(int k, std::int64_t N) {
    if (k < 1 || k > 4) throw std::invalid_argument("check_lemma_h5: k must lie in [1,4]");
    if (N < 5) throw std::invalid_argument("check_lemma_h5: N must be >= 5");
    static constexpr std::array<long, 4> kConstants = {-1, -1, 5, -5};

    const RingSpec ring = RingSpec::exact_integers();
    const TruncSeries eta_pow = pow_int(eta_quotient(ring, N + k), k);  // order >= N+1
    const TruncSeries comp = component(eta_pow, 5, 0);

    VerifyReport report;
    report.subject = "lemma-h5 k=" + std::to_string(k);
    report.depth = N;
    const mpz_class expected_at_zero(kConstants[static_cast<std::size_t>(k - 1)]);
    for (std::int64_t e = comp.valuation(); e < N; ++e) {
        const mpz_class got = coeff(comp, e);
        const mpz_class expected = (e == 0) ? expected_at_zero : mpz_class(0);
        if (got != expected) {
            report.status = VerifyStatus::Counterexample;
            report.witness = Witness{e, mpz_class(got - expected)};
            break;
        }
    }
    return report;
}

VerifyReport check_frobenius(long long p, std::int64_t N) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("check_frobenius: " + std::to_string(p) +
                                    " is not prime; the identity only holds at primes");
    if (N < 1) throw std::invalid_argument("check_frobenius: N must be >= 1");
    const RingSpec ring = RingSpec::exact_integers();
    const std::uint64_t m = static_cast<std::uint64_t>(p);
    const TruncSeries lhs = reduce_mod(pow_int(euler_phi(ring, N), p), m);
    const TruncSeries rhs =
        reduce_mod(substitute_power(euler_phi(ring, detail::ceil_div(N, p)), p), m);
    return identity_report("frobenius p=" + std::to_string(p), N, lhs, rhs);
}

VerifyReport check_jacobi(std::int64_t N) {
    if (N < 1) throw std::invalid_argument("check_jacobi: N must be >= 1");
    const RingSpec ring = RingSpec::exact_integers();
    return identity_report("jacobi", N, jacobi_cube(ring, N), pow_int(euler_phi(ring, N), 3));
}

std::vector<VerifyReport> check_ramanujan_pm4(const std::vector<long long>& w_list,
                                              std::int64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("check_ramanujan_pm4: n_max must be >= 1");
    std::vector<VerifyReport> reports;
    reports.reserve(w_list.size());
    for (long long w : w_list) {
        if (w < 5 || w % 6 != 5 || !is_prime_u64(static_cast<std::uint64_t>(w)))
            throw std::invalid_argument("check_ramanujan_pm4: " + std::to_string(w) +
                                        " is not a prime congruent to 5 mod 6");
        // p_{-4}(w*n - (w+1)/6) for n >= 1 is the progression w*n' + (w - (w+1)/6).
        const CongruenceClaim claim{-4, w, w - (w + 1) / 6, static_cast<std::uint64_t>(w)};
        VerifyReport report = verify_claim(claim, n_max - 1);
        report.subject = "p_{-4}(" + std::to_string(w) + "n-" + std::to_string((w + 1) / 6) +
                         ") == 0 (mod " + std::to_string(w) + ")";
        reports.push_back(std::move(report));
    }
    return reports;
}

std::vector<CongruenceClaim> scan(long long r_min, long long r_max, std::uint64_t M,
                                  std::int64_t A, std::int64_t n_max) {
    if (r_min > r_max) throw std::invalid_argument("scan: empty r range");
    if (r_min == 0 && r_max == 0)
        throw std::invalid_argument("scan: r range contains only 0");
    if (A < 2) throw std::invalid_argument("scan: A must be >= 2");
    if (n_max < 10)
        throw std::invalid_argument("scan: n_max must be >= 10 to avoid vacuous candidates");
    const RingSpec ring = RingSpec::modular(M);

    std::vector<CongruenceClaim> found;
    for (long long r = r_min; r <= r_max; ++r) {
        if (r == 0) continue;
        const CongruenceClaim widest{r, A, A - 1, M};
        const std::int64_t depth = required_depth(widest, n_max, "scan");
        const TruncSeries series = pr_series(ring, r, depth);
        for (std::int64_t B = 0; B < A; ++B) {
            const TruncSeries progression = dissect(series, A, B);
            const ModCoeffs& residues = progression.mod_coeffs();
            bool all_zero = true;
            for (std::int64_t n = 0; n <= n_max && all_zero; ++n)
                all_zero = residues[static_cast<std::size_t>(n)] == 0;
            if (all_zero) found.push_back({r, A, B, M});
        }
    }
    return found;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace qpart
