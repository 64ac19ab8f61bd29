#include "qpart/oracle.hpp"

#include <stdexcept>
#include <string>

namespace qpart {

namespace {

void check_oracle_args(std::int64_t n, std::int64_t bound, const char* op) {
    if (n < 0) throw std::invalid_argument(std::string(op) + ": n must be non-negative");
    if (n > bound)
        throw std::invalid_argument(std::string(op) + ": n = " + std::to_string(n) +
                                    " exceeds the oracle bound " + std::to_string(bound) +
                                    "; use the series engine (pr_series) instead");
}

// Backtracking over part values: at each used value v pick how many of its
// |r| colours appear (each (v, colour) pair at most once), weighting the pick
// by binomial(|r|, s) and tracking the parity of the total part count.
struct SignedSearch {
    std::int64_t colours;
    mpz_class even, odd;
    mpz_class binom;

    void run(std::int64_t min_value, std::int64_t remaining, bool odd_size, const mpz_class& mult) {
        if (remaining == 0) {
            (odd_size ? odd : even) += mult;
            return;
        }
        for (std::int64_t v = min_value; v <= remaining; ++v) {
            const std::int64_t smax = std::min<std::int64_t>(colours, remaining / v);
            for (std::int64_t s = 1; s <= smax; ++s) {
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(colours),
                             static_cast<unsigned long>(s));
                run(v + 1, remaining - s * v, odd_size ^ (s % 2 != 0), mpz_class(mult * binom));
            }
        }
    }
};

}  // namespace

OracleCount count_colour_partitions(std::int64_t n, long long r, std::int64_t bound) {
    check_oracle_args(n, bound, "count_colour_partitions");
    if (r < 1) throw std::invalid_argument("count_colour_partitions: r must be >= 1");
    std::vector<mpz_class> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (std::int64_t v = 1; v <= n; ++v)
        for (long long colour = 0; colour < r; ++colour)
            for (std::int64_t j = v; j <= n; ++j)
                ways[static_cast<std::size_t>(j)] += ways[static_cast<std::size_t>(j - v)];
    OracleCount out;
    out.n = n;
    out.r = r;
    out.value = ways[static_cast<std::size_t>(n)];
    return out;
}

OracleCount count_signed_distinct(std::int64_t n, long long r, std::int64_t bound) {
    check_oracle_args(n, bound, "count_signed_distinct");
    if (r > -1) throw std::invalid_argument("count_signed_distinct: r must be <= -1");
    SignedSearch search{-r, 0, 0, 0};
    search.run(1, n, false, mpz_class(1));
    OracleCount out;
    out.n = n;
    out.r = r;
    out.even_count = search.even;
    out.odd_count = search.odd;
    out.value = search.even - search.odd;
    return out;
}

std::vector<mpz_class> classical_p_table(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("classical_p: n must be non-negative");
    if (n > kClassicalPBound)
        throw std::invalid_argument("classical_p: n exceeds the bound " +
                                    std::to_string(kClassicalPBound));
    std::vector<mpz_class> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (std::int64_t v = 1; v <= n; ++v)
        for (std::int64_t j = v; j <= n; ++j)
            ways[static_cast<std::size_t>(j)] += ways[static_cast<std::size_t>(j - v)];
    return ways;
}

mpz_class classical_p(std::int64_t n) { return classical_p_table(n).back(); }

}  // namespace qpart
