#include "qpart/products.hpp"
#include <chrono>
#include <iostream>
using namespace qpart;
using Clock = std::chrono::steady_clock;
int main() {
    auto t0 = Clock::now();
    auto m5 = pr_series(RingSpec::modular(5), 1, 100000);
    auto t1 = Clock::now();
    std::cout << "mod5 1e5 terms: " << std::chrono::duration<double>(t1 - t0).count() << "s, p(99999)%5=" << m5.mod_coeffs()[99999] << "\n";
    auto ex = pr_series(RingSpec::exact_integers(), 1, 5000);
    auto t2 = Clock::now();
    std::cout << "exact 5e3 terms: " << std::chrono::duration<double>(t2 - t1).count() << "s, digits(p(4999))=" << ex.exact_coeffs()[4999].get_str().size() << "\n";
    // heavier sanity: a genuinely dense modular product at 1e5
    auto d = mul(m5, m5);
    auto t3 = Clock::now();
    std::cout << "dense 1e5 schoolbook mul: " << std::chrono::duration<double>(t3 - t2).count() << "s\n";
    // theorem-suite scale check: T4/T5 depth ~1050 across lambda in [-2,2]
    return 0;
}
