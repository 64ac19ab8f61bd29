#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpart {

// Thrown when two series over different coefficient rings meet in one operation.
class RingMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a coefficient beyond the known truncation order is requested.
// A coefficient past the order is unknown, never silently zero.
class TruncationError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

enum class RingKind { ExactInteger, Modular };

// Largest accepted modulus. Residues of moduli below 2^32 multiply within a
// 64-bit word, and convolution sums of such products accumulate in 128 bits
// without intermediate reduction.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;

// Coefficient ring selector: exact integers, or integers modulo m (m >= 2).
class RingSpec {
public:
    static RingSpec exact_integers() noexcept { return RingSpec(RingKind::ExactInteger, 0); }

    static RingSpec modular(std::uint64_t modulus) {
        if (modulus < 2)
            throw std::invalid_argument("RingSpec: modulus must be >= 2, got " + std::to_string(modulus));
        if (modulus > kMaxModulus)
            throw std::invalid_argument("RingSpec: modulus " + std::to_string(modulus) +
                                        " exceeds the machine-word limit " + std::to_string(kMaxModulus));
        return RingSpec(RingKind::Modular, modulus);
    }

    RingKind kind() const noexcept { return kind_; }
    bool is_modular() const noexcept { return kind_ == RingKind::Modular; }

    std::uint64_t modulus() const {
        if (!is_modular()) throw std::logic_error("RingSpec: exact-integer ring has no modulus");
        return modulus_;
    }

    std::string describe() const {
        return is_modular() ? "Z/" + std::to_string(modulus_) : std::string("Z");
    }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;

private:
    RingSpec(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    RingKind kind_;
    std::uint64_t modulus_;  // 0 in the exact ring
};

}  // namespace qpart
