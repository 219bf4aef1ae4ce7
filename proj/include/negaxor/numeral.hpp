#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace negaxor {

/// Arbitrary-precision signed integer; value space of every operator here.
using BigInt = boost::multiprecision::cpp_int;

/// A single digit in base b or base -b. Always in {0..b-1}.
using Digit = std::uint32_t;

/// Validated radix b >= 2, shared by numeral operators and machines.
///
/// b = 1 is rejected: its digit set {0} can only represent zero, so none
/// of the operators below are meaningful there.
class Radix {
public:
    explicit Radix(Digit b) : b_(b) {
        if (b_ < 2) {
            throw std::domain_error("radix must be at least 2");
        }
    }

    Digit value() const noexcept { return b_; }

    friend bool operator==(Radix, Radix) = default;

private:
    Digit b_;
};

/// Finite digit sequence over {0..b-1}, least-significant-first: digits()[i]
/// is the coefficient of the i-th power of b (or of -b, depending on which
/// codec produced it).
///
/// Canonical form carries no trailing zero entries; the empty sequence is
/// zero. The constructor strips trailing zeros, so every DigitString is
/// canonical. Display layers re-pad as needed.
class DigitString {
public:
    DigitString(std::vector<Digit> digits, Radix radix)
        : digits_(std::move(digits)), radix_(radix) {
        for (Digit d : digits_) {
            if (d >= radix_.value()) {
                throw std::domain_error("digit out of range for radix");
            }
        }
        while (!digits_.empty() && digits_.back() == 0) {
            digits_.pop_back();
        }
    }

    const std::vector<Digit>& digits() const noexcept { return digits_; }
    Radix radix() const noexcept { return radix_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }

    friend bool operator==(const DigitString&, const DigitString&) = default;

private:
    std::vector<Digit> digits_;
    Radix radix_;
};

/// Base-b expansion of n >= 0. Throws std::domain_error on negative input.
DigitString to_base(const BigInt& n, Radix r);

/// Base-(-b) expansion of any integer. Digits are in {0..b-1}; every
/// integer, positive or negative, has exactly one canonical expansion.
DigitString to_negabase(const BigInt& z, Radix r);

/// Evaluate sum of digits[i] * b^i.
BigInt from_base(const DigitString& d);

/// Evaluate sum of digits[i] * (-b)^i.
BigInt from_negabase(const DigitString& d);

/// Digit-wise sum mod b of the base-(-b) expansions of x and y, with the
/// resulting digit string evaluated in base +b. Defined for all integers;
/// the result is always non-negative.
BigInt oplus_neg(const BigInt& x, const BigInt& y, Radix r);

/// Digit-wise difference mod b of the base-b expansions of x and y,
/// evaluated in base b. Requires x, y >= 0. Coincides with bitwise XOR
/// when b = 2.
BigInt ominus(const BigInt& x, const BigInt& y, Radix r);

/// Replace every base-b digit a of n by min(a, 1) and re-evaluate in
/// base b. Idempotent; requires n >= 0.
BigInt double_bar(const BigInt& n, Radix r);

/// MSB-first rendering, zero-padded on the left to at least pad_width
/// positions. Contiguous digit characters for b <= 10, comma-separated
/// decimal digits above. Zero renders as "0".
std::string render_digits(const DigitString& d, std::size_t pad_width = 0);

}  // namespace negaxor
