#include <negaxor/numeral.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace negaxor {

namespace {

// Digit-wise combination of two LSB-first digit vectors, zero-padded to the
// longer length. combine receives values < b and must return a value < b.
template <typename F>
std::vector<Digit> zip_digits(const std::vector<Digit>& a,
                              const std::vector<Digit>& b, F combine) {
    std::vector<Digit> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Digit x = i < a.size() ? a[i] : 0;
        const Digit y = i < b.size() ? b[i] : 0;
        out[i] = combine(x, y);
    }
    return out;
}

}  // namespace

DigitString to_base(const BigInt& n, Radix r) {
    if (n < 0) {
        throw std::domain_error("to_base requires a non-negative value");
    }
    const Digit b = r.value();
    std::vector<Digit> digits;
    BigInt v = n;
    while (v != 0) {
        digits.push_back((v % b).convert_to<Digit>());
        v /= b;
    }
    return DigitString(std::move(digits), r);
}

DigitString to_negabase(const BigInt& z, Radix r) {
    // Euclidean step: take the least non-negative residue mod b, then divide
    // the remainder-free part by -b. Terminates for every integer.
    const BigInt b = r.value();
    std::vector<Digit> digits;
    BigInt v = z;
    while (v != 0) {
        BigInt rem = v % b;
        if (rem < 0) {
            rem += b;
        }
        digits.push_back(rem.convert_to<Digit>());
        v = (v - rem) / -b;
    }
    return DigitString(std::move(digits), r);
}

BigInt from_base(const DigitString& d) {
    const BigInt b = d.radix().value();
    BigInt v = 0;
    const auto& digits = d.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v = v * b + *it;
    }
    return v;
}

BigInt from_negabase(const DigitString& d) {
    const BigInt nb = -BigInt(d.radix().value());
    BigInt v = 0;
    const auto& digits = d.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v = v * nb + *it;
    }
    return v;
}

BigInt oplus_neg(const BigInt& x, const BigInt& y, Radix r) {
    const std::uint64_t b = r.value();
    const DigitString xs = to_negabase(x, r);
    const DigitString ys = to_negabase(y, r);
    auto digits = zip_digits(xs.digits(), ys.digits(), [b](Digit p, Digit q) {
        return static_cast<Digit>((std::uint64_t{p} + q) % b);
    });
    return from_base(DigitString(std::move(digits), r));
}

BigInt ominus(const BigInt& x, const BigInt& y, Radix r) {
    if (x < 0 || y < 0) {
        throw std::domain_error("ominus requires non-negative values");
    }
    const std::uint64_t b = r.value();
    const DigitString xs = to_base(x, r);
    const DigitString ys = to_base(y, r);
    auto digits = zip_digits(xs.digits(), ys.digits(), [b](Digit p, Digit q) {
        return static_cast<Digit>((std::uint64_t{p} + b - q) % b);
    });
    return from_base(DigitString(std::move(digits), r));
}

BigInt double_bar(const BigInt& n, Radix r) {
    if (n < 0) {
        throw std::domain_error("double_bar requires a non-negative value");
    }
    std::vector<Digit> digits = to_base(n, r).digits();
    for (Digit& d : digits) {
        d = std::min<Digit>(d, 1);
    }
    return from_base(DigitString(std::move(digits), r));
}

std::string render_digits(const DigitString& d, std::size_t pad_width) {
    const Digit b = d.radix().value();
    const std::size_t len = std::max<std::size_t>({d.size(), pad_width, 1});
    std::ostringstream out;
    for (std::size_t i = len; i-- > 0;) {
        const Digit digit = i < d.size() ? d.digits()[i] : 0;
        out << digit;
        if (b > 10 && i != 0) {
            out << ',';
        }
    }
    return out.str();
}

}  // namespace negaxor
