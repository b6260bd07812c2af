#include "ohrns/rns.hpp"

#include <numeric>
#include <string>

namespace ohrns {

namespace {

std::string pair_text(std::size_t i, std::size_t j, i64 a, i64 b) {
    return "moduli[" + std::to_string(i) + "]=" + std::to_string(a) +
           " and moduli[" + std::to_string(j) + "]=" + std::to_string(b);
}

// Products of two reduced operands can exceed 64 bits for large moduli.
i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
                            static_cast<unsigned __int128>(m));
}

// Modular inverse via extended Euclid; gcd(a, m) == 1 is a caller invariant.
i64 mod_inverse(i64 a, i64 m) {
    i64 old_r = a % m, r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return ((old_s % m) + m) % m;
}

void check_valid(const ResidueVector& r, const ModuliSet& m) {
    if (r.digits.size() != m.size())
        throw Error("ModuliMismatch",
                    "residue vector has " + std::to_string(r.digits.size()) +
                        " digits, moduli set has " + std::to_string(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        if (r.digits[i] < 0 || r.digits[i] >= m.modulus(i))
            throw Error("DigitOutOfRange",
                        "digit[" + std::to_string(i) + "]=" + std::to_string(r.digits[i]) +
                            " not in [0, " + std::to_string(m.modulus(i)) + ")");
}

void check_operand(i64 v, i64 modulus) {
    if (modulus < 1)
        throw Error("OperandOutOfRange", "modulus " + std::to_string(modulus) + " < 1");
    if (v < 0 || v >= modulus)
        throw Error("OperandOutOfRange",
                    std::to_string(v) + " not in [0, " + std::to_string(modulus) + ")");
}

} // namespace

OneHot::OneHot(i64 lane, i64 width) : lane_(lane), width_(width) {
    if (width < 2)
        throw Error("OutOfRange", "one-hot width " + std::to_string(width) + " < 2");
    if (lane < 0 || lane >= width)
        throw Error("OutOfRange",
                    "lane " + std::to_string(lane) + " not in [0, " + std::to_string(width) + ")");
}

OneHot OneHot::from_lanes(const std::vector<int>& lanes) {
    i64 active = -1;
    for (std::size_t i = 0; i < lanes.size(); ++i) {
        if (!lanes[i]) continue;
        if (active >= 0)
            throw Error("MalformedOneHot", "multiple active lanes (" + std::to_string(active) +
                                               " and " + std::to_string(i) + ")");
        active = static_cast<i64>(i);
    }
    if (active < 0) throw Error("MalformedOneHot", "no active lane");
    return OneHot(active, static_cast<i64>(lanes.size()));
}

ModuliSet validate_moduli(const std::vector<i64>& moduli) {
    if (moduli.empty()) throw Error("TooSmall", "moduli list is empty");
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (moduli[i] < 2)
            throw Error("TooSmall", "moduli[" + std::to_string(i) + "]=" +
                                        std::to_string(moduli[i]) + " < 2");
    for (std::size_t i = 0; i < moduli.size(); ++i)
        for (std::size_t j = i + 1; j < moduli.size(); ++j)
            if (std::gcd(moduli[i], moduli[j]) != 1)
                throw Error("NonCoprime", pair_text(i, j, moduli[i], moduli[j]) +
                                              " share a common factor");
    i64 range = 1;
    for (i64 m : moduli)
        if (__builtin_mul_overflow(range, m, &range))
            throw Error("OutOfRange", "moduli product exceeds 64-bit range");
    return ModuliSet(moduli, range);
}

ResidueVector encode(i64 x, const ModuliSet& m) {
    if (x < 0 || x >= m.range())
        throw Error("OutOfRange",
                    std::to_string(x) + " not in [0, " + std::to_string(m.range()) + ")");
    ResidueVector r;
    r.digits.reserve(m.size());
    for (i64 mod : m.moduli()) r.digits.push_back(x % mod);
    return r;
}

i64 decode(const ResidueVector& r, const ModuliSet& m) {
    check_valid(r, m);
    // Mixed-radix reconstruction: x = v0 + v1*m0 + v2*m0*m1 + ...
    // Each vk stays below moduli[k], so intermediates never leave [0, range).
    std::vector<i64> v(m.size());
    for (std::size_t k = 0; k < m.size(); ++k) {
        i64 mk = m.modulus(k);
        i64 t = r.digits[k] % mk;
        for (std::size_t j = 0; j < k; ++j) {
            t = (t - v[j]) % mk;
            if (t < 0) t += mk;
            t = mulmod(t, mod_inverse(m.modulus(j) % mk, mk), mk);
        }
        v[k] = t;
    }
    i64 x = 0;
    i64 weight = 1;
    for (std::size_t k = 0; k < m.size(); ++k) {
        x += v[k] * weight;
        weight *= m.modulus(k);
    }
    return x;
}

i64 digit_add(i64 a, i64 b, i64 modulus) {
    check_operand(a, modulus);
    check_operand(b, modulus);
    return (a + b) % modulus;
}

i64 digit_sub(i64 a, i64 b, i64 modulus) {
    check_operand(a, modulus);
    check_operand(b, modulus);
    return (a - b + modulus) % modulus;
}

i64 digit_mul(i64 a, i64 b, i64 modulus) {
    check_operand(a, modulus);
    check_operand(b, modulus);
    return mulmod(a, b, modulus);
}

namespace {

template <typename Op>
ResidueVector digitwise(const ResidueVector& x, const ResidueVector& y, const ModuliSet& m,
                        Op op) {
    check_valid(x, m);
    check_valid(y, m);
    ResidueVector out;
    out.digits.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out.digits.push_back(op(x.digits[i], y.digits[i], m.modulus(i)));
    return out;
}

} // namespace

ResidueVector rns_add(const ResidueVector& x, const ResidueVector& y, const ModuliSet& m) {
    return digitwise(x, y, m, digit_add);
}

ResidueVector rns_sub(const ResidueVector& x, const ResidueVector& y, const ModuliSet& m) {
    return digitwise(x, y, m, digit_sub);
}

ResidueVector rns_mul(const ResidueVector& x, const ResidueVector& y, const ModuliSet& m) {
    return digitwise(x, y, m, digit_mul);
}

OneHot to_onehot(i64 r, i64 width) { return OneHot(r, width); }

i64 from_onehot(const OneHot& v) { return v.lane(); }

} // namespace ohrns
