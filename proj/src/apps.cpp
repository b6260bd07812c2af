#include "ohrns/apps.hpp"

#include <set>
#include <string>

namespace ohrns {

namespace {

void check_nonnegative(std::span<const i64> values, const char* what) {
    for (i64 v : values)
        if (v < 0)
            throw Error("OutOfRange", std::string(what) + " value " + std::to_string(v) +
                                          " is negative; signed encodings are unsupported");
}

// Exact dot product with overflow detection; anything that overflows 64 bits
// necessarily exceeds the representable range.
i64 checked_dot(std::span<const i64> weights, std::span<const i64> inputs, i64 range) {
    i64 acc = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        i64 term;
        if (__builtin_mul_overflow(weights[i], inputs[i], &term) ||
            __builtin_add_overflow(acc, term, &acc))
            throw Error("RangeOverflow", "dot product exceeds the representable range");
    }
    if (acc >= range)
        throw Error("RangeOverflow", "dot product " + std::to_string(acc) +
                                         " >= range " + std::to_string(range));
    return acc;
}

// Digit-wise fabric pipeline shared by mac_rns and FixedWeightMac: residues
// of each term go through the multiplier fabric, partial sums through the
// adder fabric, and the result is reassembled with CRT.
i64 fabric_mac(std::span<const i64> weights, std::span<const i64> inputs, const ModuliSet& m,
               Schematic schematic) {
    ResidueVector acc;
    acc.digits.assign(m.size(), 0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            i64 mj = m.modulus(j);
            // The input digit is the optical signal; the weight digit is the
            // control operand selecting the multiplier configuration.
            i64 p = eval_mul(mj, inputs[i] % mj, weights[i] % mj, schematic);
            acc.digits[j] = eval_add(mj, acc.digits[j], p, schematic);
        }
    }
    return decode(acc, m);
}

} // namespace

i64 mac_rns(std::span<const i64> weights, std::span<const i64> inputs, const ModuliSet& m,
            Schematic schematic) {
    if (weights.size() != inputs.size())
        throw Error("LengthMismatch", std::to_string(weights.size()) + " weights vs " +
                                          std::to_string(inputs.size()) + " inputs");
    check_nonnegative(weights, "weight");
    check_nonnegative(inputs, "input");
    checked_dot(weights, inputs, m.range());
    return fabric_mac(weights, inputs, m, schematic);
}

std::vector<i64> conv1d_rns(const ConvSpec& spec, Schematic schematic) {
    if (spec.signal.empty() || spec.kernel.empty())
        throw Error("LengthMismatch", "signal and kernel must be non-empty");
    check_nonnegative(spec.signal, "signal");
    check_nonnegative(spec.kernel, "kernel");

    const std::size_t out_len = spec.signal.size() + spec.kernel.size() - 1;

    // Pre-check every output tap against the range before touching the fabric.
    for (std::size_t k = 0; k < out_len; ++k) {
        i64 acc = 0;
        for (std::size_t i = 0; i < spec.signal.size(); ++i) {
            std::size_t j = k - i;
            if (i > k || j >= spec.kernel.size()) continue;
            i64 term;
            if (__builtin_mul_overflow(spec.signal[i], spec.kernel[j], &term) ||
                __builtin_add_overflow(acc, term, &acc) || acc >= spec.moduli.range())
                throw Error("RangeOverflow",
                            "output[" + std::to_string(k) + "] >= range " +
                                std::to_string(spec.moduli.range()));
        }
    }

    std::vector<i64> out(out_len, 0);
    for (std::size_t k = 0; k < out_len; ++k) {
        std::vector<i64> w, x;
        for (std::size_t i = 0; i < spec.signal.size(); ++i) {
            std::size_t j = k - i;
            if (i > k || j >= spec.kernel.size()) continue;
            w.push_back(spec.kernel[j]);
            x.push_back(spec.signal[i]);
        }
        out[k] = fabric_mac(w, x, spec.moduli, schematic);
    }
    return out;
}

FixedWeightMac::FixedWeightMac(std::vector<i64> weights, const ModuliSet& m, Schematic schematic)
    : weights_(std::move(weights)), moduli_(m), schematic_(schematic) {
    check_nonnegative(weights_, "weight");
    std::set<std::pair<i64, i64>> selections;
    weight_digits_.reserve(weights_.size());
    for (i64 w : weights_) {
        std::vector<i64> digits;
        digits.reserve(m.size());
        for (i64 mj : m.moduli()) {
            i64 d = w % mj;
            digits.push_back(d);
            selections.emplace(d, mj);
            if (d != 0) {
                // Resolve the multiplier entry now so evaluations only route.
                (void)eval_mul(mj, 1 % mj, d, schematic_);
            }
        }
        weight_digits_.push_back(std::move(digits));
    }
    lut_selections_ = static_cast<i64>(selections.size());
}

i64 FixedWeightMac::operator()(std::span<const i64> inputs) const {
    if (inputs.size() != weights_.size())
        throw Error("LengthMismatch", std::to_string(weights_.size()) + " weights vs " +
                                          std::to_string(inputs.size()) + " inputs");
    check_nonnegative(inputs, "input");
    checked_dot(weights_, inputs, moduli_.range());

    ResidueVector acc;
    acc.digits.assign(moduli_.size(), 0);
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        for (std::size_t j = 0; j < moduli_.size(); ++j) {
            i64 mj = moduli_.modulus(j);
            i64 p = eval_mul(mj, inputs[i] % mj, weight_digits_[i][j], schematic_);
            acc.digits[j] = eval_add(mj, acc.digits[j], p, schematic_);
        }
    }
    return decode(acc, moduli_);
}

} // namespace ohrns
