#ifndef OHRNS_APPS_HPP
#define OHRNS_APPS_HPP

#include <span>
#include <vector>

#include "ohrns/fabric.hpp"
#include "ohrns/rns.hpp"

namespace ohrns {

// 1-D convolution inputs. Values are nonnegative; every output of the full
// convolution must stay below the moduli range (checked before execution,
// residue wraparound is silent otherwise).
struct ConvSpec {
    std::vector<i64> signal;
    std::vector<i64> kernel;
    ModuliSet moduli;
};

// Dot product sum(w_i * x_i) with every digit-wise multiply and add routed
// through the fabric, then decoded. Left-to-right accumulation.
i64 mac_rns(std::span<const i64> weights, std::span<const i64> inputs, const ModuliSet& m,
            Schematic schematic);

// Full (non-circular) convolution, output length |signal| + |kernel| - 1.
std::vector<i64> conv1d_rns(const ConvSpec& spec, Schematic schematic);

// MAC evaluator with the weights fixed up front: the multiplier settings for
// each weight digit are selected once and reused across input vectors.
class FixedWeightMac {
public:
    FixedWeightMac(std::vector<i64> weights, const ModuliSet& m, Schematic schematic);

    i64 operator()(std::span<const i64> inputs) const;

    // Distinct (weight digit, modulus) pairs selected at construction.
    i64 lut_selection_count() const { return lut_selections_; }

private:
    std::vector<i64> weights_;
    std::vector<std::vector<i64>> weight_digits_; // [weight index][modulus index]
    ModuliSet moduli_;
    Schematic schematic_;
    i64 lut_selections_ = 0;
};

} // namespace ohrns

#endif
