#ifndef OHRNS_RNS_HPP
#define OHRNS_RNS_HPP

#include <compare>
#include <vector>

#include "ohrns/error.hpp"

namespace ohrns {

// A validated set of pairwise-coprime moduli. `range()` is the exact product,
// i.e. the number of representable values [0, range).
class ModuliSet {
public:
    const std::vector<i64>& moduli() const { return moduli_; }
    i64 range() const { return range_; }
    std::size_t size() const { return moduli_.size(); }
    i64 modulus(std::size_t i) const { return moduli_[i]; }

    bool operator==(const ModuliSet&) const = default;

    friend ModuliSet validate_moduli(const std::vector<i64>& moduli);

private:
    ModuliSet(std::vector<i64> moduli, i64 range)
        : moduli_(std::move(moduli)), range_(range) {}

    std::vector<i64> moduli_;
    i64 range_ = 0;
};

// Digit-wise residues of one value; digits[i] in [0, moduli[i]).
struct ResidueVector {
    std::vector<i64> digits;

    bool operator==(const ResidueVector&) const = default;
};

// Width-M signal with exactly one active lane. Well-formedness is a
// construction invariant; a default OneHot is lane 0 of width 2.
class OneHot {
public:
    OneHot() = default;
    OneHot(i64 lane, i64 width);

    // Builds from raw lane levels; rejects zero or multiple active lanes.
    static OneHot from_lanes(const std::vector<int>& lanes);

    i64 lane() const { return lane_; }
    i64 width() const { return width_; }

    bool operator==(const OneHot&) const = default;

private:
    i64 lane_ = 0;
    i64 width_ = 2;
};

// Rejects elements < 2 (TooSmall) and non-coprime pairs (NonCoprime, naming
// the offending index pair). The product must fit in a signed 64-bit range.
ModuliSet validate_moduli(const std::vector<i64>& moduli);

ResidueVector encode(i64 x, const ModuliSet& m);

// Exact CRT reconstruction (Garner's mixed-radix form, integer-only); the
// unique x in [0, range) with x mod moduli[i] == digits[i].
i64 decode(const ResidueVector& r, const ModuliSet& m);

i64 digit_add(i64 a, i64 b, i64 modulus);
i64 digit_sub(i64 a, i64 b, i64 modulus);
i64 digit_mul(i64 a, i64 b, i64 modulus);

ResidueVector rns_add(const ResidueVector& x, const ResidueVector& y, const ModuliSet& m);
ResidueVector rns_sub(const ResidueVector& x, const ResidueVector& y, const ModuliSet& m);
ResidueVector rns_mul(const ResidueVector& x, const ResidueVector& y, const ModuliSet& m);

OneHot to_onehot(i64 r, i64 width);
i64 from_onehot(const OneHot& v);

} // namespace ohrns

#endif
