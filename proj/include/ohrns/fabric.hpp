#ifndef OHRNS_FABRIC_HPP
#define OHRNS_FABRIC_HPP

#include <string>
#include <vector>

#include "ohrns/rns.hpp"

namespace ohrns {

enum class Schematic { Mesh, Asd };
enum class SwitchState { Bar, Cross };
enum class LutKind { Adder, Multiplier };
enum class CountMode { PaperFormula, Constructed };

std::string to_string(Schematic s);
Schematic schematic_from_string(const std::string& s);

// Planar arrangement of 2x2 switches on M parallel waveguides.
//
// ASD: each stage holds switches on disjoint adjacent waveguide pairs,
// identified by the top waveguide index t (coupling lanes t and t+1).
// Stages alternate even/odd brick-wall placement; one switch state per
// switch, stage-major order.
//
// Mesh: each stage is one switch row driven by a single control line; when
// active it advances every lane one step along `cycle`. Lanes absent from
// the cycle pass through. Configurations carry one state per stage
// (Cross = row active).
struct FabricTopology {
    Schematic schematic = Schematic::Asd;
    i64 waveguides = 0;
    std::vector<std::vector<i64>> stages; // ASD: top indices; Mesh: empty rows
    std::vector<i64> cycle;               // Mesh only

    std::size_t stage_count() const { return stages.size(); }
    // Number of entries a Configuration for this topology must have.
    i64 state_count() const;
    // Physical 2x2 switches in the built network (mesh rows count M each).
    i64 constructed_switches() const;
};

struct Configuration {
    std::vector<SwitchState> states;

    bool operator==(const Configuration&) const = default;
};

// Per-operand switch settings. Adder: entries for b in [0, M). Multiplier:
// entries for b in [1, M); b = 0 is the zero bypass (output forced to lane 0,
// nothing routed).
struct Lut {
    LutKind kind = LutKind::Adder;
    i64 modulus = 0;
    std::vector<Configuration> entries;
    bool zero_bypass = false;

    const Configuration& entry(i64 b) const;
    bool bypasses(i64 b) const { return kind == LutKind::Multiplier && b == 0; }
    std::size_t entry_count() const { return entries.size(); }
};

// Brick-wall network of M(M-1)/2 adjacent-pair switches in at most M stages;
// rearrangeably non-blocking, so every lane permutation is realizable.
FabricTopology build_asd(i64 modulus);

// M-1 cascaded rows, each a conditional rotate-by-one of all M lanes.
FabricTopology build_mesh(i64 modulus);

// Mesh variant for multiplication on a prime modulus: the rotation cycle
// walks the nonzero lanes in multiplicative order (powers of a primitive
// root), so k active rows multiply every nonzero lane by g^k; lane 0 is
// fixed. Throws NonPrimeModulus otherwise.
FabricTopology build_mesh_mul(i64 modulus);

// Derives switch states realizing perm (input lane a exits at perm[a]).
// ASD: odd-even transposition sort of the destination vector, one executed
// swap per Cross. Mesh: matches perm against rotations of the cycle.
// Throws Unroutable when the topology cannot realize the permutation.
Configuration permutation_to_states(const FabricTopology& topo, const std::vector<i64>& perm);

Lut make_adder_lut(const FabricTopology& topo, i64 modulus);
Lut make_multiplier_lut(const FabricTopology& topo, i64 modulus);

OneHot route(const FabricTopology& topo, const Configuration& config, const OneHot& input);

// Lane position after every stage; size equals stage_count().
std::vector<i64> route_trace(const FabricTopology& topo, const Configuration& config,
                             const OneHot& input);

// End-to-end digit operations over a cached fabric + LUT per (schematic, M).
i64 eval_add(i64 modulus, i64 a, i64 b, Schematic schematic);
i64 eval_mul(i64 modulus, i64 a, i64 b, Schematic schematic);

i64 count_switches(const FabricTopology& topo);
i64 count_switches(Schematic schematic, i64 modulus, CountMode mode);

// Smallest primitive root modulo a prime p (returns 1 for p = 2).
i64 primitive_root(i64 p);

} // namespace ohrns

#endif
