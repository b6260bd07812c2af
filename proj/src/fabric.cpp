#include "ohrns/fabric.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace ohrns {

std::string to_string(Schematic s) { return s == Schematic::Mesh ? "mesh" : "asd"; }

Schematic schematic_from_string(const std::string& s) {
    if (s == "mesh") return Schematic::Mesh;
    if (s == "asd") return Schematic::Asd;
    throw Error("UnknownSchematic", "'" + s + "' is not one of mesh|asd");
}

i64 FabricTopology::state_count() const {
    if (schematic == Schematic::Mesh) return static_cast<i64>(stages.size());
    i64 n = 0;
    for (const auto& stage : stages) n += static_cast<i64>(stage.size());
    return n;
}

i64 FabricTopology::constructed_switches() const {
    if (schematic == Schematic::Mesh) return static_cast<i64>(stages.size()) * waveguides;
    return state_count();
}

const Configuration& Lut::entry(i64 b) const {
    if (kind == LutKind::Adder) {
        if (b < 0 || b >= static_cast<i64>(entries.size()))
            throw Error("OutOfRange", "adder LUT has no entry for b=" + std::to_string(b));
        return entries[b];
    }
    if (b < 1 || b > static_cast<i64>(entries.size()))
        throw Error("OutOfRange", "multiplier LUT has no entry for b=" + std::to_string(b));
    return entries[b - 1];
}

namespace {

void check_modulus(i64 m) {
    if (m < 2) throw Error("InvalidModulus", "modulus " + std::to_string(m) + " < 2");
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void check_config(const FabricTopology& topo, const Configuration& config) {
    if (static_cast<i64>(config.states.size()) != topo.state_count())
        throw Error("ConfigMismatch",
                    "configuration has " + std::to_string(config.states.size()) +
                        " states, topology needs " + std::to_string(topo.state_count()));
}

// Applies the configured fabric to a full lane vector; positions[i] is where
// the token entering lane i currently sits. Visitor sees the lane vector
// after every stage.
template <typename PerStage>
void propagate(const FabricTopology& topo, const Configuration& config, std::vector<i64>& lanes,
               PerStage&& per_stage) {
    if (topo.schematic == Schematic::Asd) {
        std::size_t s = 0;
        for (const auto& stage : topo.stages) {
            for (i64 top : stage) {
                if (config.states[s++] == SwitchState::Cross)
                    std::swap(lanes[top], lanes[top + 1]);
            }
            per_stage(lanes);
        }
        return;
    }
    // Mesh: an active row advances every cycle member one step.
    for (std::size_t s = 0; s < topo.stages.size(); ++s) {
        if (config.states[s] == SwitchState::Cross) {
            std::vector<i64> next = lanes;
            for (std::size_t k = 0; k < topo.cycle.size(); ++k) {
                i64 from = topo.cycle[k];
                i64 to = topo.cycle[(k + 1) % topo.cycle.size()];
                next[to] = lanes[from];
            }
            lanes = next;
        }
        per_stage(lanes);
    }
}

std::vector<i64> identity_lanes(i64 m) {
    std::vector<i64> v(m);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Configuration mesh_rotation_config(const FabricTopology& topo, i64 steps) {
    Configuration config;
    config.states.assign(topo.stages.size(), SwitchState::Bar);
    for (i64 s = 0; s < steps; ++s) config.states[s] = SwitchState::Cross;
    return config;
}

// Finds k such that k rotations along the mesh cycle realize perm.
Configuration mesh_permutation_config(const FabricTopology& topo, const std::vector<i64>& perm) {
    const auto cycle_len = topo.cycle.size();
    for (i64 k = 0; k <= static_cast<i64>(topo.stages.size()); ++k) {
        // k active rows map cycle[j] -> cycle[(j + k) % len], fix other lanes.
        std::vector<i64> dest = identity_lanes(topo.waveguides);
        for (std::size_t j = 0; j < cycle_len; ++j)
            dest[topo.cycle[j]] = topo.cycle[(j + k) % cycle_len];
        if (std::equal(dest.begin(), dest.end(), perm.begin()))
            return mesh_rotation_config(topo, k);
    }
    throw Error("Unroutable", "permutation is not a rotation of the mesh cycle");
}

void check_permutation(const std::vector<i64>& perm, i64 m) {
    if (static_cast<i64>(perm.size()) != m)
        throw Error("Unroutable", "permutation size " + std::to_string(perm.size()) +
                                      " does not match " + std::to_string(m) + " waveguides");
    std::vector<bool> seen(m, false);
    for (i64 p : perm) {
        if (p < 0 || p >= m || seen[p])
            throw Error("Unroutable", "not a bijection on [0, " + std::to_string(m) + ")");
        seen[p] = true;
    }
}

} // namespace

FabricTopology build_asd(i64 modulus) {
    check_modulus(modulus);
    FabricTopology topo;
    topo.schematic = Schematic::Asd;
    topo.waveguides = modulus;
    for (i64 s = 0; s < modulus; ++s) {
        std::vector<i64> stage;
        for (i64 top = s % 2; top + 1 < modulus; top += 2) stage.push_back(top);
        if (!stage.empty()) topo.stages.push_back(std::move(stage));
    }
    return topo;
}

FabricTopology build_mesh(i64 modulus) {
    check_modulus(modulus);
    FabricTopology topo;
    topo.schematic = Schematic::Mesh;
    topo.waveguides = modulus;
    topo.stages.assign(modulus - 1, {});
    topo.cycle = identity_lanes(modulus);
    return topo;
}

FabricTopology build_mesh_mul(i64 modulus) {
    check_modulus(modulus);
    if (!is_prime(modulus))
        throw Error("NonPrimeModulus",
                    std::to_string(modulus) + " is not prime; lane products are not bijective");
    FabricTopology topo;
    topo.schematic = Schematic::Mesh;
    topo.waveguides = modulus;
    topo.stages.assign(modulus - 1, {});
    i64 g = primitive_root(modulus);
    i64 lane = 1;
    for (i64 k = 0; k < modulus - 1; ++k) {
        topo.cycle.push_back(lane);
        lane = lane * g % modulus;
    }
    return topo;
}

Configuration permutation_to_states(const FabricTopology& topo, const std::vector<i64>& perm) {
    check_permutation(perm, topo.waveguides);
    if (topo.schematic == Schematic::Mesh) return mesh_permutation_config(topo, perm);

    // Odd-even transposition sort of the destination vector; each executed
    // swap becomes a Cross in the matching stage/position.
    std::vector<i64> dest = perm;
    Configuration config;
    config.states.reserve(topo.state_count());
    for (const auto& stage : topo.stages) {
        for (i64 top : stage) {
            if (dest[top] > dest[top + 1]) {
                std::swap(dest[top], dest[top + 1]);
                config.states.push_back(SwitchState::Cross);
            } else {
                config.states.push_back(SwitchState::Bar);
            }
        }
    }
    for (i64 i = 0; i < topo.waveguides; ++i)
        if (dest[i] != i)
            throw Error("Unroutable", "topology stages cannot realize the permutation");
    return config;
}

Lut make_adder_lut(const FabricTopology& topo, i64 modulus) {
    check_modulus(modulus);
    if (topo.waveguides != modulus)
        throw Error("ConfigMismatch", "topology has " + std::to_string(topo.waveguides) +
                                          " waveguides, modulus is " + std::to_string(modulus));
    Lut lut;
    lut.kind = LutKind::Adder;
    lut.modulus = modulus;
    for (i64 b = 0; b < modulus; ++b) {
        std::vector<i64> perm(modulus);
        for (i64 a = 0; a < modulus; ++a) perm[a] = (a + b) % modulus;
        lut.entries.push_back(permutation_to_states(topo, perm));
    }
    return lut;
}

Lut make_multiplier_lut(const FabricTopology& topo, i64 modulus) {
    check_modulus(modulus);
    if (topo.waveguides != modulus)
        throw Error("ConfigMismatch", "topology has " + std::to_string(topo.waveguides) +
                                          " waveguides, modulus is " + std::to_string(modulus));
    // a -> a*b must permute the lanes for every b; composite moduli fail.
    for (i64 b = 1; b < modulus; ++b) {
        std::vector<bool> hit(modulus, false);
        for (i64 a = 0; a < modulus; ++a) {
            i64 p = a * b % modulus;
            if (hit[p])
                throw Error("NonPrimeModulus", "a*" + std::to_string(b) + " mod " +
                                                   std::to_string(modulus) +
                                                   " is not a bijection");
            hit[p] = true;
        }
    }
    Lut lut;
    lut.kind = LutKind::Multiplier;
    lut.modulus = modulus;
    lut.zero_bypass = true;
    for (i64 b = 1; b < modulus; ++b) {
        std::vector<i64> perm(modulus);
        for (i64 a = 0; a < modulus; ++a) perm[a] = a * b % modulus;
        lut.entries.push_back(permutation_to_states(topo, perm));
    }
    return lut;
}

OneHot route(const FabricTopology& topo, const Configuration& config, const OneHot& input) {
    check_config(topo, config);
    if (input.width() != topo.waveguides)
        throw Error("WidthMismatch", "input width " + std::to_string(input.width()) +
                                         " does not match " + std::to_string(topo.waveguides) +
                                         " waveguides");
    std::vector<i64> lanes = identity_lanes(topo.waveguides);
    propagate(topo, config, lanes, [](const std::vector<i64>&) {});
    for (i64 pos = 0; pos < topo.waveguides; ++pos)
        if (lanes[pos] == input.lane()) return OneHot(pos, topo.waveguides);
    throw Error("Unroutable", "active lane lost during propagation"); // unreachable
}

std::vector<i64> route_trace(const FabricTopology& topo, const Configuration& config,
                             const OneHot& input) {
    check_config(topo, config);
    if (input.width() != topo.waveguides)
        throw Error("WidthMismatch", "input width " + std::to_string(input.width()) +
                                         " does not match " + std::to_string(topo.waveguides) +
                                         " waveguides");
    std::vector<i64> lanes = identity_lanes(topo.waveguides);
    std::vector<i64> trace;
    trace.reserve(topo.stage_count());
    propagate(topo, config, lanes, [&](const std::vector<i64>& now) {
        for (i64 pos = 0; pos < topo.waveguides; ++pos)
            if (now[pos] == input.lane()) {
                trace.push_back(pos);
                return;
            }
    });
    return trace;
}

namespace {

// Topologies and LUTs are immutable once built; sharing them across eval
// calls keeps the functions pure while avoiding per-call reconstruction.
struct Engine {
    FabricTopology topo;
    Lut lut;
};

const Engine& cached_engine(Schematic schematic, i64 modulus, LutKind kind) {
    static std::mutex mutex;
    static std::map<std::tuple<Schematic, i64, LutKind>, std::unique_ptr<Engine>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(schematic, modulus, kind);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto engine = std::make_unique<Engine>();
        if (schematic == Schematic::Asd)
            engine->topo = build_asd(modulus);
        else
            engine->topo = kind == LutKind::Adder ? build_mesh(modulus) : build_mesh_mul(modulus);
        engine->lut = kind == LutKind::Adder ? make_adder_lut(engine->topo, modulus)
                                             : make_multiplier_lut(engine->topo, modulus);
        it = cache.emplace(key, std::move(engine)).first;
    }
    return *it->second;
}

} // namespace

i64 eval_add(i64 modulus, i64 a, i64 b, Schematic schematic) {
    check_modulus(modulus);
    if (a < 0 || a >= modulus || b < 0 || b >= modulus)
        throw Error("OperandOutOfRange", "operands must lie in [0, " + std::to_string(modulus) + ")");
    const Engine& engine = cached_engine(schematic, modulus, LutKind::Adder);
    return from_onehot(route(engine.topo, engine.lut.entry(b), to_onehot(a, modulus)));
}

i64 eval_mul(i64 modulus, i64 a, i64 b, Schematic schematic) {
    check_modulus(modulus);
    if (a < 0 || a >= modulus || b < 0 || b >= modulus)
        throw Error("OperandOutOfRange", "operands must lie in [0, " + std::to_string(modulus) + ")");
    if (a == 0 || b == 0) return 0; // zero bypass
    const Engine& engine = cached_engine(schematic, modulus, LutKind::Multiplier);
    return from_onehot(route(engine.topo, engine.lut.entry(b), to_onehot(a, modulus)));
}

i64 count_switches(const FabricTopology& topo) { return topo.constructed_switches(); }

i64 count_switches(Schematic schematic, i64 modulus, CountMode mode) {
    check_modulus(modulus);
    if (schematic == Schematic::Mesh) return modulus * (modulus - 1);
    if (mode == CountMode::Constructed || modulus == 2) return modulus * (modulus - 1) / 2;
    return (modulus - 1) * (modulus - 1) / 2 + 2;
}

i64 primitive_root(i64 p) {
    if (p == 2) return 1;
    // Prime factors of p-1, then test candidates g = 2, 3, ...
    std::vector<i64> factors;
    i64 n = p - 1;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    for (i64 g = 2; g < p; ++g) {
        bool ok = true;
        for (i64 f : factors) {
            i64 e = (p - 1) / f;
            i64 r = 1, base = g;
            while (e > 0) {
                if (e & 1) r = r * base % p;
                base = base * base % p;
                e >>= 1;
            }
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error("NonPrimeModulus", std::to_string(p) + " has no primitive root");
}

} // namespace ohrns
