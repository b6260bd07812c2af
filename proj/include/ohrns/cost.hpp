#ifndef OHRNS_COST_HPP
#define OHRNS_COST_HPP

#include <optional>
#include <string>
#include <vector>

#include "ohrns/fabric.hpp"

namespace ohrns {

// Per-technology device constants. Energies per switching event (fJ/bit),
// areas in um^2, times in ps. Either switching_energy_fj or
// thermal_energy_fj must be present; the thermal term fills the switching
// role for resonator devices that are tuned rather than driven.
struct TechParams {
    std::string name;
    std::optional<double> thermal_energy_fj;
    std::optional<double> switching_energy_fj;
    double control_energy_fj = 0.0;
    double device_area_um2 = 0.0;
    double control_area_um2 = 0.0;
    double lut_entry_area_um2 = 0.1;
    double response_time_ps = 0.0;
    double per_device_prop_time_ps = 0.0;
};

struct DeviceCounts {
    i64 components = 0;
    i64 control = 0;
    i64 lut_entries = 0;
};

struct CostReport {
    Schematic schematic = Schematic::Mesh;
    std::string tech;
    i64 modulus = 0;
    i64 n_components = 0;
    i64 n_control = 0;
    i64 n_lut_entries = 0;
    double energy_fj = 0.0;
    double area_um2 = 0.0;
    double time_ps = 0.0;
    double seap = 0.0;
};

// Built-in constants for MRR, MZI, AOS and HPP switches.
TechParams builtin_tech(const std::string& name);
const std::vector<std::string>& builtin_tech_names();

// Mesh: (M(M-1), M-1, 0). ASD: (S, S, M*S) with S = (M-1)^2/2+2 for M > 2
// and the single constructed switch for M = 2.
DeviceCounts counts(Schematic schematic, i64 modulus);

// energy = switch-role energy * components + control energy * controls
// area   = components*device_area + controls*control_area + lut*lut_area
// time   = response + per-device propagation * (M-1 mesh, M ASD)
CostReport cost_report(Schematic schematic, const TechParams& tech, i64 modulus);

// Speed-energy-area product: 1 / (time_ps * energy_fj * area_um2).
double seap(double energy_fj, double area_um2, double time_ps);

enum class Pairing {
    AllPairs, // full (schematic, tech) cross product
    Table1,   // mesh with MRR/MZI/AOS, ASD with HPP
};

std::vector<CostReport> sweep(const std::vector<Schematic>& schematics,
                              const std::vector<TechParams>& techs,
                              const std::vector<i64>& moduli,
                              Pairing pairing = Pairing::AllPairs);

// CSV, LF newlines, '.' decimal separator, shortest round-trip doubles.
std::string csv_header();
std::string csv_row(const CostReport& report);
std::string to_csv(const std::vector<CostReport>& reports);

} // namespace ohrns

#endif
