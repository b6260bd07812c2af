#include "ohrns/cost.hpp"

#include <charconv>

namespace ohrns {

TechParams builtin_tech(const std::string& name) {
    TechParams t;
    t.name = name;
    if (name == "MRR") {
        t.thermal_energy_fj = 13.8;
        t.control_energy_fj = 0.8;
        t.device_area_um2 = 3200.0;
        t.control_area_um2 = 0.8;
        t.response_time_ps = 40.0;
        t.per_device_prop_time_ps = 0.754;
    } else if (name == "MZI") {
        t.switching_energy_fj = 500.0;
        t.control_energy_fj = 0.8;
        t.device_area_um2 = 200.0;
        t.control_area_um2 = 0.8;
        t.response_time_ps = 14.3;
        t.per_device_prop_time_ps = 0.1;
    } else if (name == "AOS") {
        t.switching_energy_fj = 12000.0; // 12 nJ/bit
        t.control_energy_fj = 0.8;
        t.device_area_um2 = 10.0;
        t.control_area_um2 = 0.8;
        t.response_time_ps = 0.2;
        t.per_device_prop_time_ps = 0.01;
    } else if (name == "HPP") {
        t.switching_energy_fj = 5.2;
        t.control_energy_fj = 2.0;
        t.device_area_um2 = 200.0;
        t.control_area_um2 = 2.0;
        t.response_time_ps = 5.1;
        t.per_device_prop_time_ps = 0.1;
    } else {
        throw Error("UnknownTech", "'" + name + "' is not one of MRR|MZI|AOS|HPP");
    }
    return t;
}

const std::vector<std::string>& builtin_tech_names() {
    static const std::vector<std::string> names = {"MRR", "MZI", "AOS", "HPP"};
    return names;
}

DeviceCounts counts(Schematic schematic, i64 modulus) {
    if (modulus < 2) throw Error("InvalidModulus", "modulus " + std::to_string(modulus) + " < 2");
    DeviceCounts c;
    if (schematic == Schematic::Mesh) {
        c.components = modulus * (modulus - 1);
        c.control = modulus - 1;
        c.lut_entries = 0;
    } else {
        i64 s = modulus == 2 ? 1 : (modulus - 1) * (modulus - 1) / 2 + 2;
        c.components = s;
        c.control = s;
        c.lut_entries = modulus * s;
    }
    return c;
}

CostReport cost_report(Schematic schematic, const TechParams& tech, i64 modulus) {
    DeviceCounts c = counts(schematic, modulus);
    double switch_energy;
    if (tech.switching_energy_fj)
        switch_energy = *tech.switching_energy_fj;
    else if (tech.thermal_energy_fj)
        switch_energy = *tech.thermal_energy_fj;
    else
        throw Error("MissingParam",
                    "tech '" + tech.name + "' has neither switching nor thermal energy");

    CostReport r;
    r.schematic = schematic;
    r.tech = tech.name;
    r.modulus = modulus;
    r.n_components = c.components;
    r.n_control = c.control;
    r.n_lut_entries = c.lut_entries;
    r.energy_fj = switch_energy * static_cast<double>(c.components) +
                  tech.control_energy_fj * static_cast<double>(c.control);
    r.area_um2 = tech.device_area_um2 * static_cast<double>(c.components) +
                 tech.control_area_um2 * static_cast<double>(c.control) +
                 tech.lut_entry_area_um2 * static_cast<double>(c.lut_entries);
    i64 hops = schematic == Schematic::Mesh ? modulus - 1 : modulus;
    r.time_ps = tech.response_time_ps + tech.per_device_prop_time_ps * static_cast<double>(hops);
    r.seap = seap(r.energy_fj, r.area_um2, r.time_ps);
    return r;
}

double seap(double energy_fj, double area_um2, double time_ps) {
    return 1.0 / (time_ps * energy_fj * area_um2);
}

std::vector<CostReport> sweep(const std::vector<Schematic>& schematics,
                              const std::vector<TechParams>& techs,
                              const std::vector<i64>& moduli, Pairing pairing) {
    if (moduli.empty()) throw Error("InvalidModulus", "empty moduli list");
    for (std::size_t i = 1; i < moduli.size(); ++i)
        if (moduli[i] <= moduli[i - 1])
            throw Error("InvalidModulus", "moduli list must be ascending");
    std::vector<CostReport> out;
    for (Schematic s : schematics) {
        for (const TechParams& t : techs) {
            if (pairing == Pairing::Table1) {
                bool table1 = (s == Schematic::Asd) == (t.name == "HPP");
                if (!table1) continue;
            }
            for (i64 m : moduli) out.push_back(cost_report(s, t, m));
        }
    }
    return out;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, end);
}

} // namespace

std::string csv_header() {
    return "schematic,tech,M,n_components,n_control,n_lut,energy_fj,area_um2,time_ps,seap";
}

std::string csv_row(const CostReport& r) {
    std::string row = to_string(r.schematic);
    row += ',';
    row += r.tech;
    row += ',';
    row += std::to_string(r.modulus);
    row += ',';
    row += std::to_string(r.n_components);
    row += ',';
    row += std::to_string(r.n_control);
    row += ',';
    row += std::to_string(r.n_lut_entries);
    row += ',';
    row += format_double(r.energy_fj);
    row += ',';
    row += format_double(r.area_um2);
    row += ',';
    row += format_double(r.time_ps);
    row += ',';
    row += format_double(r.seap);
    return row;
}

std::string to_csv(const std::vector<CostReport>& reports) {
    std::string out = csv_header();
    out += '\n';
    for (const CostReport& r : reports) {
        out += csv_row(r);
        out += '\n';
    }
    return out;
}

} // namespace ohrns
