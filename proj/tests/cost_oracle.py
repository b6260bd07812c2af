#!/usr/bin/env python3
# Independent spreadsheet for the device cost model. Computes the expected
# energy/area/time/seap figures for all (schematic, tech) pairs at M = 5.
# The numbers printed here are frozen into tests/acceptance.cpp; rerun this
# script if a default constant ever changes.

TECHS = {
    #  name: (switch_role_energy_fj, control_energy_fj, device_area_um2,
    #         control_area_um2, lut_entry_area_um2, response_ps, prop_ps)
    "MRR": (13.8, 0.8, 3200.0, 0.8, 0.1, 40.0, 0.754),
    "MZI": (500.0, 0.8, 200.0, 0.8, 0.1, 14.3, 0.1),
    "AOS": (12000.0, 0.8, 10.0, 0.8, 0.1, 0.2, 0.01),
    "HPP": (5.2, 2.0, 200.0, 2.0, 0.1, 5.1, 0.1),
}


def counts(schematic, m):
    if schematic == "mesh":
        return (m * (m - 1), m - 1, 0)
    s = 1 if m == 2 else (m - 1) * (m - 1) // 2 + 2
    return (s, s, m * s)


def report(schematic, tech, m):
    e_sw, e_ctrl, a_dev, a_ctrl, a_lut, resp, prop = TECHS[tech]
    n_comp, n_ctrl, n_lut = counts(schematic, m)
    energy = e_sw * n_comp + e_ctrl * n_ctrl
    area = a_dev * n_comp + a_ctrl * n_ctrl + a_lut * n_lut
    time = resp + prop * ((m - 1) if schematic == "mesh" else m)
    seap = 1.0 / (time * energy * area)
    return energy, area, time, seap


def main():
    m = 5
    rows = []
    for schematic in ("mesh", "asd"):
        for tech in ("MRR", "MZI", "AOS", "HPP"):
            e, a, t, s = report(schematic, tech, m)
            rows.append((schematic, tech, e, a, t, s))
            print(f'{{"{schematic}", "{tech}", {e!r}, {a!r}, {t!r}, {s!r}}},')
    ratio = report("asd", "HPP", m)[3] / report("mesh", "MZI", m)[3]
    print(f"seap(asd,HPP,5)/seap(mesh,MZI,5) = {ratio!r}")


if __name__ == "__main__":
    main()
