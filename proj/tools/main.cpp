// ohrns command-line tool: residue arithmetic, fabric construction, LUT
// dumps, routing traces, cost reports, figure-of-merit sweeps, WDM frames
// and convolution, with file-based I/O for reproducible runs.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ohrns/apps.hpp"
#include "ohrns/cost.hpp"
#include "ohrns/fabric.hpp"
#include "ohrns/rns.hpp"
#include "ohrns/serialize.hpp"
#include "ohrns/wdm.hpp"

namespace {

using ohrns::i64;

std::vector<i64> parse_int_list(const std::string& text) {
    std::vector<i64> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError("'" + item + "' is not an integer");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

ohrns::FabricTopology build_for(ohrns::Schematic schematic, ohrns::LutKind kind, i64 modulus) {
    if (schematic == ohrns::Schematic::Asd) return ohrns::build_asd(modulus);
    return kind == ohrns::LutKind::Adder ? ohrns::build_mesh(modulus)
                                         : ohrns::build_mesh_mul(modulus);
}

// A mesh file built for the wrong operation would route silently wrong:
// the additive rotation cycle contains lane 0, the multiplicative one not.
void check_mesh_kind(const ohrns::FabricTopology& topo, ohrns::LutKind kind) {
    if (topo.schematic != ohrns::Schematic::Mesh) return;
    bool rotates_zero =
        std::find(topo.cycle.begin(), topo.cycle.end(), 0) != topo.cycle.end();
    if (kind == ohrns::LutKind::Multiplier && rotates_zero)
        throw ohrns::Error("ConfigMismatch",
                           "mesh topology has the additive rotation order; rebuild with --kind mul");
    if (kind == ohrns::LutKind::Adder && !rotates_zero)
        throw ohrns::Error("ConfigMismatch",
                           "mesh topology has the multiplicative rotation order; rebuild with --kind add");
}

void apply_override(ohrns::TechParams& tech, const std::string& assignment) {
    std::size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw CLI::ValidationError("--set expects key=value, got '" + assignment + "'");
    std::string key = assignment.substr(0, eq);
    double value = 0;
    try {
        value = std::stod(assignment.substr(eq + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--set value in '" + assignment + "' is not a number");
    }
    if (key == "thermal_energy_fj")
        tech.thermal_energy_fj = value;
    else if (key == "switching_energy_fj")
        tech.switching_energy_fj = value;
    else if (key == "control_energy_fj")
        tech.control_energy_fj = value;
    else if (key == "device_area_um2")
        tech.device_area_um2 = value;
    else if (key == "control_area_um2")
        tech.control_area_um2 = value;
    else if (key == "lut_entry_area_um2")
        tech.lut_entry_area_um2 = value;
    else if (key == "response_time_ps")
        tech.response_time_ps = value;
    else if (key == "per_device_prop_time_ps")
        tech.per_device_prop_time_ps = value;
    else
        throw CLI::ValidationError("unknown --set key '" + key + "'");
}

struct ArithArgs {
    i64 a = 0;
    i64 b = 0;
    i64 modulus = 0;
    std::string schematic = "asd";
    bool trace = false;
    std::string topo_path;
    std::string lut_path;
};

// Shared by `add` and `mul`; file-based topology/LUT when both paths are
// given, freshly built fabric otherwise.
int run_arith(const ArithArgs& args, ohrns::LutKind kind, std::ostream& out) {
    ohrns::FabricTopology topo;
    ohrns::Lut lut;
    if (!args.topo_path.empty() || !args.lut_path.empty()) {
        if (args.topo_path.empty() || args.lut_path.empty())
            throw ohrns::Error("FileError", "--topo and --lut must be given together");
        topo = ohrns::topology_from_json(ohrns::read_file(args.topo_path));
        lut = ohrns::lut_from_json(ohrns::read_file(args.lut_path));
        if (topo.waveguides != args.modulus || lut.modulus != args.modulus)
            throw ohrns::Error("ConfigMismatch", "file modulus does not match --modulus");
        if (lut.kind != kind)
            throw ohrns::Error("ConfigMismatch", "LUT kind does not match the subcommand");
        check_mesh_kind(topo, kind);
    } else {
        ohrns::Schematic schematic = ohrns::schematic_from_string(args.schematic);
        topo = build_for(schematic, kind, args.modulus);
        lut = kind == ohrns::LutKind::Adder ? ohrns::make_adder_lut(topo, args.modulus)
                                            : ohrns::make_multiplier_lut(topo, args.modulus);
    }
    if (args.a < 0 || args.a >= args.modulus || args.b < 0 || args.b >= args.modulus)
        throw ohrns::Error("OperandOutOfRange",
                           "operands must lie in [0, " + std::to_string(args.modulus) + ")");

    if (lut.bypasses(args.b) || (kind == ohrns::LutKind::Multiplier && args.a == 0)) {
        if (args.trace) out << "bypass: -> 0\n";
        out << 0 << "\n";
        return 0;
    }
    const ohrns::Configuration& config = lut.entry(args.b);
    ohrns::OneHot input = ohrns::to_onehot(args.a, args.modulus);
    if (args.trace) {
        std::vector<i64> path = ohrns::route_trace(topo, config, input);
        i64 prev = args.a;
        for (std::size_t s = 0; s < path.size(); ++s) {
            out << "stage " << s << ": " << prev << " -> " << path[s] << "\n";
            prev = path[s];
        }
    }
    out << ohrns::from_onehot(ohrns::route(topo, config, input)) << "\n";
    return 0;
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"one-hot residue arithmetic on simulated 2x2 optical switch fabrics"};
    app.require_subcommand(1);

    // encode
    auto* cmd_encode = app.add_subcommand("encode", "residues of an integer");
    i64 encode_x = 0;
    std::string moduli_csv;
    cmd_encode->add_option("x", encode_x, "value to encode")->required();
    cmd_encode->add_option("--moduli", moduli_csv, "comma-separated moduli")->required();

    // decode
    auto* cmd_decode = app.add_subcommand("decode", "integer from residues");
    std::string decode_digits;
    std::string decode_moduli;
    cmd_decode->add_option("residues", decode_digits, "comma-separated residues")->required();
    cmd_decode->add_option("--moduli", decode_moduli, "comma-separated moduli")->required();

    // add / mul
    ArithArgs add_args, mul_args;
    auto* cmd_add = app.add_subcommand("add", "modular addition routed through a fabric");
    auto* cmd_mul = app.add_subcommand("mul", "modular multiplication routed through a fabric");
    for (auto [cmd, args] : {std::pair{cmd_add, &add_args}, std::pair{cmd_mul, &mul_args}}) {
        cmd->add_option("a", args->a, "left operand")->required();
        cmd->add_option("b", args->b, "right operand (control)")->required();
        cmd->add_option("--modulus", args->modulus, "modulus M")->required();
        cmd->add_option("--schematic", args->schematic, "mesh|asd")
            ->check(CLI::IsMember({"mesh", "asd"}));
        cmd->add_flag("--trace", args->trace, "print the per-stage lane path");
        cmd->add_option("--topo", args->topo_path, "topology JSON file");
        cmd->add_option("--lut", args->lut_path, "LUT JSON file");
    }

    // build
    auto* cmd_build = app.add_subcommand("build", "write a fabric topology to JSON");
    i64 build_modulus = 0;
    std::string build_schematic = "asd";
    std::string build_kind = "add";
    std::string build_out;
    cmd_build->add_option("--modulus", build_modulus, "modulus M")->required();
    cmd_build->add_option("--schematic", build_schematic, "mesh|asd")
        ->check(CLI::IsMember({"mesh", "asd"}));
    cmd_build->add_option("--kind", build_kind, "add|mul (mesh rotation order)")
        ->check(CLI::IsMember({"add", "mul"}));
    cmd_build->add_option("--out", build_out, "output path")->required();

    // lut
    auto* cmd_lut = app.add_subcommand("lut", "write per-operand switch states to JSON");
    std::string lut_kind = "add";
    i64 lut_modulus = 0;
    std::string lut_schematic = "asd";
    std::string lut_out;
    cmd_lut->add_option("--kind", lut_kind, "add|mul")
        ->check(CLI::IsMember({"add", "mul"}))
        ->required();
    cmd_lut->add_option("--modulus", lut_modulus, "modulus M")->required();
    cmd_lut->add_option("--schematic", lut_schematic, "mesh|asd")
        ->check(CLI::IsMember({"mesh", "asd"}));
    cmd_lut->add_option("--out", lut_out, "output path")->required();

    // cost
    auto* cmd_cost = app.add_subcommand("cost", "one cost-model CSV row");
    i64 cost_modulus = 0;
    std::string cost_schematic;
    std::string cost_tech;
    std::vector<std::string> cost_overrides;
    cmd_cost->add_option("--modulus", cost_modulus, "modulus M")->required();
    cmd_cost->add_option("--schematic", cost_schematic, "mesh|asd")
        ->check(CLI::IsMember({"mesh", "asd"}))
        ->required();
    cmd_cost->add_option("--tech", cost_tech, "MRR|MZI|AOS|HPP")->required();
    cmd_cost->add_option("--set", cost_overrides, "override a tech parameter (key=value)");

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "figure-of-merit sweep as CSV");
    std::string sweep_moduli;
    std::string sweep_out;
    std::vector<std::string> sweep_schematics;
    std::vector<std::string> sweep_techs;
    bool sweep_all_pairs = false;
    cmd_sweep->add_option("--moduli", sweep_moduli, "comma-separated ascending moduli")->required();
    cmd_sweep->add_option("--out", sweep_out, "output path (stdout when omitted)");
    cmd_sweep->add_option("--schematics", sweep_schematics, "subset of mesh,asd")->delimiter(',');
    cmd_sweep->add_option("--techs", sweep_techs, "subset of MRR,MZI,AOS,HPP")->delimiter(',');
    cmd_sweep->add_flag("--all-pairs", sweep_all_pairs,
                        "emit every (schematic, tech) pair instead of the default pairing");

    // wdm
    auto* cmd_wdm = app.add_subcommand("wdm", "route a multi-channel frame through one fabric");
    std::string wdm_frame_path, wdm_topo_path, wdm_lut_path;
    i64 wdm_b = -1;
    cmd_wdm->add_option("--frame", wdm_frame_path, "frame JSON file")->required();
    cmd_wdm->add_option("--topo", wdm_topo_path, "topology JSON file")->required();
    cmd_wdm->add_option("--lut", wdm_lut_path, "LUT JSON file")->required();
    cmd_wdm->add_option("--b", wdm_b, "control operand (overrides the frame's b)");

    // conv
    auto* cmd_conv = app.add_subcommand("conv", "1-D convolution through the fabric");
    std::string conv_spec_path;
    std::string conv_moduli;
    std::string conv_schematic = "asd";
    cmd_conv->add_option("--spec", conv_spec_path, "conv spec JSON file")->required();
    cmd_conv->add_option("--moduli", conv_moduli, "comma-separated moduli (overrides the file)");
    cmd_conv->add_option("--schematic", conv_schematic, "mesh|asd")
        ->check(CLI::IsMember({"mesh", "asd"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_encode) {
            ohrns::ModuliSet m = ohrns::validate_moduli(parse_int_list(moduli_csv));
            ohrns::ResidueVector r = ohrns::encode(encode_x, m);
            for (std::size_t i = 0; i < r.digits.size(); ++i)
                std::cout << (i ? "," : "") << r.digits[i];
            std::cout << "\n";
        } else if (*cmd_decode) {
            ohrns::ModuliSet m = ohrns::validate_moduli(parse_int_list(decode_moduli));
            ohrns::ResidueVector r{parse_int_list(decode_digits)};
            std::cout << ohrns::decode(r, m) << "\n";
        } else if (*cmd_add) {
            return run_arith(add_args, ohrns::LutKind::Adder, std::cout);
        } else if (*cmd_mul) {
            return run_arith(mul_args, ohrns::LutKind::Multiplier, std::cout);
        } else if (*cmd_build) {
            ohrns::Schematic schematic = ohrns::schematic_from_string(build_schematic);
            ohrns::LutKind kind =
                build_kind == "add" ? ohrns::LutKind::Adder : ohrns::LutKind::Multiplier;
            ohrns::write_file(build_out,
                              ohrns::topology_to_json(build_for(schematic, kind, build_modulus)));
        } else if (*cmd_lut) {
            ohrns::Schematic schematic = ohrns::schematic_from_string(lut_schematic);
            ohrns::LutKind kind =
                lut_kind == "add" ? ohrns::LutKind::Adder : ohrns::LutKind::Multiplier;
            ohrns::FabricTopology topo = build_for(schematic, kind, lut_modulus);
            ohrns::Lut lut = kind == ohrns::LutKind::Adder
                                 ? ohrns::make_adder_lut(topo, lut_modulus)
                                 : ohrns::make_multiplier_lut(topo, lut_modulus);
            ohrns::write_file(lut_out, ohrns::lut_to_json(lut));
        } else if (*cmd_cost) {
            ohrns::TechParams tech = ohrns::builtin_tech(cost_tech);
            for (const std::string& assignment : cost_overrides) apply_override(tech, assignment);
            ohrns::CostReport report =
                ohrns::cost_report(ohrns::schematic_from_string(cost_schematic), tech, cost_modulus);
            std::cout << ohrns::csv_row(report) << "\n";
        } else if (*cmd_sweep) {
            std::vector<ohrns::Schematic> schematics;
            if (sweep_schematics.empty())
                schematics = {ohrns::Schematic::Mesh, ohrns::Schematic::Asd};
            else
                for (const std::string& s : sweep_schematics)
                    schematics.push_back(ohrns::schematic_from_string(s));
            std::vector<ohrns::TechParams> techs;
            const auto& names = sweep_techs.empty() ? ohrns::builtin_tech_names() : sweep_techs;
            for (const std::string& name : names) techs.push_back(ohrns::builtin_tech(name));
            bool explicit_selection = !sweep_schematics.empty() || !sweep_techs.empty();
            ohrns::Pairing pairing = sweep_all_pairs || explicit_selection
                                         ? ohrns::Pairing::AllPairs
                                         : ohrns::Pairing::Table1;
            std::string csv =
                ohrns::to_csv(ohrns::sweep(schematics, techs, parse_int_list(sweep_moduli), pairing));
            if (sweep_out.empty())
                std::cout << csv;
            else
                ohrns::write_file(sweep_out, csv);
        } else if (*cmd_wdm) {
            ohrns::FabricTopology topo = ohrns::topology_from_json(ohrns::read_file(wdm_topo_path));
            ohrns::Lut lut = ohrns::lut_from_json(ohrns::read_file(wdm_lut_path));
            ohrns::FrameDocument doc =
                ohrns::frame_from_json(ohrns::read_file(wdm_frame_path), topo.waveguides);
            if (cmd_wdm->count("--b")) doc.b = wdm_b;
            if (doc.kind != lut.kind)
                throw ohrns::Error("ConfigMismatch", "frame kind does not match the LUT kind");
            check_mesh_kind(topo, lut.kind);
            std::map<std::string, i64> results;
            if (lut.bypasses(doc.b)) {
                for (const ohrns::WdmChannel& ch : doc.frame.channels) results[ch.id] = 0;
            } else {
                results = ohrns::detect(ohrns::route_wdm(topo, lut.entry(doc.b), doc.frame),
                                        topo.waveguides);
            }
            std::cout << ohrns::wdm_results_to_json(results);
        } else if (*cmd_conv) {
            std::vector<i64> moduli;
            if (!conv_moduli.empty()) moduli = parse_int_list(conv_moduli);
            ohrns::ConvSpec spec =
                ohrns::conv_spec_from_json(ohrns::read_file(conv_spec_path), moduli);
            std::vector<i64> out =
                ohrns::conv1d_rns(spec, ohrns::schematic_from_string(conv_schematic));
            std::cout << ohrns::int_list_to_json(out);
        }
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ohrns::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int main(int argc, char** argv) { return run(argc, argv); }
