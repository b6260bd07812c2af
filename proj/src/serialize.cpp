#include "ohrns/serialize.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ohrns {

namespace {

using nlohmann::json;

json parse(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw Error("ParseError", "not valid JSON");
    return doc;
}

void check_schema_version(const json& doc) {
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
        throw Error("SchemaError", "missing schema_version field");
    int v = doc["schema_version"].get<int>();
    if (v != kSchemaVersion)
        throw Error("SchemaError", "unsupported schema_version " + std::to_string(v));
}

i64 get_modulus(const json& doc) {
    if (!doc.contains("modulus") || !doc["modulus"].is_number_integer())
        throw Error("SchemaError", "missing integer modulus field");
    i64 m = doc["modulus"].get<i64>();
    if (m < 2) throw Error("InvalidModulus", "modulus " + std::to_string(m) + " < 2");
    return m;
}

std::string state_name(SwitchState s) { return s == SwitchState::Bar ? "bar" : "cross"; }

SwitchState state_from_name(const std::string& s) {
    if (s == "bar") return SwitchState::Bar;
    if (s == "cross") return SwitchState::Cross;
    throw Error("ParseError", "switch state '" + s + "' is not bar|cross");
}

} // namespace

std::string topology_to_json(const FabricTopology& topo) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = to_string(topo.schematic);
    doc["modulus"] = topo.waveguides;
    doc["stages"] = topo.stages;
    if (topo.schematic == Schematic::Mesh) doc["cycle"] = topo.cycle;
    return doc.dump() + "\n";
}

FabricTopology topology_from_json(const std::string& text) {
    json doc = parse(text);
    check_schema_version(doc);
    FabricTopology topo;
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw Error("SchemaError", "missing kind field");
    topo.schematic = schematic_from_string(doc["kind"].get<std::string>());
    topo.waveguides = get_modulus(doc);
    if (!doc.contains("stages") || !doc["stages"].is_array())
        throw Error("SchemaError", "missing stages array");
    for (const json& stage : doc["stages"]) {
        if (!stage.is_array()) throw Error("ParseError", "stage is not an array");
        std::vector<i64> tops;
        i64 prev = -2;
        for (const json& t : stage) {
            if (!t.is_number_integer()) throw Error("ParseError", "switch index is not an integer");
            i64 top = t.get<i64>();
            if (top < 0 || top + 1 >= topo.waveguides)
                throw Error("ParseError", "switch index " + std::to_string(top) + " out of range");
            if (top <= prev + 1)
                throw Error("ParseError", "switches in one stage must be on disjoint pairs");
            prev = top;
            tops.push_back(top);
        }
        topo.stages.push_back(std::move(tops));
    }
    if (topo.schematic == Schematic::Mesh) {
        if (!doc.contains("cycle") || !doc["cycle"].is_array())
            throw Error("SchemaError", "mesh topology requires a cycle array");
        for (const json& lane : doc["cycle"]) {
            i64 v = lane.get<i64>();
            if (v < 0 || v >= topo.waveguides)
                throw Error("ParseError", "cycle lane " + std::to_string(v) + " out of range");
            topo.cycle.push_back(v);
        }
        for (const auto& stage : topo.stages)
            if (!stage.empty())
                throw Error("ParseError", "mesh stages carry no switch indices");
    }
    return topo;
}

std::string lut_to_json(const Lut& lut) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = lut.kind == LutKind::Adder ? "add" : "mul";
    doc["modulus"] = lut.modulus;
    json entries = json::object();
    i64 first = lut.kind == LutKind::Adder ? 0 : 1;
    for (std::size_t i = 0; i < lut.entries.size(); ++i) {
        json states = json::array();
        for (SwitchState s : lut.entries[i].states) states.push_back(state_name(s));
        entries[std::to_string(first + static_cast<i64>(i))] = std::move(states);
    }
    doc["lut"] = std::move(entries);
    return doc.dump() + "\n";
}

Lut lut_from_json(const std::string& text) {
    json doc = parse(text);
    check_schema_version(doc);
    Lut lut;
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw Error("SchemaError", "missing kind field");
    std::string kind = doc["kind"].get<std::string>();
    if (kind == "add") {
        lut.kind = LutKind::Adder;
    } else if (kind == "mul") {
        lut.kind = LutKind::Multiplier;
        lut.zero_bypass = true;
    } else {
        throw Error("ParseError", "lut kind '" + kind + "' is not add|mul");
    }
    lut.modulus = get_modulus(doc);
    if (!doc.contains("lut") || !doc["lut"].is_object())
        throw Error("SchemaError", "missing lut object");
    i64 first = lut.kind == LutKind::Adder ? 0 : 1;
    i64 count = lut.kind == LutKind::Adder ? lut.modulus : lut.modulus - 1;
    lut.entries.resize(count);
    std::vector<bool> seen(count, false);
    for (const auto& [key, states] : doc["lut"].items()) {
        i64 b;
        try {
            b = std::stoll(key);
        } catch (const std::exception&) {
            throw Error("ParseError", "lut key '" + key + "' is not an integer");
        }
        if (b < first || b >= first + count)
            throw Error("ParseError", "lut key " + key + " out of range");
        if (!states.is_array()) throw Error("ParseError", "lut entry is not an array");
        Configuration config;
        for (const json& s : states) {
            if (!s.is_string()) throw Error("ParseError", "switch state is not a string");
            config.states.push_back(state_from_name(s.get<std::string>()));
        }
        lut.entries[b - first] = std::move(config);
        seen[b - first] = true;
    }
    for (i64 i = 0; i < count; ++i)
        if (!seen[i])
            throw Error("ParseError", "lut is missing entry " + std::to_string(first + i));
    return lut;
}

FrameDocument frame_from_json(const std::string& text, i64 modulus) {
    json doc = parse(text);
    FrameDocument out;
    if (doc.contains("b")) {
        if (!doc["b"].is_number_integer()) throw Error("ParseError", "b is not an integer");
        out.b = doc["b"].get<i64>();
    }
    if (doc.contains("kind")) {
        std::string kind = doc["kind"].get<std::string>();
        if (kind == "add")
            out.kind = LutKind::Adder;
        else if (kind == "mul")
            out.kind = LutKind::Multiplier;
        else
            throw Error("ParseError", "frame kind '" + kind + "' is not add|mul");
    }
    if (!doc.contains("channels") || !doc["channels"].is_array())
        throw Error("SchemaError", "missing channels array");
    for (const json& ch : doc["channels"]) {
        if (!ch.contains("id") || !ch["id"].is_string())
            throw Error("ParseError", "channel is missing a string id");
        if (!ch.contains("input") || !ch["input"].is_number_integer())
            throw Error("ParseError", "channel is missing an integer input lane");
        i64 lane = ch["input"].get<i64>();
        if (lane < 0 || lane >= modulus)
            throw Error("OutOfRange", "channel input " + std::to_string(lane) + " not in [0, " +
                                          std::to_string(modulus) + ")");
        out.frame.channels.push_back({ch["id"].get<std::string>(), OneHot(lane, modulus)});
    }
    return out;
}

std::string wdm_results_to_json(const std::map<std::string, i64>& results) {
    json doc = json::object();
    for (const auto& [id, value] : results) doc[id] = value;
    return doc.dump() + "\n";
}

ConvSpec conv_spec_from_json(const std::string& text, const std::vector<i64>& moduli_override) {
    json doc = parse(text);
    auto read_list = [&](const char* key) {
        if (!doc.contains(key) || !doc[key].is_array())
            throw Error("SchemaError", std::string("missing ") + key + " array");
        std::vector<i64> values;
        for (const json& v : doc[key]) {
            if (!v.is_number_integer())
                throw Error("ParseError", std::string(key) + " holds a non-integer");
            values.push_back(v.get<i64>());
        }
        return values;
    };
    std::vector<i64> moduli = moduli_override;
    if (moduli.empty()) {
        if (!doc.contains("moduli"))
            throw Error("SchemaError", "no moduli in document and none supplied");
        moduli = read_list("moduli");
    }
    return ConvSpec{read_list("signal"), read_list("kernel"), validate_moduli(moduli)};
}

std::string int_list_to_json(const std::vector<i64>& values) {
    json doc = values;
    return doc.dump() + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("FileError", "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("FileError", "cannot open '" + path + "' for writing");
    out << content;
    if (!out) throw Error("FileError", "failed writing '" + path + "'");
}

} // namespace ohrns
