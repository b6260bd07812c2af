#ifndef OHRNS_SERIALIZE_HPP
#define OHRNS_SERIALIZE_HPP

#include <string>

#include "ohrns/apps.hpp"
#include "ohrns/fabric.hpp"
#include "ohrns/wdm.hpp"

namespace ohrns {

inline constexpr int kSchemaVersion = 1;

// Topology document:
//   {"schema_version": 1, "kind": "asd"|"mesh", "modulus": M,
//    "stages": [[top_index, ...], ...]}
// Mesh rows have no per-switch decomposition, so their stage lists are empty
// and the rotation order is carried in an extra "cycle" array.
std::string topology_to_json(const FabricTopology& topo);
FabricTopology topology_from_json(const std::string& text);

// LUT document:
//   {"schema_version": 1, "kind": "add"|"mul", "modulus": M,
//    "lut": {"b": ["bar"|"cross", ...], ...}}
std::string lut_to_json(const Lut& lut);
Lut lut_from_json(const std::string& text);

// Frame document: {"b": B, "kind": "add"|"mul",
//                  "channels": [{"id": "...", "input": lane}, ...]}
struct FrameDocument {
    i64 b = 0;
    LutKind kind = LutKind::Adder;
    WdmFrame frame;
};
FrameDocument frame_from_json(const std::string& text, i64 modulus);

std::string wdm_results_to_json(const std::map<std::string, i64>& results);

// Conv spec document: {"signal": [...], "kernel": [...], "moduli": [...]};
// "moduli" may be omitted when supplied out of band.
ConvSpec conv_spec_from_json(const std::string& text, const std::vector<i64>& moduli_override);

std::string int_list_to_json(const std::vector<i64>& values);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace ohrns

#endif
