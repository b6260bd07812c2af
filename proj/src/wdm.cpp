#include "ohrns/wdm.hpp"

#include <set>

namespace ohrns {

std::vector<std::pair<std::string, OneHot>> route_wdm(const FabricTopology& topo,
                                                      const Configuration& config,
                                                      const WdmFrame& frame,
                                                      std::size_t channel_cap) {
    if (frame.channels.size() > channel_cap)
        throw Error("TooManyChannels", "frame has " + std::to_string(frame.channels.size()) +
                                           " channels, cap is " + std::to_string(channel_cap));
    std::set<std::string> ids;
    for (const WdmChannel& ch : frame.channels) {
        if (!ids.insert(ch.id).second)
            throw Error("DuplicateChannel", "channel id '" + ch.id + "' appears twice");
        if (ch.input.width() != topo.waveguides)
            throw Error("WidthMismatch", "channel '" + ch.id + "' has width " +
                                             std::to_string(ch.input.width()) + ", fabric has " +
                                             std::to_string(topo.waveguides) + " waveguides");
    }
    std::vector<std::pair<std::string, OneHot>> out;
    out.reserve(frame.channels.size());
    for (const WdmChannel& ch : frame.channels)
        out.emplace_back(ch.id, route(topo, config, ch.input));
    return out;
}

std::map<std::string, i64> detect(const std::vector<std::pair<std::string, OneHot>>& outputs,
                                  i64 modulus) {
    std::map<std::string, i64> results;
    for (const auto& [id, signal] : outputs) {
        if (signal.width() != modulus)
            throw Error("WidthMismatch", "channel '" + id + "' has width " +
                                             std::to_string(signal.width()) + ", detector bank has " +
                                             std::to_string(modulus));
        results[id] = from_onehot(signal);
    }
    return results;
}

} // namespace ohrns
