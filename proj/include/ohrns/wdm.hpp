#ifndef OHRNS_WDM_HPP
#define OHRNS_WDM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ohrns/fabric.hpp"

namespace ohrns {

struct WdmChannel {
    std::string id; // wavelength label, unique within a frame
    OneHot input;
};

// Channels that traverse one configured fabric concurrently. Channels are
// ideal and independent; no crosstalk or wavelength-dependent routing.
struct WdmFrame {
    std::vector<WdmChannel> channels;
};

inline constexpr std::size_t kDefaultChannelCap = 64;

// Routes every channel through the same configuration; output order matches
// input order and each result is identical to a single-channel route.
std::vector<std::pair<std::string, OneHot>> route_wdm(const FabricTopology& topo,
                                                      const Configuration& config,
                                                      const WdmFrame& frame,
                                                      std::size_t channel_cap = kDefaultChannelCap);

// Per-channel readout: resolves each output lane to its integer result.
std::map<std::string, i64> detect(const std::vector<std::pair<std::string, OneHot>>& outputs,
                                  i64 modulus);

} // namespace ohrns

#endif
