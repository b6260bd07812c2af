#include <doctest.h>

#include "ohrns/wdm.hpp"

using namespace ohrns;

namespace {

WdmFrame frame_of(std::initializer_list<std::pair<const char*, i64>> channels, i64 width) {
    WdmFrame f;
    for (const auto& [id, lane] : channels) f.channels.push_back({id, OneHot(lane, width)});
    return f;
}

} // namespace

TEST_CASE("concurrent channels through one configured adder") {
    FabricTopology topo = build_asd(5);
    Lut lut = make_adder_lut(topo, 5);

    // One fixed summand b = 4, three wavelengths.
    WdmFrame frame = frame_of({{"l1", 1}, {"l2", 1}, {"l3", 0}}, 5);
    auto outputs = route_wdm(topo, lut.entry(4), frame);
    REQUIRE(outputs.size() == 3);
    CHECK(outputs[0].first == "l1");
    CHECK(outputs[0].second.lane() == 0);
    CHECK(outputs[1].second.lane() == 0);
    CHECK(outputs[2].first == "l3");
    CHECK(outputs[2].second.lane() == 4);

    auto results = detect(outputs, 5);
    CHECK(results.at("l1") == 0);
    CHECK(results.at("l2") == 0);
    CHECK(results.at("l3") == 4);
}

TEST_CASE("empty frame") {
    FabricTopology topo = build_asd(5);
    Lut lut = make_adder_lut(topo, 5);
    CHECK(route_wdm(topo, lut.entry(0), WdmFrame{}).empty());
    CHECK(detect({}, 5).empty());
}

TEST_CASE("channel results equal single-channel routes") {
    for (i64 m : {2, 3, 5, 7, 11, 13}) {
        FabricTopology topo = build_asd(m);
        Lut lut = make_adder_lut(topo, m);
        for (i64 b = 0; b < m; ++b) {
            WdmFrame frame;
            for (i64 a = 0; a < m; ++a)
                frame.channels.push_back({"ch" + std::to_string(a), OneHot(a, m)});
            auto outputs = route_wdm(topo, lut.entry(b), frame);
            for (i64 a = 0; a < m; ++a) {
                OneHot single = route(topo, lut.entry(b), OneHot(a, m));
                CHECK(outputs[a].second == single);
            }
        }
    }
}

TEST_CASE("output order matches input order") {
    FabricTopology topo = build_asd(5);
    Lut lut = make_adder_lut(topo, 5);
    WdmFrame frame = frame_of({{"z", 0}, {"a", 1}, {"m", 2}}, 5);
    auto outputs = route_wdm(topo, lut.entry(1), frame);
    CHECK(outputs[0].first == "z");
    CHECK(outputs[1].first == "a");
    CHECK(outputs[2].first == "m");
    // detect keys by id, independent of arrival order.
    auto results = detect(outputs, 5);
    auto reversed = detect({outputs.rbegin(), outputs.rend()}, 5);
    CHECK(results == reversed);
}

TEST_CASE("frame validation") {
    FabricTopology topo = build_asd(5);
    Lut lut = make_adder_lut(topo, 5);

    WdmFrame dup = frame_of({{"l1", 0}, {"l1", 1}}, 5);
    try {
        route_wdm(topo, lut.entry(0), dup);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.name() == "DuplicateChannel");
    }

    WdmFrame wrong_width = frame_of({{"l1", 0}}, 7);
    try {
        route_wdm(topo, lut.entry(0), wrong_width);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.name() == "WidthMismatch");
    }

    WdmFrame big;
    for (int i = 0; i < 70; ++i) big.channels.push_back({"c" + std::to_string(i), OneHot(0, 5)});
    CHECK_THROWS_AS(route_wdm(topo, lut.entry(0), big), Error);
    CHECK(route_wdm(topo, lut.entry(0), big, 128).size() == 70);
}

TEST_CASE("detect validates width") {
    CHECK_THROWS_AS(detect({{"l1", OneHot(0, 7)}}, 5), Error);
}
