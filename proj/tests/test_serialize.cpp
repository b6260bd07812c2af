#include <doctest.h>

#include "ohrns/serialize.hpp"

using namespace ohrns;

TEST_CASE("topology json round-trip preserves routing") {
    for (i64 m : {2, 5, 7}) {
        FabricTopology topo = build_asd(m);
        FabricTopology loaded = topology_from_json(topology_to_json(topo));
        CHECK(loaded.schematic == Schematic::Asd);
        CHECK(loaded.waveguides == m);
        CHECK(loaded.stages == topo.stages);
        Lut lut = make_adder_lut(topo, m);
        for (i64 a = 0; a < m; ++a)
            for (i64 b = 0; b < m; ++b)
                CHECK(route(loaded, lut.entry(b), to_onehot(a, m)) ==
                      route(topo, lut.entry(b), to_onehot(a, m)));
    }
}

TEST_CASE("mesh topology json carries the rotation cycle") {
    FabricTopology mesh = build_mesh_mul(7);
    FabricTopology loaded = topology_from_json(topology_to_json(mesh));
    CHECK(loaded.schematic == Schematic::Mesh);
    CHECK(loaded.cycle == mesh.cycle);
    CHECK(loaded.stage_count() == mesh.stage_count());
}

TEST_CASE("lut json round-trip") {
    FabricTopology topo = build_asd(5);
    for (LutKind kind : {LutKind::Adder, LutKind::Multiplier}) {
        Lut lut = kind == LutKind::Adder ? make_adder_lut(topo, 5) : make_multiplier_lut(topo, 5);
        Lut loaded = lut_from_json(lut_to_json(lut));
        CHECK(loaded.kind == lut.kind);
        CHECK(loaded.modulus == 5);
        CHECK(loaded.zero_bypass == lut.zero_bypass);
        REQUIRE(loaded.entry_count() == lut.entry_count());
        i64 first = kind == LutKind::Adder ? 0 : 1;
        for (i64 b = first; b < 5; ++b) CHECK(loaded.entry(b) == lut.entry(b));
    }
}

TEST_CASE("serialized documents are byte-stable") {
    FabricTopology topo = build_asd(5);
    CHECK(topology_to_json(topo) == topology_to_json(build_asd(5)));
    CHECK(lut_to_json(make_adder_lut(topo, 5)) == lut_to_json(make_adder_lut(topo, 5)));
}

TEST_CASE("schema version is required and checked") {
    CHECK_THROWS_AS(topology_from_json(R"({"kind":"asd","modulus":5,"stages":[]})"), Error);
    try {
        topology_from_json(R"({"schema_version":99,"kind":"asd","modulus":5,"stages":[]})");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.name() == "SchemaError");
    }
    CHECK_THROWS_AS(lut_from_json(R"({"kind":"add","modulus":5,"lut":{}})"), Error);
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(topology_from_json("not json"), Error);
    CHECK_THROWS_AS(topology_from_json(R"({"schema_version":1,"kind":"ring","modulus":5,"stages":[]})"),
                    Error);
    // Overlapping switches in one stage.
    CHECK_THROWS_AS(
        topology_from_json(R"({"schema_version":1,"kind":"asd","modulus":5,"stages":[[0,1]]})"),
        Error);
    // Switch index out of range.
    CHECK_THROWS_AS(
        topology_from_json(R"({"schema_version":1,"kind":"asd","modulus":5,"stages":[[4]]})"),
        Error);
    // Missing LUT entry.
    CHECK_THROWS_AS(
        lut_from_json(R"({"schema_version":1,"kind":"add","modulus":3,"lut":{"0":[],"1":[]}})"),
        Error);
}

TEST_CASE("frame document parsing") {
    FrameDocument doc = frame_from_json(
        R"({"b": 4, "kind": "add", "channels": [{"id": "l1", "input": 1}, {"id": "l2", "input": 0}]})",
        5);
    CHECK(doc.b == 4);
    CHECK(doc.kind == LutKind::Adder);
    REQUIRE(doc.frame.channels.size() == 2);
    CHECK(doc.frame.channels[0].id == "l1");
    CHECK(doc.frame.channels[0].input.lane() == 1);

    CHECK_THROWS_AS(frame_from_json(R"({"b": 0, "channels": [{"id": "x", "input": 9}]})", 5), Error);
    CHECK_THROWS_AS(frame_from_json(R"({"b": 0})", 5), Error);
}

TEST_CASE("wdm results json") {
    CHECK(wdm_results_to_json({{"l1", 0}, {"l3", 4}}) == "{\"l1\":0,\"l3\":4}\n");
}

TEST_CASE("conv spec parsing with and without moduli override") {
    ConvSpec spec = conv_spec_from_json(
        R"({"signal": [1, 2, 3], "kernel": [1, 1], "moduli": [11, 19, 23]})", {});
    CHECK(spec.signal == std::vector<i64>{1, 2, 3});
    CHECK(spec.kernel == std::vector<i64>{1, 1});
    CHECK(spec.moduli.range() == 4807);

    ConvSpec overridden =
        conv_spec_from_json(R"({"signal": [1], "kernel": [1]})", {3, 5, 7});
    CHECK(overridden.moduli.range() == 105);

    CHECK_THROWS_AS(conv_spec_from_json(R"({"signal": [1], "kernel": [1]})", {}), Error);
    CHECK_THROWS_AS(conv_spec_from_json(R"({"signal": [1]})", {3, 5}), Error);
}
