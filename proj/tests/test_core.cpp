#include <doctest.h>

#include <json.hpp>

#include "chipcost/catalog.hpp"
#include "chipcost/core.hpp"
#include "chipcost/error.hpp"
#include "fixtures.hpp"

using namespace chipcost;
using nlohmann::json;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

std::string path_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.path();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("single monolithic chip gets the default package area") {
    const auto& cat = fixture::catalog();
    auto die = make_chiplet("die", {{"logic", 100.0, cat.node("7nm")}});
    const SystemSpec s = build_system("soc", {{die, 1}}, cat.tech("SoC"), 1);
    CHECK(s.package_area == doctest::Approx(100.0 * cat.tech("SoC")->interposer_area_factor));
    CHECK(s.package_id == "soc");
    CHECK(s.chip_count() == 1);
}

TEST_CASE("three-chip EPYC-style system") {
    const auto& cat = fixture::catalog();
    auto ccd = make_chiplet("ccd4", {{"cores", 33.3, cat.node("7nm")}}, 0.1);
    auto iod = make_chiplet("iod", {{"io", 120.0, cat.node("12nm")}}, 0.1);
    const SystemSpec s = build_system("epyc", {{ccd, 2}, {iod, 1}}, cat.tech("MCM"), 1000);
    CHECK(s.chip_count() == 3);
    CHECK(s.chip_area_sum() == doctest::Approx(2 * 37.0 + 120.0 / 0.9));
}

TEST_CASE("build_system guards") {
    const auto& cat = fixture::catalog();
    const auto n7 = cat.node("7nm");
    auto bare = make_chiplet("bare", {{"m", 100.0, n7}});
    auto d2d = make_chiplet("d2d", {{"m", 100.0, n7}}, 0.1);
    CHECK(code_of([&] { build_system("e", {}, cat.tech("MCM"), 1); }) == ErrorCode::EmptySystem);
    CHECK(code_of([&] { build_system("m", {{d2d, 1}}, cat.tech("SoC"), 1); }) == ErrorCode::MonolithicWithD2D);
    CHECK(code_of([&] { build_system("m", {{bare, 2}}, cat.tech("SoC"), 1); }) == ErrorCode::MonolithicWithD2D);
    CHECK(code_of([&] { build_system("q", {{bare, 1}}, cat.tech("MCM"), 0); }) == ErrorCode::ZeroQuantity);
    CHECK(code_of([&] {
              make_chiplet("mix", {{"a", 10.0, n7}, {"b", 10.0, cat.node("12nm")}});
          }) == ErrorCode::NodeMismatchWithinChiplet);
    CHECK(code_of([&] { make_chiplet("f", {{"a", 10.0, n7}}, 1.0); }) == ErrorCode::InvariantViolation);
}

TEST_CASE("chiplet area identity holds for every fraction") {
    const auto n = fixture::node(0.001);
    for (double f = 0.0; f < 0.99; f += 0.01) {
        auto c = make_chiplet("c", {{"a", 37.5, n}, {"b", 12.25, n}}, f);
        CHECK(c->total_area() * (1.0 - f) == doctest::Approx(49.75).epsilon(1e-15));
        CHECK(c->d2d_area() == doctest::Approx(c->total_area() * f));
    }
}

TEST_CASE("breakdown total is the sum of its nine parts") {
    const CostBreakdown b{1.5, 2.25, 3.0, 0.125, 7.0, 11.0, 13.0, 17.0, 19.0};
    CHECK(b.total() == doctest::Approx(1.5 + 2.25 + 3.0 + 0.125 + 7.0 + 11.0 + 13.0 + 17.0 + 19.0).epsilon(1e-12));
    CHECK(b.scaled(2.0).total() == doctest::Approx(2.0 * b.total()));
}

TEST_CASE("catalog converts per-cm2 defect densities") {
    const Catalog cat = load_catalog(json::parse(R"({"nodes": {"7nm": {"defect_density_per_cm2": 0.13, "wafer_cost": 9346}}})"));
    CHECK(cat.node("7nm")->defect_density == doctest::Approx(0.0013).epsilon(1e-15));
}

TEST_CASE("catalog records applied defaults") {
    const Catalog cat = load_catalog(json::parse(R"({"nodes": {"n": {"defect_density_per_mm2": 0.001, "wafer_cost": 1}}})"));
    CHECK(cat.node("n")->cluster_param == 3.0);
    bool found = false;
    for (const auto& e : cat.provenance) {
        if (e.key == "nodes.n.cluster_param") {
            found = true;
            CHECK(e.source == "default");
            CHECK(e.note.find("3") != std::string::npos);
        }
    }
    CHECK(found);
}

TEST_CASE("catalog rejects bad documents with a key path") {
    CHECK(code_of([] { load_catalog(json::object()); }) == ErrorCode::ParseError);
    CHECK(code_of([] { load_catalog(json::parse(R"({"nodes": {}})")); }) == ErrorCode::ParseError);
    CHECK(code_of([] {
              load_catalog(json::parse(R"({"nodes": {"n": {"defect_density_per_mm2": 0.001, "wafer_cost": -1}}})"));
          }) == ErrorCode::InvariantViolation);
    CHECK(path_of([] {
              load_catalog(json::parse(R"({"nodes": {"n": {"defect_density_per_mm2": 0.001, "wafer_cost": -1}}})"));
          }) == "nodes.n.wafer_cost");
    CHECK(path_of([] {
              load_catalog(json::parse(R"({"nodes": {"n": {"defect_density_per_mm2": 0.001, "wafer_cost": 1, "waffer": 2}}})"));
          }) == "nodes.n.waffer");
    const auto dangling = json::parse(R"({"nodes": {"n": {"defect_density_per_mm2": 0.001, "wafer_cost": 1}},
        "techs": {"2.5D": {"kind": "2.5d", "substrate_cost_per_mm2": 0.01, "interposer_node": "65nm"}}})");
    CHECK(code_of([&] { load_catalog(dangling); }) == ErrorCode::UnknownNodeReference);
    CHECK(path_of([&] { load_catalog(dangling); }) == "techs.2.5D.interposer_node");
    CHECK(code_of([] { fixture::catalog().node("3nm"); }) == ErrorCode::UnknownNodeReference);
}

TEST_CASE("catalog round trip is exact") {
    const Catalog& cat = fixture::catalog();
    const Catalog again = load_catalog(catalog_to_json(cat));
    CHECK(same_contents(cat, again));
    CHECK(catalog_to_json(again) == catalog_to_json(cat));
}

TEST_CASE("overrides change only the named fields and are tagged") {
    const Catalog& base = fixture::catalog();
    const Catalog over = apply_overrides(
        base, json::parse(R"({"nodes": {"7nm": {"defect_density_per_cm2": 0.13}}})"), "amd.json");
    CHECK(over.node("7nm")->defect_density == doctest::Approx(0.0013));
    CHECK(over.node("7nm")->wafer_cost == base.node("7nm")->wafer_cost);
    CHECK(*over.node("5nm") == *base.node("5nm"));
    // The interposer technology follows the rebuilt node objects.
    CHECK(over.tech("2.5D")->interposer_node == over.node("65nm"));
    for (const auto& e : over.provenance) {
        if (e.key == "nodes.7nm.defect_density") CHECK(e.source == "override");
        if (e.key == "nodes.7nm.wafer_cost") CHECK(e.source == "document");
    }
}

TEST_CASE("scaling costs leaves yields alone") {
    const Catalog s = scale_costs(fixture::catalog(), 3.0);
    CHECK(s.node("7nm")->wafer_cost == 3.0 * fixture::catalog().node("7nm")->wafer_cost);
    CHECK(s.node("7nm")->defect_density == fixture::catalog().node("7nm")->defect_density);
    CHECK(s.tech("MCM")->substrate_yield == fixture::catalog().tech("MCM")->substrate_yield);
    CHECK(s.tech("InFO")->interposer_node == s.node("65nm"));
}
