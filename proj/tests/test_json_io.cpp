#include <doctest.h>

#include "swcontract/json_io.hpp"
#include "swcontract/repro.hpp"

using namespace swc;

TEST_CASE("norm specs round-trip through JSON") {
    const Json lp = Json::parse(R"({"type":"lp","p":1,"weights":[1.0,3.4042,1.0369]})");
    const NormSpec spec = norm_from_json(lp);
    CHECK(norm_eval(spec, {1.0, 1.0, 1.0}) == doctest::Approx(5.4411));
    CHECK(norm_to_json(norm_from_json(norm_to_json(spec))) == norm_to_json(spec));

    const Json quad = Json::parse(R"({"type":"quadratic","Theta":[[2.0,0.0],[0.0,1.0]]})");
    const NormSpec qspec = norm_from_json(quad);
    CHECK(norm_eval(qspec, {1.0, 0.0}) == doctest::Approx(2.0));
    // Theta is canonicalized: the emitted form carries P
    CHECK(norm_to_json(qspec).contains("P"));

    const Json structured = Json::parse(R"({
      "type":"structured","partition":[2,1],
      "inner":[{"type":"lp","p":2,"weights":[1,1]},{"type":"lp","p":1,"weights":[1]}],
      "outer":{"type":"lp","p":"inf","weights":[1,1]}})");
    const NormSpec sspec = norm_from_json(structured);
    CHECK(norm_dimension(sspec) == 3);
    CHECK(norm_to_json(norm_from_json(norm_to_json(sspec))) == norm_to_json(sspec));
}

TEST_CASE("norm parse errors name the offending path") {
    CHECK_THROWS_WITH_AS(norm_from_json(Json::parse(R"({"p":1})")), doctest::Contains("$.type"),
                         InvalidInput);
    CHECK_THROWS_WITH_AS(norm_from_json(Json::parse(R"({"type":"lp","p":3,"weights":[1]})")),
                         doctest::Contains("$.p"), InvalidInput);
    CHECK_THROWS_WITH_AS(
        norm_from_json(Json::parse(R"({"type":"lp","p":1,"weights":[1,"x"]})")),
        doctest::Contains("$.weights[1]"), InvalidInput);
}

TEST_CASE("signals round-trip and validate") {
    const Json j = Json::parse(R"({"segments":[[1,1.0],[2,2.5]],"periodic":true,"t0":0.5})");
    const SwitchingSignal sig = signal_from_json(j);
    CHECK(sig.period() == doctest::Approx(3.5));
    CHECK(sig.t0() == doctest::Approx(0.5));
    CHECK(signal_to_json(sig) == j);
    CHECK_THROWS_WITH_AS(signal_from_json(Json::parse(R"({"segments":[[1,-1.0]]})")),
                         doctest::Contains("$.segments"), InvalidInput);
}

TEST_CASE("graphs round-trip and validate") {
    const Json j = Json::parse(R"({"nodes":3,"edges":[[0,1],[1,2]],"undirected":true})");
    const Graph g = graph_from_json(j);
    CHECK(g.nodes == 3);
    CHECK(graph_to_json(g) == j);
    CHECK_THROWS_WITH_AS(graph_from_json(Json::parse(R"({"nodes":2,"edges":[[0,5]]})")),
                         doctest::Contains("$"), InvalidInput);
}

TEST_CASE("numeric emission uses at most 12 significant digits") {
    CHECK(jnum(1.0 / 3.0).dump() == "0.333333333333");
    CHECK(jnum(123456789.123456789).dump() == "123456789.123");
    CHECK(jnum(2.0).dump() == "2.0");
}

TEST_CASE("repro report is deterministic and carries required rows") {
    const auto rows = repro_rows();
    const auto rows2 = repro_rows();
    CHECK(repro_to_json(rows).dump() == repro_to_json(rows2).dump());
    CHECK(repro_to_text(rows) == repro_to_text(rows2));

    auto find = [&](const std::string& id) -> const ReproRow& {
        for (const ReproRow& r : rows)
            if (r.id == id) return r;
        static ReproRow missing;
        FAIL("missing repro row ", id);
        return missing;
    };
    CHECK(find("Am-eig-1").status == "match");
    CHECK(find("Am-eig-2").status == "match");
    CHECK(find("chua-mu0").status == "match");
    CHECK(find("ex2-c").status == "mismatch");
    CHECK(find("ex2-c").computed_value == doctest::Approx(0.1020).epsilon(1e-2));
    CHECK(find("net-T").status == "mismatch");
    CHECK(find("net-beta01").status == "mismatch");
    CHECK(find("net-lambda2").status == "informational");
    CHECK(find("ex1-beta12").status == "mismatch");
    CHECK(find("ex2-beta12").status == "match");
    CHECK(find("ex2-mu1").status == "mismatch");
}
