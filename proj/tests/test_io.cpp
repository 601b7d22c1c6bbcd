#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <stdexcept>

#include "hilbertmu/measure.hpp"
#include "hilbertmu/measure_json.hpp"

using namespace hmu;

TEST_CASE("measure specs parse from json documents", "[io]") {
    SECTION("atomic") {
        const auto mu = parse_measure_text(
            R"({"type":"atomic","points":[0.25,0.5],"weights":[1.0,0.5]})");
        const auto* m = std::get_if<AtomicMeasure>(&mu);
        REQUIRE(m != nullptr);
        REQUIRE(m->points == std::vector<double>{0.25, 0.5});
        REQUIRE(m->weights == std::vector<double>{1.0, 0.5});
        REQUIRE(moment(mu, 1) == Catch::Approx(0.5));
    }

    SECTION("power, scale defaults to one") {
        const auto mu = parse_measure_text(R"({"type":"power","gamma":1.0})");
        const auto* m = std::get_if<PowerWeight>(&mu);
        REQUIRE(m != nullptr);
        REQUIRE(m->gamma == 1.0);
        REQUIRE(m->scale == 1.0);
        REQUIRE(moment(mu, 0) == Catch::Approx(0.5));
    }

    SECTION("power with explicit scale") {
        const auto mu = parse_measure_text(R"({"type":"power","gamma":0.0,"scale":3.0})");
        REQUIRE(moment(mu, 0) == Catch::Approx(3.0));
    }

    SECTION("logpower") {
        const auto mu =
            parse_measure_text(R"({"type":"logpower","s":1.0,"alpha":2.0,"scale":1.0})");
        const auto* m = std::get_if<LogPowerWeight>(&mu);
        REQUIRE(m != nullptr);
        REQUIRE(m->s == 1.0);
        REQUIRE(m->alpha == 2.0);
    }

    SECTION("tabulated") {
        const auto mu = parse_measure_text(
            R"({"type":"tabulated","grid":[0.0,0.5,0.875],"density":[1.0,1.0,1.0]})");
        const auto* m = std::get_if<TabulatedDensity>(&mu);
        REQUIRE(m != nullptr);
        REQUIRE(moment(mu, 0) == Catch::Approx(0.875));
    }
}

TEST_CASE("measure specs round-trip through serialization", "[io]") {
    AtomicMeasure atoms;
    atoms.points = {0.1, 0.9};
    atoms.weights = {2.0, 0.25};
    PowerWeight pw;
    pw.gamma = -0.5;
    pw.scale = 2.0;
    LogPowerWeight lw;
    lw.s = 1.5;
    lw.alpha = 0.5;
    lw.scale = 0.5;
    TabulatedDensity tab;
    tab.grid = {0.0, 0.25, 0.9375};
    tab.density = {1.0, 2.0, 0.0};

    const std::vector<Measure> fams = {Measure(atoms), Measure(pw), Measure(lw),
                                       Measure(tab), lebesgue()};
    for (const Measure& mu : fams) {
        const auto text = measure_to_json(mu).dump();
        const auto back = parse_measure_text(text);
        REQUIRE(family_name(back) == family_name(mu));
        for (int n : {0, 1, 5})
            REQUIRE(moment(back, n) == Catch::Approx(moment(mu, n)).margin(1e-15));
    }
}

TEST_CASE("malformed measure specs are rejected with context", "[io]") {
    REQUIRE_THROWS_AS(parse_measure_text("{not json"), json::parse_error);
    REQUIRE_THROWS_AS(parse_measure_text("[1,2,3]"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_measure_text(R"({"points":[0.5]})"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_measure_text(R"({"type":"gaussian"})"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_measure_text(R"({"type":"power"})"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_measure_text(R"({"type":"power","gamma":"wide"})"),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(parse_measure_text(R"({"type":"atomic","points":[0.5],"weights":"x"})"),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(
        parse_measure_text(R"({"type":"atomic","points":[[0.5]],"weights":[1.0]})"),
        std::invalid_argument);

    SECTION("documents that parse but violate measure invariants") {
        REQUIRE_THROWS_AS(
            parse_measure_text(R"({"type":"atomic","points":[1.5],"weights":[1.0]})"),
            std::invalid_argument);
        REQUIRE_THROWS_AS(
            parse_measure_text(R"({"type":"atomic","points":[0.5],"weights":[1.0,2.0]})"),
            std::invalid_argument);
        REQUIRE_THROWS_AS(parse_measure_text(R"({"type":"power","gamma":-1.0})"),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(
            parse_measure_text(R"({"type":"tabulated","grid":[0.0,0.5],"density":[1.0]})"),
            std::invalid_argument);
        REQUIRE_THROWS_AS(
            parse_measure_text(
                R"({"type":"tabulated","grid":[0.0,1.0],"density":[1.0,1.0]})"),
            std::invalid_argument);
    }

    SECTION("missing file") {
        REQUIRE_THROWS_AS(load_measure("/nonexistent/measure.json"), std::runtime_error);
    }
}

TEST_CASE("coefficient vectors accept numbers and pairs, emit pairs", "[io]") {
    const auto a = coefficients_from_json(json::parse(R"([1.0, [0.0, 2.0], -3.5])"));
    REQUIRE(a.size() == 3);
    REQUIRE(a[0] == std::complex<double>(1.0, 0.0));
    REQUIRE(a[1] == std::complex<double>(0.0, 2.0));
    REQUIRE(a[2] == std::complex<double>(-3.5, 0.0));

    const auto text = coefficients_to_json(a).dump();
    REQUIRE(text == "[[1.0,0.0],[0.0,2.0],[-3.5,0.0]]");
    const auto back = coefficients_from_json(json::parse(text));
    REQUIRE(back == a);

    REQUIRE_THROWS_AS(coefficients_from_json(json::parse(R"({"a":1})")),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(coefficients_from_json(json::parse(R"([[1.0]])")),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(coefficients_from_json(json::parse(R"([[1.0,2.0,3.0]])")),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(coefficients_from_json(json::parse(R"(["one"])")),
                      std::invalid_argument);
}
