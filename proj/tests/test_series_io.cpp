#include <doctest.h>

#include <cmath>
#include <sstream>

#include "osee/errors.hpp"
#include "osee/series_io.hpp"

using namespace osee;

namespace {

EntropySeries sample_series() {
    EntropySeries s;
    s.times = {0.0, 0.25, 1.0 / 3.0, 50.0};
    s.entropies = {0.0, 0.1234567890123456789, std::log(2.0), 1e-300};
    s.provenance = {Engine::Finite, ChainConfig(100, 1.0), std::nullopt, "X1"};
    return s;
}

}  // namespace

TEST_CASE("csv round trip is exact") {
    const auto s = sample_series();
    std::stringstream buf;
    write_series_csv(buf, s, {{"op", "X1"}});
    const std::string text = buf.str();
    CHECK(text.rfind("# config: {\"op\":\"X1\"}\n# provenance: ", 0) == 0);
    CHECK(text.find("\nt,S\n") != std::string::npos);
    const auto back = parse_series(buf);
    CHECK(back.times == s.times);
    CHECK(back.entropies == s.entropies);
}

TEST_CASE("json round trip is exact") {
    const auto s = sample_series();
    std::stringstream buf;
    write_series_json(buf, s, {{"op", "X1"}});
    const auto j = nlohmann::json::parse(buf.str());
    CHECK(j.at("provenance").at("engine") == "finite");
    CHECK(j.at("provenance").at("chain").at("sites") == 200);
    const auto back = parse_series(buf);
    CHECK(back.times == s.times);
    CHECK(back.entropies == s.entropies);
}

TEST_CASE("shortest round-trip formatting") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(5.0) == "5");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("malformed inputs") {
    std::istringstream bad_number("t,S\n1,abc\n");
    CHECK_THROWS_AS(parse_series(bad_number), IoError);
    std::istringstream no_comma("t,S\n1\n");
    CHECK_THROWS_AS(parse_series(no_comma), IoError);
    std::istringstream bad_json("{\"times\": [1, 2], \"entropies\": [1]}");
    CHECK_THROWS_AS(parse_series(bad_json), IoError);
    std::istringstream broken_json("{\"times\": [1, 2");
    CHECK_THROWS_AS(parse_series(broken_json), IoError);
    CHECK_THROWS_AS(read_series_file("/nonexistent/series.csv"), IoError);
}
