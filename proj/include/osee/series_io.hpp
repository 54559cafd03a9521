#pragma once

// EntropySeries files.
//
// CSV:   "# config: <json>" line, a "t,S" header, then one "t,S" row per sample
//        in the shortest form that round-trips.
// JSON:  {"config": {...}, "provenance": {...}, "times": [...], "entropies": [...]}

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>

#include "osee/entropy.hpp"

namespace osee {

nlohmann::json to_json(const Provenance& provenance);

void write_series_csv(std::ostream& out, const EntropySeries& series, const nlohmann::json& config);
void write_series_json(std::ostream& out, const EntropySeries& series, const nlohmann::json& config);

EntropySeries parse_series(std::istream& in);
/// Reads CSV or JSON (detected from the first character). Throws IoError.
EntropySeries read_series_file(const std::string& path);

/// Shortest text form of a double that parses back to the same value.
std::string format_double(double v);

}  // namespace osee
