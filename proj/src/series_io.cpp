#include "osee/series_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "osee/errors.hpp"

namespace osee {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

nlohmann::json to_json(const Provenance& provenance) {
    nlohmann::json j;
    j["engine"] = engine_name(provenance.engine);
    j["spec"] = provenance.spec;
    if (provenance.chain) {
        j["chain"] = {{"half_length", provenance.chain->half_length},
                      {"sites", provenance.chain->site_count()},
                      {"field", provenance.chain->field}};
    }
    if (provenance.policy) {
        j["policy"] = {{"pad_scale", provenance.policy->pad_scale},
                       {"pad_offset", provenance.policy->pad_offset}};
    }
    return j;
}

void write_series_csv(std::ostream& out, const EntropySeries& series, const nlohmann::json& config) {
    out << "# config: " << config.dump() << '\n';
    out << "# provenance: " << to_json(series.provenance).dump() << '\n';
    out << "t,S\n";
    for (std::size_t i = 0; i < series.times.size(); ++i) {
        out << format_double(series.times[i]) << ',' << format_double(series.entropies[i]) << '\n';
    }
}

void write_series_json(std::ostream& out, const EntropySeries& series, const nlohmann::json& config) {
    nlohmann::json j;
    j["config"] = config;
    j["provenance"] = to_json(series.provenance);
    j["times"] = series.times;
    j["entropies"] = series.entropies;
    out << j.dump(2) << '\n';
}

namespace {

double parse_double(std::string_view s, int line) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw IoError("series CSV line " + std::to_string(line) + ": bad number '" + std::string(s) + "'");
    }
    return v;
}

EntropySeries parse_csv(std::istream& in) {
    EntropySeries series;
    std::string line;
    int number = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen && line.rfind("t,", 0) == 0) {
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw IoError("series CSV line " + std::to_string(number) + ": expected t,S");
        std::string_view view(line);
        series.times.push_back(parse_double(view.substr(0, comma), number));
        series.entropies.push_back(parse_double(view.substr(comma + 1), number));
    }
    return series;
}

}  // namespace

EntropySeries parse_series(std::istream& in) {
    in >> std::ws;
    if (in.peek() != '{') return parse_csv(in);
    try {
        const auto j = nlohmann::json::parse(in);
        EntropySeries series;
        series.times = j.at("times").get<std::vector<double>>();
        series.entropies = j.at("entropies").get<std::vector<double>>();
        if (series.times.size() != series.entropies.size()) throw IoError("series JSON arrays differ in length");
        return series;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("series JSON: ") + e.what());
    }
}

EntropySeries read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_series(in);
}

}  // namespace osee
