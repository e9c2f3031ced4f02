// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 the parqa authors
#ifndef PARQA_IO_HPP
#define PARQA_IO_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "parqa/errors.hpp"

namespace parqa {

using json = nlohmann::json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open for reading");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    if (const auto dir = std::filesystem::path(path).parent_path(); !dir.empty())
        std::filesystem::create_directories(dir);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(path + ": cannot open for writing");
    out << text;
    if (!out) throw ParseError(path + ": write failed");
}

inline void write_json_file(const std::string& path, const json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

// Pulls a field out of a JSON object, with the path and field name in the
// error message instead of nlohmann's opaque defaults.
template <typename T>
T get_field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ParseError(where + ": field '" + key + "': " + e.what());
    }
}

template <typename T>
T get_field_or(const json& j, const std::string& key, const std::string& where, T fallback) {
    if (!j.is_object() || !j.contains(key) || j.at(key).is_null()) return fallback;
    return get_field<T>(j, key, where);
}

template <typename T>
T get_field_or(const json& j, const std::string& key, T fallback) {
    return get_field_or<T>(j, key, "config", std::move(fallback));
}

// Shortest-round-trip formatting for doubles in CSV output. Deterministic
// for a given value, which the byte-identical rerun guarantee relies on.
inline std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    std::string s = os.str();
    // prefer the shortest representation that round-trips
    for (int prec = 1; prec < 17; ++prec) {
        std::ostringstream trial;
        trial.precision(prec);
        trial << v;
        if (std::stod(trial.str()) == v) return trial.str();
    }
    return s;
}

}  // namespace parqa

#endif
