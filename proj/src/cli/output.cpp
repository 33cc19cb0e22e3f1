// Copyright 2026 The tprh Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "tprh/cli.hpp"

namespace tprh::cli {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_field(const Field& f) {
    struct {
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const std::string& v) const { return csv_escape(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    } visitor;
    return std::visit(visitor, f);
}

nlohmann::ordered_json json_field(const Field& f) {
    if (const auto* d = std::get_if<double>(&f)) {
        if (!std::isfinite(*d)) return nullptr;
        // Round-trip through the CSV text so both formats carry the same digits.
        return std::stod(format_double(*d));
    }
    if (const auto* i = std::get_if<long long>(&f)) return *i;
    if (const auto* b = std::get_if<bool>(&f)) return *b;
    return std::get<std::string>(f);
}

}  // namespace

void RecordTable::write(std::ostream& os, Format format) const {
    if (format == Format::Json) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json rec = nlohmann::ordered_json::object();
            for (std::size_t c = 0; c < columns.size(); ++c) rec[columns[c]] = json_field(row[c]);
            arr.push_back(std::move(rec));
        }
        os << arr.dump(1) << '\n';
        return;
    }
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
        os << '\n';
    }
    if (!trailer.empty()) os << "# " << trailer << '\n';
}

}  // namespace tprh::cli
