#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace dirres {

// ordered_json keeps keys in insertion order, which keeps both the JSON and
// the CSV column order stable across runs.
using Json = nlohmann::ordered_json;

// One machine-readable report per command run: the command name, an echo of
// the effective inputs, one record per result, and an overall pass/fail.
// Verification commands flip pass to false when any cell deviates.
struct Report {
    std::string command;
    Json inputs = Json::object();
    std::vector<Json> results;
    std::vector<std::string> notes;
    bool pass = true;

    Json to_json() const;

    // Flat projection of the result records: columns are the union of record
    // keys in first-seen order, one row per record.
    std::string to_csv() const;
};

// format is "json" or "csv".
std::string render_report(const Report& r, const std::string& format);

} // namespace dirres
