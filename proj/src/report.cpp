#include "dirres/report.hpp"

#include "dirres/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dirres {

Json Report::to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    if (!notes.empty()) j["notes"] = notes;
    j["status"] = pass ? "pass" : "fail";
    return j;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return csv_escape(v.get<std::string>());
    return v.dump();
}

} // namespace

std::string Report::to_csv() const {
    std::vector<std::string> columns;
    for (const Json& rec : results)
        for (const auto& item : rec.items())
            if (std::find(columns.begin(), columns.end(), item.key()) == columns.end())
                columns.push_back(item.key());
    std::ostringstream out;
    for (size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << csv_escape(columns[c]);
    out << "\n";
    for (const Json& rec : results) {
        for (size_t c = 0; c < columns.size(); ++c) {
            if (c) out << ",";
            if (rec.contains(columns[c])) out << csv_cell(rec.at(columns[c]));
        }
        out << "\n";
    }
    return out.str();
}

std::string render_report(const Report& r, const std::string& format) {
    if (format == "json") return r.to_json().dump(2) + "\n";
    if (format == "csv") return r.to_csv();
    throw InvalidParam("unknown format '" + format + "', expected json or csv");
}

} // namespace dirres
