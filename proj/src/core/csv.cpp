#include "core/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace resilq {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(trim(field));
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

int CsvTable::column(const std::string& name) const {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    while (std::getline(ss, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!have_header) {
            table.header = split_fields(t);
            for (auto& h : table.header)
                std::transform(h.begin(), h.end(), h.begin(),
                               [](unsigned char c) { return std::tolower(c); });
            have_header = true;
            continue;
        }
        table.rows.push_back(CsvRow{split_fields(t), line_no});
    }
    if (!have_header) fail(RQ_ERR_EMPTY_INPUT, "CSV has no header row");
    return table;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(RQ_ERR_IO_FAILURE, "cannot open '" + path + "' for reading");
    std::ostringstream out;
    out << in.rdbuf();
    if (in.bad()) fail(RQ_ERR_IO_FAILURE, "error while reading '" + path + "'");
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail(RQ_ERR_IO_FAILURE, "cannot open '" + tmp.string() + "' for writing");
        out << content;
        out.flush();
        if (!out) fail(RQ_ERR_IO_FAILURE, "error while writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        fail(RQ_ERR_IO_FAILURE, "cannot rename temp file onto '" + path + "': " + ec.message());
    }
}

double parse_number(const std::string& field, int line) {
    if (field.empty())
        fail(RQ_ERR_MALFORMED_ROW, "empty numeric field at row " + std::to_string(line));
    size_t pos = 0;
    double value = 0;
    try {
        value = std::stod(field, &pos);
    } catch (const std::exception&) {
        fail(RQ_ERR_MALFORMED_ROW,
             "malformed number '" + field + "' at row " + std::to_string(line));
    }
    if (pos != field.size())
        fail(RQ_ERR_MALFORMED_ROW,
             "malformed number '" + field + "' at row " + std::to_string(line));
    return value;
}

}  // namespace resilq
