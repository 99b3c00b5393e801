#include "core/series.hpp"

#include <algorithm>
#include <sstream>

#include "core/csv.hpp"
#include "core/error.hpp"

namespace resilq {

PerformanceSeries parse_series(const std::string& csv_text) {
    CsvTable table = parse_csv(csv_text);
    int month_col = table.column("month");
    int value_col = table.column("value");
    int label_col = table.column("label");
    require(month_col >= 0 && value_col >= 0, RQ_ERR_MALFORMED_ROW,
            "series CSV must have a `month,value[,label]` header");
    require(!table.rows.empty(), RQ_ERR_EMPTY_INPUT, "series CSV has no data rows");

    struct Entry {
        MonthStamp month;
        double value;
        int line;
    };
    std::vector<Entry> entries;
    entries.reserve(table.rows.size());
    std::string label;
    for (const auto& row : table.rows) {
        int needed = std::max(month_col, value_col);
        if (static_cast<int>(row.fields.size()) <= needed)
            fail(RQ_ERR_MALFORMED_ROW, "too few fields at row " + std::to_string(row.line));
        MonthStamp month;
        try {
            month = parse_month(row.fields[month_col]);
        } catch (const Error& e) {
            fail(RQ_ERR_MALFORMED_ROW, std::string(e.what()) + " at row " + std::to_string(row.line));
        }
        double value = parse_number(row.fields[value_col], row.line);
        if (value < 0)
            fail(RQ_ERR_NEGATIVE_VALUE,
                 "negative value " + row.fields[value_col] + " at row " + std::to_string(row.line));
        if (label.empty() && label_col >= 0 && static_cast<int>(row.fields.size()) > label_col)
            label = row.fields[label_col];
        entries.push_back({month, value, row.line});
    }

    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.month < b.month; });
    for (size_t i = 1; i < entries.size(); ++i) {
        int step = entries[i].month.minus(entries[i - 1].month);
        if (step == 0)
            fail(RQ_ERR_DUPLICATE_MONTH, "duplicate month " + entries[i].month.str() +
                                             " at row " + std::to_string(entries[i].line));
        if (step > 1)
            fail(RQ_ERR_MISSING_MONTH,
                 "gap before " + entries[i].month.str() + " at row " + std::to_string(entries[i].line));
    }

    PerformanceSeries series;
    series.start = entries.front().month;
    series.values.reserve(entries.size());
    for (const auto& e : entries) series.values.push_back(e.value);
    series.label = label;
    return series;
}

PerformanceSeries load_series(const std::string& path) {
    return parse_series(read_file(path));
}

std::string series_to_csv(const PerformanceSeries& series) {
    std::ostringstream out;
    out << (series.label.empty() ? "month,value" : "month,value,label") << '\n';
    out.precision(17);
    for (int i = 0; i < series.length(); ++i) {
        out << series.month_at(i).str() << ',' << series.values[i];
        if (!series.label.empty()) out << ',' << series.label;
        out << '\n';
    }
    return out.str();
}

PerformanceSeries moving_average(const PerformanceSeries& series, int window) {
    require(window >= 1, RQ_ERR_INVALID_ARGUMENT, "moving-average window must be >= 1");
    require(window <= series.length(), RQ_ERR_WINDOW_TOO_LARGE,
            "moving-average window " + std::to_string(window) + " exceeds series length " +
                std::to_string(series.length()));
    PerformanceSeries out{series.start, {}, series.label};
    out.values.resize(series.values.size());
    for (int i = 0; i < series.length(); ++i) {
        int first = std::max(0, i - window + 1);
        double sum = 0;
        for (int j = first; j <= i; ++j) sum += series.values[j];
        out.values[i] = sum / (i - first + 1);
    }
    return out;
}

PerformanceSeries normalize_at_origin(const PerformanceSeries& series) {
    require(!series.values.empty(), RQ_ERR_EMPTY_INPUT, "cannot normalize an empty series");
    double origin = series.values[0];
    require(origin > 0, RQ_ERR_ZERO_ORIGIN, "value at the origin is zero; cannot normalize");
    PerformanceSeries out{series.start, {}, series.label};
    out.values.reserve(series.values.size());
    for (double v : series.values) out.values.push_back(v / origin);
    out.values[0] = 1.0;
    return out;
}

SplitSeries split_at(const PerformanceSeries& series, const MonthStamp& cutoff) {
    int offset = cutoff.minus(series.start);
    require(offset > 0 && offset < series.length(), RQ_ERR_CUTOFF_OUT_OF_RANGE,
            "cutoff " + cutoff.str() + " must fall strictly inside the series range");
    SplitSeries parts;
    parts.pre.start = series.start;
    parts.pre.label = series.label;
    parts.pre.values.assign(series.values.begin(), series.values.begin() + offset);
    parts.post.start = cutoff;
    parts.post.label = series.label;
    parts.post.values.assign(series.values.begin() + offset, series.values.end());
    return parts;
}

}  // namespace resilq
