#pragma once

#include <string>
#include <vector>

#include "core/month.hpp"

namespace resilq {

/// Gap-free monthly performance series: values[i] belongs to start + i.
/// Immutable after construction; operations return new series.
struct PerformanceSeries {
    MonthStamp start;
    std::vector<double> values;
    std::string label;

    int length() const { return static_cast<int>(values.size()); }
    MonthStamp month_at(int index) const { return start.plus(index); }
    MonthStamp end() const { return start.plus(length()); }  // one past last
};

/// Parse `month,value[,label]` CSV content. Rows may be unsorted; the
/// sorted sequence must be gap-free. Errors report the 1-based row number
/// of the offending line: MissingMonth, DuplicateMonth, NegativeValue,
/// MalformedRow.
PerformanceSeries parse_series(const std::string& csv_text);

PerformanceSeries load_series(const std::string& path);

std::string series_to_csv(const PerformanceSeries& series);

/// Trailing moving average: output[i] = mean(values[max(0, i-window+1)..i]).
/// Keeps length and start. window must be in [1, length].
PerformanceSeries moving_average(const PerformanceSeries& series, int window);

/// Divide every value by values[0]; the origin becomes exactly 1.
PerformanceSeries normalize_at_origin(const PerformanceSeries& series);

struct SplitSeries {
    PerformanceSeries pre;   // months < cutoff
    PerformanceSeries post;  // months >= cutoff
};

/// Split at a cutoff strictly inside the series range (a nonempty pre and
/// post). Concatenation of the parts reproduces the input.
SplitSeries split_at(const PerformanceSeries& series, const MonthStamp& cutoff);

}  // namespace resilq
