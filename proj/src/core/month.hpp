#pragma once

#include <compare>
#include <string>

namespace resilq {

/// Calendar month on the discrete monthly time axis. Ordering is
/// (year, month) lexicographic.
struct MonthStamp {
    int year = 1970;
    int month = 1;  // 1..12

    auto operator<=>(const MonthStamp&) const = default;

    /// Stamp `n` months after this one (n may be negative).
    MonthStamp plus(int n) const;

    /// Signed number of months from `other` to this stamp.
    int minus(const MonthStamp& other) const;

    /// "YYYY-MM"
    std::string str() const;
};

/// Parse "YYYY-MM". Throws Error(RQ_ERR_MALFORMED_ROW) on bad input.
MonthStamp parse_month(const std::string& text);

bool is_valid_month(const MonthStamp& m);

}  // namespace resilq
