#include "core/month.hpp"

#include <cctype>
#include <cstdio>

#include "core/error.hpp"

namespace resilq {

MonthStamp MonthStamp::plus(int n) const {
    int zero_based = year * 12 + (month - 1) + n;
    int y = zero_based / 12;
    int m = zero_based % 12;
    if (m < 0) {  // keep month in 0..11 for negative totals
        m += 12;
        y -= 1;
    }
    return MonthStamp{y, m + 1};
}

int MonthStamp::minus(const MonthStamp& other) const {
    return (year - other.year) * 12 + (month - other.month);
}

std::string MonthStamp::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

MonthStamp parse_month(const std::string& text) {
    // strict YYYY-MM: four digits, dash, two digits
    bool ok = text.size() == 7 && text[4] == '-';
    for (size_t i = 0; ok && i < text.size(); ++i) {
        if (i == 4) continue;
        ok = std::isdigit(static_cast<unsigned char>(text[i])) != 0;
    }
    if (!ok) fail(RQ_ERR_MALFORMED_ROW, "expected month formatted YYYY-MM, got '" + text + "'");
    MonthStamp m{std::stoi(text.substr(0, 4)), std::stoi(text.substr(5, 2))};
    if (!is_valid_month(m)) fail(RQ_ERR_MALFORMED_ROW, "month out of range in '" + text + "'");
    return m;
}

bool is_valid_month(const MonthStamp& m) {
    return m.month >= 1 && m.month <= 12;
}

}  // namespace resilq
