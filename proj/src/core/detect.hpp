#pragma once

#include <vector>

#include "core/month.hpp"
#include "core/series.hpp"

namespace resilq {

/// Loss against the counterfactual baseline: loss[t] = P(t) - O(t),
/// relative_loss[t] = loss[t] / P(t). Same start and length as the
/// observed series.
struct ResidualSeries {
    MonthStamp start;
    std::vector<double> loss;
    std::vector<double> relative_loss;

    int length() const { return static_cast<int>(loss.size()); }
};

ResidualSeries residuals(const PerformanceSeries& observed,
                         const std::vector<double>& forecast_values);

/// Constant-mean block found by the segmentation; indices inclusive.
struct Segment {
    int first = 0;
    int last = 0;
    double mean_loss = 0;  // mean relative loss over the block
    double sse = 0;        // within-block SSE about that mean
};

/// Exact dynamic-programming minimizer of
///   sum_segments(within-segment SSE) + penalty * (segment count)
/// over the relative-loss series. Ties prefer fewer segments, then the
/// earlier final boundary (recursively, so tied solutions compare by their
/// boundary lists back-to-front). Total on any series of length >= 1.
std::vector<Segment> segment(const ResidualSeries& residuals, double penalty);

/// Default penalty: 2 * (median |month-over-month change of relative
/// loss|)^2 * length. Scales with noise; deterministic.
double default_segment_penalty(const ResidualSeries& residuals);

/// A detected disruption: [start_index, end_index) covers the months with
/// strictly positive relative loss; end_index is the first month at or
/// below zero again, or the series length when the series ends first
/// (recovery_observed = false).
struct DisruptionWindow {
    int start_index = 0;
    int end_index = 0;  // exclusive
    int peak_index = 0;
    bool recovery_observed = false;
    double peak_relative_loss = 0;

    int duration() const { return end_index - start_index; }
};

/// Detect admissible disruptions. Candidates are maximal runs of months
/// with relative loss > 0; candidates shorter than min_duration months or
/// peaking below min_peak_ratio are dropped. Peak ties resolve to the
/// earliest month. Output windows are disjoint and ordered.
std::vector<DisruptionWindow> extract_windows(const ResidualSeries& residuals,
                                              const std::vector<Segment>& segments,
                                              int min_duration = 3,
                                              double min_peak_ratio = 0.05);

/// Boundary separating the decline and recovery phases of a window: the
/// segment edge nearest the peak, strictly inside the window; the peak
/// month itself when no edge falls inside. Ties resolve to the earlier
/// edge.
int phase_split(const DisruptionWindow& window, const std::vector<Segment>& segments);

}  // namespace resilq
