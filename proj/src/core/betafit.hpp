#pragma once

#include <functional>
#include <span>
#include <vector>

#include "core/detect.hpp"
#include "core/series.hpp"

namespace resilq {

/// Parameters of one disruption curve. The loss over the support
/// (start_index, start_index + duration) is
///   alpha * C(theta, vartheta) * tau^theta * (1 - tau)^vartheta,
/// tau = (t - start_index) / duration, with C chosen so the peak equals
/// alpha exactly at tau* = theta / (theta + vartheta).
struct BetaDisruptionParams {
    double alpha = 0;      // amplitude: maximum loss, same units as performance
    double theta = 1;      // decline shape
    double vartheta = 1;   // recovery shape
    double duration = 1;   // T, months
    double start_index = 0;  // t_s, month index (fractional allowed)
};

/// Speed of decline and return: u = 1/(theta*T), v = 1/(vartheta*T).
struct Rates {
    double u = 0;
    double v = 0;
};

Rates rates_of(const BetaDisruptionParams& params);

/// Loss at month index t (fractional allowed); 0 outside the open support.
double beta_loss(const BetaDisruptionParams& params, double t);

/// Exact integral of the loss curve over its support:
/// alpha * C * T * B(theta + 1, vartheta + 1), via log-gamma.
double beta_loss_integral(const BetaDisruptionParams& params);

/// Month index of the curve peak: t_s + T * theta / (theta + vartheta).
double beta_peak_time(const BetaDisruptionParams& params);

struct MinimizeResult {
    std::vector<double> parameters;
    double value = 0;
    int iterations = 0;  // total across starts
};

/// Derivative-free bounded minimization: Nelder-Mead simplex descent in
/// log-transformed coordinates, evaluated at points clamped into
/// [log lower, log upper]. Bounds must be strictly positive. Each start
/// runs until the relative improvement of the best value stays below 1e-9
/// for a full simplex cycle (dim + 1 iterations) or 500 iterations are
/// spent; the best result across starts wins. Deterministic given starts.
/// Throws Error(RQ_ERR_ALL_STARTS_FAILED) if the objective is non-finite
/// at every start.
MinimizeResult minimize(const std::function<double(std::span<const double>)>& objective,
                        std::span<const double> lower, std::span<const double> upper,
                        const std::vector<std::vector<double>>& starts);

/// A disruption window with its fitted curve. recovery_reliable is false
/// for truncated windows, where the recovery shape extrapolates beyond the
/// observed data.
struct FittedDisruption {
    DisruptionWindow window;
    BetaDisruptionParams params;
    Rates rates;
    double sse = 0;
    bool recovery_reliable = false;
};

/// Least-squares fit of the loss curve to the window's residuals.
/// The curve support is [window.start - 1, window.end]: the window holds
/// the strictly-positive-loss months and the loss is zero at both support
/// endpoints. T is fixed to that support length when recovery was
/// observed, and free in [span, 3*span] when the window is truncated.
/// Throws Error(RQ_ERR_DEGENERATE_WINDOW) when no month in the window has
/// positive loss, Error(RQ_ERR_ALL_STARTS_FAILED) if optimization cannot
/// start.
FittedDisruption fit_disruption(const DisruptionWindow& window,
                                const PerformanceSeries& observed,
                                const std::vector<double>& forecast_values);

}  // namespace resilq
