// Dimensionless Caldirola coefficients kbar_n = (-1)^n pi^(2n) / (2n+1)! and
// the alternating series built from them:
//   sum kbar_n x^(2n)           = sin(pi x)/(pi x)
//   A_m = (1/2) sum n kbar_n m^(2n)          -> (-1)^m / 4
//   B_m = 1 + 2 sum (n+1/2) kbar_n m^(2n)    -> 1 + (-1)^m   (sum from n = 0)
//
// Terms are generated by the recurrence t_{n+1} = t_n * (-(pi x)^2)/((2n+2)(2n+3))
// (no factorial is ever formed) and accumulated with Kahan compensation in
// long double. The integer-m identities cancel catastrophically: partial sums
// peak near e^(pi m), so certified double-precision results are limited to
// m <= 8; beyond that the result carries a precision warning.
#pragma once

namespace chronon {

/// Outcome of a compensated series evaluation.
struct SeriesValue {
    double value = 0.0;
    int terms_used = 0;
    /// Term magnitude dropped below the underflow cutoff before n_trunc.
    /// When false the truncation was forced and a warning is attached.
    bool converged = false;
    bool precision_warning = false;
    /// Largest |partial sum| seen while accumulating.
    double max_abs_partial = 0.0;
    /// Conservative absolute error estimate: double epsilon * max_abs_partial.
    double est_abs_error = 0.0;

    operator double() const { return value; }
};

/// kbar_n, computed by term recurrence.
double kbar(int n);

/// Compensated partial sum of sum_n kbar_n x^(2n); converges to sin(pi x)/(pi x).
/// |x| > 8 exceeds the double-precision cancellation budget and flags a warning.
SeriesValue sinc_series(double x, int n_trunc = 300);

/// A_m = (1/2) sum_n n kbar_n m^(2n). Expected value (-1)^m / 4.
SeriesValue a_coefficient(int m, int n_trunc = 300);

/// B_m = 1 + 2 sum_n (n+1/2) kbar_n m^(2n), summed from n = 0 so that the
/// n = 0 term contributes exactly +1. Expected value 1 + (-1)^m.
SeriesValue b_coefficient(int m, int n_trunc = 300);

}  // namespace chronon
