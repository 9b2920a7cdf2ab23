#include "chronon/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "chronon/errors.hpp"

namespace chronon {

namespace {

constexpr double kCancellationBudgetX = 8.0;
// Relative-to-peak cutoff below which further terms cannot move the sum.
constexpr long double kTermCutoff = 1e-22L;

enum class Weight { plain, linear, linear_plus_half };

SeriesValue accumulate(double x, int n_trunc, Weight weight) {
    if (n_trunc < 1) throw DomainError("series: n_trunc must be >= 1");

    const long double px = std::numbers::pi_v<long double> * static_cast<long double>(x);
    const long double ratio_num = -(px * px);

    long double sum = 0.0L, comp = 0.0L;  // Kahan accumulator
    long double term = 1.0L;              // kbar_n x^(2n), starting at n = 0
    long double max_term = 0.0L, max_partial = 0.0L;

    SeriesValue out;
    for (int n = 0; n <= n_trunc; ++n) {
        long double w;
        switch (weight) {
            case Weight::plain: w = 1.0L; break;
            case Weight::linear: w = static_cast<long double>(n); break;
            default: w = static_cast<long double>(n) + 0.5L; break;
        }
        const long double y = w * term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        max_term = std::max(max_term, std::fabsl(term));
        max_partial = std::max(max_partial, std::fabsl(sum));
        out.terms_used = n + 1;

        if (std::fabsl(term) < kTermCutoff * max_term && n >= 1) {
            out.converged = true;
            break;
        }
        term *= ratio_num / static_cast<long double>((2 * n + 2) * (2 * n + 3));
    }

    out.value = static_cast<double>(sum);
    out.max_abs_partial = static_cast<double>(max_partial);
    out.est_abs_error = std::numeric_limits<double>::epsilon() * out.max_abs_partial;
    out.precision_warning = !out.converged || std::abs(x) > kCancellationBudgetX;
    return out;
}

}  // namespace

double kbar(int n) {
    if (n < 0) throw DomainError("kbar: n must be non-negative");
    double t = 1.0;
    for (int j = 1; j <= n; ++j)
        t *= -(std::numbers::pi * std::numbers::pi) / static_cast<double>((2 * j) * (2 * j + 1));
    return t;
}

SeriesValue sinc_series(double x, int n_trunc) { return accumulate(x, n_trunc, Weight::plain); }

SeriesValue a_coefficient(int m, int n_trunc) {
    if (m < 1) throw DomainError("a_coefficient: m must be a positive integer");
    SeriesValue s = accumulate(static_cast<double>(m), n_trunc, Weight::linear);
    s.value *= 0.5;
    s.est_abs_error *= 0.5;
    s.precision_warning = s.precision_warning || m > 8;
    return s;
}

SeriesValue b_coefficient(int m, int n_trunc) {
    if (m < 1) throw DomainError("b_coefficient: m must be a positive integer");
    SeriesValue s = accumulate(static_cast<double>(m), n_trunc, Weight::linear_plus_half);
    s.value = 1.0 + 2.0 * s.value;
    s.est_abs_error *= 2.0;
    s.precision_warning = s.precision_warning || m > 8;
    return s;
}

}  // namespace chronon
