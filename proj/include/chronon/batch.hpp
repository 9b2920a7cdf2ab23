// Data-parallel kernels with a serial reference path. Every kernel is an
// independent-per-element map into a preallocated output, so the serial and
// OpenMP paths produce bitwise identical results and output files do not
// depend on the thread count.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chronon/fourier.hpp"

namespace chronon {

enum class ExecMode { serial, parallel };

template <class F>
void batch_for(std::size_t n, ExecMode mode, F&& fn) {
#ifdef _OPENMP
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < static_cast<long>(n); ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

/// Truncated-series oracle vs boxed closed form, one motion per element.
struct OracleComparison {
    Vec3 spin_oracle{}, spin_boxed{};
    double ham_oracle = 0.0, ham_boxed = 0.0;
    double spin_rel_diff = 0.0, ham_rel_diff = 0.0;
};

inline double relative_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline double relative_diff(const Vec3& a, const Vec3& b) {
    const double scale = std::max(norm(a), norm(b));
    return scale == 0.0 ? 0.0 : norm(a - b) / scale;
}

inline std::vector<OracleComparison> oracle_batch(const std::vector<FourierMotion>& motions,
                                                  int n_trunc, ExecMode mode) {
    std::vector<OracleComparison> out(motions.size());
    batch_for(motions.size(), mode, [&](std::size_t i) {
        const FourierMotion& motion = motions[i];
        OracleComparison& cmp = out[i];
        if (motion.is_center_of_mass()) {
            cmp.spin_oracle = spin_truncated_oracle(motion, n_trunc);
            cmp.spin_boxed = spin_closed(motion);
            cmp.spin_rel_diff = relative_diff(cmp.spin_oracle, cmp.spin_boxed);
        }
        cmp.ham_oracle = hamiltonian_truncated_oracle(motion, n_trunc);
        cmp.ham_boxed = hamiltonian_closed(motion);
        cmp.ham_rel_diff = relative_diff(cmp.ham_oracle, cmp.ham_boxed);
    });
    return out;
}

}  // namespace chronon
