#pragma once

// Regularization schedules and eps -> 0+ limits.

#include <complex>
#include <vector>

namespace dcmod {

/// Strictly decreasing positive regularization parameters plus the order of
/// the extrapolation model used to take the eps -> 0+ limit.
struct EpsSchedule {
    std::vector<double> eps_values;
    int extrapolation_order = 2;
    /// Include eps^j * log(eps) terms in the limit model.  The singular
    /// kernels in this library have such terms in their eps-expansions;
    /// pure Richardson diverges on them.
    bool log_terms = false;

    static EpsSchedule geometric(double eps0, double ratio, int count,
                                 int order = 2, bool log_terms = false);
    void validate() const;
};

struct EpsSample {
    double eps;
    std::complex<double> value;
};

struct EpsLimit {
    std::complex<double> limit;
    double error_estimate;
};

/// eps -> 0 limit of a sampled family.
/// With log_terms = false: Neville polynomial extrapolation in eps (exact on
/// polynomial-in-eps inputs of degree <= samples-1); error estimate is the
/// difference of the last two diagonal extrapolants.
/// With log_terms = true: least-squares fit on {1, eps^j, eps^j ln eps},
/// j = 1..order; error estimate from refitting without the last sample.
EpsLimit eps_extrapolate(const std::vector<EpsSample>& samples, int order,
                         bool log_terms = false);

inline EpsLimit eps_extrapolate(const std::vector<EpsSample>& samples,
                                const EpsSchedule& sched) {
    return eps_extrapolate(samples, sched.extrapolation_order, sched.log_terms);
}

}  // namespace dcmod
