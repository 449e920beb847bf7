#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nibble {

/// Which domain keep_probability accepts.
///
/// Asymptotic is the nibble's own regime: ln N > 2 is required. Probabilistic
/// only requires that every quantity of the round is a valid probability
/// (N > 1, 0 < K <= 1); it exists so tiny instances can be enumerated exactly.
enum class ParamDomain { Asymptotic, Probabilistic };

/// Coefficient used in the N' recursion.
///   Eps8:     N K^{k-1} (1 - (1 - eps/8) K^k / ln N) + N^{2/3}   (default)
///   Eps2:     N K^{k-1} (1 - (1 - eps/2) K^k / ln N) + N^{2/3}
///   Expected: N K^{k-1} (1 - K^k (1 + 1/ln N) / ln N) + N^{2/3}
enum class ScheduleMode { Eps8, Eps2, Expected };

const char* to_string(ScheduleMode mode);
ScheduleMode schedule_mode_from_string(const std::string& name);

struct NibbleParams {
    double eps = 0.25;
    std::uint32_t k = 2;
    double L = 0.0; // target weighted list size
    double N = 0.0; // bound on weighted colour-neighbourhood size
    ParamDomain domain = ParamDomain::Asymptotic;

    double ratio() const;
    /// Asymptotic hypotheses of a round that do not hold, as human-readable
    /// warnings (1 + eps < L/N < 3ek, eps <= 1/4). Never throws.
    std::vector<std::string> hypothesis_warnings() const;
};

/// 3 e k, the ratio at which the local-lemma finisher applies.
double finisher_ratio(std::uint32_t k);

/// K = 1 - (N/L)(1 + eps/8)/ln N. Throws ParameterDomain when N <= e^2
/// (Asymptotic domain), N <= 1, L <= 0, eps outside (0, 1/4], or K <= 0.
double keep_probability(const NibbleParams& params);

struct NextParams {
    double L;
    double N;
};

/// (L', N') with L' = L K^k - N^{2/3}. Throws ScheduleCollapse (round 0) when
/// L' <= 0, and ParameterDomain via keep_probability.
NextParams next_params(const NibbleParams& params, ScheduleMode mode = ScheduleMode::Eps8);

/// ceil(100 k ln(delta) / eps), zero when delta <= 1.
std::uint32_t iteration_cap(double eps, std::uint32_t k, double delta);

struct ScheduleState {
    std::uint32_t round;
    double L;
    double N;
    double ratio;
};

/// Deterministic schedule from L_0 = (1+eps) delta, N_0 = delta, applying
/// next_params until the ratio reaches 3ek or the iteration cap. Throws
/// ParameterDomain if delta <= e^2 and ScheduleCollapse (with the round that
/// failed) if the recursion leaves its domain.
std::vector<ScheduleState> simulate_schedule(double eps, std::uint32_t k, double delta,
                                             ScheduleMode mode = ScheduleMode::Eps8);

} // namespace nibble
