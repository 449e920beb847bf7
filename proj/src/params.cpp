#include "nibble/params.hpp"

#include "nibble/errors.hpp"

#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

namespace nibble {

const char* to_string(ScheduleMode mode)
{
    switch (mode) {
    case ScheduleMode::Eps8: return "eps8";
    case ScheduleMode::Eps2: return "eps2";
    case ScheduleMode::Expected: return "expected";
    }
    return "unknown";
}

ScheduleMode schedule_mode_from_string(const std::string& name)
{
    if (name == "eps8")
        return ScheduleMode::Eps8;
    if (name == "eps2")
        return ScheduleMode::Eps2;
    if (name == "expected")
        return ScheduleMode::Expected;
    throw Error(ErrorCode::Precondition, fmt::format("unknown schedule mode '{}'", name));
}

double NibbleParams::ratio() const
{
    if (N <= 0.0)
        return std::numeric_limits<double>::infinity();
    return L / N;
}

std::vector<std::string> NibbleParams::hypothesis_warnings() const
{
    std::vector<std::string> out;
    const double r = ratio();
    if (!(r > 1.0 + eps))
        out.push_back(fmt::format("L/N = {:.6g} is not above 1 + eps = {:.6g}", r, 1.0 + eps));
    if (!(r < finisher_ratio(k)))
        out.push_back(fmt::format("L/N = {:.6g} is not below 3ek = {:.6g}", r, finisher_ratio(k)));
    if (eps > 0.25)
        out.push_back(fmt::format("eps = {} exceeds 1/4", eps));
    return out;
}

double finisher_ratio(std::uint32_t k)
{
    return 3.0 * std::numbers::e * static_cast<double>(k);
}

double keep_probability(const NibbleParams& p)
{
    if (!(p.eps > 0.0 && p.eps <= 0.25))
        throw Error(ErrorCode::ParameterDomain, fmt::format("eps = {} is outside (0, 1/4]", p.eps));
    if (p.k < 2)
        throw Error(ErrorCode::ParameterDomain, fmt::format("k = {} is below 2", p.k));
    if (!(p.L > 0.0))
        throw Error(ErrorCode::ParameterDomain, fmt::format("L = {} is not positive", p.L));
    const double floor = p.domain == ParamDomain::Asymptotic ? std::numbers::e * std::numbers::e : 1.0;
    if (!(p.N > floor))
        throw Error(ErrorCode::ParameterDomain,
                    fmt::format("N = {} must exceed {}", p.N, p.domain == ParamDomain::Asymptotic ? "e^2" : "1"));
    const double K = 1.0 - (p.N / p.L) * (1.0 + p.eps / 8.0) / std::log(p.N);
    if (!(K > 0.0))
        throw Error(ErrorCode::ParameterDomain,
                    fmt::format("keep probability K = {} is not positive (L = {}, N = {})", K, p.L, p.N));
    return K;
}

NextParams next_params(const NibbleParams& p, ScheduleMode mode)
{
    const double K = keep_probability(p);
    const double lnN = std::log(p.N);
    const double Kk = std::pow(K, static_cast<double>(p.k));
    const double Kk1 = std::pow(K, static_cast<double>(p.k - 1));
    const double root = std::cbrt(p.N); // N^{2/3} without overflowing N^2
    const double slack = root * root;

    double loss = 0.0;
    switch (mode) {
    case ScheduleMode::Eps8: loss = (1.0 - p.eps / 8.0) * Kk / lnN; break;
    case ScheduleMode::Eps2: loss = (1.0 - p.eps / 2.0) * Kk / lnN; break;
    case ScheduleMode::Expected: loss = Kk * (1.0 + 1.0 / lnN) / lnN; break;
    }

    NextParams next{p.L * Kk - slack, p.N * Kk1 * (1.0 - loss) + slack};
    if (!(next.L > 0.0))
        throw ScheduleCollapse(0, fmt::format("L' = {} is not positive (L = {}, N = {}, N^(2/3) = {})", next.L, p.L,
                                              p.N, slack));
    return next;
}

std::uint32_t iteration_cap(double eps, std::uint32_t k, double delta)
{
    if (!(delta > 1.0))
        return 0;
    return static_cast<std::uint32_t>(std::ceil(100.0 * static_cast<double>(k) * std::log(delta) / eps));
}

std::vector<ScheduleState> simulate_schedule(double eps, std::uint32_t k, double delta, ScheduleMode mode)
{
    if (!(delta > std::numbers::e * std::numbers::e))
        throw Error(ErrorCode::ParameterDomain, fmt::format("delta = {} must exceed e^2", delta));

    NibbleParams p{eps, k, (1.0 + eps) * delta, delta, ParamDomain::Asymptotic};
    const std::uint32_t cap = iteration_cap(eps, k, delta);
    std::vector<ScheduleState> trace;
    for (std::uint32_t i = 0;; ++i) {
        trace.push_back({i, p.L, p.N, p.ratio()});
        if (p.ratio() >= finisher_ratio(k) || i >= cap)
            break;
        NextParams next{};
        try {
            next = next_params(p, mode);
        } catch (const Error& ex) {
            throw ScheduleCollapse(i, fmt::format("round {}: {}", i, ex.what()));
        }
        p.L = next.L;
        p.N = next.N;
    }
    return trace;
}

} // namespace nibble
