#pragma once

#include <cstdint>
#include <initializer_list>

namespace nibble {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Top 53 bits of a word mapped to [0,1).
constexpr double to_unit(std::uint64_t bits) noexcept
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// What a random draw is used for. Part of every counter key, so draws for
/// different purposes never collide.
enum class Stream : std::uint64_t {
    Activation = 1,
    CoinFlip = 2,
    FinisherSample = 3,
    Generator = 4,
    Diagnostic = 5,
    Finisher = 6,
    Acceptance = 7,
};

/// Counter-based random source: every draw is a pure function of
/// (seed, stream, counters...). Results do not depend on evaluation order or
/// on how work is split across threads.
class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    constexpr std::uint64_t seed() const noexcept { return seed_; }

    constexpr std::uint64_t bits(Stream stream, std::initializer_list<std::uint64_t> counters) const noexcept
    {
        std::uint64_t h = mix64(seed_ ^ mix64(static_cast<std::uint64_t>(stream)));
        for (std::uint64_t c : counters)
            h = mix64(h ^ mix64(c + 0x632be59bd9b4e019ULL));
        return h;
    }

    constexpr double uniform(Stream stream, std::initializer_list<std::uint64_t> counters) const noexcept
    {
        return to_unit(bits(stream, counters));
    }

    /// Derived source for an independent sub-computation.
    constexpr CounterRng derive(Stream stream, std::initializer_list<std::uint64_t> counters) const noexcept
    {
        return CounterRng(bits(stream, counters));
    }

private:
    std::uint64_t seed_;
};

/// Sequential generator for generators and shuffles. Fully specified, so
/// output is identical on every platform (unlike std::uniform_int_distribution).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept
    {
        std::uint64_t z = state_;
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(z);
    }

    double uniform() noexcept { return to_unit(next()); }

    // Uniform integer in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x = next();
        while (x >= limit)
            x = next();
        return x % bound;
    }

    template <class RandomIt>
    void shuffle(RandomIt first, RandomIt last) noexcept
    {
        const auto n = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = n; i > 1; --i) {
            const auto j = below(i);
            using std::swap;
            swap(first[i - 1], first[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace nibble
