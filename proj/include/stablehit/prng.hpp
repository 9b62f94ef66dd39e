#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace stablehit
{
    /**
     * SplitMix64. Fully specified so that seeded instances are reproducible
     * from any language:
     *
     *   state += 0x9e3779b97f4a7c15
     *   z = state
     *   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9
     *   z = (z ^ (z >> 27)) * 0x94d049bb133111eb
     *   return z ^ (z >> 31)
     *
     * unit() is (next() >> 11) * 2^-53, in [0, 1).
     * below(b) is the high 64 bits of next() * b (128-bit product), in [0, b).
     */
    class SplitMix64
    {
    public:
        explicit SplitMix64(std::uint64_t seed) :
            _state(seed)
        {
        }

        auto next() -> std::uint64_t
        {
            std::uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        }

        auto unit() -> double
        {
            return double(next() >> 11) * 0x1.0p-53;
        }

        auto below(std::uint64_t bound) -> std::uint64_t
        {
            return std::uint64_t((static_cast<unsigned __int128>(next()) * bound) >> 64);
        }

        /// Inclusive range.
        auto between(int lo, int hi) -> int
        {
            return lo + int(below(std::uint64_t(hi - lo + 1)));
        }

        /// Fisher-Yates, from the back.
        template <typename T>
        auto shuffle(std::vector<T> & v) -> void
        {
            for (std::size_t i = v.size(); i > 1; --i)
                std::swap(v[i - 1], v[below(i)]);
        }

    private:
        std::uint64_t _state;
    };
}
