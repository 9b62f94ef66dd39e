#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace stablehit
{
    /// Dynamically sized bitset over vertex ids, used for adjacency rows and
    /// candidate sets in the exact searches.
    class Bitset
    {
    public:
        static constexpr int bits_per_word = 64;

        Bitset() = default;
        explicit Bitset(int size) :
            _size(size),
            _words((size + bits_per_word - 1) / bits_per_word, 0)
        {
        }

        auto size() const -> int { return _size; }

        auto set(int i) -> void { _words[i / bits_per_word] |= std::uint64_t{1} << (i % bits_per_word); }
        auto reset(int i) -> void { _words[i / bits_per_word] &= ~(std::uint64_t{1} << (i % bits_per_word)); }
        auto test(int i) const -> bool { return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1; }

        auto count() const -> int
        {
            int result = 0;
            for (auto w : _words)
                result += std::popcount(w);
            return result;
        }

        auto empty() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return false;
            return true;
        }

        /// Lowest set bit, or -1.
        auto first() const -> int
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i])
                    return int(i) * bits_per_word + std::countr_zero(_words[i]);
            return -1;
        }

        /// Next set bit strictly after i, or -1.
        auto next(int i) const -> int
        {
            ++i;
            if (i >= _size)
                return -1;
            auto wi = std::size_t(i / bits_per_word);
            auto w = _words[wi] & (~std::uint64_t{0} << (i % bits_per_word));
            while (true) {
                if (w)
                    return int(wi) * bits_per_word + std::countr_zero(w);
                if (++wi >= _words.size())
                    return -1;
                w = _words[wi];
            }
        }

        auto intersect_with(const Bitset & other) -> void
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
        }

        auto intersect_with_complement(const Bitset & other) -> void
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~other._words[i];
        }

        auto union_with(const Bitset & other) -> void
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= other._words[i];
        }

        auto intersection_count(const Bitset & other) const -> int
        {
            int result = 0;
            for (std::size_t i = 0; i < _words.size(); ++i)
                result += std::popcount(_words[i] & other._words[i]);
            return result;
        }

        auto intersects(const Bitset & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & other._words[i])
                    return true;
            return false;
        }

        auto is_subset_of(const Bitset & other) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                if (_words[i] & ~other._words[i])
                    return false;
            return true;
        }

        auto to_vector() const -> std::vector<int>
        {
            std::vector<int> result;
            for (int v = first(); v != -1; v = next(v))
                result.push_back(v);
            return result;
        }

        friend auto operator==(const Bitset &, const Bitset &) -> bool = default;

    private:
        int _size = 0;
        std::vector<std::uint64_t> _words;
    };
}
