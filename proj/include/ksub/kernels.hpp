#pragma once

#include <bit>
#include <cstdint>

#include "ksub/labeling.hpp"

// Packed labeling kernel: one nibble per coordinate in a u64, so meet, join,
// theta and zero counting become a handful of SWAR instructions. Applicable
// for k <= 15, n <= 16; callers fall back to the scalar reference kernels in
// labeling.cpp otherwise. The two paths are equivalence-tested.

namespace ksub::detail {

struct PackedKernel {
    static constexpr std::uint64_t kLow = 0x1111111111111111ull;
    static constexpr std::uint64_t kSeven = 0x7777777777777777ull;
    static constexpr std::uint64_t kHigh = 0x8888888888888888ull;

    static constexpr bool usable(std::size_t n, Label k) { return n <= 16 && k <= 15; }

    // High bit of every nibble that is occupied by a coordinate.
    static constexpr std::uint64_t active_mask(std::size_t n) {
        return n == 16 ? kHigh : kHigh >> (4 * (16 - n));
    }

    static std::uint64_t pack(const Labeling& x) {
        std::uint64_t p = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            p |= std::uint64_t(x[i] & 0xF) << (4 * i);
        return p;
    }

    static Labeling unpack(std::uint64_t p, std::size_t n) {
        std::vector<Label> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = Label((p >> (4 * i)) & 0xF);
        return Labeling(std::move(out));
    }

    // High bit per nibble set iff the nibble is zero.
    static std::uint64_t zero_nibbles(std::uint64_t v) {
        return ~(((v & kSeven) + kSeven) | v) & kHigh;
    }

    // Full-nibble 0xF mask where x and y agree.
    static std::uint64_t eq_mask(std::uint64_t x, std::uint64_t y) {
        return (zero_nibbles(x ^ y) >> 3) * 0xF;
    }

    static std::uint64_t meet(std::uint64_t x, std::uint64_t y) {
        return x & eq_mask(x, y);
    }

    static std::uint64_t join(std::uint64_t x, std::uint64_t y) {
        const std::uint64_t zx = (zero_nibbles(x) >> 3) * 0xF;
        const std::uint64_t zy = (zero_nibbles(y) >> 3) * 0xF;
        return meet(x, y) | (x & zy) | (y & zx);
    }

    static std::uint64_t theta(std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        const std::uint64_t eq = eq_mask(x, y);
        return (x & eq) | (z & ~eq);
    }

    static int zero_count(std::uint64_t v, std::uint64_t active) {
        return std::popcount(zero_nibbles(v) & active);
    }

    // Coordinates where x and y hold the same nonzero label.
    static int agree_count(std::uint64_t x, std::uint64_t y, std::uint64_t active) {
        return std::popcount(zero_nibbles(x ^ y) & ~zero_nibbles(x) & active);
    }

    static std::uint64_t encode(std::uint64_t p, std::size_t n, Label k) {
        const std::uint64_t radix = std::uint64_t(k) + 1;
        std::uint64_t index = 0;
        for (std::size_t i = n; i-- > 0;)
            index = index * radix + ((p >> (4 * i)) & 0xF);
        return index;
    }
};

}  // namespace ksub::detail
