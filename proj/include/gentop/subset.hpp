#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gentop {

// Bit i set <=> point i belongs to the subset. Grounds are limited to 64 points.
using Subset = std::uint64_t;
using SetFamily = std::vector<Subset>;

inline constexpr int kHardGroundLimit = 64;

constexpr Subset bit(int i) { return Subset{1} << i; }
constexpr Subset full_set(int n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }
constexpr bool contains(Subset s, int i) { return (s >> i) & 1u; }
constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
constexpr int card(Subset s) { return std::popcount(s); }

template <class F>
void for_each_bit(Subset s, F&& f)
{
    while (s) {
        int i = std::countr_zero(s);
        f(i);
        s &= s - 1;
    }
}

// Sort and deduplicate in place; numeric order of the bit vectors.
void canonicalize(SetFamily& fam);
bool family_contains(const SetFamily& canonical, Subset s);

// Configurable ground-size cap (default 16, GENTOP_GROUND_CAP overrides).
int ground_cap();
void set_ground_cap(int cap);
void check_cap(long long size, const char* what);

} // namespace gentop
