#pragma once

// Brute-force reference implementations. They share only plain data types with the
// library, so agreement with it is meaningful.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Set = std::uint64_t;
using Family = std::vector<Set>;

inline Set full(int n) { return n == 0 ? 0 : (n == 64 ? ~Set{0} : ((Set{1} << n) - 1)); }
inline bool in(Set s, int i) { return (s >> i) & 1; }
inline bool sub(Set a, Set b) { return (a & ~b) == 0; }
inline bool has(const Family& f, Set s) { return std::find(f.begin(), f.end(), s) != f.end(); }

inline Family sorted(Family f)
{
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

// Unions of every subfamily, including the empty one.
inline Family all_unions(const Family& base)
{
    Family out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << base.size()); ++pick) {
        Set u = 0;
        for (std::size_t i = 0; i < base.size(); ++i)
            if ((pick >> i) & 1)
                u |= base[i];
        out.push_back(u);
    }
    return sorted(out);
}

// Every family of subsets of an n-set that contains ∅ and is closed under unions.
inline std::vector<Family> all_gts(int n)
{
    std::vector<Family> out;
    int m = 1 << n;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
        if (!(pick & 1))
            continue;
        Family f;
        for (int s = 0; s < m; ++s)
            if ((pick >> s) & 1)
                f.push_back(static_cast<Set>(s));
        bool ok = true;
        for (Set a : f)
            for (Set b : f)
                if (!((pick >> (a | b)) & 1))
                    ok = false;
        if (ok)
            out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Family closed_sets(const Family& opens, int n)
{
    Family c;
    for (Set m : opens)
        c.push_back(full(n) & ~m);
    return sorted(c);
}

// Intersection of the closed supersets; X when there are none.
inline Set closure(const Family& opens, int n, Set a)
{
    Set r = full(n);
    for (Set c : closed_sets(opens, n))
        if (sub(a, c))
            r &= c;
    return r;
}

inline Set interior(const Family& opens, Set a)
{
    Set r = 0;
    for (Set m : opens)
        if (sub(m, a))
            r |= m;
    return r;
}

inline Set image(const std::vector<int>& f, Set a)
{
    Set r = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (in(a, static_cast<int>(i)))
            r |= Set{1} << f[i];
    return r;
}

inline Set preimage(const std::vector<int>& f, Set b)
{
    Set r = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (in(b, f[i]))
            r |= Set{1} << i;
    return r;
}

inline bool continuous(const Family& dom, const Family& cod, const std::vector<int>& f)
{
    for (Set v : cod)
        if (!has(dom, preimage(f, v)))
            return false;
    return true;
}

// f(c A) ⊆ c f(A) for every A.
inline bool continuous_closure(const Family& dom, int n, const Family& cod, int m, const std::vector<int>& f)
{
    for (Set a = 0; a <= full(n); ++a)
        if (!sub(image(f, closure(dom, n, a)), closure(cod, m, image(f, a))))
            return false;
    return true;
}

// Separation axioms read word for word: quantify over pairs of opens.

inline bool t0(const Family& o, int n)
{
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            bool sep = false;
            for (Set u : o)
                sep = sep || (in(u, x) != in(u, y));
            if (!sep)
                return false;
        }
    return true;
}

inline bool t1(const Family& o, int n)
{
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y)
                continue;
            bool sep = false;
            for (Set u : o)
                sep = sep || (in(u, x) && !in(u, y));
            if (!sep)
                return false;
        }
    return true;
}

inline bool disjoint_opens(const Family& o, Set a, Set b)
{
    for (Set u : o)
        if (sub(a, u))
            for (Set v : o)
                if (sub(b, v) && !(u & v))
                    return true;
    return false;
}

inline bool t2(const Family& o, int n)
{
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!disjoint_opens(o, Set{1} << x, Set{1} << y))
                return false;
    return true;
}

inline bool regular(const Family& o, int n)
{
    for (Set f : closed_sets(o, n))
        for (int x = 0; x < n; ++x)
            if (!in(f, x) && !disjoint_opens(o, Set{1} << x, f))
                return false;
    return true;
}

inline bool normal(const Family& o, int n)
{
    auto cl = closed_sets(o, n);
    for (Set a : cl)
        for (Set b : cl)
            if (!(a & b) && !disjoint_opens(o, a, b))
                return false;
    return true;
}

// Smallest subfamily of a cover with the same union, by exhaustion.
inline std::size_t min_subcover(const Family& cover, Set target)
{
    std::size_t best = cover.size() + 1;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << cover.size()); ++pick) {
        Set u = 0;
        std::size_t k = 0;
        for (std::size_t i = 0; i < cover.size(); ++i)
            if ((pick >> i) & 1) {
                u |= cover[i];
                ++k;
            }
        if (u == target)
            best = std::min(best, k);
    }
    return best;
}

// Every monotone map P(X) -> P(X) on an n-set, counted by trying all tables.
inline long long count_monotone(int n)
{
    int m = 1 << n;
    std::vector<int> t(m, 0);
    long long count = 0;
    for (;;) {
        bool mono = true;
        for (int a = 0; a < m && mono; ++a)
            for (int i = 0; i < n && mono; ++i)
                if (!(a & (1 << i)) && (t[a] & ~t[a | (1 << i)]))
                    mono = false;
        count += mono;
        int i = 0;
        while (i < m && ++t[i] == m)
            t[i++] = 0;
        if (i == m)
            break;
    }
    return count;
}

} // namespace oracle
