#pragma once

#include <random>
#include <string>

#include "gentop/gts.hpp"
#include "gentop/harness.hpp"
#include "oracles.hpp"

namespace testutil {

using namespace gentop;

inline GroundSet labels(std::initializer_list<const char*> l)
{
    std::vector<std::string> v(l.begin(), l.end());
    return GroundSet(v);
}

inline Subset S(std::initializer_list<int> pts)
{
    Subset s = 0;
    for (int p : pts)
        s |= bit(p);
    return s;
}

inline Gts space(int n, std::initializer_list<std::initializer_list<int>> opens)
{
    SetFamily f;
    for (auto o : opens)
        f.push_back(S(o));
    canonicalize(f);
    return Gts(GroundSet::range(n), f);
}

inline std::vector<Gts> all_upto(int n)
{
    std::vector<Gts> out;
    for (int k = 0; k <= n; ++k)
        for (auto& g : enumerate_gts(k))
            out.push_back(g);
    return out;
}

inline std::vector<PointFn> all_fns(int n, int m)
{
    std::vector<PointFn> out;
    if (m == 0)
        return n == 0 ? std::vector<PointFn>{{}} : out;
    PointFn f(n, 0);
    for (;;) {
        out.push_back(f);
        int i = 0;
        while (i < n && ++f[i] == m)
            f[i++] = 0;
        if (i == n)
            break;
    }
    return out;
}

inline oracle::Family fam(const Gts& g) { return oracle::Family(g.opens().begin(), g.opens().end()); }

} // namespace testutil
