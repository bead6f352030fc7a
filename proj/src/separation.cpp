#include "gentop/separation.hpp"

#include <map>
#include <mutex>

#include "gentop/embed.hpp"
#include "gentop/lifts.hpp"

namespace gentop {

std::string axiom_name(Axiom a)
{
    switch (a) {
    case Axiom::T0: return "T0";
    case Axiom::T1: return "T1";
    case Axiom::T2: return "T2";
    case Axiom::Regular: return "Regular";
    case Axiom::T3: return "T3";
    case Axiom::Normal: return "Normal";
    case Axiom::T4: return "T4";
    case Axiom::CompletelyRegular: return "CompletelyRegular";
    case Axiom::T3_5: return "T3_5";
    }
    return "?";
}

Axiom parse_axiom(const std::string& s)
{
    for (Axiom a : {Axiom::T0, Axiom::T1, Axiom::T2, Axiom::Regular, Axiom::T3, Axiom::Normal, Axiom::T4,
                    Axiom::CompletelyRegular, Axiom::T3_5})
        if (axiom_name(a) == s)
            return a;
    if (s == "T3.5")
        return Axiom::T3_5;
    fail(ErrorKind::UnknownId, "unknown axiom '" + s + "'");
}

namespace {

AxiomVerdict ok(Axiom a) { return {a, true, {}, ""}; }

AxiomVerdict bad(Axiom a, std::vector<Subset> w, std::string detail) { return {a, false, std::move(w), std::move(detail)}; }

std::string pt(const Gts& g, int x) { return g.ground().labels[x]; }

// Largest open set disjoint from u.
Subset outside(const Gts& g, Subset u) { return g.interior(g.full() & ~u); }

bool separable(const Gts& g, Subset a, Subset b)
{
    for (Subset u : g.opens())
        if (is_subset(a, u) && (u & b) == 0 && is_subset(b, outside(g, u)))
            return true;
    return false;
}

AxiomVerdict check_t0(const Gts& g)
{
    for (int x = 0; x < g.size(); ++x)
        for (int y = x + 1; y < g.size(); ++y) {
            bool sep = false;
            for (Subset m : g.opens())
                if (contains(m, x) != contains(m, y)) {
                    sep = true;
                    break;
                }
            if (!sep)
                return bad(Axiom::T0, {bit(x) | bit(y)}, pt(g, x) + " and " + pt(g, y) + " are indistinguishable");
        }
    return ok(Axiom::T0);
}

AxiomVerdict check_t1(const Gts& g)
{
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y) {
            if (x == y)
                continue;
            bool sep = false;
            for (Subset m : g.opens())
                if (contains(m, x) && !contains(m, y)) {
                    sep = true;
                    break;
                }
            if (!sep)
                return bad(Axiom::T1, {bit(x), bit(y)}, "no open set contains " + pt(g, x) + " but not " + pt(g, y));
        }
    return ok(Axiom::T1);
}

AxiomVerdict check_t2(const Gts& g)
{
    for (int x = 0; x < g.size(); ++x)
        for (int y = x + 1; y < g.size(); ++y)
            if (!separable(g, bit(x), bit(y)))
                return bad(Axiom::T2, {bit(x) | bit(y)}, pt(g, x) + " and " + pt(g, y) + " have no disjoint neighbourhoods");
    return ok(Axiom::T2);
}

AxiomVerdict check_regular(const Gts& g)
{
    for (Subset f : g.closed_sets())
        for (int x = 0; x < g.size(); ++x)
            if (!contains(f, x) && !separable(g, bit(x), f))
                return bad(Axiom::Regular, {bit(x), f}, "point " + pt(g, x) + " and closed " + g.fmt(f) + " not separated");
    return ok(Axiom::Regular);
}

AxiomVerdict check_normal(const Gts& g)
{
    SetFamily closed = g.closed_sets();
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i; j < closed.size(); ++j)
            if ((closed[i] & closed[j]) == 0 && !separable(g, closed[i], closed[j]))
                return bad(Axiom::Normal, {closed[i], closed[j]},
                           "closed sets " + g.fmt(closed[i]) + " and " + g.fmt(closed[j]) + " not separated");
    return ok(Axiom::Normal);
}

AxiomVerdict check_cr(const Gts& g)
{
    SetFamily clopen;
    for (Subset d : g.opens())
        if (g.is_open(g.full() & ~d))
            clopen.push_back(d);
    for (Subset f : g.closed_sets())
        for (int x = 0; x < g.size(); ++x) {
            if (contains(f, x))
                continue;
            bool found = false;
            for (Subset d : clopen)
                if (contains(d, x) && (d & f) == 0) {
                    found = true;
                    break;
                }
            if (!found)
                return bad(Axiom::CompletelyRegular, {bit(x), f},
                           "no continuous map separates " + pt(g, x) + " from closed " + g.fmt(f));
        }
    return ok(Axiom::CompletelyRegular);
}

AxiomVerdict both(Axiom a, AxiomVerdict first, const Gts& g)
{
    if (!first.holds) {
        first.axiom = a;
        return first;
    }
    AxiomVerdict t1 = check_t1(g);
    t1.axiom = a;
    return t1;
}

} // namespace

AxiomVerdict check_axiom(const Gts& g, Axiom axiom)
{
    switch (axiom) {
    case Axiom::T0: return check_t0(g);
    case Axiom::T1: return check_t1(g);
    case Axiom::T2: return check_t2(g);
    case Axiom::Regular: return check_regular(g);
    case Axiom::T3: return both(axiom, check_regular(g), g);
    case Axiom::Normal: return check_normal(g);
    case Axiom::T4: return both(axiom, check_normal(g), g);
    case Axiom::CompletelyRegular: return check_cr(g);
    case Axiom::T3_5: return both(axiom, check_cr(g), g);
    }
    fail(ErrorKind::UnknownId, "unknown axiom");
}

std::optional<Subset> cr_separator(const Gts& g, int x, Subset f)
{
    for (Subset d : g.opens())
        if (contains(d, x) && (d & f) == 0 && g.is_open(g.full() & ~d))
            return d;
    return std::nullopt;
}

namespace {

// Opens of the γ₀-trace on {0, 1/(k+1), ..., 1}, as masks over grid positions.
const SetFamily& grid_opens(int k)
{
    static std::mutex mu;
    static std::map<int, SetFamily> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end())
        return it->second;
    std::vector<Rational> pts;
    for (int i = 0; i <= k + 1; ++i)
        pts.emplace_back(i, k + 1);
    return cache.emplace(k, gamma0_trace(pts).opens()).first->second;
}

} // namespace

bool cr_oracle(const Gts& g, int x, Subset f)
{
    if (x < 0 || x >= g.size() || contains(f, x))
        fail(ErrorKind::Precondition, "oracle needs a point outside F");
    if (!g.is_closed(f))
        fail(ErrorKind::Precondition, "oracle needs a closed F");
    std::vector<int> free;
    for (int i = 0; i < g.size(); ++i)
        if (i != x && !contains(f, i))
            free.push_back(i);
    int k = static_cast<int>(free.size());
    int top = k + 1; // grid index of the value 1
    const SetFamily& opens = grid_opens(k);
    std::vector<int> value(free.size(), 0);
    for (;;) {
        // level[j] = points with grid value j
        std::vector<Subset> level(top + 1, 0);
        level[0] |= bit(x);
        level[top] |= f;
        for (int i = 0; i < k; ++i)
            level[value[i]] |= bit(free[i]);
        bool cont = true;
        for (Subset o : opens) {
            Subset pre = 0;
            for_each_bit(o, [&](int j) { pre |= level[j]; });
            if (!g.is_open(pre)) {
                cont = false;
                break;
            }
        }
        if (cont)
            return true;
        int i = 0;
        while (i < k && ++value[i] > top)
            value[i++] = 0;
        if (i == k)
            return false;
    }
}

std::pair<Gts, GtsMap> t0_reflection(const Gts& g)
{
    int n = g.size();
    std::vector<int> cls(n, -1);
    std::vector<Subset> members;
    for (int x = 0; x < n; ++x) {
        if (cls[x] >= 0)
            continue;
        cls[x] = static_cast<int>(members.size());
        Subset m = bit(x);
        for (int y = x + 1; y < n; ++y) {
            if (cls[y] >= 0)
                continue;
            bool same = true;
            for (Subset o : g.opens())
                if (contains(o, x) != contains(o, y)) {
                    same = false;
                    break;
                }
            if (same) {
                cls[y] = cls[x];
                m |= bit(y);
            }
        }
        members.push_back(m);
    }
    std::vector<std::string> labels;
    for (Subset m : members)
        labels.push_back(card(m) == 1 ? g.ground().labels[std::countr_zero(m)] : g.fmt(m));
    GroundSet target(std::move(labels));
    Gts q = quotient(g, target, cls);
    return {q, GtsMap(g, q, cls)};
}

GtsMap urysohn_witness(const Gts& g, Subset f1, Subset f2)
{
    if (!g.is_closed(f1) || !g.is_closed(f2))
        fail(ErrorKind::Precondition, "separated sets must be closed");
    if (f1 & f2)
        fail(ErrorKind::Precondition, "separated sets must be disjoint");
    if (!check_axiom(g, Axiom::Normal).holds)
        fail(ErrorKind::Precondition, "space is not normal");
    for (Subset d : g.opens())
        if (is_subset(f1, d) && (d & f2) == 0 && g.is_open(g.full() & ~d)) {
            PointFn t(g.size());
            for (int i = 0; i < g.size(); ++i)
                t[i] = contains(d, i) ? 0 : 1;
            return GtsMap(g, gamma0_two(), std::move(t));
        }
    fail(ErrorKind::Validation, "no two-valued separating map for " + g.fmt(f1) + " and " + g.fmt(f2));
}

} // namespace gentop
