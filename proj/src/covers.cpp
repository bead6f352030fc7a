#include "gentop/covers.hpp"

#include <algorithm>
#include <charconv>

namespace gentop {

Cover::Cover(Gts g, SetFamily m) : space(std::move(g)), members(std::move(m))
{
    canonicalize(members);
    Subset u = 0;
    for (Subset s : members) {
        if (!space.is_open(s))
            fail(ErrorKind::Validation, "cover member " + space.fmt(s) + " is not open");
        u |= s;
    }
    if (u != space.full())
        fail(ErrorKind::Validation, "members do not cover " + space.fmt(space.full() & ~u));
}

KappaBudget KappaBudget::finite(int n)
{
    if (n < 1)
        fail(ErrorKind::Validation, "finite budget must be positive");
    return {Kind::Finite, n};
}

KappaBudget KappaBudget::parse(const std::string& s)
{
    if (s == "aleph0")
        return aleph0();
    if (s == "aleph1")
        return aleph1();
    int n = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec != std::errc() || p != s.data() + s.size())
        fail(ErrorKind::Validation, "budget must be a positive integer, aleph0 or aleph1, got '" + s + "'");
    return finite(n);
}

std::string KappaBudget::str() const
{
    switch (kind) {
    case Kind::Aleph0: return "aleph0";
    case Kind::Aleph1: return "aleph1";
    default: return std::to_string(n);
    }
}

namespace {

struct MinCoverSearch {
    const SetFamily& m;
    Subset universe;
    std::vector<int> cur, best;

    void run(Subset covered)
    {
        if (covered == universe) {
            if (best.empty() || cur.size() < best.size())
                best = cur;
            return;
        }
        if (!best.empty() && cur.size() + 1 >= best.size())
            return;
        int p = std::countr_zero(universe & ~covered);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (contains(m[i], p)) {
                cur.push_back(static_cast<int>(i));
                run(covered | m[i]);
                cur.pop_back();
            }
    }
};

} // namespace

SetFamily min_subcover(const Cover& c)
{
    Subset universe = c.space.full();
    if (universe == 0)
        return {};
    MinCoverSearch s{c.members, universe, {}, {}};
    // Greedy upper bound seeds the search.
    Subset covered = 0;
    while (covered != universe) {
        int pick = -1, gain = -1;
        for (std::size_t i = 0; i < c.members.size(); ++i) {
            int g = card(c.members[i] & ~covered);
            if (g > gain) {
                gain = g;
                pick = static_cast<int>(i);
            }
        }
        s.best.push_back(pick);
        covered |= c.members[pick];
    }
    s.run(0);
    SetFamily out;
    for (int i : s.best)
        out.push_back(c.members[i]);
    canonicalize(out);
    return out;
}

namespace {

struct IrredundantSearch {
    const SetFamily& opens;
    Subset universe;
    std::size_t stop_at;
    std::vector<Subset> cur, best;

    bool privates_alive() const
    {
        for (std::size_t i = 0; i < cur.size(); ++i) {
            Subset others = 0;
            for (std::size_t j = 0; j < cur.size(); ++j)
                if (j != i)
                    others |= cur[j];
            if (is_subset(cur[i], others))
                return false;
        }
        return true;
    }

    void run(Subset covered)
    {
        if (best.size() >= stop_at)
            return;
        if (covered == universe) {
            if (cur.size() > best.size())
                best = cur;
            return;
        }
        if (cur.size() + card(universe & ~covered) <= best.size())
            return;
        int p = std::countr_zero(universe & ~covered);
        for (Subset m : opens) {
            if (!contains(m, p))
                continue;
            cur.push_back(m);
            if (privates_alive())
                run(covered | m);
            cur.pop_back();
            if (best.size() >= stop_at)
                return;
        }
    }
};

SetFamily irredundant(const Gts& g, std::size_t stop_at)
{
    if (!g.strong())
        return {};
    IrredundantSearch s{g.opens(), g.full(), stop_at, {}, {}};
    s.run(0);
    SetFamily out(s.best.begin(), s.best.end());
    canonicalize(out);
    return out;
}

} // namespace

SetFamily max_irredundant_cover(const Gts& g) { return irredundant(g, static_cast<std::size_t>(-1)); }

AxiomVerdict is_kappa_compact(const Gts& g, const KappaBudget& kappa)
{
    AxiomVerdict v;
    if (!g.strong()) {
        v.detail = "vacuous: X is not open, so there is no open cover";
        return v;
    }
    if (kappa.kind != KappaBudget::Kind::Finite) {
        v.detail = "finite space: every open cover is finite, so " + kappa.str() + " is always met";
        return v;
    }
    SetFamily worst = irredundant(g, static_cast<std::size_t>(kappa.n));
    if (worst.size() >= static_cast<std::size_t>(kappa.n)) {
        v.holds = false;
        v.witness = worst;
        v.detail = "an open cover with " + std::to_string(worst.size()) + " members has no proper subcover";
    } else {
        v.detail = "every open cover has a subcover with at most " + std::to_string(worst.size()) + " members";
    }
    return v;
}

Subset cylinder_union_set(const ProductGts& p, const CylinderUnion& u)
{
    Subset s = 0;
    for (auto [a, m] : u) {
        if (a < 0 || a >= static_cast<int>(p.factors.size()))
            fail(ErrorKind::Structural, "cylinder coordinate out of range");
        if (!p.factors[a].is_open(m))
            fail(ErrorKind::Validation, "cylinder base " + p.factors[a].fmt(m) + " is not open in its factor");
        s |= p.projections[a].preimage(m);
    }
    return s;
}

SubcoverExtraction product_subcover_extract(const ProductGts& p, const std::vector<CylinderUnion>& members,
                                            const KappaBudget&)
{
    for (const auto& u : members)
        cylinder_union_set(p, u);
    std::size_t k = p.factors.size();
    SubcoverExtraction best;
    std::vector<int> witness(k, -1);
    for (std::size_t a = 0; a < k; ++a) {
        // Slices on coordinate a, remembering their member.
        std::vector<std::pair<Subset, int>> slices;
        Subset u = 0;
        for (std::size_t b = 0; b < members.size(); ++b)
            for (auto [c, m] : members[b])
                if (c == static_cast<int>(a)) {
                    slices.emplace_back(m, static_cast<int>(b));
                    u |= m;
                }
        const Gts& y = p.factors[a];
        if (u != y.full()) {
            witness[a] = std::countr_zero(y.full() & ~u);
            continue;
        }
        SetFamily fam;
        for (auto& s : slices)
            fam.push_back(s.first);
        SetFamily sub = min_subcover(Cover(y, fam));
        std::vector<int> chosen;
        for (Subset s : sub)
            for (auto& sl : slices)
                if (sl.first == s) {
                    chosen.push_back(sl.second);
                    break;
                }
        std::sort(chosen.begin(), chosen.end());
        chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
        if (best.coordinate < 0 || chosen.size() < best.chosen.size()) {
            best.chosen = std::move(chosen);
            best.coordinate = static_cast<int>(a);
        }
    }
    if (best.coordinate >= 0)
        return best;
    if (p.space.size() == 0)
        return best;
    int pt = p.point(witness);
    fail(ErrorKind::Precondition, "members do not cover the product: point " + p.space.ground().labels[pt] +
                                      " is uncovered");
}

} // namespace gentop
