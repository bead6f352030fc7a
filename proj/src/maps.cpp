#include "gentop/maps.hpp"

#include "gentop/lifts.hpp"

namespace gentop {

GtsMap::GtsMap(Gts d, Gts c, PointFn t) : dom(std::move(d)), cod(std::move(c)), table(std::move(t))
{
    if (static_cast<int>(table.size()) != dom.size())
        fail(ErrorKind::Structural, "map table is not total on the domain");
    for (int y : table)
        if (y < 0 || y >= cod.size())
            fail(ErrorKind::Structural, "map value outside the codomain");
}

GtsMap GtsMap::identity(const Gts& g)
{
    PointFn t(g.size());
    for (int i = 0; i < g.size(); ++i)
        t[i] = i;
    return GtsMap(g, g, std::move(t));
}

Subset GtsMap::image(Subset a) const
{
    Subset out = 0;
    for_each_bit(a, [&](int i) { out |= bit(table[i]); });
    return out;
}

Subset GtsMap::preimage(Subset b) const
{
    Subset out = 0;
    for (int i = 0; i < dom.size(); ++i)
        if (contains(b, table[i]))
            out |= bit(i);
    return out;
}

bool GtsMap::injective() const { return card(image(dom.full())) == dom.size(); }

bool GtsMap::surjective() const { return image(dom.full()) == cod.full(); }

GtsMap compose(const GtsMap& g, const GtsMap& f)
{
    if (!(f.cod == g.dom))
        fail(ErrorKind::Structural, "composition of maps with mismatched spaces");
    PointFn t(f.dom.size());
    for (int i = 0; i < f.dom.size(); ++i)
        t[i] = g.table[f.table[i]];
    return GtsMap(f.dom, g.cod, std::move(t));
}

Verdict is_continuous(const GtsMap& f)
{
    for (Subset n : f.cod.opens()) {
        Subset pre = f.preimage(n);
        if (!f.dom.is_open(pre))
            return {false, {n, pre}, "preimage of open " + f.cod.fmt(n) + " is " + f.dom.fmt(pre) + ", not open"};
    }
    return {};
}

Verdict is_continuous_closure(const GtsMap& f)
{
    Subset universe = f.dom.full();
    for (Subset a = 0;; ++a) {
        Subset lhs = f.image(f.dom.closure(a));
        Subset rhs = f.cod.closure(f.image(a));
        if (!is_subset(lhs, rhs))
            return {false, {a}, "f(c(" + f.dom.fmt(a) + ")) = " + f.cod.fmt(lhs) + " ⊄ d(f(A)) = " + f.cod.fmt(rhs)};
        if (a == universe)
            break;
    }
    return {};
}

Verdict is_open_map(const GtsMap& f)
{
    for (Subset m : f.dom.opens()) {
        Subset im = f.image(m);
        if (!f.cod.is_open(im))
            return {false, {m, im}, "image of open " + f.dom.fmt(m) + " is " + f.cod.fmt(im) + ", not open"};
    }
    return {};
}

Verdict is_homeomorphism(const GtsMap& f)
{
    if (!f.injective() || !f.surjective())
        return {false, {}, "map is not bijective"};
    if (auto v = is_continuous(f); !v)
        return v;
    return is_open_map(f);
}

Verdict is_dense(const GtsMap& f)
{
    Subset im = f.image(f.dom.full());
    Subset cl = f.cod.closure(im);
    if (cl != f.cod.full())
        return {false, {im, cl}, "closure of the image is " + f.cod.fmt(cl)};
    return {};
}

Gts image_subspace(const GtsMap& f) { return subspace(f.cod, f.image(f.dom.full())); }

} // namespace gentop
