#include "gentop/lifts.hpp"

#include <algorithm>
#include <numeric>

namespace gentop {

namespace {

void check_fn(const PointFn& fn, int dom, int cod, const char* what)
{
    if (static_cast<int>(fn.size()) != dom)
        fail(ErrorKind::Structural, std::string(what) + " is not total");
    for (int y : fn)
        if (y < 0 || y >= cod)
            fail(ErrorKind::Structural, std::string(what) + " has a value outside its codomain");
}

Subset preimage(const PointFn& fn, Subset b)
{
    Subset out = 0;
    for (std::size_t i = 0; i < fn.size(); ++i)
        if (contains(b, fn[i]))
            out |= bit(static_cast<int>(i));
    return out;
}

Subset image(const PointFn& fn, Subset a)
{
    Subset out = 0;
    for_each_bit(a, [&](int i) { out |= bit(fn[i]); });
    return out;
}

template <class F>
void for_each_subset(Subset universe, F&& f)
{
    for (Subset a = 0;; ++a) {
        f(a);
        if (a == universe)
            break;
    }
}

} // namespace

void validate(const Source& src)
{
    for (const auto& leg : src.legs)
        check_fn(leg.fn, src.carrier.size(), leg.cod.size(), "source leg");
}

void validate(const Sink& snk)
{
    for (const auto& leg : snk.legs)
        check_fn(leg.fn, leg.dom.size(), snk.carrier.size(), "sink leg");
}

void validate_increasing_monotone(const GroundSet& ground, const SubsetFn& gamma)
{
    if (ground.size() > ClosureOp::kTableLimit)
        return;
    int n = ground.size();
    for_each_subset(ground.full(), [&](Subset a) {
        Subset ga = gamma(a);
        if (!is_subset(a, ga))
            fail(ErrorKind::Validation, "operator not increasing at " + format_subset(ground, a));
        for (int i = 0; i < n; ++i) {
            Subset b = a | bit(i);
            if (b != a && !is_subset(ga, gamma(b)))
                fail(ErrorKind::Validation, "operator not monotone: " + format_subset(ground, a) + " ⊆ " +
                                                format_subset(ground, b) + " but images not nested");
        }
    });
}

IterationTrace hull_trace(const SubsetFn& gamma, Subset a)
{
    IterationTrace t;
    t.query = a;
    t.stages.emplace_back(0, a);
    Subset cur = a;
    for (int step = 1;; ++step) {
        Subset next = gamma(cur);
        if (next == cur) {
            t.stabilized_at = step - 1;
            return t;
        }
        if (!is_subset(cur, next))
            fail(ErrorKind::Validation, "operator not increasing during iteration");
        t.stages.emplace_back(step, next);
        cur = next;
    }
}

namespace {

Subset hull_apply(const SubsetFn& gamma, Subset a)
{
    for (;;) {
        Subset next = gamma(a);
        if (next == a)
            return a;
        if (!is_subset(a, next))
            fail(ErrorKind::Validation, "operator not increasing during iteration");
        a = next;
    }
}

} // namespace

ClosureOp idempotent_hull(const GroundSet& ground, SubsetFn gamma)
{
    validate_increasing_monotone(ground, gamma);
    return ClosureOp::from_function(ground, [gamma](Subset a) { return hull_apply(gamma, a); });
}

Gts weak_structure_opens(const Source& src)
{
    validate(src);
    SetFamily base;
    for (const auto& leg : src.legs)
        for (Subset n : leg.cod.opens())
            base.push_back(preimage(leg.fn, n));
    canonicalize(base);
    return Gts::from_base(src.carrier, base);
}

ClosureOp weak_structure_closure(const Source& src)
{
    validate(src);
    Subset universe = src.carrier.full();
    return ClosureOp::from_function(src.carrier, [src, universe](Subset a) {
        Subset c = universe;
        for (const auto& leg : src.legs)
            c &= preimage(leg.fn, leg.cod.closure(image(leg.fn, a)));
        return c;
    });
}

Gts strong_structure_opens(const Sink& snk)
{
    validate(snk);
    check_cap(snk.carrier.size(), "sink carrier");
    SetFamily opens;
    for_each_subset(snk.carrier.full(), [&](Subset m) {
        for (const auto& leg : snk.legs)
            if (!leg.dom.is_open(preimage(leg.fn, m)))
                return;
        opens.push_back(m);
    });
    return Gts::trusted(snk.carrier, std::move(opens));
}

SubsetFn strong_structure_gamma(const Sink& snk)
{
    validate(snk);
    return [snk](Subset a) {
        Subset g = a;
        for (const auto& leg : snk.legs)
            g |= image(leg.fn, leg.dom.closure(preimage(leg.fn, a)));
        return g;
    };
}

ClosureOp strong_structure_closure(const Sink& snk) { return idempotent_hull(snk.carrier, strong_structure_gamma(snk)); }

Subset compress(Subset a, Subset x0)
{
    Subset out = 0;
    int k = 0;
    for_each_bit(x0, [&](int i) {
        if (contains(a, i))
            out |= bit(k);
        ++k;
    });
    return out;
}

Subset decompress(Subset a, Subset x0)
{
    Subset out = 0;
    int k = 0;
    for_each_bit(x0, [&](int i) {
        if (contains(a, k))
            out |= bit(i);
        ++k;
    });
    return out;
}

namespace {

GroundSet sub_ground(const GroundSet& g, Subset x0)
{
    std::vector<std::string> labels;
    for_each_bit(x0, [&](int i) { labels.push_back(g.labels[i]); });
    return GroundSet(std::move(labels));
}

} // namespace

Gts subspace(const Gts& g, Subset x0)
{
    if (!is_subset(x0, g.full()))
        fail(ErrorKind::Structural, "subspace set exceeds the ground");
    SetFamily opens;
    opens.reserve(g.opens().size());
    for (Subset m : g.opens())
        opens.push_back(compress(m, x0));
    canonicalize(opens);
    return Gts::trusted(sub_ground(g.ground(), x0), std::move(opens));
}

ClosureOp subspace_closure(const Gts& g, Subset x0)
{
    return ClosureOp::from_function(sub_ground(g.ground(), x0),
                                    [g, x0](Subset a) { return compress(g.closure(decompress(a, x0)), x0); });
}

GtsMap inclusion(const Gts& g, Subset x0)
{
    PointFn t;
    for_each_bit(x0, [&](int i) { t.push_back(i); });
    return GtsMap(subspace(g, x0), g, std::move(t));
}

namespace {

void check_quotient(const Gts& g, const GroundSet& target, const PointFn& q)
{
    check_fn(q, g.size(), target.size(), "quotient map");
    Subset im = image(q, g.full());
    if (im != target.full())
        fail(ErrorKind::Precondition,
             "quotient map not surjective: missing " + format_subset(target, target.full() & ~im));
}

} // namespace

Gts quotient(const Gts& g, const GroundSet& target, const PointFn& q)
{
    check_quotient(g, target, q);
    check_cap(target.size(), "quotient");
    SetFamily opens;
    for_each_subset(target.full(), [&](Subset m) {
        if (g.is_open(preimage(q, m)))
            opens.push_back(m);
    });
    return Gts::trusted(target, std::move(opens));
}

SubsetFn quotient_gamma(const Gts& g, const GroundSet& target, const PointFn& q)
{
    check_quotient(g, target, q);
    return [g, q](Subset a) { return image(q, g.closure(preimage(q, a))) | a; };
}

ClosureOp quotient_closure(const Gts& g, const GroundSet& target, const PointFn& q)
{
    return idempotent_hull(target, quotient_gamma(g, target, q));
}

namespace {

long long product_size(const std::vector<Gts>& factors)
{
    long long n = 1;
    for (const auto& f : factors) {
        n *= f.size();
        if (n > kHardGroundLimit)
            return kHardGroundLimit + 1;
    }
    return n;
}

} // namespace

GroundSet product_ground(const std::vector<Gts>& factors)
{
    long long n = product_size(factors);
    check_cap(n, "product");
    std::vector<std::string> labels;
    for (long long p = 0; p < n; ++p) {
        std::string s = "(";
        long long rest = p;
        std::vector<int> c(factors.size());
        for (std::size_t a = factors.size(); a-- > 0;) {
            c[a] = static_cast<int>(rest % factors[a].size());
            rest /= factors[a].size();
        }
        for (std::size_t a = 0; a < factors.size(); ++a)
            s += (a ? "," : "") + factors[a].ground().labels[c[a]];
        labels.push_back(s + ")");
    }
    return GroundSet(std::move(labels));
}

std::vector<int> ProductGts::coords(int point) const
{
    std::vector<int> c(factors.size());
    for (std::size_t a = factors.size(); a-- > 0;) {
        c[a] = point % factors[a].size();
        point /= factors[a].size();
    }
    return c;
}

int ProductGts::point(const std::vector<int>& c) const
{
    int p = 0;
    for (std::size_t a = 0; a < factors.size(); ++a)
        p = p * factors[a].size() + c[a];
    return p;
}

ProductGts product(const std::vector<Gts>& factors)
{
    ProductGts p;
    p.factors = factors;
    GroundSet ground = product_ground(factors);
    int n = ground.size();
    std::vector<PointFn> proj(factors.size(), PointFn(n));
    for (int pt = 0; pt < n; ++pt) {
        auto c = p.coords(pt);
        for (std::size_t a = 0; a < factors.size(); ++a)
            proj[a][pt] = c[a];
    }
    SetFamily base;
    for (std::size_t a = 0; a < factors.size(); ++a)
        for (Subset m : factors[a].opens())
            base.push_back(preimage(proj[a], m));
    canonicalize(base);
    p.space = Gts::from_base(ground, base);
    for (std::size_t a = 0; a < factors.size(); ++a)
        p.projections.emplace_back(p.space, factors[a], proj[a]);
    return p;
}

Subset product_closure_formula(const ProductGts& p, Subset m)
{
    std::size_t k = p.factors.size();
    std::vector<Subset> proj(k, 0);
    for (std::size_t a = 0; a < k; ++a)
        proj[a] = p.factors[a].closure(p.projections[a].image(m));
    Subset out = 0;
    for (int pt = 0; pt < p.space.size(); ++pt) {
        bool in = true;
        for (std::size_t a = 0; a < k && in; ++a)
            in = contains(proj[a], p.projections[a].table[pt]);
        if (in)
            out |= bit(pt);
    }
    return out;
}

GroundSet sum_ground(const std::vector<GroundSet>& parts)
{
    std::vector<std::string> labels;
    bool clash = false;
    {
        std::vector<std::string> all;
        for (const auto& g : parts)
            for (const auto& l : g.labels)
                all.push_back(l);
        std::sort(all.begin(), all.end());
        clash = std::adjacent_find(all.begin(), all.end()) != all.end();
    }
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (const auto& l : parts[a].labels)
            labels.push_back(clash ? std::to_string(a) + ":" + l : l);
    return GroundSet(std::move(labels));
}

SumGts sum(const std::vector<Gts>& parts)
{
    SumGts s;
    std::vector<GroundSet> grounds;
    int total = 0;
    for (const auto& p : parts) {
        grounds.push_back(p.ground());
        s.offsets.push_back(total);
        total += p.size();
    }
    check_cap(total, "sum");
    GroundSet ground = sum_ground(grounds);
    SetFamily base;
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (Subset m : parts[a].opens())
            base.push_back(m << s.offsets[a]);
    canonicalize(base);
    s.space = Gts::from_base(ground, base);
    for (std::size_t a = 0; a < parts.size(); ++a) {
        PointFn t(parts[a].size());
        std::iota(t.begin(), t.end(), s.offsets[a]);
        s.injections.emplace_back(parts[a], s.space, std::move(t));
    }
    return s;
}

namespace {

void check_same_ground(const GroundSet& ground, const std::vector<Gts>& gs)
{
    for (const auto& g : gs)
        if (!(g.ground() == ground))
            fail(ErrorKind::Structural, "lattice operation on spaces with different grounds");
}

} // namespace

Gts lattice_join(const GroundSet& ground, const std::vector<Gts>& gs)
{
    check_same_ground(ground, gs);
    SetFamily base;
    for (const auto& g : gs)
        base.insert(base.end(), g.opens().begin(), g.opens().end());
    canonicalize(base);
    return Gts::from_base(ground, base);
}

Gts lattice_meet(const GroundSet& ground, const std::vector<Gts>& gs)
{
    check_same_ground(ground, gs);
    if (gs.empty())
        return Gts::discrete(ground);
    SetFamily opens;
    for (Subset m : gs.front().opens()) {
        bool all = true;
        for (const auto& g : gs)
            all = all && g.is_open(m);
        if (all)
            opens.push_back(m);
    }
    return Gts::trusted(ground, std::move(opens));
}

ClosureOp join_closure(const GroundSet& ground, const std::vector<Gts>& gs)
{
    check_same_ground(ground, gs);
    Subset universe = ground.full();
    return ClosureOp::from_function(ground, [gs, universe](Subset a) {
        Subset c = universe;
        for (const auto& g : gs)
            c &= g.closure(a);
        return c;
    });
}

SubsetFn meet_gamma(const GroundSet& ground, const std::vector<Gts>& gs)
{
    check_same_ground(ground, gs);
    return [gs](Subset a) {
        Subset c = a;
        for (const auto& g : gs)
            c |= g.closure(a);
        return c;
    };
}

ClosureOp meet_closure(const GroundSet& ground, const std::vector<Gts>& gs)
{
    return idempotent_hull(ground, meet_gamma(ground, gs));
}

Gts csaszar_product(const std::vector<Gts>& factors)
{
    if (factors.empty())
        return Gts::trusted(GroundSet({"()"}), SetFamily{0, 1});
    ProductGts p = product(factors);
    if (p.space.size() == 0)
        return p.space;
    // Boxes ∏ N_α as intersections of cylinders.
    SetFamily boxes{p.space.full()};
    for (std::size_t a = 0; a < factors.size(); ++a) {
        SetFamily next;
        for (Subset box : boxes)
            for (Subset m : factors[a].opens())
                next.push_back(box & p.projections[a].preimage(m));
        canonicalize(next);
        boxes = std::move(next);
    }
    return Gts::from_base(p.space.ground(), boxes);
}

bool csaszar_coincidence(const std::vector<Gts>& factors)
{
    if (factors.empty())
        return false; // {∅, X₀} against {∅} on one point
    return csaszar_product(factors).opens() == product(factors).space.opens();
}

bool csaszar_characterization(const std::vector<Gts>& factors)
{
    if (factors.empty())
        return false;
    if (factors.size() == 1)
        return true;
    for (const auto& f : factors)
        if (f.size() == 0)
            return true;
    int nontrivial = 0;
    for (const auto& f : factors) {
        if (!f.strong())
            return false;
        if (f.opens() != SetFamily{0, f.full()})
            ++nontrivial;
    }
    return nontrivial <= 1;
}

} // namespace gentop
