#include "gentop/generators.hpp"

#include <algorithm>

#include "gentop/lifts.hpp"

namespace gentop {

namespace {

constexpr int kTableGroundLimit = 16;

template <class F>
void for_each_subset(Subset universe, F&& f)
{
    for (Subset a = 0;; ++a) {
        f(a);
        if (a == universe)
            break;
    }
}

std::string family_str(const Gts& g, const SetFamily& fam)
{
    std::string s = "[";
    for (std::size_t i = 0; i < fam.size(); ++i)
        s += (i ? "," : "") + g.fmt(fam[i]);
    return s + "]";
}

// First member of a not in b.
std::optional<Subset> first_missing(const SetFamily& a, const SetFamily& b)
{
    for (Subset s : a)
        if (!family_contains(b, s))
            return s;
    return std::nullopt;
}

} // namespace

MonotoneMap::MonotoneMap(GroundSet g, std::vector<Subset> t) : ground(std::move(g)), table(std::move(t))
{
    int n = ground.size();
    if (n > kTableGroundLimit)
        fail(ErrorKind::Resource, "monotone map tables are limited to 16 points");
    if (table.size() != (std::size_t{1} << n))
        fail(ErrorKind::Structural, "monotone map table has the wrong number of entries");
    for (Subset a = 0; a < table.size(); ++a) {
        if (!is_subset(table[a], ground.full()))
            fail(ErrorKind::Structural, "monotone map value exceeds the ground");
        for (int i = 0; i < n; ++i) {
            Subset b = a | bit(i);
            if (b != a && !is_subset(table[a], table[b]))
                fail(ErrorKind::Validation, "map not monotone: " + format_subset(ground, a) + " ⊆ " +
                                                format_subset(ground, b) + " but γ" + format_subset(ground, a) +
                                                " ⊄ γ" + format_subset(ground, b));
        }
    }
}

MonotoneMap MonotoneMap::identity(const GroundSet& g)
{
    std::vector<Subset> t(std::size_t{1} << g.size());
    for (Subset a = 0; a < t.size(); ++a)
        t[a] = a;
    return MonotoneMap(g, std::move(t));
}

MonotoneMap MonotoneMap::constant(const GroundSet& g, Subset value)
{
    return MonotoneMap(g, std::vector<Subset>(std::size_t{1} << g.size(), value));
}

Gts gt_from_gamma(const MonotoneMap& gamma)
{
    SetFamily opens;
    for (Subset a = 0; a < gamma.table.size(); ++a)
        if (is_subset(a, gamma.table[a]))
            opens.push_back(a);
    return Gts::trusted(gamma.ground, std::move(opens));
}

MonotoneMap interior_as_gamma(const Gts& g)
{
    if (g.size() > kTableGroundLimit)
        fail(ErrorKind::Resource, "monotone map tables are limited to 16 points");
    std::vector<Subset> t(std::size_t{1} << g.size());
    for (Subset a = 0; a < t.size(); ++a)
        t[a] = g.interior(a);
    return MonotoneMap(g.ground(), std::move(t));
}

MonotoneMap prop51_counterexample_gamma()
{
    // bit 0 = a, bit 1 = b
    return MonotoneMap(GroundSet({"a", "b"}), {0, 0, 3, 3});
}

MonotoneMap gamma_sum(const std::vector<MonotoneMap>& parts)
{
    std::vector<GroundSet> grounds;
    std::vector<int> offsets;
    int total = 0;
    for (const auto& p : parts) {
        grounds.push_back(p.ground);
        offsets.push_back(total);
        total += p.ground.size();
    }
    if (total > kTableGroundLimit)
        fail(ErrorKind::Resource, "monotone map tables are limited to 16 points");
    std::vector<Subset> t(std::size_t{1} << total);
    for (Subset a = 0; a < t.size(); ++a) {
        Subset v = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Subset part = (a >> offsets[i]) & parts[i].ground.full();
            v |= parts[i](part) << offsets[i];
        }
        t[a] = v;
    }
    return MonotoneMap(sum_ground(grounds), std::move(t));
}

PropertyReport check_prop51_sum(const std::vector<MonotoneMap>& parts)
{
    PropertyReport r;
    r.id = "prop_5_1_sum";
    r.attempted = 1;
    Gts lhs = gt_from_gamma(gamma_sum(parts));
    std::vector<Gts> gts;
    for (const auto& p : parts)
        gts.push_back(gt_from_gamma(p));
    Gts rhs = sum(gts).space;
    if (lhs.opens() == rhs.opens()) {
        r.passed = 1;
    } else {
        auto m = first_missing(lhs.opens(), rhs.opens());
        auto w = m ? m : first_missing(rhs.opens(), lhs.opens());
        r.notes = "μ(γ) and the sum of the μ(γ_α) differ at " + lhs.fmt(*w);
    }
    return r;
}

MonotoneMap gamma_subspace(const MonotoneMap& gamma, Subset x0)
{
    if (!is_subset(x0, gamma.ground.full()))
        fail(ErrorKind::Structural, "subspace set exceeds the ground");
    int k = card(x0);
    std::vector<std::string> labels;
    for_each_bit(x0, [&](int i) { labels.push_back(gamma.ground.labels[i]); });
    std::vector<Subset> t(std::size_t{1} << k);
    for (Subset a = 0; a < t.size(); ++a)
        t[a] = compress(gamma(decompress(a, x0)), x0);
    return MonotoneMap(GroundSet(std::move(labels)), std::move(t));
}

PropertyReport check_prop51_subspace(const MonotoneMap& gamma, Subset x0, bool* equality)
{
    PropertyReport r;
    r.id = "prop_5_1_subspace";
    r.attempted = 1;
    Gts small = gt_from_gamma(gamma_subspace(gamma, x0));
    Gts trace = subspace(gt_from_gamma(gamma), x0);
    auto bad = first_missing(small.opens(), trace.opens());
    bool eq = small.opens() == trace.opens();
    if (equality)
        *equality = eq;
    if (bad) {
        r.notes = "μ(γ₀) has " + small.fmt(*bad) + " outside μ(γ)|X₀";
    } else {
        r.passed = 1;
        r.notes = eq ? "equality holds" : "inclusion strict: μ(γ₀) = " + family_str(small, small.opens()) +
                                              ", μ(γ)|X₀ = " + family_str(trace, trace.opens());
    }
    return r;
}

Enlargement::Enlargement(Gts b, std::vector<Subset> t) : base(std::move(b)), table(std::move(t))
{
    if (table.size() != base.opens().size())
        fail(ErrorKind::Structural, "enlargement table must have one entry per open set");
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!is_subset(table[i], base.full()))
            fail(ErrorKind::Structural, "enlargement value exceeds the ground");
        if (!is_subset(base.opens()[i], table[i]))
            fail(ErrorKind::Validation, "enlargement violates M ⊆ kM at " + base.fmt(base.opens()[i]));
    }
}

Subset Enlargement::operator()(Subset m) const
{
    const auto& o = base.opens();
    auto it = std::lower_bound(o.begin(), o.end(), m);
    if (it == o.end() || *it != m)
        fail(ErrorKind::Precondition, "enlargement applied to a non-open set " + base.fmt(m));
    return table[it - o.begin()];
}

Enlargement Enlargement::identity(const Gts& g) { return Enlargement(g, g.opens()); }

Gts kappa_gt(const Enlargement& k)
{
    const auto& o = k.base.opens();
    SetFamily opens;
    for_each_subset(k.base.full(), [&](Subset a) {
        Subset covered = 0;
        for (std::size_t i = 0; i < o.size(); ++i)
            if (is_subset(k.table[i], a))
                covered |= o[i];
        if (is_subset(a, covered))
            opens.push_back(a);
    });
    return Gts::trusted(k.base.ground(), std::move(opens));
}

Enlargement enlargement_sum(const std::vector<Enlargement>& parts)
{
    std::vector<Gts> bases;
    for (const auto& p : parts)
        bases.push_back(p.base);
    SumGts s = sum(bases);
    std::vector<Subset> t;
    for (Subset m : s.space.opens()) {
        Subset v = 0;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Subset part = (m >> s.offsets[i]) & parts[i].base.full();
            v |= parts[i](part) << s.offsets[i];
        }
        t.push_back(v);
    }
    return Enlargement(s.space, std::move(t));
}

bool prop52_sum_criterion(const std::vector<Enlargement>& parts)
{
    int nonempty = 0;
    bool all_zero = true;
    for (const auto& p : parts) {
        if (p.base.size() > 0)
            ++nonempty;
        if (p(0) != 0)
            all_zero = false;
    }
    return nonempty <= 1 || all_zero;
}

PropertyReport check_prop52_sum(const std::vector<Enlargement>& parts, bool* equality)
{
    PropertyReport r;
    r.id = "prop_5_2_sum";
    r.attempted = 1;
    Gts lhs = kappa_gt(enlargement_sum(parts));
    std::vector<Gts> ks;
    for (const auto& p : parts)
        ks.push_back(kappa_gt(p));
    Gts rhs = sum(ks).space;
    bool eq = lhs.opens() == rhs.opens();
    if (equality)
        *equality = eq;
    bool predicted = prop52_sum_criterion(parts);
    if (auto bad = first_missing(lhs.opens(), rhs.opens())) {
        r.notes = "κ(μ,k) has " + lhs.fmt(*bad) + " outside the sum of the κ(μ_α,k_α)";
    } else if (eq != predicted) {
        r.notes = std::string("criterion predicts ") + (predicted ? "equality" : "strict inclusion") +
                  " but κ(μ,k) = " + family_str(lhs, lhs.opens()) + " and the sum is " +
                  family_str(rhs, rhs.opens());
    } else {
        r.passed = 1;
        r.notes = eq ? "equality holds" : "inclusion strict";
    }
    return r;
}

Enlargement enlargement_subspace(const Enlargement& k, Subset x0)
{
    const Gts& g = k.base;
    const auto& o = g.opens();
    if (!g.is_open(x0))
        fail(ErrorKind::Precondition, "hypothesis failed: X₀ = " + g.fmt(x0) + " is not open");
    for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t j = i + 1; j < o.size(); ++j)
            if (!g.is_open(o[i] & o[j]))
                fail(ErrorKind::Precondition, "hypothesis failed: opens not closed under pairwise intersection at " +
                                                  g.fmt(o[i]) + " ∩ " + g.fmt(o[j]));
    for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t j = 0; j < o.size(); ++j)
            if (i != j && is_subset(o[i], o[j]) && !is_subset(k.table[i], k.table[j]))
                fail(ErrorKind::Precondition, "hypothesis failed: k not monotone at " + g.fmt(o[i]) + " ⊆ " +
                                                  g.fmt(o[j]));
    Gts sub = subspace(g, x0);
    std::vector<Subset> t;
    for (Subset m0 : sub.opens())
        t.push_back(compress(k(decompress(m0, x0)), x0));
    return Enlargement(sub, std::move(t));
}

PropertyReport check_prop52_subspace(const Enlargement& k, Subset x0, bool* equality)
{
    PropertyReport r;
    r.id = "prop_5_2_subspace";
    r.attempted = 1;
    Gts lhs = subspace(kappa_gt(k), x0);
    Gts rhs = kappa_gt(enlargement_subspace(k, x0));
    bool eq = lhs.opens() == rhs.opens();
    if (equality)
        *equality = eq;
    if (auto bad = first_missing(lhs.opens(), rhs.opens())) {
        r.notes = "κ(μ,k)|X₀ has " + lhs.fmt(*bad) + " outside κ(μ₀,k₀)";
    } else {
        r.passed = 1;
        r.notes = eq ? "equality holds" : "inclusion strict";
    }
    return r;
}

Gns::Gns(GroundSet g, std::vector<SetFamily> n) : ground(std::move(g)), nbhd(std::move(n))
{
    if (static_cast<int>(nbhd.size()) != ground.size())
        fail(ErrorKind::Structural, "neighbourhood system must list every point");
    for (int x = 0; x < ground.size(); ++x) {
        canonicalize(nbhd[x]);
        for (Subset v : nbhd[x]) {
            if (!is_subset(v, ground.full()))
                fail(ErrorKind::Structural, "neighbourhood exceeds the ground");
            if (!contains(v, x))
                fail(ErrorKind::Validation, "neighbourhood " + format_subset(ground, v) + " of " + ground.labels[x] +
                                                " does not contain it");
        }
    }
}

SetFamily stack_hull(const SetFamily& fam, int n)
{
    SetFamily out;
    if (fam.empty())
        return out;
    for_each_subset(full_set(n), [&](Subset c) {
        for (Subset b : fam)
            if (is_subset(b, c)) {
                out.push_back(c);
                return;
            }
    });
    return out;
}

Gns stack_hull(const Gns& psi)
{
    std::vector<SetFamily> n;
    for (const auto& f : psi.nbhd)
        n.push_back(stack_hull(f, psi.ground.size()));
    return Gns(psi.ground, std::move(n));
}

Gts gt_from_gns(const Gns& psi)
{
    check_cap(psi.ground.size(), "ground set");
    SetFamily opens;
    for_each_subset(psi.ground.full(), [&](Subset m) {
        bool ok = true;
        for_each_bit(m, [&](int x) {
            if (!ok)
                return;
            ok = std::any_of(psi.nbhd[x].begin(), psi.nbhd[x].end(), [&](Subset v) { return is_subset(v, m); });
        });
        if (ok)
            opens.push_back(m);
    });
    return Gts::trusted(psi.ground, std::move(opens));
}

Gns gns_from_gt(const Gts& g)
{
    std::vector<SetFamily> n(g.size());
    for (int x = 0; x < g.size(); ++x) {
        SetFamily around;
        for (Subset m : g.opens())
            if (contains(m, x))
                around.push_back(m);
        n[x] = stack_hull(around, g.size());
    }
    return Gns(g.ground(), std::move(n));
}

bool gns_continuous(const PointFn& f, const Gns& psi_dom, const Gns& psi_cod)
{
    for (int x = 0; x < psi_dom.ground.size(); ++x)
        for (Subset v : psi_cod.nbhd[f[x]]) {
            Subset pre = 0;
            for (int i = 0; i < psi_dom.ground.size(); ++i)
                if (contains(v, f[i]))
                    pre |= bit(i);
            if (!family_contains(psi_dom.nbhd[x], pre))
                return false;
        }
    return true;
}

Gts order_gt(const GroundSet& chain)
{
    int n = chain.size();
    SetFamily base;
    for (int a = 0; a < n; ++a) {
        base.push_back(full_set(a));                 // {x < a}
        base.push_back(full_set(n) & ~full_set(a + 1)); // {x > a}
    }
    canonicalize(base);
    return Gts::from_base(chain, base);
}

bool is_monotone_between_chains(const PointFn& f, int)
{
    bool up = true, down = true;
    for (std::size_t i = 1; i < f.size(); ++i) {
        up = up && f[i - 1] <= f[i];
        down = down && f[i - 1] >= f[i];
    }
    return up || down;
}

bool prop415_characterization(const PointFn& f, int dom_size, int cod_size)
{
    if (dom_size == 1 && cod_size > 1)
        return false;
    return is_monotone_between_chains(f, cod_size);
}

PropertyReport check_prop415(const GtsMap& f)
{
    PropertyReport r;
    r.id = "prop_4_15";
    r.attempted = 1;
    bool cont = is_continuous(f).holds;
    bool pred = prop415_characterization(f.table, f.dom.size(), f.cod.size());
    if (cont == pred)
        r.passed = 1;
    r.notes = std::string("continuous: ") + (cont ? "yes" : "no") + ", characterization: " + (pred ? "yes" : "no");
    return r;
}

} // namespace gentop
