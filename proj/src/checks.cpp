#include "checks.hpp"

#include <algorithm>

namespace gentop::checks {

namespace {

std::string fam(const Gts& g) { return io::family_to_json(g.ground(), g.opens()).dump(); }

Failure differ(const char* what, const Gts& a, const Gts& b)
{
    if (a.opens() == b.opens())
        return std::nullopt;
    return std::string(what) + ": " + fam(a) + " vs " + fam(b);
}

bool holds(const Gts& g, Axiom a) { return check_axiom(g, a).holds; }

} // namespace

Failure weak_lift(const Source& src)
{
    Gts open_form = weak_structure_opens(src);
    Gts closure_form = gts_from_closure_op(weak_structure_closure(src));
    if (auto d = differ("weak structure, open form vs closure form", open_form, closure_form))
        return d;
    for (const auto& leg : src.legs)
        if (!is_continuous(GtsMap(open_form, leg.cod, leg.fn)))
            return std::string("leg not continuous for the weak structure");
    return std::nullopt;
}

Failure strong_lift(const Sink& snk)
{
    Gts open_form = strong_structure_opens(snk);
    Gts closure_form = gts_from_closure_op(strong_structure_closure(snk));
    if (auto d = differ("strong structure, open form vs closure form", open_form, closure_form))
        return d;
    for (const auto& leg : snk.legs)
        if (!is_continuous(GtsMap(leg.dom, open_form, leg.fn)))
            return std::string("leg not continuous for the strong structure");
    return std::nullopt;
}

Sink hypercube_sink(int d)
{
    if (d < 1 || d > 6)
        fail(ErrorKind::Resource, "hypercube dimension must be in [1, 6]");
    int n = 1 << d;
    std::vector<std::string> labels;
    for (int p = 0; p < n; ++p) {
        std::string s;
        for (int c = 0; c < d; ++c)
            s += contains(static_cast<Subset>(p), c) ? '1' : '0';
        labels.push_back(s);
    }
    Sink snk{GroundSet(labels), {}};
    for (int p = 0; p < n; ++p)
        for (int c = 0; c < d; ++c) {
            int q = p ^ (1 << c);
            if (p < q) {
                Gts edge = Gts::trusted(GroundSet({labels[p], labels[q]}), SetFamily{0, 3});
                snk.legs.push_back({edge, {p, q}});
            }
        }
    return snk;
}

Failure hull_cube(int d)
{
    Sink snk = hypercube_sink(d);
    IterationTrace t = hull_trace(strong_structure_gamma(snk), bit(0));
    int n = 1 << d;
    if (t.stabilized_at != d)
        return "stabilized at step " + std::to_string(t.stabilized_at) + ", expected " + std::to_string(d);
    for (auto [k, s] : t.stages) {
        Subset ball = 0;
        for (int p = 0; p < n; ++p)
            if (card(static_cast<Subset>(p)) <= k)
                ball |= bit(p);
        if (s != ball)
            return "stage " + std::to_string(k) + " is not the Hamming ball of radius " + std::to_string(k);
    }
    if (strong_structure_closure(snk)(bit(0)) != snk.carrier.full())
        return std::string("closure of the origin is not the whole cube");
    return differ("strong structure, open form vs closure form", strong_structure_opens(snk),
                  gts_from_closure_op(strong_structure_closure(snk)));
}

Failure lattice(const GroundSet& ground, const std::vector<Gts>& gs)
{
    if (auto d = differ("join, open form vs closure form", lattice_join(ground, gs),
                        gts_from_closure_op(join_closure(ground, gs))))
        return d;
    return differ("meet, open form vs closure form", lattice_meet(ground, gs),
                  gts_from_closure_op(meet_closure(ground, gs)));
}

Failure csaszar(const std::vector<Gts>& factors)
{
    bool actual = csaszar_coincidence(factors);
    bool stated = csaszar_characterization(factors);
    if (actual == stated)
        return std::nullopt;
    std::string s = std::string("products ") + (actual ? "coincide" : "differ") + " but the characterization says " +
                    (stated ? "they coincide" : "they differ");
    if (!factors.empty())
        s += "; Császár " + fam(csaszar_product(factors)) + ", categorical " + fam(product(factors).space);
    return s;
}

Failure heredity_subspace(Axiom a, const Gts& g, Subset x0)
{
    if (!holds(g, a))
        return std::nullopt;
    auto v = check_axiom(subspace(g, x0), a);
    if (v.holds)
        return std::nullopt;
    return "subspace on " + g.fmt(x0) + " loses " + axiom_name(a) + ": " + v.detail;
}

Failure heredity_product(Axiom a, const std::vector<Gts>& factors)
{
    for (const auto& f : factors)
        if (!holds(f, a))
            return std::nullopt;
    auto v = check_axiom(product(factors).space, a);
    if (v.holds)
        return std::nullopt;
    return "product loses " + axiom_name(a) + ": " + v.detail;
}

Failure embedding_lemma(const Gts& g, const std::vector<GtsMap>& legs)
{
    auto r = embedding_lemma_report(g, legs);
    if (r.ok())
        return std::nullopt;
    return r.notes;
}

Failure t0_universality(const Gts& g, const Gts& z, const PointFn& f)
{
    if (!holds(z, Axiom::T0) || !is_continuous(GtsMap(g, z, f)))
        return std::nullopt;
    auto [q, qmap] = t0_reflection(g);
    if (!is_continuous(qmap))
        return std::string("reflection map not continuous");
    if (!holds(q, Axiom::T0))
        return std::string("reflection not T0");
    int m = q.size(), k = z.size();
    long long total = 1;
    for (int i = 0; i < m; ++i)
        total *= k;
    int found = 0;
    PointFn h(m, 0);
    for (long long c = 0; c < total; ++c) {
        long long r = c;
        for (int i = 0; i < m; ++i) {
            h[i] = static_cast<int>(r % k);
            r /= k;
        }
        bool factors = true;
        for (int x = 0; x < g.size() && factors; ++x)
            factors = h[qmap.table[x]] == f[x];
        if (factors && is_continuous(GtsMap(q, z, h)))
            ++found;
    }
    if (found == 1)
        return std::nullopt;
    return "found " + std::to_string(found) + " continuous factorizations through the reflection";
}

Failure tychonoff(const Gts& g)
{
    if (!holds(g, Axiom::T3_5))
        return std::nullopt;
    auto c = tychonoff_embed(g);
    if (c.verified())
        return std::nullopt;
    return "certificate failed: " + io::certificate_to_json(g, c)["verdicts"].dump();
}

Failure order_map(int dom, int cod, const PointFn& f)
{
    Gts x = order_gt(GroundSet::range(dom));
    Gts y = order_gt(GroundSet::range(cod));
    auto r = check_prop415(GtsMap(x, y, f));
    if (r.ok())
        return std::nullopt;
    return r.notes;
}

Failure normal_product(const std::vector<Gts>& factors) { return heredity_product(Axiom::Normal, factors); }

Failure product_subcover(const std::vector<Gts>& factors, const std::vector<CylinderUnion>& members)
{
    ProductGts p = product(factors);
    std::size_t budget = 1;
    for (const auto& f : factors)
        budget = std::max(budget, max_irredundant_cover(f).size() + 1);
    SubcoverExtraction ex = product_subcover_extract(p, members, KappaBudget::finite(static_cast<int>(budget)));
    Subset u = 0;
    for (int i : ex.chosen)
        u |= cylinder_union_set(p, members[i]);
    if (u != p.space.full())
        return std::string("extracted members do not cover the product");
    if (ex.chosen.size() >= budget)
        return "extracted " + std::to_string(ex.chosen.size()) + " members, budget " + std::to_string(budget);
    return std::nullopt;
}

Failure quotient_compact(const Gts& g, int target, const PointFn& q, int budget)
{
    auto kappa = KappaBudget::finite(budget);
    if (!is_kappa_compact(g, kappa).holds)
        return std::nullopt;
    Gts img = quotient(g, GroundSet::range(target), q);
    auto v = is_kappa_compact(img, kappa);
    if (v.holds)
        return std::nullopt;
    return "quotient not compact under budget " + std::to_string(budget) + ": " + v.detail;
}

Failure closed_compact(const Gts& g, Subset c, int budget)
{
    auto kappa = KappaBudget::finite(budget);
    if (!g.is_closed(c) || !is_kappa_compact(g, kappa).holds)
        return std::nullopt;
    auto v = is_kappa_compact(subspace(g, c), kappa);
    if (v.holds)
        return std::nullopt;
    return "closed subspace " + g.fmt(c) + " not compact under budget " + std::to_string(budget);
}

Failure dense_extension(const Gts& g)
{
    if (!holds(g, Axiom::T3_5))
        return std::nullopt;
    auto e = dense_compact_t4_extension(g);
    if (e.report.ok())
        return std::nullopt;
    return e.report.notes;
}

Failure dense_two(int n)
{
    auto r = dense_two_points(n);
    if (r.ok())
        return std::nullopt;
    return r.notes;
}

Failure urysohn(const Gts& g, Subset f1, Subset f2)
{
    if (!f1 || !f2 || (f1 & f2) || !g.is_closed(f1) || !g.is_closed(f2) || !holds(g, Axiom::Normal))
        return std::nullopt;
    GtsMap w;
    try {
        w = urysohn_witness(g, f1, f2);
    } catch (const Error& e) {
        return std::string(e.what());
    }
    if (!is_continuous(w))
        return std::string("witness not continuous");
    if (w.image(f1) != bit(0) || w.image(f2) != bit(1))
        return std::string("witness has the wrong values");
    return std::nullopt;
}

Failure prop51_sum(const std::vector<MonotoneMap>& parts)
{
    auto r = check_prop51_sum(parts);
    if (r.ok())
        return std::nullopt;
    return r.notes;
}

Failure prop51_subspace(const MonotoneMap& gamma, Subset x0)
{
    auto r = check_prop51_subspace(gamma, x0);
    if (r.ok())
        return std::nullopt;
    return r.notes;
}

Failure prop52_sum(const std::vector<Enlargement>& parts)
{
    auto r = check_prop52_sum(parts);
    if (r.ok())
        return std::nullopt;
    return r.notes;
}

Failure prop52_subspace(const Enlargement& k, Subset x0)
{
    try {
        enlargement_subspace(k, x0);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Precondition)
            return std::nullopt;
        throw;
    }
    auto r = check_prop52_subspace(k, x0);
    if (r.ok())
        return std::nullopt;
    return r.notes;
}

Failure gns_stack(const Gns& psi) { return differ("μ_ψ vs μ_{Stack ψ}", gt_from_gns(psi), gt_from_gns(stack_hull(psi))); }

Failure gns_roundtrip(const Gts& g) { return differ("μ vs μ_{ψ_μ}", g, gt_from_gns(gns_from_gt(g))); }

Failure gns_continuity(const Gns& dom, const Gns& cod, const PointFn& f)
{
    if (!gns_continuous(f, dom, cod))
        return std::nullopt;
    if (is_continuous(GtsMap(gt_from_gns(dom), gt_from_gns(cod), f)))
        return std::nullopt;
    return std::string("continuous between the neighbourhood systems but not between the generated GTs");
}

Failure hunt_gns_converse(const Gns& dom, const Gns& cod, const PointFn& f)
{
    if (gns_continuous(f, dom, cod))
        return std::nullopt;
    if (!is_continuous(GtsMap(gt_from_gns(dom), gt_from_gns(cod), f)))
        return std::nullopt;
    return std::string("continuous between the generated GTs but not between the neighbourhood systems");
}

Failure hunt_prop51_equality(const MonotoneMap& gamma, Subset x0)
{
    bool eq = true;
    auto r = check_prop51_subspace(gamma, x0, &eq);
    if (eq)
        return std::nullopt;
    return r.notes;
}

Failure hunt_prop52_subspace_converse(const Enlargement& k, Subset x0)
{
    try {
        enlargement_subspace(k, x0);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Precondition)
            return std::nullopt;
        throw;
    }
    Gts small = subspace(kappa_gt(k), x0);
    Gts big = kappa_gt(enlargement_subspace(k, x0));
    for (Subset s : big.opens())
        if (!small.is_open(s))
            return "κ(μ₀,k₀) contains " + big.fmt(s) + " which is not in κ(μ,k)|X₀";
    return std::nullopt;
}

Failure hunt_tautology(const Gts& g)
{
    for (Subset a = 0;; ++a) {
        if (!is_subset(a, g.closure(a)))
            return "closure not increasing at " + g.fmt(a);
        if (a == g.full())
            break;
    }
    return std::nullopt;
}

json fn_json(const PointFn& f) { return json(f); }

json spaces_json(const std::vector<Gts>& gs)
{
    json a = json::array();
    for (const auto& g : gs)
        a.push_back(io::space_to_json(g));
    return a;
}

json source_json(const Source& s)
{
    json legs = json::array();
    for (const auto& l : s.legs)
        legs.push_back(json{{"fn", l.fn}, {"cod", io::space_to_json(l.cod)}});
    return json{{"carrier", s.carrier.labels}, {"legs", legs}};
}

json sink_json(const Sink& s)
{
    json legs = json::array();
    for (const auto& l : s.legs)
        legs.push_back(json{{"dom", io::space_to_json(l.dom)}, {"fn", l.fn}});
    return json{{"carrier", s.carrier.labels}, {"legs", legs}};
}

json cylinders_json(const std::vector<Gts>& factors, const std::vector<CylinderUnion>& members)
{
    json ms = json::array();
    for (const auto& u : members) {
        json cyl = json::array();
        for (auto [a, m] : u)
            cyl.push_back(json{{"coordinate", a}, {"open", io::subset_to_json(factors[a].ground(), m)}});
        ms.push_back(cyl);
    }
    return ms;
}

namespace {

std::vector<Gts> spaces_from(const json& a)
{
    std::vector<Gts> out;
    for (const auto& s : a)
        out.push_back(io::space_from_json(s));
    return out;
}

PointFn fn_from(const json& a) { return a.get<PointFn>(); }

Source source_from(const json& j)
{
    Source s{io::ground_from_json(j.at("carrier"), "carrier"), {}};
    for (const auto& l : j.at("legs"))
        s.legs.push_back({fn_from(l.at("fn")), io::space_from_json(l.at("cod"))});
    return s;
}

Sink sink_from(const json& j)
{
    Sink s{io::ground_from_json(j.at("carrier"), "carrier"), {}};
    for (const auto& l : j.at("legs"))
        s.legs.push_back({io::space_from_json(l.at("dom")), fn_from(l.at("fn"))});
    return s;
}

} // namespace

Failure run_json(const json& inst)
{
    const std::string kind = inst.at("kind").get<std::string>();
    auto space = [&](const char* f) { return io::space_from_json(inst.at(f)); };
    auto subset = [&](const Gts& g, const char* f) { return io::subset_from_json(g.ground(), inst.at(f), f); };
    if (kind == "weak_lift")
        return weak_lift(source_from(inst.at("source")));
    if (kind == "strong_lift")
        return strong_lift(sink_from(inst.at("sink")));
    if (kind == "hull_cube")
        return hull_cube(inst.at("dimension").get<int>());
    if (kind == "lattice") {
        auto gs = spaces_from(inst.at("spaces"));
        return lattice(io::ground_from_json(inst.at("ground"), "ground"), gs);
    }
    if (kind == "csaszar")
        return csaszar(spaces_from(inst.at("factors")));
    if (kind == "heredity_subspace") {
        Gts g = space("space");
        return heredity_subspace(parse_axiom(inst.at("axiom")), g, subset(g, "subset"));
    }
    if (kind == "heredity_product")
        return heredity_product(parse_axiom(inst.at("axiom")), spaces_from(inst.at("factors")));
    if (kind == "embedding_lemma") {
        Gts g = space("space");
        std::vector<GtsMap> legs;
        for (const auto& l : inst.at("legs"))
            legs.push_back(io::map_from_json(l));
        return embedding_lemma(g, legs);
    }
    if (kind == "t0_universality")
        return t0_universality(space("space"), space("target"), fn_from(inst.at("fn")));
    if (kind == "tychonoff")
        return tychonoff(space("space"));
    if (kind == "order_map")
        return order_map(inst.at("dom_size"), inst.at("cod_size"), fn_from(inst.at("fn")));
    if (kind == "normal_product")
        return normal_product(spaces_from(inst.at("factors")));
    if (kind == "product_subcover") {
        auto factors = spaces_from(inst.at("factors"));
        std::vector<CylinderUnion> members;
        for (const auto& u : inst.at("members")) {
            CylinderUnion cu;
            for (const auto& c : u) {
                int a = c.at("coordinate");
                cu.emplace_back(a, io::subset_from_json(factors.at(a).ground(), c.at("open"), "members"));
            }
            members.push_back(cu);
        }
        return product_subcover(factors, members);
    }
    if (kind == "quotient_compact")
        return quotient_compact(space("space"), inst.at("target_size"), fn_from(inst.at("fn")), inst.at("budget"));
    if (kind == "closed_compact") {
        Gts g = space("space");
        return closed_compact(g, subset(g, "subset"), inst.at("budget"));
    }
    if (kind == "dense_extension")
        return dense_extension(space("space"));
    if (kind == "dense_two_points")
        return dense_two(inst.at("n"));
    if (kind == "urysohn") {
        Gts g = space("space");
        return urysohn(g, subset(g, "f1"), subset(g, "f2"));
    }
    if (kind == "prop51_sum") {
        std::vector<MonotoneMap> parts;
        for (const auto& p : inst.at("parts"))
            parts.push_back(io::gamma_from_json(p));
        return prop51_sum(parts);
    }
    if (kind == "prop51_subspace" || kind == "prop51_equality") {
        MonotoneMap g = io::gamma_from_json(inst.at("gamma"));
        Subset x0 = io::subset_from_json(g.ground, inst.at("subset"), "subset");
        return kind == "prop51_subspace" ? prop51_subspace(g, x0) : hunt_prop51_equality(g, x0);
    }
    if (kind == "prop52_sum") {
        std::vector<Enlargement> parts;
        for (const auto& p : inst.at("parts"))
            parts.push_back(io::enlargement_from_json(p));
        return prop52_sum(parts);
    }
    if (kind == "prop52_subspace" || kind == "prop52_subspace_converse") {
        Enlargement k = io::enlargement_from_json(inst.at("enlargement"));
        Subset x0 = io::subset_from_json(k.base.ground(), inst.at("subset"), "subset");
        return kind == "prop52_subspace" ? prop52_subspace(k, x0) : hunt_prop52_subspace_converse(k, x0);
    }
    if (kind == "gns_stack")
        return gns_stack(io::gns_from_json(inst.at("gns")));
    if (kind == "gns_roundtrip")
        return gns_roundtrip(space("space"));
    if (kind == "gns_continuity" || kind == "gns_converse") {
        Gns d = io::gns_from_json(inst.at("dom"));
        Gns c = io::gns_from_json(inst.at("cod"));
        PointFn f = fn_from(inst.at("fn"));
        return kind == "gns_continuity" ? gns_continuity(d, c, f) : hunt_gns_converse(d, c, f);
    }
    if (kind == "tautology")
        return hunt_tautology(space("space"));
    fail(ErrorKind::UnknownId, "unknown instance kind '" + kind + "'");
}

} // namespace gentop::checks
