#include <doctest.h>

#include "../src/checks.hpp"
#include "gentop/lifts.hpp"
#include "util.hpp"

using namespace gentop;
using namespace testutil;

namespace {

Gts chain3() { return Gts::from_base(GroundSet::range(3), {S({0}), S({0, 1}), S({2}), S({1, 2})}); }

} // namespace

TEST_CASE("weak structure examples")
{
    GroundSet x = GroundSet::range(4);
    CHECK(weak_structure_opens(Source{x, {}}).opens() == SetFamily{0});
    ClosureOp c = weak_structure_closure(Source{x, {}});
    for (Subset a = 0; a < 16; ++a)
        CHECK(c(a) == 15);

    // Carrier point 2i + j sits at row i, column j.
    Gts half = Gts::from_base(GroundSet::range(2), {S({0})});
    Source rc{x, {{{0, 0, 1, 1}, half}, {{0, 1, 0, 1}, half}}};
    CHECK(weak_structure_opens(rc).opens() == SetFamily{0, S({0, 1}), S({0, 2}), S({0, 1, 2})});

    Gts g = chain3();
    Source id{g.ground(), {{{0, 1, 2}, g}}};
    CHECK(weak_structure_opens(id) == g);
    CHECK(weak_structure_closure(id).table() == closure_op_from_gts(g).table());

    // One injective leg gives the subspace.
    Source inj{GroundSet::range(2), {{{0, 2}, g}}};
    CHECK(weak_structure_opens(inj).opens() == subspace(g, S({0, 2})).opens());
}

TEST_CASE("weak structure forms agree on random sources")
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 1000; ++t) {
        int n = static_cast<int>(rng() % 5);
        Source src{GroundSet::range(n), {}};
        for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
            Gts y = random_base_gts(rng, 1, 4, 2.5);
            PointFn f(n);
            for (auto& v : f)
                v = static_cast<int>(rng() % y.size());
            src.legs.push_back({f, y});
        }
        Gts w = weak_structure_opens(src);
        CHECK(gts_from_closure_op(weak_structure_closure(src)) == w);
        for (const auto& leg : src.legs)
            CHECK(is_continuous(GtsMap(w, leg.cod, leg.fn)).holds);
    }
}

TEST_CASE("strong structure examples")
{
    GroundSet x = GroundSet::range(3);
    CHECK(strong_structure_opens(Sink{x, {}}) == Gts::discrete(x));
    ClosureOp c = strong_structure_closure(Sink{x, {}});
    for (Subset a = 0; a < 8; ++a)
        CHECK(c(a) == a);

    Sink cube = checks::hypercube_sink(3);
    CHECK(cube.legs.size() == 12);
    CHECK(strong_structure_opens(cube).opens() == SetFamily{0, 255});
    CHECK(strong_structure_closure(cube)(bit(0)) == 255);

    Gts g = Gts::from_base(labels({"a", "b", "c"}), {S({0, 1})});
    Sink q{GroundSet::range(2), {{g, {0, 0, 1}}}};
    CHECK(strong_structure_opens(q).opens() == quotient(g, GroundSet::range(2), {0, 0, 1}).opens());
}

TEST_CASE("strong structure forms agree on random sinks")
{
    std::mt19937_64 rng(22);
    for (int t = 0; t < 1000; ++t) {
        int n = static_cast<int>(rng() % 5);
        Sink snk{GroundSet::range(n), {}};
        for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
            Gts y = random_base_gts(rng, n == 0 ? 0 : 1, n == 0 ? 0 : 4, 2.5);
            PointFn f(y.size());
            for (auto& v : f)
                v = static_cast<int>(rng() % n);
            snk.legs.push_back({y, f});
        }
        Gts s = strong_structure_opens(snk);
        CHECK(gts_from_closure_op(strong_structure_closure(snk)) == s);
        for (const auto& leg : snk.legs)
            CHECK(is_continuous(GtsMap(leg.dom, s, leg.fn)).holds);
    }
}

TEST_CASE("idempotent hull iteration")
{
    for (int d = 2; d <= 4; ++d) {
        IterationTrace t = hull_trace(strong_structure_gamma(checks::hypercube_sink(d)), bit(0));
        CHECK(t.stabilized_at == d);
        CHECK(t.stages.size() == static_cast<std::size_t>(d + 1));
        CHECK(t.stages.back().second == full_set(1 << d));
    }
    Gts g = chain3();
    SubsetFn c = [&](Subset a) { return g.closure(a); };
    for (Subset a = 0; a < 8; ++a)
        CHECK(hull_trace(c, a).stabilized_at <= 1);
    SubsetFn shrink = [](Subset a) { return a == 3 ? Subset{1} : a; };
    CHECK_THROWS_AS(idempotent_hull(GroundSet::range(2), shrink), Error);
    SubsetFn nonmono = [](Subset a) { return a == 1 ? Subset{5} : a; };
    CHECK_THROWS_AS(idempotent_hull(GroundSet::range(3), nonmono), Error);
}

TEST_CASE("subspace and quotient")
{
    Gts g = chain3();
    CHECK(subspace(g, g.full()) == g);
    CHECK(subspace(g, S({0, 2})).opens() == SetFamily{0, 1, 2, 3});
    for (const auto& h : all_upto(3))
        for (Subset x0 = 0; x0 <= h.full(); ++x0)
            CHECK(gts_from_closure_op(subspace_closure(h, x0)) == subspace(h, x0));

    CHECK(quotient(g, g.ground(), {0, 1, 2}) == g);
    Gts abc = Gts::from_base(labels({"a", "b", "c"}), {S({0, 1})});
    Gts q = quotient(abc, labels({"p", "c"}), {0, 0, 1});
    CHECK(q.opens() == SetFamily{0, S({0})});
    for (const auto& h : all_upto(3)) {
        if (h.size() == 0)
            continue;
        Gts one = quotient(h, labels({"*"}), PointFn(h.size(), 0));
        CHECK(one.opens() == (h.strong() ? SetFamily{0, 1} : SetFamily{0}));
        CHECK(gts_from_closure_op(quotient_closure(h, labels({"*"}), PointFn(h.size(), 0))) == one);
    }
    try {
        quotient(g, GroundSet::range(3), {0, 0, 1});
        FAIL("accepted a non-surjective quotient map");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Precondition);
    }
}

TEST_CASE("products")
{
    ProductGts empty = product({});
    CHECK(empty.space.size() == 1);
    CHECK(empty.space.opens() == SetFamily{0});
    Gts g = chain3();
    CHECK(product({g}).space.opens() == g.opens());

    Gts d = Gts::discrete(GroundSet::range(2));
    ProductGts sq = product({d, d});
    Subset diag = bit(sq.point({0, 0})) | bit(sq.point({1, 1}));
    CHECK(sq.space.closure(diag) == 15);
    CHECK(product_closure_formula(sq, diag) == 15);

    auto small = all_upto(2);
    for (const auto& a : small)
        for (const auto& b : small) {
            ProductGts p = product({a, b});
            Source legs{p.space.ground(), {}};
            for (const auto& pr : p.projections)
                legs.legs.push_back({pr.table, pr.cod});
            CHECK(weak_structure_opens(legs).opens() == p.space.opens());
            for (Subset m = 0; m <= p.space.full(); ++m)
                CHECK(product_closure_formula(p, m) == p.space.closure(m));
            if (a.size() > 0 && b.size() > 0)
                CHECK(p.space.strong() == (a.strong() || b.strong()));
        }

    int old = ground_cap();
    set_ground_cap(8);
    CHECK_THROWS_AS(product({d, d, d, d}), Error);
    set_ground_cap(old);
}

TEST_CASE("sums")
{
    SumGts e = sum({});
    CHECK(e.space.size() == 0);
    Gts a = Gts::discrete(labels({"a"})), b = Gts::discrete(labels({"b"}));
    SumGts s = sum({a, b});
    CHECK(s.space.opens() == SetFamily{0, 1, 2, 3});
    CHECK(s.space.ground().labels == std::vector<std::string>{"a", "b"});
    SumGts clash = sum({a, a});
    CHECK(clash.space.ground().labels == std::vector<std::string>{"0:a", "1:a"});

    auto small = all_upto(2);
    for (const auto& x : small)
        for (const auto& y : small) {
            SumGts p = sum({x, y});
            Sink legs{p.space.ground(), {}};
            for (const auto& in : p.injections)
                legs.legs.push_back({in.dom, in.table});
            CHECK(strong_structure_opens(legs).opens() == p.space.opens());
        }
}

TEST_CASE("lattice join and meet")
{
    GroundSet ab = labels({"a", "b"});
    Gts a = Gts::from_base(ab, {S({0})}), b = Gts::from_base(ab, {S({1})});
    CHECK(lattice_join(ab, {a, b}).opens() == SetFamily{0, 1, 2, 3});
    CHECK(lattice_meet(ab, {a, b}).opens() == SetFamily{0});
    CHECK(lattice_join(ab, {a, a}) == a);
    CHECK(lattice_meet(ab, {a, a}) == a);
    CHECK(lattice_join(ab, {}).opens() == SetFamily{0});
    CHECK(lattice_meet(ab, {}) == Gts::discrete(ab));
    for (int n = 0; n <= 2; ++n) {
        auto all = enumerate_gts(n);
        GroundSet x = GroundSet::range(n);
        for (const auto& p : all)
            for (const auto& q : all) {
                CHECK(gts_from_closure_op(join_closure(x, {p, q})) == lattice_join(x, {p, q}));
                CHECK(gts_from_closure_op(meet_closure(x, {p, q})) == lattice_meet(x, {p, q}));
            }
    }
}

TEST_CASE("box products against the categorical product")
{
    Gts h = Gts::from_base(GroundSet::range(2), {S({0}), S({0, 1})});
    Gts top = Gts::from_base(GroundSet::range(2), {S({0, 1})});
    Gts box = csaszar_product({h, h});
    ProductGts cat = product({h, h});
    Subset corner = bit(cat.point({0, 0}));
    CHECK(box.is_open(corner));
    CHECK_FALSE(cat.space.is_open(corner));
    CHECK_FALSE(csaszar_coincidence({h, h}));
    CHECK_FALSE(csaszar_characterization({h, h}));

    CHECK(csaszar_coincidence({top, h}));
    CHECK(csaszar_characterization({top, h}));

    Gts none = Gts::discrete(GroundSet::range(0));
    CHECK(csaszar_product({h, none}).size() == 0);
    CHECK(csaszar_coincidence({h, none}));
    CHECK(csaszar_characterization({h, none}));
}

TEST_CASE("coincidence rule misjudges factors whose only open is empty")
{
    Gts bare = Gts::indiscrete(labels({"a"}));
    CHECK(csaszar_coincidence({bare, bare}));
    CHECK_FALSE(csaszar_characterization({bare, bare}));
}
