// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "../src/checks.hpp"
#include "gentop/covers.hpp"
#include "gentop/embed.hpp"
#include "gentop/generators.hpp"
#include "gentop/harness.hpp"
#include "gentop/json_io.hpp"
#include "gentop/lifts.hpp"
#include "gentop/separation.hpp"
#include "oracles.hpp"

using namespace gentop;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
    void note(const std::string& s)
    {
        if (pass)
            detail = s;
    }
};

oracle::Family fam(const Gts& g) { return oracle::Family(g.opens().begin(), g.opens().end()); }

// Fixpoint of pairwise unions over a std::set.
oracle::Family union_fixpoint(const oracle::Family& base)
{
    std::set<oracle::Set> s(base.begin(), base.end());
    s.insert(0);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<oracle::Set> v(s.begin(), s.end());
        for (auto a : v)
            for (auto b : v)
                grew |= s.insert(a | b).second;
    }
    return oracle::Family(s.begin(), s.end());
}

std::vector<Gts> all_upto(int n)
{
    std::vector<Gts> out;
    for (int k = 0; k <= n; ++k)
        for (auto& g : enumerate_gts(k))
            out.push_back(g);
    return out;
}

std::vector<PointFn> all_fns(int n, int m)
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

void from_report(Outcome& o, const PropertyReport& r)
{
    if (!r.ok())
        o.fail(r.id + ": " + std::to_string(r.attempted - r.passed) + " of " + std::to_string(r.attempted) +
               " failed; first: " + r.counterexample.value_or("?"));
}

std::string count(const char* what, long long n) { return std::to_string(n) + " " + what; }

// ---- criteria ----

Outcome representation_duality()
{
    Outcome o;
    const long long expected[] = {1, 2, 7, 61};
    long long total = 0;
    for (int n = 0; n <= 3; ++n) {
        auto lib = enumerate_gts(n);
        auto ref = oracle::all_gts(n);
        if (static_cast<long long>(lib.size()) != expected[n] || lib.size() != ref.size()) {
            o.fail("count mismatch on " + std::to_string(n) + " points");
            continue;
        }
        for (std::size_t i = 0; i < lib.size(); ++i) {
            const Gts& g = lib[i];
            if (fam(g) != ref[i])
                o.fail("enumeration differs from brute force on " + std::to_string(n) + " points");
            ClosureOp c = closure_op_from_gts(g);
            for (Subset a = 0; a <= g.full(); ++a)
                if (c(a) != oracle::closure(ref[i], n, a))
                    o.fail("closure differs from the closed-set oracle");
            if (!(gts_from_closure_op(c) == g))
                o.fail("opens -> closure -> opens is not the identity");
            if (closure_op_from_gts(gts_from_closure_op(c)).table() != c.table())
                o.fail("closure -> opens -> closure is not the identity");
            ++total;
        }
    }
    o.note(count("spaces, counts 1/2/7/61", total));
    return o;
}

Outcome lift_agreement()
{
    Outcome o;
    auto a = check_property("prop_3_2_vs_3_4");
    auto b = check_property("prop_3_3_vs_3_6");
    from_report(o, a);
    from_report(o, b);
    o.note(count("sources", a.attempted) + ", " + count("sinks", b.attempted));
    return o;
}

Outcome hull_iteration()
{
    Outcome o;
    for (int d = 2; d <= 4; ++d) {
        IterationTrace t = hull_trace(strong_structure_gamma(checks::hypercube_sink(d)), bit(0));
        if (t.stabilized_at != d)
            o.fail("dimension " + std::to_string(d) + " stabilized at " + std::to_string(t.stabilized_at));
        if (t.stages.size() != static_cast<std::size_t>(d + 1))
            o.fail("dimension " + std::to_string(d) + " has the wrong number of stages");
        for (auto [k, s] : t.stages) {
            oracle::Set ball = 0;
            for (int p = 0; p < (1 << d); ++p)
                if (std::popcount(static_cast<unsigned>(p)) <= k)
                    ball |= oracle::Set{1} << p;
            if (s != ball)
                o.fail("dimension " + std::to_string(d) + " stage " + std::to_string(k) + " is not the radius-k ball");
        }
    }
    o.note("dimensions 2, 3, 4 stabilize at 2, 3, 4");
    return o;
}

Outcome box_product_rule()
{
    Outcome o;
    auto small = all_upto(2);
    long long pairs = 0, bad = 0;
    std::string first;
    for (const auto& a : small)
        for (const auto& b : small) {
            ++pairs;
            if (csaszar_coincidence({a, b}) != csaszar_characterization({a, b})) {
                if (!bad++)
                    first = io::space_to_json(a).dump() + " x " + io::space_to_json(b).dump();
            }
        }
    if (bad)
        o.fail(std::to_string(bad) + " of " + std::to_string(pairs) +
               " pairs disagree (products coincide, rule says they differ); first: " + first);
    o.note(count("ordered factor pairs", pairs));
    return o;
}

Outcome separation_ladder()
{
    Outcome o;
    auto holds = [](const Gts& g, Axiom a) { return check_axiom(g, a).holds; };
    long long cases = 0;
    for (const auto& g : all_upto(3)) {
        auto f = fam(g);
        int n = g.size();
        if (holds(g, Axiom::T0) != oracle::t0(f, n) || holds(g, Axiom::T1) != oracle::t1(f, n) ||
            holds(g, Axiom::T2) != oracle::t2(f, n) || holds(g, Axiom::Regular) != oracle::regular(f, n) ||
            holds(g, Axiom::Normal) != oracle::normal(f, n))
            o.fail("axiom verdict differs from the word-for-word oracle");
        if (holds(g, Axiom::T4) && !holds(g, Axiom::T3_5))
            o.fail("T4 without T3.5");
        if (holds(g, Axiom::T3_5) && !holds(g, Axiom::T3))
            o.fail("T3.5 without T3");
        if (holds(g, Axiom::T2) && !holds(g, Axiom::T1))
            o.fail("T2 without T1");
        if (holds(g, Axiom::T1) && !holds(g, Axiom::T0))
            o.fail("T1 without T0");
        bool all_sep = true;
        for (Subset cl : g.closed_sets())
            for (int x = 0; x < n; ++x) {
                if (contains(cl, x))
                    continue;
                ++cases;
                bool truth = cr_oracle(g, x, cl);
                if (cr_separator(g, x, cl).has_value() != truth)
                    o.fail("fast decision disagrees with the search on " + std::to_string(n) + " points");
                all_sep = all_sep && truth;
            }
        if (holds(g, Axiom::CompletelyRegular) != all_sep)
            o.fail("completely regular verdict disagrees with the search");
    }
    std::mt19937_64 rng(2024);
    long long random = 0;
    while (random < 10000) {
        Gts g = random_base_gts(rng, 4, 5, 3.0);
        auto closed = g.closed_sets();
        Subset cl = closed[rng() % closed.size()];
        int x = static_cast<int>(rng() % g.size());
        if (contains(cl, x))
            continue;
        ++random;
        if (cr_separator(g, x, cl).has_value() != cr_oracle(g, x, cl))
            o.fail("fast decision disagrees with the search on a random instance");
    }
    o.note(count("exhaustive point/closed-set pairs", cases) + ", " + count("random", random));
    return o;
}

Outcome tychonoff()
{
    Outcome o;
    long long spaces = 0;
    for (const auto& g : all_upto(3)) {
        if (!check_axiom(g, Axiom::T3_5).holds)
            continue;
        ++spaces;
        EmbeddingCertificate c = tychonoff_embed(g);
        if (!c.verified())
            o.fail("certificate flags not all set: " + c.detail);
        std::size_t dims = c.index.size();
        // Independent re-verification from the coordinates alone.
        std::set<std::vector<int>> seen;
        for (int x = 0; x < g.size(); ++x) {
            std::vector<int> v;
            for (std::size_t a = 0; a < dims; ++a)
                v.push_back(c.coordinates[a][x]);
            seen.insert(v);
        }
        if (static_cast<int>(seen.size()) != g.size())
            o.fail("coordinates are not injective");
        oracle::Family base;
        for (std::size_t a = 0; a < dims; ++a) {
            oracle::Set zero = 0, one = 0;
            for (int x = 0; x < g.size(); ++x)
                (c.coordinates[a][x] == 0 ? zero : one) |= oracle::Set{1} << x;
            base.push_back(zero);
            base.push_back(one);
            base.push_back(zero | one);
        }
        if (union_fixpoint(base) != fam(g))
            o.fail("traced product opens differ from the input space");
        for (int a : c.reduced) {
            bool has0 = false, has1 = false;
            for (int x = 0; x < g.size(); ++x)
                (c.coordinates[a][x] == 0 ? has0 : has1) = true;
            if (!has0 || !has1)
                o.fail("image misses a cylinder of the reduced power");
        }
    }
    o.note(count("T3.5 spaces embedded and re-verified", spaces));
    return o;
}

Outcome normal_products_and_covers()
{
    Outcome o;
    auto a = check_property("prop_4_17");
    auto b = check_property("prop_4_18");
    from_report(o, a);
    from_report(o, b);
    long long pairs = 0;
    std::vector<Gts> normal;
    for (const auto& g : all_upto(2))
        if (oracle::normal(fam(g), g.size()))
            normal.push_back(g);
    for (const auto& x : normal)
        for (const auto& y : normal) {
            ++pairs;
            Gts p = product({x, y}).space;
            if (!oracle::normal(fam(p), p.size()))
                o.fail("a product of normal spaces is not normal by the oracle");
        }
    o.note(count("normal-product instances", a.attempted) + " (+" + count("oracle pairs", pairs) + "), " +
           count("compactness instances", b.attempted));
    return o;
}

Outcome chain_maps()
{
    Outcome o;
    long long maps = 0;
    auto order = [](int n) {
        oracle::Family rays;
        // Rays cut at a point of the chain: {x < a} and {x > a}.
        for (int a = 0; a < n; ++a) {
            rays.push_back(oracle::full(a));
            rays.push_back(oracle::full(n) & ~oracle::full(a + 1));
        }
        return union_fixpoint(rays);
    };
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            auto da = order(a), db = order(b);
            for (auto& f : all_fns(a, b)) {
                ++maps;
                bool up = true, down = true;
                for (int i = 0; i + 1 < a; ++i) {
                    up = up && f[i] <= f[i + 1];
                    down = down && f[i] >= f[i + 1];
                }
                bool rule = !(a == 1 && b > 1) && (up || down);
                bool cont = oracle::continuous(da, db, f);
                if (cont != rule)
                    o.fail("continuity differs from the characterization");
                GtsMap m(order_gt(GroundSet::range(a)), order_gt(GroundSet::range(b)), f);
                if (is_continuous(m).holds != cont || prop415_characterization(f, a, b) != rule)
                    o.fail("library verdict differs from the oracle");
            }
        }
    o.note(count("maps between chains of sizes 1..4", maps));
    return o;
}

// κ(μ,k) read straight from the definition.
oracle::Family kappa_oracle(const oracle::Family& opens, int n, const std::function<oracle::Set(oracle::Set)>& k)
{
    oracle::Family out;
    for (oracle::Set a = 0; a <= oracle::full(n); ++a) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            if (!oracle::in(a, x))
                continue;
            bool found = false;
            for (oracle::Set m : opens)
                found = found || (oracle::in(m, x) && oracle::sub(k(m), a));
            ok = found;
        }
        if (ok)
            out.push_back(a);
    }
    return out;
}

std::vector<Enlargement> enlargements(int n)
{
    std::vector<Enlargement> out;
    for (const auto& g : enumerate_gts(n)) {
        std::vector<std::vector<Subset>> choice;
        for (Subset m : g.opens()) {
            std::vector<Subset> c;
            for (Subset s = 0; s <= g.full(); ++s)
                if ((s & m) == m)
                    c.push_back(s);
            choice.push_back(c);
        }
        std::vector<std::size_t> idx(choice.size(), 0);
        for (;;) {
            std::vector<Subset> t;
            for (std::size_t i = 0; i < idx.size(); ++i)
                t.push_back(choice[i][idx[i]]);
            out.emplace_back(g, t);
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == choice[i].size())
                idx[i++] = 0;
            if (i == idx.size())
                break;
        }
    }
    return out;
}

Outcome section_five()
{
    Outcome o;
    auto r51 = check_property("prop_5_1");
    from_report(o, r51);

    MonotoneMap cx = prop51_counterexample_gamma();
    oracle::Set x0 = 1;
    oracle::Family small, trace;
    for (oracle::Set a = 0; a <= x0; ++a)
        if (oracle::sub(a, cx(a) & x0))
            small.push_back(a);
    for (oracle::Set a = 0; a <= 3; ++a)
        if (oracle::sub(a, cx(a)))
            trace.push_back(a & x0);
    trace = oracle::sorted(trace);
    if (small != oracle::Family{0} || trace != oracle::Family{0, 1})
        o.fail("built-in counterexample does not give {∅} strictly inside P(X₀)");
    bool eq = true;
    if (!check_prop51_subspace(cx, 1, &eq).ok() || eq)
        o.fail("library does not reproduce the strict inclusion");

    long long sums = 0, wrong = 0;
    std::string first;
    std::vector<std::vector<Enlargement>> by(3);
    for (int n = 0; n <= 2; ++n)
        by[n] = enlargements(n);
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (const auto& ka : by[a])
                for (const auto& kb : by[b]) {
                    ++sums;
                    int n = a + b;
                    oracle::Family opens;
                    for (Subset m1 : ka.base.opens())
                        for (Subset m2 : kb.base.opens())
                            opens.push_back(m1 | (m2 << a));
                    opens = oracle::sorted(opens);
                    auto ksum = [&](oracle::Set m) { return ka(m & oracle::full(a)) | (kb(m >> a) << a); };
                    oracle::Family lhs = kappa_oracle(opens, n, ksum);
                    oracle::Family k1 = kappa_oracle(fam(ka.base), a, [&](oracle::Set m) { return ka(m); });
                    oracle::Family k2 = kappa_oracle(fam(kb.base), b, [&](oracle::Set m) { return kb(m); });
                    oracle::Family rhs;
                    for (auto s1 : k1)
                        for (auto s2 : k2)
                            rhs.push_back(s1 | (s2 << a));
                    rhs = oracle::sorted(rhs);
                    bool equal = lhs == rhs;
                    if (equal != prop52_sum_criterion({ka, kb})) {
                        if (!wrong++)
                            first = "parts of size " + std::to_string(a) + " and " + std::to_string(b) +
                                    (equal ? ": equality holds, criterion predicts strict inclusion"
                                           : ": strict inclusion, criterion predicts equality");
                    }
                }
    if (wrong)
        o.fail("enlargement sum criterion wrong on " + std::to_string(wrong) + " of " + std::to_string(sums) +
               " two-part sums; first: " + first);

    long long subs = 0, vacuous = 0;
    for (int n = 0; n <= 3; ++n)
        for (const auto& k : enlargements(n))
            for (Subset s = 0; s <= k.base.full(); ++s) {
                if (!k.base.is_open(s))
                    continue;
                ++subs;
                try {
                    if (!check_prop52_subspace(k, s).ok())
                        o.fail("enlargement subspace inclusion falsified");
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::Precondition)
                        throw;
                    ++vacuous;
                }
            }
    o.note(count("monotone-map instances", r51.attempted) + ", " + count("enlargement sums", sums) + ", " +
           count("subspace instances", subs) + " (" + std::to_string(vacuous) + " outside the hypotheses)");
    return o;
}

Outcome dense_pair()
{
    Outcome o;
    from_report(o, check_property("example_4_20"));
    for (int n = 1; n <= 4; ++n) {
        oracle::Family cyl;
        int pts = 1 << n;
        for (int a = 0; a < n; ++a) {
            oracle::Set zero = 0;
            for (int p = 0; p < pts; ++p)
                if (!((p >> a) & 1))
                    zero |= oracle::Set{1} << p;
            cyl.push_back(zero);
            cyl.push_back(oracle::full(pts) & ~zero);
        }
        auto opens = union_fixpoint(cyl);
        oracle::Set two = 1 | (oracle::Set{1} << (pts - 1));
        if (oracle::closure(opens, pts, two) != oracle::full(pts))
            o.fail("two points not dense in the power of size " + std::to_string(n));
    }
    o.note("powers 1..4");
    return o;
}

Outcome urysohn()
{
    Outcome o;
    oracle::Family two{0, 1, 2, 3};
    long long cases = 0;
    for (const auto& g : all_upto(3)) {
        if (!oracle::normal(fam(g), g.size()))
            continue;
        for (Subset f1 : g.closed_sets())
            for (Subset f2 : g.closed_sets()) {
                if (!f1 || !f2 || (f1 & f2))
                    continue;
                ++cases;
                try {
                    GtsMap u = urysohn_witness(g, f1, f2);
                    if (!oracle::continuous(fam(g), two, u.table))
                        o.fail("witness not continuous");
                    for (int x = 0; x < g.size(); ++x) {
                        if (contains(f1, x) && u.table[x] != 0)
                            o.fail("witness not 0 on the first set");
                        if (contains(f2, x) && u.table[x] != 1)
                            o.fail("witness not 1 on the second set");
                    }
                } catch (const Error& e) {
                    o.fail(std::string("no witness: ") + e.what());
                }
            }
    }
    from_report(o, check_property("thm_4_3_witness"));
    o.note(count("disjoint closed pairs in normal spaces", cases));
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion all[] = {
        {1, "representation duality", representation_duality},
        {2, "lift agreement", lift_agreement},
        {3, "hull iteration on the hypercube", hull_iteration},
        {4, "box product coincidence rule", box_product_rule},
        {5, "separation ladder and complete regularity", separation_ladder},
        {6, "embedding into a cube", tychonoff},
        {7, "normal products and covers", normal_products_and_covers},
        {8, "continuity between chains", chain_maps},
        {9, "monotone maps and enlargements", section_five},
        {10, "dense two-point subset", dense_pair},
        {11, "Urysohn witnesses", urysohn},
    };
    int failures = 0;
    for (const auto& c : all) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %-42s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, s, o.detail.c_str());
        std::fflush(stdout);
        failures += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(all)) - failures, std::size(all));
    return failures;
}
