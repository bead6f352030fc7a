#include "gentop/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "checks.hpp"

namespace gentop {

using checks::Failure;
using nlohmann::json;

std::vector<Gts> enumerate_gts(int n)
{
    if (n < 0 || n > 3)
        fail(ErrorKind::Resource, "enumeration is limited to grounds of at most 3 points");
    GroundSet ground = GroundSet::range(n);
    int subsets = 1 << n;
    std::vector<Gts> out;
    // Families containing ∅: choose any set of the nonempty subsets.
    for (std::uint32_t pick = 0; pick < (1u << (subsets - 1)); ++pick) {
        SetFamily fam{0};
        for (int s = 1; s < subsets; ++s)
            if ((pick >> (s - 1)) & 1u)
                fam.push_back(static_cast<Subset>(s));
        bool closed = true;
        for (std::size_t i = 0; i < fam.size() && closed; ++i)
            for (std::size_t j = i + 1; j < fam.size() && closed; ++j)
                closed = family_contains(fam, fam[i] | fam[j]);
        if (closed)
            out.push_back(Gts::trusted(ground, fam));
    }
    std::sort(out.begin(), out.end(), [](const Gts& a, const Gts& b) { return a.opens() < b.opens(); });
    return out;
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index)
{
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Gts random_base_gts(std::mt19937_64& rng, int min_ground, int max_ground, double density)
{
    int n = std::uniform_int_distribution<int>(min_ground, max_ground)(rng);
    int members = density > 0 ? std::poisson_distribution<int>(density)(rng) : 0;
    SetFamily base;
    std::uniform_int_distribution<Subset> pick(0, full_set(n));
    for (int i = 0; i < members; ++i)
        base.push_back(pick(rng));
    canonicalize(base);
    return Gts::from_base(GroundSet::range(n), base);
}

bool passes_filter(const Gts& g, const std::string& filter)
{
    if (filter == "strong")
        return g.strong();
    if (filter == "nonstrong")
        return !g.strong();
    std::string f = filter;
    std::string lower = f;
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    if (lower == "normal")
        f = "Normal";
    else if (lower == "regular")
        f = "Regular";
    else if (lower == "cr" || lower == "completelyregular")
        f = "CompletelyRegular";
    else if (lower == "t3.5" || lower == "t3_5")
        f = "T3_5";
    return check_axiom(g, parse_axiom(f)).holds;
}

InstanceStream::InstanceStream(InstanceSpec spec) : spec_(std::move(spec))
{
    if (spec_.min_ground < 0 || spec_.max_ground < spec_.min_ground)
        fail(ErrorKind::Validation, "instance spec has an empty ground-size range");
    check_cap(spec_.max_ground, "instance spec");
    for (const auto& f : spec_.filters)
        if (f != "strong" && f != "nonstrong")
            passes_filter(Gts(), f); // rejects unknown names early
}

Gts InstanceStream::next()
{
    for (int attempt = 0; attempt < spec_.reject_budget; ++attempt) {
        std::mt19937_64 rng(split_seed(spec_.seed, index_++));
        Gts g = random_base_gts(rng, spec_.min_ground, spec_.max_ground, spec_.density);
        bool ok = true;
        for (const auto& f : spec_.filters)
            if (!passes_filter(g, f)) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
    std::string names;
    for (const auto& f : spec_.filters)
        names += (names.empty() ? "" : ",") + f;
    fail(ErrorKind::Resource, "rejection budget exhausted for filter '" + names + "'");
}

Gts random_gts(const InstanceSpec& spec) { return InstanceStream(spec).next(); }

namespace {

// ---- enumeration helpers ----

std::vector<PointFn> all_fns(int n, int m)
{
    std::vector<PointFn> out;
    if (m == 0)
        return n == 0 ? std::vector<PointFn>{PointFn{}} : out;
    long long total = 1;
    for (int i = 0; i < n; ++i)
        total *= m;
    for (long long c = 0; c < total; ++c) {
        PointFn f(n);
        long long r = c;
        for (int i = 0; i < n; ++i) {
            f[i] = static_cast<int>(r % m);
            r /= m;
        }
        out.push_back(std::move(f));
    }
    return out;
}

bool is_surjective(const PointFn& f, int m)
{
    Subset s = 0;
    for (int y : f)
        s |= bit(y);
    return s == full_set(m);
}

std::vector<Gts> all_gts_upto(int n)
{
    std::vector<Gts> out;
    for (int k = 0; k <= n; ++k) {
        auto v = enumerate_gts(k);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

// Truth tables (over 2^n inputs) of monotone Boolean functions.
std::vector<std::uint32_t> monotone_boolean(int n)
{
    std::vector<std::uint32_t> out;
    int inputs = 1 << n;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << inputs); ++t) {
        bool mono = true;
        for (int a = 0; a < inputs && mono; ++a)
            for (int i = 0; i < n && mono; ++i)
                if (!(a & (1 << i)) && ((t >> a) & 1) && !((t >> (a | (1 << i))) & 1))
                    mono = false;
        if (mono)
            out.push_back(static_cast<std::uint32_t>(t));
    }
    return out;
}

// All monotone maps P(n) -> P(n) as raw tables.
std::vector<std::vector<Subset>> monotone_tables(int n)
{
    auto mb = monotone_boolean(n);
    std::vector<std::vector<Subset>> out;
    std::size_t total = 1;
    for (int i = 0; i < n; ++i)
        total *= mb.size();
    for (std::size_t c = 0; c < total; ++c) {
        std::vector<Subset> t(std::size_t{1} << n, 0);
        std::size_t r = c;
        for (int i = 0; i < n; ++i) {
            std::uint32_t f = mb[r % mb.size()];
            r /= mb.size();
            for (std::size_t a = 0; a < t.size(); ++a)
                if ((f >> a) & 1)
                    t[a] |= bit(i);
        }
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<Enlargement> all_enlargements(const Gts& g)
{
    std::vector<Enlargement> out;
    const auto& o = g.opens();
    std::vector<std::vector<Subset>> choices;
    for (Subset m : o) {
        std::vector<Subset> c;
        Subset rest = g.full() & ~m;
        for (Subset s = rest;; s = (s - 1) & rest) {
            c.push_back(m | s);
            if (s == 0)
                break;
        }
        std::reverse(c.begin(), c.end());
        choices.push_back(std::move(c));
    }
    std::vector<std::size_t> idx(o.size(), 0);
    for (;;) {
        std::vector<Subset> t(o.size());
        for (std::size_t i = 0; i < o.size(); ++i)
            t[i] = choices[i][idx[i]];
        out.emplace_back(g, std::move(t));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i].size())
            idx[i++] = 0;
        if (i == idx.size())
            break;
    }
    return out;
}

std::vector<Gns> all_gns(int n)
{
    GroundSet ground = GroundSet::range(n);
    // Per point: every family of subsets containing the point.
    std::vector<std::vector<SetFamily>> per(n);
    for (int x = 0; x < n; ++x) {
        std::vector<Subset> around;
        for (Subset s = 0; s <= full_set(n); ++s)
            if (contains(s, x))
                around.push_back(s);
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << around.size()); ++pick) {
            SetFamily f;
            for (std::size_t i = 0; i < around.size(); ++i)
                if ((pick >> i) & 1)
                    f.push_back(around[i]);
            per[x].push_back(f);
        }
    }
    std::vector<Gns> out;
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::vector<SetFamily> nb(n);
        for (int x = 0; x < n; ++x)
            nb[x] = per[x][idx[x]];
        out.emplace_back(ground, nb);
        int i = 0;
        while (i < n && ++idx[i] == per[i].size())
            idx[i++] = 0;
        if (i == n)
            break;
    }
    return out;
}

// ---- random helpers ----

PointFn random_fn(std::mt19937_64& rng, int n, int m)
{
    PointFn f(n);
    for (auto& y : f)
        y = std::uniform_int_distribution<int>(0, m - 1)(rng);
    return f;
}

Gts random_space(std::mt19937_64& rng, int lo, int hi, double density = 3.0)
{
    return random_base_gts(rng, lo, hi, density);
}

Gts random_filtered(std::mt19937_64& rng, int lo, int hi, Axiom a, int budget = 5000)
{
    for (int i = 0; i < budget; ++i) {
        Gts g = random_space(rng, lo, hi);
        if (check_axiom(g, a).holds)
            return g;
    }
    fail(ErrorKind::Resource, "rejection budget exhausted for filter '" + axiom_name(a) + "'");
}

// Spaces generated by clopen pairs: a source of completely regular instances.
Gts random_clopen_space(std::mt19937_64& rng, int lo, int hi)
{
    int n = std::uniform_int_distribution<int>(lo, hi)(rng);
    int k = 1 + std::poisson_distribution<int>(2.0)(rng);
    SetFamily base;
    std::uniform_int_distribution<Subset> pick(0, full_set(n));
    for (int i = 0; i < k; ++i) {
        Subset d = pick(rng);
        base.push_back(d);
        base.push_back(full_set(n) & ~d);
    }
    canonicalize(base);
    return Gts::from_base(GroundSet::range(n), base);
}

MonotoneMap random_monotone(std::mt19937_64& rng, int n)
{
    std::vector<Subset> gen(std::size_t{1} << n, 0);
    std::uniform_int_distribution<Subset> pick(0, full_set(n));
    std::bernoulli_distribution on(0.3);
    for (auto& g : gen)
        if (on(rng))
            g = pick(rng);
    std::vector<Subset> t(gen.size(), 0);
    for (Subset a = 0; a < t.size(); ++a)
        for (Subset b = a;; b = (b - 1) & a) {
            t[a] |= gen[b];
            if (b == 0)
                break;
        }
    return MonotoneMap(GroundSet::range(n), std::move(t));
}

Enlargement random_enlargement(std::mt19937_64& rng, int lo, int hi)
{
    Gts g = random_space(rng, lo, hi);
    std::uniform_int_distribution<Subset> pick(0, g.full());
    std::bernoulli_distribution grow(0.5);
    std::vector<Subset> t;
    for (Subset m : g.opens())
        t.push_back(grow(rng) ? (m | pick(rng)) : m);
    return Enlargement(g, std::move(t));
}

Gns random_gns(std::mt19937_64& rng, int lo, int hi)
{
    int n = std::uniform_int_distribution<int>(lo, hi)(rng);
    std::uniform_int_distribution<Subset> pick(0, full_set(n));
    std::vector<SetFamily> nb(n);
    for (int x = 0; x < n; ++x) {
        int k = std::poisson_distribution<int>(2.0)(rng);
        for (int i = 0; i < k; ++i)
            nb[x].push_back(pick(rng) | bit(x));
    }
    return Gns(GroundSet::range(n), nb);
}

// ---- sweep bookkeeping ----

struct Sweep {
    PropertyReport& r;

    template <class Check, class Inst>
    void step(Check&& check, Inst&& inst)
    {
        ++r.attempted;
        Failure f = check();
        if (!f) {
            ++r.passed;
            return;
        }
        if (!r.counterexample) {
            json i = inst();
            r.counterexample = json{{"property", r.id}, {"instance", i}, {"witness", *f}}.dump();
        }
    }
};

json with_kind(const char* kind, json j)
{
    j["kind"] = kind;
    return j;
}

json space_js(const Gts& g) { return io::space_to_json(g); }

std::string n_str(long long n) { return std::to_string(n); }

int pick_exhaustive(const RunOptions& o, int dflt) { return o.exhaustive >= 0 ? o.exhaustive : dflt; }
long long pick_trials(const RunOptions& o, long long dflt) { return o.trials >= 0 ? o.trials : dflt; }

// ---- properties ----

void prop_3_2_vs_3_4(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    long long count = 0;
    for (int n = 0; n <= e; ++n) {
        GroundSet carrier = GroundSet::range(n);
        std::vector<SourceLeg> legs;
        for (const auto& y : all_gts_upto(e))
            for (auto& f : all_fns(n, y.size()))
                legs.push_back({f, y});
        std::vector<Source> sources{{carrier, {}}};
        for (std::size_t i = 0; i < legs.size(); ++i) {
            sources.push_back({carrier, {legs[i]}});
            for (std::size_t j = i; j < legs.size(); ++j)
                sources.push_back({carrier, {legs[i], legs[j]}});
        }
        for (const auto& src : sources) {
            ++count;
            s.step([&] { return checks::weak_lift(src); },
                   [&] { return with_kind("weak_lift", {{"source", checks::source_json(src)}}); });
        }
    }
    r.certificate = "all sources with carrier and leg codomains of at most " + n_str(e) +
                    " points and at most 2 legs (unordered): " + n_str(count) + " instances";
    for (long long t = 0; t < pick_trials(o, 1000); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        Source src{GroundSet::range(4), {}};
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < k; ++i) {
            Gts y = random_space(rng, 1, 4);
            src.legs.push_back({random_fn(rng, 4, y.size()), y});
        }
        s.step([&] { return checks::weak_lift(src); },
               [&] { return with_kind("weak_lift", {{"source", checks::source_json(src)}}); });
    }
}

void prop_3_3_vs_3_6(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    long long count = 0;
    for (int n = 0; n <= e; ++n) {
        GroundSet carrier = GroundSet::range(n);
        std::vector<SinkLeg> legs;
        for (const auto& y : all_gts_upto(e))
            for (auto& f : all_fns(y.size(), n))
                legs.push_back({y, f});
        std::vector<Sink> sinks{{carrier, {}}};
        for (std::size_t i = 0; i < legs.size(); ++i) {
            sinks.push_back({carrier, {legs[i]}});
            for (std::size_t j = i; j < legs.size(); ++j)
                sinks.push_back({carrier, {legs[i], legs[j]}});
        }
        for (const auto& snk : sinks) {
            ++count;
            s.step([&] { return checks::strong_lift(snk); },
                   [&] { return with_kind("strong_lift", {{"sink", checks::sink_json(snk)}}); });
        }
    }
    r.certificate = "all sinks with carrier and leg domains of at most " + n_str(e) +
                    " points and at most 2 legs (unordered): " + n_str(count) + " instances";
    for (long long t = 0; t < pick_trials(o, 1000); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        Sink snk{GroundSet::range(4), {}};
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int i = 0; i < k; ++i) {
            Gts y = random_space(rng, 1, 4);
            snk.legs.push_back({y, random_fn(rng, y.size(), 4)});
        }
        s.step([&] { return checks::strong_lift(snk); },
               [&] { return with_kind("strong_lift", {{"sink", checks::sink_json(snk)}}); });
    }
}

void remark_3_7_steps(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::clamp(pick_exhaustive(o, 4), 2, 4);
    for (int d = 2; d <= e; ++d)
        s.step([&] { return checks::hull_cube(d); }, [&] { return with_kind("hull_cube", {{"dimension", d}}); });
    r.certificate = "hypercube dimensions 2.." + n_str(e);
}

void cor_3_14_lattice(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    long long count = 0;
    auto run = [&](const GroundSet& g, const std::vector<Gts>& gs) {
        ++count;
        s.step([&] { return checks::lattice(g, gs); },
               [&] { return with_kind("lattice", {{"ground", g.labels}, {"spaces", checks::spaces_json(gs)}}); });
    };
    for (int n = 0; n <= e; ++n) {
        auto all = enumerate_gts(n);
        GroundSet g = GroundSet::range(n);
        run(g, {});
        for (std::size_t i = 0; i < all.size(); ++i) {
            run(g, {all[i]});
            for (std::size_t j = i; j < all.size(); ++j)
                run(g, {all[i], all[j]});
        }
    }
    r.certificate = "empty, single and all unordered pairs of GTs on grounds 0.." + n_str(e) + ": " + n_str(count);
    for (long long t = 0; t < pick_trials(o, 1000); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        int n = std::uniform_int_distribution<int>(4, 5)(rng);
        int k = std::uniform_int_distribution<int>(2, 4)(rng);
        std::vector<Gts> gs;
        for (int i = 0; i < k; ++i)
            gs.push_back(random_space(rng, n, n));
        run(GroundSet::range(n), gs);
    }
}

void remark_3_12_coincidence(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 2), 3);
    auto all = all_gts_upto(e);
    long long count = 0;
    auto run = [&](const std::vector<Gts>& fs) {
        ++count;
        s.step([&] { return checks::csaszar(fs); },
               [&] { return with_kind("csaszar", {{"factors", checks::spaces_json(fs)}}); });
    };
    run({});
    for (const auto& a : all) {
        run({a});
        for (const auto& b : all)
            run({a, b});
    }
    r.certificate = "empty, single and all ordered pairs of factors on grounds 0.." + n_str(e) + ": " + n_str(count);
    for (long long t = 0; t < pick_trials(o, 300); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        std::vector<Gts> fs;
        for (int i = 0; i < 3; ++i)
            fs.push_back(random_space(rng, 1, 2));
        run(fs);
    }
}

const std::vector<Axiom> kHereditary = {Axiom::T0, Axiom::T1, Axiom::T2, Axiom::Regular,
                                        Axiom::T3, Axiom::CompletelyRegular, Axiom::T3_5};

void prop_4_7_heredity(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    auto all = all_gts_upto(e);
    long long count = 0;
    for (Axiom a : kHereditary)
        for (const auto& g : all)
            for (Subset x0 = 0; x0 <= g.full(); ++x0) {
                ++count;
                s.step([&] { return checks::heredity_subspace(a, g, x0); },
                       [&] {
                           return with_kind("heredity_subspace", {{"axiom", axiom_name(a)},
                                                                  {"space", space_js(g)},
                                                                  {"subset", io::subset_to_json(g.ground(), x0)}});
                       });
            }
    auto small = all_gts_upto(std::min(e, 2));
    for (Axiom a : kHereditary)
        for (const auto& x : small)
            for (const auto& y : small) {
                ++count;
                std::vector<Gts> fs{x, y};
                s.step([&] { return checks::heredity_product(a, fs); },
                       [&] {
                           return with_kind("heredity_product",
                                            {{"axiom", axiom_name(a)}, {"factors", checks::spaces_json(fs)}});
                       });
            }
    r.certificate = "subspaces of all GTs on grounds 0.." + n_str(e) + ", products of all pairs on grounds 0.." +
                    n_str(std::min(e, 2)) + ", 7 axioms: " + n_str(count);
    for (long long t = 0; t < pick_trials(o, 200); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        Axiom a = kHereditary[t % kHereditary.size()];
        std::vector<Gts> fs;
        try {
            fs = {random_filtered(rng, 1, 3, a), random_filtered(rng, 1, 3, a)};
        } catch (const Error&) {
            continue;
        }
        s.step([&] { return checks::heredity_product(a, fs); },
               [&] {
                   return with_kind("heredity_product", {{"axiom", axiom_name(a)}, {"factors", checks::spaces_json(fs)}});
               });
        Gts g = random_filtered(rng, 3, 5, a);
        Subset x0 = std::uniform_int_distribution<Subset>(0, g.full())(rng);
        s.step([&] { return checks::heredity_subspace(a, g, x0); },
               [&] {
                   return with_kind("heredity_subspace", {{"axiom", axiom_name(a)},
                                                          {"space", space_js(g)},
                                                          {"subset", io::subset_to_json(g.ground(), x0)}});
               });
    }
}

json legs_json(const std::vector<GtsMap>& legs)
{
    json a = json::array();
    for (const auto& l : legs)
        a.push_back(io::map_to_json(l));
    return a;
}

void lemma_4_9(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    auto targets = all_gts_upto(2);
    long long count = 0;
    for (const auto& g : all_gts_upto(e)) {
        std::vector<GtsMap> legs;
        for (const auto& y : targets)
            for (auto& f : all_fns(g.size(), y.size())) {
                GtsMap m(g, y, f);
                if (is_continuous(m))
                    legs.push_back(m);
            }
        auto run = [&](const std::vector<GtsMap>& src) {
            ++count;
            s.step([&] { return checks::embedding_lemma(g, src); },
                   [&] { return with_kind("embedding_lemma", {{"space", space_js(g)}, {"legs", legs_json(src)}}); });
        };
        for (std::size_t i = 0; i < legs.size(); ++i) {
            run({legs[i]});
            for (std::size_t j = i + 1; j < legs.size(); ++j)
                run({legs[i], legs[j]});
        }
    }
    r.certificate = "all spaces on grounds 0.." + n_str(e) +
                    " with every source of 1 or 2 distinct continuous legs into spaces of at most 2 points: " +
                    n_str(count);
    for (long long t = 0; t < pick_trials(o, 500); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        Gts g = random_space(rng, 2, 4);
        std::vector<GtsMap> legs;
        int k = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int tries = 0; tries < 200 && static_cast<int>(legs.size()) < k; ++tries) {
            Gts y = random_space(rng, 1, 3);
            GtsMap m(g, y, random_fn(rng, g.size(), y.size()));
            if (is_continuous(m))
                legs.push_back(m);
        }
        if (legs.empty())
            continue;
        s.step([&] { return checks::embedding_lemma(g, legs); },
               [&] { return with_kind("embedding_lemma", {{"space", space_js(g)}, {"legs", legs_json(legs)}}); });
    }
}

void prop_4_11_universality(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    std::vector<Gts> t0;
    for (const auto& z : all_gts_upto(3))
        if (check_axiom(z, Axiom::T0).holds)
            t0.push_back(z);
    long long count = 0;
    for (const auto& g : all_gts_upto(e))
        for (const auto& z : t0)
            for (auto& f : all_fns(g.size(), z.size())) {
                if (!is_continuous(GtsMap(g, z, f)))
                    continue;
                ++count;
                s.step([&] { return checks::t0_universality(g, z, f); },
                       [&] {
                           return with_kind("t0_universality",
                                            {{"space", space_js(g)}, {"target", space_js(z)}, {"fn", f}});
                       });
            }
    r.certificate = "every continuous map from a space on grounds 0.." + n_str(e) +
                    " into every T0 space on at most 3 points: " + n_str(count);
    for (long long t = 0; t < pick_trials(o, 300); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        Gts g = random_space(rng, 3, 5);
        Gts z = random_filtered(rng, 1, 3, Axiom::T0);
        PointFn f = random_fn(rng, g.size(), z.size());
        if (!is_continuous(GtsMap(g, z, f)))
            continue;
        s.step([&] { return checks::t0_universality(g, z, f); },
               [&] { return with_kind("t0_universality", {{"space", space_js(g)}, {"target", space_js(z)}, {"fn", f}}); });
    }
}

void thm_4_12(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    long long count = 0;
    for (const auto& g : all_gts_upto(e)) {
        if (!check_axiom(g, Axiom::T3_5).holds)
            continue;
        ++count;
        s.step([&] { return checks::tychonoff(g); }, [&] { return with_kind("tychonoff", {{"space", space_js(g)}}); });
    }
    r.certificate = "every T3.5 space on grounds 0.." + n_str(e) + ": " + n_str(count);
    for (long long t = 0; t < pick_trials(o, 200); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        Gts g = random_clopen_space(rng, 4, 5);
        if (!check_axiom(g, Axiom::T3_5).holds)
            continue;
        s.step([&] { return checks::tychonoff(g); }, [&] { return with_kind("tychonoff", {{"space", space_js(g)}}); });
    }
}

void prop_4_15(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 4), 5);
    long long count = 0;
    for (int a = 0; a <= e; ++a)
        for (int b = 0; b <= e; ++b)
            for (auto& f : all_fns(a, b)) {
                ++count;
                s.step([&] { return checks::order_map(a, b, f); },
                       [&] { return with_kind("order_map", {{"dom_size", a}, {"cod_size", b}, {"fn", f}}); });
            }
    r.certificate = "every map between chains of sizes 0.." + n_str(e) + ": " + n_str(count);
}

void prop_4_17(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 2), 3);
    std::vector<Gts> normal;
    for (const auto& g : all_gts_upto(e))
        if (check_axiom(g, Axiom::Normal).holds)
            normal.push_back(g);
    long long count = 0;
    for (const auto& a : normal)
        for (const auto& b : normal) {
            if (a.size() * b.size() > ground_cap())
                continue;
            ++count;
            std::vector<Gts> fs{a, b};
            s.step([&] { return checks::normal_product(fs); },
                   [&] { return with_kind("normal_product", {{"factors", checks::spaces_json(fs)}}); });
        }
    r.certificate = "all ordered pairs of normal spaces on grounds 0.." + n_str(e) + ": " + n_str(count);
    for (long long t = 0; t < pick_trials(o, 1000); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        std::vector<Gts> fs;
        int k = (t % 4 == 3) ? 3 : 2;
        for (int i = 0; i < k; ++i)
            fs.push_back(random_filtered(rng, 1, k == 3 ? 2 : 3, Axiom::Normal));
        s.step([&] { return checks::normal_product(fs); },
               [&] { return with_kind("normal_product", {{"factors", checks::spaces_json(fs)}}); });
    }
}

void prop_4_18(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    long long count = 0;
    for (const auto& g : all_gts_upto(e)) {
        for (int budget = 1; budget <= 4; ++budget) {
            for (int m = 0; m <= g.size(); ++m)
                for (auto& q : all_fns(g.size(), m)) {
                    if (!is_surjective(q, m))
                        continue;
                    ++count;
                    s.step([&] { return checks::quotient_compact(g, m, q, budget); },
                           [&] {
                               return with_kind("quotient_compact", {{"space", space_js(g)},
                                                                     {"target_size", m},
                                                                     {"fn", q},
                                                                     {"budget", budget}});
                           });
                }
            for (Subset c : g.closed_sets()) {
                ++count;
                s.step([&] { return checks::closed_compact(g, c, budget); },
                       [&] {
                           return with_kind("closed_compact", {{"space", space_js(g)},
                                                               {"subset", io::subset_to_json(g.ground(), c)},
                                                               {"budget", budget}});
                       });
            }
        }
    }
    r.certificate = "surjective images and closed subspaces of all spaces on grounds 0.." + n_str(e) +
                    " for budgets 1..4: " + n_str(count);
    for (long long t = 0; t < pick_trials(o, 500); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Gts> fs;
        for (int i = 0; i < k; ++i)
            fs.push_back(random_filtered(rng, 1, k == 3 ? 2 : 3, Axiom::T0));
        bool strong = std::all_of(fs.begin(), fs.end(), [](const Gts& f) { return f.strong(); });
        if (!strong)
            continue;
        ProductGts p = product(fs);
        // Random cylinder unions, then extra cylinders until they cover.
        std::vector<CylinderUnion> members;
        int nm = std::uniform_int_distribution<int>(1, 5)(rng);
        auto random_cyl = [&] {
            int a = std::uniform_int_distribution<int>(0, k - 1)(rng);
            const auto& op = fs[a].opens();
            return std::make_pair(a, op[std::uniform_int_distribution<std::size_t>(0, op.size() - 1)(rng)]);
        };
        for (int i = 0; i < nm; ++i) {
            CylinderUnion u;
            int nc = std::uniform_int_distribution<int>(1, 3)(rng);
            for (int c = 0; c < nc; ++c)
                u.push_back(random_cyl());
            members.push_back(u);
        }
        for (int guard = 0; guard < 64; ++guard) {
            Subset cov = 0;
            for (const auto& u : members)
                cov |= cylinder_union_set(p, u);
            if (cov == p.space.full())
                break;
            members.push_back({random_cyl()});
        }
        Subset cov = 0;
        for (const auto& u : members)
            cov |= cylinder_union_set(p, u);
        if (cov != p.space.full())
            continue;
        s.step([&] { return checks::product_subcover(fs, members); },
               [&] {
                   return with_kind("product_subcover",
                                    {{"factors", checks::spaces_json(fs)}, {"members", checks::cylinders_json(fs, members)}});
               });
        Gts g = random_space(rng, 4, 5);
        int m = std::uniform_int_distribution<int>(1, g.size())(rng);
        PointFn q = random_fn(rng, g.size(), m);
        for (int i = 0; i < m; ++i)
            q[i] = i; // surjective
        std::shuffle(q.begin(), q.end(), rng);
        int budget = std::uniform_int_distribution<int>(1, 5)(rng);
        s.step([&] { return checks::quotient_compact(g, m, q, budget); },
               [&] {
                   return with_kind("quotient_compact",
                                    {{"space", space_js(g)}, {"target_size", m}, {"fn", q}, {"budget", budget}});
               });
        auto closed = g.closed_sets();
        Subset c = closed[std::uniform_int_distribution<std::size_t>(0, closed.size() - 1)(rng)];
        s.step([&] { return checks::closed_compact(g, c, budget); },
               [&] {
                   return with_kind("closed_compact", {{"space", space_js(g)},
                                                       {"subset", io::subset_to_json(g.ground(), c)},
                                                       {"budget", budget}});
               });
    }
}

void prop_4_19(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    long long count = 0;
    for (const auto& g : all_gts_upto(e)) {
        if (!check_axiom(g, Axiom::T3_5).holds)
            continue;
        ++count;
        s.step([&] { return checks::dense_extension(g); },
               [&] { return with_kind("dense_extension", {{"space", space_js(g)}}); });
    }
    r.certificate = "every T3.5 space on grounds 0.." + n_str(e) + ": " + n_str(count);
    for (long long t = 0; t < pick_trials(o, 100); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        Gts g = random_clopen_space(rng, 4, 5);
        if (!check_axiom(g, Axiom::T3_5).holds)
            continue;
        s.step([&] { return checks::dense_extension(g); },
               [&] { return with_kind("dense_extension", {{"space", space_js(g)}}); });
    }
}

void example_4_20(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::clamp(pick_exhaustive(o, 4), 1, 4);
    for (int n = 1; n <= e; ++n)
        s.step([&] { return checks::dense_two(n); }, [&] { return with_kind("dense_two_points", {{"n", n}}); });
    r.certificate = "powers 1.." + n_str(e);
}

void thm_4_3_witness(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    long long count = 0;
    auto run = [&](const Gts& g) {
        if (!check_axiom(g, Axiom::Normal).holds)
            return;
        auto closed = g.closed_sets();
        for (Subset f1 : closed)
            for (Subset f2 : closed) {
                if (!f1 || !f2 || (f1 & f2))
                    continue;
                ++count;
                s.step([&] { return checks::urysohn(g, f1, f2); },
                       [&] {
                           return with_kind("urysohn", {{"space", space_js(g)},
                                                        {"f1", io::subset_to_json(g.ground(), f1)},
                                                        {"f2", io::subset_to_json(g.ground(), f2)}});
                       });
            }
    };
    for (const auto& g : all_gts_upto(e))
        run(g);
    r.certificate = "every disjoint nonempty closed pair in every normal space on grounds 0.." + n_str(e) + ": " +
                    n_str(count);
    for (long long t = 0; t < pick_trials(o, 500); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        run(t % 2 ? random_clopen_space(rng, 4, 6) : random_space(rng, 4, 5));
    }
}

// μ(γ) of the combined γ against the sum of the μ(γ_α), evaluated over raw tables.
void prop51_sum_sweep(Sweep& s, const std::vector<std::vector<Subset>>& t1, int a,
                      const std::vector<std::vector<Subset>>& t2, int b, long long& count)
{
    std::vector<std::uint64_t> mu1(t1.size(), 0), mu2(t2.size(), 0);
    for (std::size_t i = 0; i < t1.size(); ++i)
        for (Subset x = 0; x < t1[i].size(); ++x)
            if (is_subset(x, t1[i][x]))
                mu1[i] |= std::uint64_t{1} << x;
    for (std::size_t i = 0; i < t2.size(); ++i)
        for (Subset x = 0; x < t2[i].size(); ++x)
            if (is_subset(x, t2[i][x]))
                mu2[i] |= std::uint64_t{1} << x;
    Subset mask1 = full_set(a);
    Subset all = full_set(a + b);
    for (std::size_t i = 0; i < t1.size(); ++i)
        for (std::size_t j = 0; j < t2.size(); ++j) {
            ++count;
            auto check = [&]() -> Failure {
                for (Subset x = 0;; ++x) {
                    Subset x1 = x & mask1, x2 = x >> a;
                    Subset gx = t1[i][x1] | (t2[j][x2] << a);
                    bool in_mu = is_subset(x, gx);
                    bool in_sum = ((mu1[i] >> x1) & 1) && ((mu2[j] >> x2) & 1);
                    if (in_mu != in_sum)
                        return "membership of the set with bits " + std::to_string(x) + " differs";
                    if (x == all)
                        break;
                }
                return std::nullopt;
            };
            s.step(check, [&] {
                std::vector<MonotoneMap> parts{MonotoneMap(GroundSet::range(a), t1[i]),
                                               MonotoneMap(GroundSet::range(b), t2[j])};
                // Distinct labels keep the sum ground readable.
                for (auto& l : parts[1].ground.labels)
                    l = "b" + l;
                json ps = json::array();
                for (const auto& p : parts)
                    ps.push_back(io::gamma_to_json(p));
                return with_kind("prop51_sum", {{"parts", ps}});
            });
        }
}

void prop_5_1(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    std::vector<std::vector<std::vector<Subset>>> tables;
    for (int n = 0; n <= e; ++n)
        tables.push_back(monotone_tables(n));
    long long sums = 0, subs = 0;
    for (int a = 0; a <= e; ++a)
        for (int b = 0; b <= e; ++b)
            prop51_sum_sweep(s, tables[a], a, tables[b], b, sums);
    for (int n = 0; n <= e; ++n)
        for (const auto& t : tables[n]) {
            MonotoneMap g(GroundSet::range(n), t);
            for (Subset x0 = 0; x0 <= full_set(n); ++x0) {
                ++subs;
                s.step([&] { return checks::prop51_subspace(g, x0); },
                       [&] {
                           return with_kind("prop51_subspace", {{"gamma", io::gamma_to_json(g)},
                                                                {"subset", io::subset_to_json(g.ground, x0)}});
                       });
            }
        }
    // The two-point counterexample must give a strict inclusion.
    MonotoneMap cx = prop51_counterexample_gamma();
    s.step(
        [&]() -> Failure {
            bool eq = true;
            auto rep = check_prop51_subspace(cx, bit(0), &eq);
            Gts small = gt_from_gamma(gamma_subspace(cx, bit(0)));
            Gts trace = subspace(gt_from_gamma(cx), bit(0));
            if (!rep.ok() || eq || small.opens() != SetFamily{0} || trace.opens() != SetFamily{0, 1})
                return std::string("built-in counterexample does not reproduce μ(γ₀) = {∅} ⊊ P(X₀)");
            return std::nullopt;
        },
        [&] {
            return with_kind("prop51_equality", {{"gamma", io::gamma_to_json(cx)}, {"subset", json::array({"a"})}});
        });
    r.certificate = "sum equality over every pair of monotone maps on grounds 0.." + n_str(e) + " (" + n_str(sums) +
                    " pairs); subspace inclusion over every monotone map and subset (" + n_str(subs) + ")";
    for (long long t = 0; t < pick_trials(o, 1000); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<MonotoneMap> parts;
        for (int i = 0; i < k; ++i)
            parts.push_back(random_monotone(rng, std::uniform_int_distribution<int>(0, 4)(rng)));
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (auto& l : parts[i].ground.labels)
                l = std::string(1, static_cast<char>('a' + i)) + l;
        s.step([&] { return checks::prop51_sum(parts); },
               [&] {
                   json ps = json::array();
                   for (const auto& p : parts)
                       ps.push_back(io::gamma_to_json(p));
                   return with_kind("prop51_sum", {{"parts", ps}});
               });
        MonotoneMap g = random_monotone(rng, std::uniform_int_distribution<int>(1, 5)(rng));
        Subset x0 = std::uniform_int_distribution<Subset>(0, g.ground.full())(rng);
        s.step([&] { return checks::prop51_subspace(g, x0); },
               [&] {
                   return with_kind("prop51_subspace",
                                    {{"gamma", io::gamma_to_json(g)}, {"subset", io::subset_to_json(g.ground, x0)}});
               });
    }
}

Enlargement relabel(const Enlargement& k, const std::string& prefix)
{
    std::vector<std::string> labels;
    for (const auto& l : k.base.ground().labels)
        labels.push_back(prefix + l);
    return Enlargement(Gts::trusted(GroundSet(labels), k.base.opens()), k.table);
}

json enl_parts_json(const std::vector<Enlargement>& parts)
{
    json ps = json::array();
    for (const auto& p : parts)
        ps.push_back(io::enlargement_to_json(p));
    return ps;
}

void prop_5_2(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 3), 3);
    std::vector<std::vector<Enlargement>> by_size;
    for (int n = 0; n <= e; ++n) {
        std::vector<Enlargement> v;
        for (const auto& g : enumerate_gts(n))
            for (auto& k : all_enlargements(g))
                v.push_back(k);
        by_size.push_back(std::move(v));
    }
    long long sums = 0, subs = 0;
    int pair_bound = std::min(e, 2);
    for (int a = 0; a <= pair_bound; ++a)
        for (int b = 0; b <= pair_bound; ++b)
            for (const auto& k1 : by_size[a])
                for (const auto& k2 : by_size[b]) {
                    ++sums;
                    std::vector<Enlargement> parts{relabel(k1, "a"), relabel(k2, "b")};
                    s.step([&] { return checks::prop52_sum(parts); },
                           [&] { return with_kind("prop52_sum", {{"parts", enl_parts_json(parts)}}); });
                }
    for (int n = 0; n <= e; ++n)
        for (const auto& k : by_size[n])
            for (Subset x0 = 0; x0 <= full_set(n); ++x0) {
                if (!k.base.is_open(x0))
                    continue;
                ++subs;
                s.step([&] { return checks::prop52_subspace(k, x0); },
                       [&] {
                           return with_kind("prop52_subspace", {{"enlargement", io::enlargement_to_json(k)},
                                                                {"subset", io::subset_to_json(k.base.ground(), x0)}});
                       });
            }
    r.certificate = "sum criterion over every pair of enlargements on grounds 0.." + n_str(pair_bound) + " (" +
                    n_str(sums) + " pairs); subspace inclusion over every enlargement on grounds 0.." + n_str(e) +
                    " and open subset (" + n_str(subs) + ", hypotheses checked per instance)";
    for (long long t = 0; t < pick_trials(o, 1000); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        int k = std::uniform_int_distribution<int>(2, 3)(rng);
        std::vector<Enlargement> parts;
        for (int i = 0; i < k; ++i)
            parts.push_back(relabel(random_enlargement(rng, 0, 3), std::string(1, static_cast<char>('a' + i))));
        s.step([&] { return checks::prop52_sum(parts); },
               [&] { return with_kind("prop52_sum", {{"parts", enl_parts_json(parts)}}); });
    }
}

void gns_stack_prop(PropertyReport& r, const RunOptions& o)
{
    Sweep s{r};
    int e = std::min(pick_exhaustive(o, 2), 2);
    long long count = 0;
    std::vector<std::vector<Gns>> by_size;
    for (int n = 0; n <= e; ++n)
        by_size.push_back(all_gns(n));
    for (const auto& v : by_size)
        for (const auto& psi : v) {
            ++count;
            s.step([&] { return checks::gns_stack(psi); },
                   [&] { return with_kind("gns_stack", {{"gns", io::gns_to_json(psi)}}); });
        }
    for (const auto& g : all_gts_upto(3)) {
        ++count;
        s.step([&] { return checks::gns_roundtrip(g); },
               [&] { return with_kind("gns_roundtrip", {{"space", space_js(g)}}); });
    }
    for (int a = 0; a <= e; ++a)
        for (int b = 0; b <= e; ++b)
            for (const auto& d : by_size[a])
                for (const auto& c : by_size[b])
                    for (auto& f : all_fns(a, b)) {
                        ++count;
                        s.step([&] { return checks::gns_continuity(d, c, f); },
                               [&] {
                                   return with_kind("gns_continuity", {{"dom", io::gns_to_json(d)},
                                                                       {"cod", io::gns_to_json(c)},
                                                                       {"fn", f}});
                               });
                    }
    r.certificate = "stack invariance and continuity transfer over every neighbourhood system on grounds 0.." +
                    n_str(e) + ", GT round trip on grounds 0..3: " + n_str(count);
    for (long long t = 0; t < pick_trials(o, 10000); ++t) {
        std::mt19937_64 rng(split_seed(o.seed, t));
        Gns psi = random_gns(rng, 0, 4);
        s.step([&] { return checks::gns_stack(psi); },
               [&] { return with_kind("gns_stack", {{"gns", io::gns_to_json(psi)}}); });
    }
}

using PropFn = void (*)(PropertyReport&, const RunOptions&);

const std::vector<std::pair<std::string, PropFn>>& registry()
{
    static const std::vector<std::pair<std::string, PropFn>> r = {
        {"prop_3_2_vs_3_4", prop_3_2_vs_3_4},
        {"prop_3_3_vs_3_6", prop_3_3_vs_3_6},
        {"remark_3_7_steps", remark_3_7_steps},
        {"cor_3_14_lattice", cor_3_14_lattice},
        {"remark_3_12_coincidence", remark_3_12_coincidence},
        {"prop_4_7_heredity", prop_4_7_heredity},
        {"lemma_4_9", lemma_4_9},
        {"prop_4_11_universality", prop_4_11_universality},
        {"thm_4_12", thm_4_12},
        {"prop_4_15", prop_4_15},
        {"prop_4_17", prop_4_17},
        {"prop_4_18", prop_4_18},
        {"prop_4_19", prop_4_19},
        {"example_4_20", example_4_20},
        {"thm_4_3_witness", thm_4_3_witness},
        {"prop_5_1", prop_5_1},
        {"prop_5_2", prop_5_2},
        {"gns_stack", gns_stack_prop},
    };
    return r;
}

double elapsed_ms(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

std::vector<std::string> property_ids()
{
    std::vector<std::string> ids;
    for (const auto& [id, fn] : registry())
        ids.push_back(id);
    return ids;
}

PropertyReport check_property(const std::string& id, const RunOptions& opts)
{
    for (const auto& [name, fn] : registry())
        if (name == id) {
            PropertyReport r;
            r.id = id;
            auto start = std::chrono::steady_clock::now();
            fn(r, opts);
            r.wall_ms = elapsed_ms(start);
            return r;
        }
    fail(ErrorKind::UnknownId, "unknown property '" + id + "'");
}

std::vector<std::string> hunt_ids() { return {"gns_converse", "prop_5_1_equality", "prop_5_2_subspace_converse", "tautology"}; }

namespace {

struct Hunt {
    PropertyReport& r;
    bool found = false;

    template <class Pred, class Inst>
    bool step(Pred&& pred, Inst&& inst)
    {
        if (found)
            return true;
        ++r.attempted;
        Failure f = pred();
        if (!f) {
            ++r.passed;
            return false;
        }
        found = true;
        r.counterexample = json{{"hunt", r.id}, {"instance", inst()}, {"witness", *f}}.dump();
        return true;
    }
};

} // namespace

PropertyReport search_counterexample(const std::string& id, int max_ground)
{
    PropertyReport r;
    r.id = id;
    auto start = std::chrono::steady_clock::now();
    Hunt h{r};
    if (max_ground < 0)
        fail(ErrorKind::Validation, "max ground must be non-negative");
    if (id == "gns_converse") {
        int e = std::min(max_ground, 2);
        for (int a = 0; a <= e && !h.found; ++a)
            for (int b = 0; b <= e && !h.found; ++b) {
                auto da = all_gns(a), db = all_gns(b);
                for (const auto& d : da)
                    for (const auto& c : db)
                        for (auto& f : all_fns(a, b))
                            if (h.step([&] { return checks::hunt_gns_converse(d, c, f); },
                                       [&] {
                                           return with_kind("gns_converse", {{"dom", io::gns_to_json(d)},
                                                                             {"cod", io::gns_to_json(c)},
                                                                             {"fn", f}});
                                       }))
                                goto done;
            }
        r.certificate = "every neighbourhood-system pair and map on grounds 0.." + n_str(e);
    } else if (id == "prop_5_1_equality") {
        int e = std::min(max_ground, 3);
        for (int n = 0; n <= e; ++n)
            for (const auto& t : monotone_tables(n)) {
                MonotoneMap g(GroundSet::range(n), t);
                for (Subset x0 = 0; x0 <= full_set(n); ++x0)
                    if (h.step([&] { return checks::hunt_prop51_equality(g, x0); },
                               [&] {
                                   return with_kind("prop51_equality", {{"gamma", io::gamma_to_json(g)},
                                                                        {"subset", io::subset_to_json(g.ground, x0)}});
                               }))
                        goto done;
            }
        r.certificate = "every monotone map and subset on grounds 0.." + n_str(e);
    } else if (id == "prop_5_2_subspace_converse") {
        int e = std::min(max_ground, 3);
        for (int n = 0; n <= e; ++n)
            for (const auto& g : enumerate_gts(n))
                for (auto& k : all_enlargements(g))
                    for (Subset x0 = 0; x0 <= full_set(n); ++x0) {
                        if (!g.is_open(x0))
                            continue;
                        if (h.step([&] { return checks::hunt_prop52_subspace_converse(k, x0); },
                                   [&] {
                                       return with_kind("prop52_subspace_converse",
                                                        {{"enlargement", io::enlargement_to_json(k)},
                                                         {"subset", io::subset_to_json(g.ground(), x0)}});
                                   }))
                            goto done;
                    }
        r.certificate = "every enlargement and open subset on grounds 0.." + n_str(e) +
                        " (instances violating the hypotheses count as non-examples)";
    } else if (id == "tautology") {
        int e = std::min(max_ground, 3);
        for (const auto& g : all_gts_upto(e))
            if (h.step([&] { return checks::hunt_tautology(g); },
                       [&] { return with_kind("tautology", {{"space", space_js(g)}}); }))
                goto done;
        r.certificate = "every GT on grounds 0.." + n_str(e);
    } else {
        fail(ErrorKind::UnknownId, "unknown hunt predicate '" + id + "'");
    }
done:
    if (h.found)
        r.certificate.reset();
    r.wall_ms = elapsed_ms(start);
    return r;
}

bool recheck_counterexample(const std::string& text)
{
    json j = io::parse_text(text);
    if (!j.contains("instance"))
        fail(ErrorKind::Parse, "counterexample has no instance");
    return checks::run_json(j.at("instance")).has_value();
}

} // namespace gentop
