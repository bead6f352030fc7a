#include "gentop/gts.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

namespace gentop {

namespace {

constexpr int kBitmapLimit = 16;

int initial_cap()
{
    if (const char* env = std::getenv("GENTOP_GROUND_CAP")) {
        int v = std::atoi(env);
        if (v > 0 && v <= kHardGroundLimit)
            return v;
    }
    return 16;
}

std::atomic<int>& cap_storage()
{
    static std::atomic<int> cap{initial_cap()};
    return cap;
}

} // namespace

void canonicalize(SetFamily& fam)
{
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

bool family_contains(const SetFamily& canonical, Subset s)
{
    return std::binary_search(canonical.begin(), canonical.end(), s);
}

int ground_cap() { return cap_storage().load(); }

void set_ground_cap(int cap)
{
    if (cap < 1 || cap > kHardGroundLimit)
        fail(ErrorKind::Validation, "ground cap must be in [1, 64]");
    cap_storage().store(cap);
}

void check_cap(long long size, const char* what)
{
    if (size > ground_cap())
        fail(ErrorKind::Resource, std::string(what) + " has " + std::to_string(size) +
                                      " points, above the ground cap " + std::to_string(ground_cap()));
}

GroundSet::GroundSet(std::vector<std::string> l) : labels(std::move(l))
{
    if (labels.size() > static_cast<std::size_t>(kHardGroundLimit))
        fail(ErrorKind::Resource, "ground set larger than 64 points");
    std::unordered_set<std::string> seen;
    for (const auto& s : labels)
        if (!seen.insert(s).second)
            fail(ErrorKind::Validation, "duplicate ground label '" + s + "'");
}

GroundSet GroundSet::range(int n)
{
    std::vector<std::string> l;
    for (int i = 0; i < n; ++i)
        l.push_back(std::to_string(i));
    return GroundSet(std::move(l));
}

int GroundSet::index_of(const std::string& label) const
{
    for (int i = 0; i < size(); ++i)
        if (labels[i] == label)
            return i;
    return -1;
}

std::string format_subset(const GroundSet& ground, Subset s)
{
    std::string out = "{";
    bool first = true;
    for_each_bit(s, [&](int i) {
        if (!first)
            out += ",";
        first = false;
        out += i < ground.size() ? ground.labels[i] : "#" + std::to_string(i);
    });
    return out + "}";
}

SetFamily union_close(const SetFamily& base, int n)
{
    Subset universe = full_set(n);
    for (Subset b : base)
        if (!is_subset(b, universe))
            fail(ErrorKind::Structural, "family member exceeds a ground of size " + std::to_string(n));
    SetFamily result{0};
    if (n <= 22) {
        std::vector<std::uint8_t> seen(std::size_t{1} << n, 0);
        seen[0] = 1;
        for (Subset b : base) {
            std::size_t count = result.size();
            for (std::size_t i = 0; i < count; ++i) {
                Subset u = result[i] | b;
                if (!seen[u]) {
                    seen[u] = 1;
                    result.push_back(u);
                }
            }
        }
    } else {
        std::unordered_set<Subset> seen{0};
        for (Subset b : base) {
            std::size_t count = result.size();
            for (std::size_t i = 0; i < count; ++i) {
                Subset u = result[i] | b;
                if (seen.insert(u).second)
                    result.push_back(u);
            }
        }
    }
    canonicalize(result);
    return result;
}

std::shared_ptr<const Gts::Impl> Gts::make_impl(GroundSet ground, SetFamily opens)
{
    auto impl = std::make_shared<Impl>();
    int n = ground.size();
    impl->ground = std::move(ground);
    impl->opens = std::move(opens);
    if (n <= kBitmapLimit) {
        impl->bitmap.assign(((std::size_t{1} << n) + 63) / 64, 0);
        for (Subset s : impl->opens)
            impl->bitmap[s >> 6] |= std::uint64_t{1} << (s & 63);
    }
    return impl;
}

Gts::Gts() : impl_(make_impl(GroundSet{}, SetFamily{0})) {}

Gts::Gts(GroundSet ground, SetFamily opens)
{
    check_cap(ground.size(), "ground set");
    Subset universe = ground.full();
    for (Subset s : opens)
        if (!is_subset(s, universe))
            fail(ErrorKind::Structural, "open set exceeds the ground set");
    canonicalize(opens);
    if (opens.empty() || opens.front() != 0)
        fail(ErrorKind::Validation, "opens missing the empty set");
    impl_ = make_impl(std::move(ground), std::move(opens));
    const SetFamily& o = impl_->opens;
    for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t j = i + 1; j < o.size(); ++j)
            if (!is_open(o[i] | o[j]))
                fail(ErrorKind::Validation, "opens not union-closed: missing " + fmt(o[i] | o[j]) + " = " +
                                                fmt(o[i]) + " ∪ " + fmt(o[j]));
}

Gts Gts::from_base(GroundSet ground, const SetFamily& base)
{
    check_cap(ground.size(), "ground set");
    SetFamily opens = union_close(base, ground.size());
    return trusted(std::move(ground), std::move(opens));
}

Gts Gts::trusted(GroundSet ground, SetFamily opens) { return Gts(make_impl(std::move(ground), std::move(opens))); }

Gts Gts::discrete(GroundSet ground)
{
    check_cap(ground.size(), "ground set");
    SetFamily all;
    for (Subset s = 0; s <= ground.full(); ++s) {
        all.push_back(s);
        if (s == ground.full())
            break;
    }
    return trusted(std::move(ground), std::move(all));
}

Gts Gts::indiscrete(GroundSet ground) { return trusted(std::move(ground), SetFamily{0}); }

bool Gts::is_open(Subset s) const
{
    if (!impl_->bitmap.empty()) {
        if (!is_subset(s, full()))
            return false;
        return (impl_->bitmap[s >> 6] >> (s & 63)) & 1u;
    }
    return family_contains(impl_->opens, s);
}

Subset Gts::closure(Subset a) const
{
    Subset avoid = 0;
    for (Subset m : impl_->opens)
        if ((m & a) == 0)
            avoid |= m;
    return full() & ~avoid;
}

Subset Gts::interior(Subset a) const
{
    Subset in = 0;
    for (Subset m : impl_->opens)
        if (is_subset(m, a))
            in |= m;
    return in;
}

SetFamily Gts::closed_sets() const
{
    SetFamily out;
    out.reserve(impl_->opens.size());
    for (Subset m : impl_->opens)
        out.push_back(full() & ~m);
    canonicalize(out);
    return out;
}

bool Gts::operator==(const Gts& o) const
{
    return impl_ == o.impl_ || (ground() == o.ground() && opens() == o.opens());
}

Gts gts_from_base(const GroundSet& ground, const SetFamily& base) { return Gts::from_base(ground, base); }

void ClosureOp::validate(const GroundSet& ground, const std::vector<Subset>& table)
{
    int n = ground.size();
    Subset universe = ground.full();
    if (table.size() != (std::size_t{1} << n))
        fail(ErrorKind::Structural, "closure table has the wrong number of entries");
    for (Subset a = 0; a < table.size(); ++a) {
        Subset c = table[a];
        if (!is_subset(c, universe))
            fail(ErrorKind::Structural, "closure value exceeds the ground set");
        if (!is_subset(a, c))
            fail(ErrorKind::Validation, "closure not increasing at " + format_subset(ground, a));
        if (table[c] != c)
            fail(ErrorKind::Validation, "closure not idempotent at " + format_subset(ground, a));
        for (int i = 0; i < n; ++i) {
            Subset b = a | bit(i);
            if (b != a && !is_subset(c, table[b]))
                fail(ErrorKind::Validation, "closure not monotone: " + format_subset(ground, a) + " ⊆ " +
                                                format_subset(ground, b) + " but c(" + format_subset(ground, a) +
                                                ") ⊄ c(" + format_subset(ground, b) + ")");
        }
    }
}

ClosureOp ClosureOp::from_table(GroundSet ground, std::vector<Subset> table)
{
    if (ground.size() > kTableLimit)
        fail(ErrorKind::Resource, "closure tables are limited to grounds of size 12");
    validate(ground, table);
    ClosureOp c;
    c.ground_ = std::move(ground);
    c.table_ = std::move(table);
    return c;
}

ClosureOp ClosureOp::from_function(GroundSet ground, Fn fn)
{
    if (ground.size() <= kTableLimit) {
        std::vector<Subset> table(std::size_t{1} << ground.size());
        for (Subset a = 0; a < table.size(); ++a)
            table[a] = fn(a);
        return from_table(std::move(ground), std::move(table));
    }
    ClosureOp c;
    c.ground_ = std::move(ground);
    c.fn_ = std::move(fn);
    return c;
}

ClosureOp closure_op_from_gts(const Gts& g)
{
    return ClosureOp::from_function(g.ground(), [g](Subset a) { return g.closure(a); });
}

Gts gts_from_closure_op(const ClosureOp& c)
{
    const GroundSet& ground = c.ground();
    check_cap(ground.size(), "ground set");
    Subset universe = ground.full();
    SetFamily opens;
    for (Subset a = 0;; ++a) {
        opens.push_back(universe & ~c(a));
        if (a == universe)
            break;
    }
    canonicalize(opens);
    return Gts::trusted(ground, std::move(opens));
}

} // namespace gentop
