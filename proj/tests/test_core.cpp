#include <doctest.h>

#include "gentop/json_io.hpp"
#include "util.hpp"

using namespace gentop;
using namespace testutil;

TEST_CASE("union closure of small bases")
{
    GroundSet ab = labels({"a", "b"});
    CHECK(union_close({S({0}), S({1})}, 2) == SetFamily{0, S({0}), S({1}), S({0, 1})});
    CHECK(union_close({}, 2) == SetFamily{0});
    SetFamily rays{0, S({0}), S({0, 1}), S({2}), S({1, 2})};
    SetFamily want = oracle::all_unions({S({0}), S({0, 1}), S({2}), S({1, 2})});
    CHECK(union_close(rays, 3) == want);
    CHECK(want.size() == 7);
    CHECK(Gts::from_base(ab, {S({0})}).opens() == SetFamily{0, S({0})});
    CHECK(Gts::from_base(labels({"a"}), {}).opens() == SetFamily{0});
    CHECK_FALSE(Gts::from_base(labels({"a"}), {}).strong());
}

TEST_CASE("union closure agrees with brute force on random bases")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        int n = static_cast<int>(rng() % 6);
        SetFamily base;
        for (int i = 0, k = static_cast<int>(rng() % 7); i < k; ++i)
            base.push_back(rng() & full_set(n));
        CHECK(union_close(base, n) == oracle::all_unions(base));
    }
}

TEST_CASE("enumeration matches the brute-force family count")
{
    const int expected[] = {1, 2, 7, 61};
    for (int n = 0; n <= 3; ++n) {
        auto lib = enumerate_gts(n);
        auto ref = oracle::all_gts(n);
        CHECK(static_cast<int>(lib.size()) == expected[n]);
        REQUIRE(lib.size() == ref.size());
        for (std::size_t i = 0; i < lib.size(); ++i)
            CHECK(fam(lib[i]) == ref[i]);
    }
    CHECK_THROWS_AS(enumerate_gts(4), Error);
}

TEST_CASE("validation reports the offending sets")
{
    GroundSet ab = labels({"a", "b"});
    try {
        Gts(ab, {S({0}), S({1})});
        FAIL("accepted a family without the empty set");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Validation);
        CHECK(std::string(e.what()).find("missing the empty set") != std::string::npos);
    }
    try {
        Gts(ab, {0, S({0}), S({1})});
        FAIL("accepted a family that is not union-closed");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("missing {a,b}") != std::string::npos);
    }
    CHECK_THROWS_AS(GroundSet(std::vector<std::string>{"a", "a"}), Error);
}

TEST_CASE("closure and interior")
{
    Gts chain = Gts::from_base(GroundSet::range(3), {S({0}), S({0, 1}), S({2}), S({1, 2})});
    CHECK(chain.closure(S({1})) == S({1}));
    CHECK(chain.interior(S({0, 1})) == S({0, 1}));
    CHECK(chain.closure(S({0})) == S({0}));
    Gts d = Gts::discrete(GroundSet::range(3));
    for (Subset a = 0; a < 8; ++a) {
        CHECK(d.closure(a) == a);
        CHECK(d.interior(a) == a);
    }
    Gts ind = Gts::indiscrete(GroundSet::range(3));
    for (Subset a = 0; a < 8; ++a)
        CHECK(ind.closure(a) == 7);
    Gts half = Gts::from_base(labels({"a", "b"}), {S({0})});
    CHECK(half.interior(S({1})) == 0);
}

TEST_CASE("closure agrees with the closed-set oracle on every small space")
{
    for (const auto& g : all_upto(3))
        for (Subset a = 0; a <= g.full(); ++a) {
            CHECK(g.closure(a) == oracle::closure(fam(g), g.size(), a));
            CHECK(g.interior(a) == oracle::interior(fam(g), a));
        }
}

TEST_CASE("open sets and closure operators round trip")
{
    for (const auto& g : all_upto(3)) {
        ClosureOp c = closure_op_from_gts(g);
        CHECK(gts_from_closure_op(c) == g);
        ClosureOp again = closure_op_from_gts(gts_from_closure_op(c));
        CHECK(again.table() == c.table());
    }
    GroundSet x = GroundSet::range(3);
    std::vector<Subset> id(8), top(8, 7);
    for (Subset a = 0; a < 8; ++a)
        id[a] = a;
    CHECK(gts_from_closure_op(ClosureOp::from_table(x, id)) == Gts::discrete(x));
    CHECK(gts_from_closure_op(ClosureOp::from_table(x, top)).opens() == SetFamily{0});
}

TEST_CASE("closure tables violating the laws are rejected")
{
    GroundSet x = GroundSet::range(2);
    CHECK_THROWS_AS(ClosureOp::from_table(x, {0, 0, 2, 3}), Error);        // not increasing
    CHECK_THROWS_AS(ClosureOp::from_table(x, {1, 1, 3, 2}), Error);        // not monotone / increasing
    CHECK_THROWS_AS(ClosureOp::from_table(GroundSet::range(3), {1, 3, 2, 3, 4, 5, 6, 7}), Error); // not idempotent
    CHECK_THROWS_AS(ClosureOp::from_table(x, {0, 1}), Error);              // wrong length
}

TEST_CASE("large grounds use a lazy closure")
{
    Gts g = Gts::from_base(GroundSet::range(14), {S({0}), S({1, 2})});
    ClosureOp c = closure_op_from_gts(g);
    CHECK_FALSE(c.materialized());
    CHECK(c(S({3})) == g.closure(S({3})));
}

TEST_CASE("ground cap")
{
    int old = ground_cap();
    set_ground_cap(4);
    CHECK_THROWS_AS(check_cap(5, "test"), Error);
    CHECK_NOTHROW(check_cap(4, "test"));
    set_ground_cap(old);
    CHECK_THROWS_AS(set_ground_cap(65), Error);
    CHECK_THROWS_AS(set_ground_cap(0), Error);
}

TEST_CASE("space JSON round trips")
{
    for (const auto& g : all_upto(3)) {
        auto j = io::space_to_json(g);
        CHECK(io::space_from_json(j) == g);
        CHECK(io::space_from_json(io::parse_text(j.dump())) == g);
    }
    auto bad = io::parse_text(R"({"ground":["a","b"],"opens":[[],["a"],["b"]]})");
    try {
        io::space_from_json(bad);
        FAIL("accepted a family that is not union-closed");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("opens not union-closed: missing {a,b}") != std::string::npos);
    }
    CHECK_THROWS_AS(io::space_from_json(io::parse_text(R"({"ground":["a"],"opens":[[],["z"]]})")), Error);
    try {
        io::parse_text("{\"ground\": [");
        FAIL("parsed malformed text");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Parse);
    }
}
