#include <doctest.h>

#include "gentop/json_io.hpp"
#include "util.hpp"

using namespace gentop;
using namespace testutil;

TEST_CASE("seeded streams are reproducible")
{
    InstanceSpec spec;
    spec.seed = 99;
    InstanceStream a(spec), b(spec);
    for (int i = 0; i < 50; ++i)
        CHECK(a.next() == b.next());
    spec.seed = 100;
    InstanceStream c(spec);
    InstanceStream d(InstanceSpec{0, 4, 3.0, 99, {}, 10000});
    int same = 0;
    for (int i = 0; i < 50; ++i)
        same += c.next() == d.next();
    CHECK(same < 50);
    CHECK(split_seed(1, 0) != split_seed(1, 1));
}

TEST_CASE("filters and rejection budget")
{
    InstanceSpec spec;
    spec.min_ground = 2;
    spec.max_ground = 4;
    spec.filters = {"strong", "T1"};
    InstanceStream s(spec);
    for (int i = 0; i < 30; ++i) {
        Gts g = s.next();
        CHECK(g.strong());
        CHECK(check_axiom(g, Axiom::T1).holds);
        CHECK(g.size() >= 2);
        CHECK(g.size() <= 4);
    }
    InstanceSpec impossible;
    impossible.min_ground = 3;
    impossible.max_ground = 3;
    impossible.density = 0.0;
    impossible.filters = {"strong"};
    impossible.reject_budget = 50;
    try {
        InstanceStream(impossible).next();
        FAIL("met an impossible filter");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Resource);
        CHECK(std::string(e.what()).find("strong") != std::string::npos);
    }
    CHECK_THROWS_AS(InstanceStream(InstanceSpec{0, 2, 1.0, 1, {"T9"}, 10}), Error);
}

TEST_CASE("registry")
{
    auto ids = property_ids();
    CHECK(ids.size() == 18);
    CHECK(std::find(ids.begin(), ids.end(), "prop_4_17") != ids.end());
    CHECK_THROWS_AS(check_property("nope"), Error);
    CHECK_THROWS_AS(search_counterexample("nope", 2), Error);
    RunOptions quick;
    quick.trials = 20;
    quick.exhaustive = 1;
    for (const auto& id : {"prop_4_15", "prop_4_17", "thm_4_3_witness", "gns_stack", "lemma_4_9"}) {
        PropertyReport r = check_property(id, quick);
        CHECK(r.ok());
        CHECK(r.attempted > 0);
        CHECK(r.certificate);
    }
}

TEST_CASE("reports are deterministic for a seed")
{
    RunOptions o;
    o.seed = 5;
    o.trials = 200;
    o.exhaustive = 1;
    auto a = check_property("prop_4_17", o), b = check_property("prop_4_17", o);
    CHECK(a.attempted == b.attempted);
    CHECK(a.passed == b.passed);
}

TEST_CASE("failing sweeps keep a counterexample that rechecks")
{
    RunOptions o;
    o.trials = 0;
    PropertyReport r = check_property("remark_3_12_coincidence", o);
    REQUIRE(r.counterexample);
    CHECK_FALSE(r.ok());
    CHECK(recheck_counterexample(*r.counterexample));
    auto j = io::parse_text(*r.counterexample);
    CHECK(j.at("property") == "remark_3_12_coincidence");
    CHECK(j.at("instance").at("kind") == "csaszar");

    CHECK_FALSE(recheck_counterexample(R"({"instance":{"kind":"hull_cube","dimension":3}})"));
    CHECK_THROWS_AS(recheck_counterexample(R"({"instance":{"kind":"bogus"}})"), Error);
}

TEST_CASE("hunts")
{
    auto t = search_counterexample("tautology", 3);
    CHECK_FALSE(t.counterexample);
    CHECK(t.attempted == 71);
    auto g = search_counterexample("gns_converse", 2);
    CHECK(g.counterexample);
    auto p = search_counterexample("prop_5_1_equality", 2);
    REQUIRE(p.counterexample);
    CHECK(recheck_counterexample(*p.counterexample));
}
