#include "gentop/gentop.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

#include "gentop/covers.hpp"
#include "gentop/embed.hpp"
#include "gentop/generators.hpp"
#include "gentop/harness.hpp"
#include "gentop/json_io.hpp"
#include "gentop/lifts.hpp"
#include "gentop/separation.hpp"

using namespace gentop;
using nlohmann::json;

struct gentop_space {
    Gts g;
};

namespace {

thread_local std::string last_error;

gentop_status status_of(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Parse: return GENTOP_E_PARSE;
    case ErrorKind::Validation: return GENTOP_E_VALIDATION;
    case ErrorKind::Structural: return GENTOP_E_STRUCTURAL;
    case ErrorKind::Precondition: return GENTOP_E_PRECONDITION;
    case ErrorKind::Resource: return GENTOP_E_RESOURCE;
    case ErrorKind::UnknownId: return GENTOP_E_UNKNOWN_ID;
    }
    return GENTOP_E_INTERNAL;
}

template <class F>
gentop_status guard(F&& f)
{
    last_error.clear();
    try {
        f();
        return GENTOP_OK;
    } catch (const Error& e) {
        last_error = e.what();
        return status_of(e.kind());
    } catch (const json::exception& e) {
        last_error = std::string("malformed JSON: ") + e.what();
        return GENTOP_E_PARSE;
    } catch (const std::exception& e) {
        last_error = e.what();
        return GENTOP_E_INTERNAL;
    }
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void put(char** out, const json& j)
{
    if (!out)
        fail(ErrorKind::Structural, "null output pointer");
    *out = dup(j.dump());
}

json parse(const char* text)
{
    if (!text)
        fail(ErrorKind::Structural, "null input");
    return io::parse_text(text);
}

const Gts& space(const gentop_space* s)
{
    if (!s)
        fail(ErrorKind::Structural, "null space handle");
    return s->g;
}

std::vector<Gts> spaces_from(const char* text)
{
    json j = parse(text);
    if (!j.is_array())
        fail(ErrorKind::Validation, "expected a JSON array of spaces");
    std::vector<Gts> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        try {
            out.push_back(io::space_from_json(j[i]));
        } catch (const Error& e) {
            fail(e.kind(), "space " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

// Join and meet need a common ground; an empty list has none to offer.
GroundSet common_ground(const std::vector<Gts>& gs)
{
    if (gs.empty())
        fail(ErrorKind::Validation, "join and meet need at least one space to fix the ground");
    for (std::size_t i = 1; i < gs.size(); ++i)
        if (gs[i].ground().labels != gs[0].ground().labels)
            fail(ErrorKind::Validation, "space " + std::to_string(i) + " has a different ground");
    return gs[0].ground();
}

json traces(const GroundSet& ground, const SubsetFn& gamma)
{
    check_cap(ground.size(), "trace");
    json a = json::array();
    for (Subset s = 0;; ++s) {
        a.push_back(io::trace_to_json(ground, hull_trace(gamma, s)));
        if (s == ground.full())
            break;
    }
    return a;
}

Gts construct(const json& j)
{
    if (j.contains("chain"))
        return order_gt(io::chain_from_json(j));
    if (j.contains("k"))
        return kappa_gt(io::enlargement_from_json(j));
    if (j.contains("gamma"))
        return gt_from_gamma(io::gamma_from_json(j));
    if (j.contains("nbhd"))
        return gt_from_gns(io::gns_from_json(j));
    if (j.contains("closure"))
        return gts_from_closure_op(io::closure_from_json(j));
    if (j.contains("base")) {
        GroundSet g = io::ground_from_json(j.at("ground"), "ground");
        SetFamily base;
        for (std::size_t i = 0; i < j.at("base").size(); ++i)
            base.push_back(io::subset_from_json(g, j.at("base")[i], "base[" + std::to_string(i) + "]"));
        canonicalize(base);
        return Gts::from_base(g, base);
    }
    if (j.contains("opens"))
        return io::space_from_json(j);
    fail(ErrorKind::Validation, "construct needs one of chain, k, gamma, nbhd, closure, base, opens");
}

} // namespace

extern "C" {

const char* gentop_last_error(void) { return last_error.c_str(); }

void gentop_string_free(char* s) { std::free(s); }

int gentop_ground_cap(void) { return ground_cap(); }

gentop_status gentop_set_ground_cap(int cap)
{
    return guard([&] { set_ground_cap(cap); });
}

gentop_status gentop_space_from_json(const char* text, gentop_space** out)
{
    return guard([&] {
        if (!out)
            fail(ErrorKind::Structural, "null output pointer");
        *out = new gentop_space{io::space_from_json(parse(text))};
    });
}

gentop_status gentop_space_to_json(const gentop_space* s, char** out)
{
    return guard([&] { put(out, io::space_to_json(space(s))); });
}

int gentop_space_size(const gentop_space* s) { return s ? s->g.size() : -1; }

int gentop_space_equal(const gentop_space* a, const gentop_space* b)
{
    return a && b && a->g == b->g;
}

void gentop_space_free(gentop_space* s) { delete s; }

gentop_status gentop_check_axiom(const gentop_space* s, const char* axiom, char** out)
{
    return guard([&] {
        if (!axiom)
            fail(ErrorKind::Structural, "null axiom");
        const Gts& g = space(s);
        put(out, io::verdict_to_json(g, check_axiom(g, parse_axiom(axiom))));
    });
}

gentop_status gentop_construct(const char* text, char** out)
{
    return guard([&] { put(out, io::space_to_json(construct(parse(text)))); });
}

gentop_status gentop_product(const char* spaces, char** out)
{
    return guard([&] { put(out, io::space_to_json(product(spaces_from(spaces)).space)); });
}

gentop_status gentop_sum(const char* spaces, char** out)
{
    return guard([&] { put(out, io::space_to_json(sum(spaces_from(spaces)).space)); });
}

gentop_status gentop_join(const char* spaces, char** out)
{
    return guard([&] {
        auto gs = spaces_from(spaces);
        put(out, io::space_to_json(lattice_join(common_ground(gs), gs)));
    });
}

gentop_status gentop_meet(const char* spaces, int trace, char** out)
{
    return guard([&] {
        auto gs = spaces_from(spaces);
        GroundSet ground = common_ground(gs);
        json sp = io::space_to_json(lattice_meet(ground, gs));
        put(out, trace ? json{{"space", sp}, {"traces", traces(ground, meet_gamma(ground, gs))}} : sp);
    });
}

gentop_status gentop_subspace(const gentop_space* s, const char* subset, char** out)
{
    return guard([&] {
        const Gts& g = space(s);
        Subset x0 = io::subset_from_json(g.ground(), parse(subset), "subset");
        put(out, io::space_to_json(subspace(g, x0)));
    });
}

gentop_status gentop_quotient(const gentop_space* s, const char* classes, int trace, char** out)
{
    return guard([&] {
        const Gts& g = space(s);
        json c = parse(classes);
        if (!c.is_object())
            fail(ErrorKind::Validation, "classes must map every point to a class label");
        // Class labels are numbered in order of first appearance along the ground.
        std::vector<std::string> labels;
        PointFn q(g.size());
        for (int x = 0; x < g.size(); ++x) {
            const std::string& p = g.ground().labels[x];
            if (!c.contains(p))
                fail(ErrorKind::Validation, "classes: point '" + p + "' has no class");
            std::string cl = c.at(p).get<std::string>();
            auto it = std::find(labels.begin(), labels.end(), cl);
            q[x] = static_cast<int>(it - labels.begin());
            if (it == labels.end())
                labels.push_back(cl);
        }
        for (auto& [k, v] : c.items())
            if (g.ground().index_of(k) < 0)
                fail(ErrorKind::Validation, "classes: unknown point '" + k + "'");
        GroundSet target(labels);
        json sp = io::space_to_json(quotient(g, target, q));
        put(out, trace ? json{{"space", sp}, {"traces", traces(target, quotient_gamma(g, target, q))}} : sp);
    });
}

gentop_status gentop_csaszar(const char* spaces, char** out)
{
    return guard([&] {
        auto fs = spaces_from(spaces);
        bool coincide = csaszar_coincidence(fs);
        bool rule = csaszar_characterization(fs);
        put(out, json{{"csaszar", io::space_to_json(csaszar_product(fs))},
                      {"categorical", io::space_to_json(product(fs).space)},
                      {"coincide", coincide},
                      {"characterization", rule},
                      {"agree", coincide == rule}});
    });
}

gentop_status gentop_embed(const gentop_space* s, int reduced, char** out)
{
    return guard([&] {
        const Gts& g = space(s);
        json j{{"certificate", io::certificate_to_json(g, tychonoff_embed(g))}};
        if (reduced) {
            DenseExtension d = dense_compact_t4_extension(g);
            json r{{"dimension", d.reduced_dimension}, {"report", io::report_to_json(d.report)}};
            if (d.codomain)
                r["codomain"] = io::space_to_json(*d.codomain);
            if (d.embedding)
                r["embedding"] = io::map_to_json(*d.embedding);
            j["reduced"] = r;
        }
        put(out, j);
    });
}

gentop_status gentop_compact(const gentop_space* s, const char* budget, char** out)
{
    return guard([&] {
        if (!budget)
            fail(ErrorKind::Structural, "null budget");
        const Gts& g = space(s);
        KappaBudget k = KappaBudget::parse(budget);
        AxiomVerdict v = is_kappa_compact(g, k);
        json j{{"budget", k.str()}, {"holds", v.holds}, {"detail", v.detail}};
        if (!v.witness.empty())
            j["witness"] = io::family_to_json(g.ground(), v.witness);
        put(out, j);
    });
}

gentop_status gentop_verify(const char* id, unsigned long long seed, long long trials, int exhaustive, char** out,
                            int* ok)
{
    return guard([&] {
        if (!id)
            fail(ErrorKind::Structural, "null property id");
        RunOptions o;
        o.seed = seed;
        o.trials = trials;
        o.exhaustive = exhaustive;
        PropertyReport r = check_property(id, o);
        if (ok)
            *ok = r.ok() ? 1 : 0;
        put(out, io::report_to_json(r));
    });
}

gentop_status gentop_hunt(const char* id, int max_ground, char** out, int* found)
{
    return guard([&] {
        if (!id)
            fail(ErrorKind::Structural, "null hunt id");
        PropertyReport r = search_counterexample(id, max_ground);
        if (found)
            *found = r.counterexample ? 1 : 0;
        put(out, io::report_to_json(r));
    });
}

gentop_status gentop_recheck(const char* counterexample, int* reproduces)
{
    return guard([&] {
        if (!counterexample)
            fail(ErrorKind::Structural, "null counterexample");
        bool r = recheck_counterexample(counterexample);
        if (reproduces)
            *reproduces = r ? 1 : 0;
    });
}

gentop_status gentop_property_ids(char** out)
{
    return guard([&] { put(out, json(property_ids())); });
}

gentop_status gentop_hunt_ids(char** out)
{
    return guard([&] { put(out, json(hunt_ids())); });
}

gentop_status gentop_enumerate(int n, char** out)
{
    return guard([&] {
        json a = json::array();
        for (const auto& g : enumerate_gts(n))
            a.push_back(io::space_to_json(g));
        put(out, a);
    });
}

} // extern "C"
