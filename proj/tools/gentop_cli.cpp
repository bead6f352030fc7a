#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gentop/gentop.h"

using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Usage("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON is accepted wherever a file is, so small inputs need no temp file.
std::string file_or_json(const std::string& arg)
{
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
        return arg;
    return read_file(arg);
}

std::string take(char* s)
{
    std::string out = s ? s : "";
    gentop_string_free(s);
    return out;
}

void ok(gentop_status st, const std::string& where)
{
    if (st != GENTOP_OK)
        throw Usage(where + ": " + gentop_last_error());
}

struct Space {
    gentop_space* h = nullptr;
    explicit Space(const std::string& arg)
    {
        ok(gentop_space_from_json(file_or_json(arg).c_str(), &h), arg);
    }
    ~Space() { gentop_space_free(h); }
    Space(const Space&) = delete;
    Space& operator=(const Space&) = delete;
};

// Each argument holds one space or an array of them.
std::string space_list(const std::vector<std::string>& args)
{
    json all = json::array();
    for (const auto& a : args) {
        json j;
        try {
            j = json::parse(file_or_json(a));
        } catch (const json::parse_error& e) {
            throw Usage(a + ": malformed JSON at byte " + std::to_string(e.byte));
        }
        if (j.is_array())
            for (auto& s : j)
                all.push_back(s);
        else
            all.push_back(j);
    }
    return all.dump();
}

struct Output {
    std::string path;

    void emit(const std::string& text) const
    {
        std::string pretty = json::parse(text).dump(2) + "\n";
        if (path.empty()) {
            std::cout << pretty;
            return;
        }
        std::ofstream out(path);
        if (!out)
            throw Usage("cannot write '" + path + "'");
        out << pretty;
    }
};

void table(const json& reports)
{
    std::fprintf(stderr, "%-26s %12s %12s %8s %10s\n", "property", "attempted", "passed", "status", "ms");
    for (const auto& r : reports)
        std::fprintf(stderr, "%-26s %12lld %12lld %8s %10.1f\n", r.at("id").get<std::string>().c_str(),
                     r.at("attempted").get<long long>(), r.at("passed").get<long long>(),
                     r.at("ok").get<bool>() ? "PASS" : "FAIL", r.at("wall_ms").get<double>());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite generalized topological spaces"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--out", out.path, "Write the JSON result to this file");

    std::string axiom, input, budget = "aleph0", id, recheck;
    std::vector<std::string> inputs, labels;
    bool trace = false, reduced = false;
    unsigned long long seed = 1;
    long long trials = -1;
    int exhaustive = -1, max_ground = 3, n = 0;

    auto* check = app.add_subcommand("check", "Decide a separation axiom");
    check->add_option("--axiom", axiom, "T0 T1 T2 Regular T3 Normal T4 CompletelyRegular T3.5")->required();
    check->add_option("space", input)->required();

    auto* construct = app.add_subcommand("construct", "Build a space from a generator description");
    construct->add_option("description", input)->required();

    std::map<std::string, CLI::App*> lists;
    for (const char* v : {"product", "sum", "join", "meet", "csaszar"}) {
        auto* s = app.add_subcommand(v, std::string("Form the ") + v + " of the given spaces");
        // Spaces arrive as extras: CLI11 would split an inline JSON array at its commas.
        s->allow_extras();
        lists[v] = s;
    }
    lists["meet"]->add_flag("--trace", trace, "Emit the hull iteration for every subset");

    auto* sub = app.add_subcommand("subspace", "Subspace on the listed points");
    sub->add_option("space", input)->required();
    sub->add_option("points", labels);

    auto* quo = app.add_subcommand("quotient", "Quotient by a point -> class assignment");
    quo->add_option("space", input)->required();
    std::string classes;
    quo->add_option("classes", classes, "JSON object (file or inline) mapping points to classes")->required();
    quo->add_flag("--trace", trace, "Emit the hull iteration for every subset");

    auto* embed = app.add_subcommand("embed", "Embed a T3.5 space into a power of the two-point factor");
    embed->add_option("space", input)->required();
    embed->add_flag("--reduced", reduced, "Also build the dense extension in the reduced power");

    auto* compact = app.add_subcommand("compact", "Decide kappa-compactness");
    compact->add_option("space", input)->required();
    compact->add_option("--budget", budget, "n, aleph0 or aleph1");

    auto* verify = app.add_subcommand("verify", "Run a registered property sweep ('all' for every one)");
    verify->add_option("id", id);
    verify->add_option("--seed", seed);
    verify->add_option("--trials", trials);
    verify->add_option("--exhaustive", exhaustive);
    verify->add_option("--recheck", recheck, "Counterexample file to re-run instead of a sweep");

    auto* hunt = app.add_subcommand("hunt", "Search for a counterexample to a predicate");
    hunt->add_option("id", id)->required();
    hunt->add_option("--max-ground", max_ground);

    auto* enumerate = app.add_subcommand("enumerate", "List every GT on n points");
    enumerate->add_option("n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        for (auto& [v, s] : lists)
            if (s->parsed())
                inputs = s->remaining();
        char* res = nullptr;
        if (check->parsed()) {
            Space s(input);
            ok(gentop_check_axiom(s.h, axiom.c_str(), &res), "check");
        } else if (construct->parsed()) {
            ok(gentop_construct(file_or_json(input).c_str(), &res), input);
        } else if (lists["product"]->parsed()) {
            ok(gentop_product(space_list(inputs).c_str(), &res), "product");
        } else if (lists["sum"]->parsed()) {
            ok(gentop_sum(space_list(inputs).c_str(), &res), "sum");
        } else if (lists["join"]->parsed()) {
            ok(gentop_join(space_list(inputs).c_str(), &res), "join");
        } else if (lists["meet"]->parsed()) {
            ok(gentop_meet(space_list(inputs).c_str(), trace, &res), "meet");
        } else if (lists["csaszar"]->parsed()) {
            ok(gentop_csaszar(space_list(inputs).c_str(), &res), "csaszar");
        } else if (sub->parsed()) {
            Space s(input);
            ok(gentop_subspace(s.h, json(labels).dump().c_str(), &res), "subspace");
        } else if (quo->parsed()) {
            Space s(input);
            ok(gentop_quotient(s.h, file_or_json(classes).c_str(), trace, &res), "quotient");
        } else if (embed->parsed()) {
            Space s(input);
            ok(gentop_embed(s.h, reduced, &res), "embed");
        } else if (compact->parsed()) {
            Space s(input);
            ok(gentop_compact(s.h, budget.c_str(), &res), "compact");
        } else if (verify->parsed()) {
            if (!recheck.empty()) {
                int again = 0;
                ok(gentop_recheck(read_file(recheck).c_str(), &again), recheck);
                out.emit(json{{"reproduces", again == 1}}.dump());
                return again ? kExitFail : 0;
            }
            if (id.empty())
                throw Usage("verify needs a property id or 'all'");
            std::vector<std::string> ids{id};
            if (id == "all") {
                ok(gentop_property_ids(&res), "verify");
                ids = json::parse(take(res)).get<std::vector<std::string>>();
            }
            json reports = json::array();
            bool all_ok = true;
            for (const auto& p : ids) {
                int good = 0;
                ok(gentop_verify(p.c_str(), seed, trials, exhaustive, &res, &good), p);
                reports.push_back(json::parse(take(res)));
                all_ok = all_ok && good;
            }
            table(reports);
            out.emit((ids.size() == 1 ? reports[0] : reports).dump());
            return all_ok ? 0 : kExitFail;
        } else if (hunt->parsed()) {
            int found = 0;
            ok(gentop_hunt(id.c_str(), max_ground, &res, &found), "hunt");
            std::string text = take(res);
            table(json::array({json::parse(text)}));
            out.emit(text);
            return 0;
        } else if (enumerate->parsed()) {
            ok(gentop_enumerate(n, &res), "enumerate");
        }
        out.emit(take(res));
        return 0;
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
