#include "gentop/json_io.hpp"

namespace gentop::io {

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what)
{
    fail(ErrorKind::Parse, where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where)
{
    if (!j.is_object() || !j.contains(name))
        parse_fail(where, std::string("missing field \"") + name + "\"");
    return j.at(name);
}

} // namespace

json subset_to_json(const GroundSet& ground, Subset s)
{
    json a = json::array();
    for_each_bit(s, [&](int i) { a.push_back(ground.labels[i]); });
    return a;
}

Subset subset_from_json(const GroundSet& ground, const json& j, const std::string& where)
{
    if (!j.is_array())
        parse_fail(where, "expected an array of labels");
    Subset s = 0;
    for (const auto& e : j) {
        if (!e.is_string())
            parse_fail(where, "labels must be strings");
        int i = ground.index_of(e.get<std::string>());
        if (i < 0)
            fail(ErrorKind::Validation, where + ": unknown label '" + e.get<std::string>() + "'");
        s |= bit(i);
    }
    return s;
}

json family_to_json(const GroundSet& ground, const SetFamily& fam)
{
    json a = json::array();
    for (Subset s : fam)
        a.push_back(subset_to_json(ground, s));
    return a;
}

std::string subset_key(const GroundSet& ground, Subset s)
{
    std::string k;
    bool first = true;
    for_each_bit(s, [&](int i) {
        if (!first)
            k += ",";
        first = false;
        k += ground.labels[i];
    });
    return k;
}

Subset subset_from_key(const GroundSet& ground, const std::string& key, const std::string& where)
{
    Subset s = 0;
    if (key.empty())
        return s;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = key.find(',', start);
        std::string l = key.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        int i = ground.index_of(l);
        if (i < 0)
            fail(ErrorKind::Validation, where + ": unknown label '" + l + "' in key \"" + key + "\"");
        s |= bit(i);
        if (comma == std::string::npos)
            return s;
        start = comma + 1;
    }
}

GroundSet ground_from_json(const json& j, const std::string& where)
{
    if (!j.is_array())
        parse_fail(where, "ground must be an array of labels");
    std::vector<std::string> labels;
    for (const auto& e : j) {
        if (!e.is_string())
            parse_fail(where, "labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    return GroundSet(std::move(labels));
}

namespace {

void require_key_safe(const GroundSet& g, const std::string& where)
{
    for (const auto& l : g.labels)
        if (l.find(',') != std::string::npos)
            fail(ErrorKind::Validation, where + ": label '" + l + "' contains ',' and cannot be used in table keys");
}

} // namespace

json space_to_json(const Gts& g)
{
    return json{{"ground", g.ground().labels}, {"opens", family_to_json(g.ground(), g.opens())}};
}

Gts space_from_json(const json& j)
{
    GroundSet ground = ground_from_json(field(j, "ground", "space"), "space.ground");
    const json& opens = field(j, "opens", "space");
    if (!opens.is_array())
        parse_fail("space.opens", "expected an array of subsets");
    SetFamily fam;
    for (std::size_t i = 0; i < opens.size(); ++i)
        fam.push_back(subset_from_json(ground, opens[i], "space.opens[" + std::to_string(i) + "]"));
    return Gts(std::move(ground), std::move(fam));
}

json map_to_json(const GtsMap& f)
{
    json t = json::object();
    for (int i = 0; i < f.dom.size(); ++i)
        t[f.dom.ground().labels[i]] = f.cod.ground().labels[f.table[i]];
    return json{{"dom", space_to_json(f.dom)}, {"cod", space_to_json(f.cod)}, {"table", t}};
}

GtsMap map_from_json(const json& j)
{
    Gts dom = space_from_json(field(j, "dom", "map"));
    Gts cod = space_from_json(field(j, "cod", "map"));
    const json& t = field(j, "table", "map");
    if (!t.is_object())
        parse_fail("map.table", "expected an object");
    PointFn fn(dom.size(), -1);
    for (auto it = t.begin(); it != t.end(); ++it) {
        int x = dom.ground().index_of(it.key());
        if (x < 0)
            fail(ErrorKind::Validation, "map.table: unknown domain label '" + it.key() + "'");
        if (!it.value().is_string())
            parse_fail("map.table." + it.key(), "value must be a label");
        int y = cod.ground().index_of(it.value().get<std::string>());
        if (y < 0)
            fail(ErrorKind::Validation, "map.table." + it.key() + ": unknown codomain label");
        fn[x] = y;
    }
    for (int x = 0; x < dom.size(); ++x)
        if (fn[x] < 0)
            fail(ErrorKind::Validation, "map.table: no value for '" + dom.ground().labels[x] + "'");
    return GtsMap(dom, cod, fn);
}

GroundSet chain_from_json(const json& j) { return ground_from_json(field(j, "chain", "chain"), "chain"); }

namespace {

std::vector<Subset> full_table(const GroundSet& ground, const json& t, const std::string& where)
{
    require_key_safe(ground, where);
    if (!t.is_object())
        parse_fail(where, "expected an object keyed by subsets");
    std::size_t size = std::size_t{1} << ground.size();
    std::vector<Subset> table(size, 0);
    std::vector<bool> seen(size, false);
    for (auto it = t.begin(); it != t.end(); ++it) {
        Subset a = subset_from_key(ground, it.key(), where);
        table[a] = subset_from_json(ground, it.value(), where + "[\"" + it.key() + "\"]");
        seen[a] = true;
    }
    for (Subset a = 0; a < size; ++a)
        if (!seen[a])
            fail(ErrorKind::Validation, where + ": no entry for " + format_subset(ground, a));
    return table;
}

} // namespace

ClosureOp closure_from_json(const json& j)
{
    GroundSet ground = ground_from_json(field(j, "ground", "closure"), "closure.ground");
    if (ground.size() > ClosureOp::kTableLimit)
        fail(ErrorKind::Resource, "closure tables are limited to grounds of size 12");
    return ClosureOp::from_table(ground, full_table(ground, field(j, "closure", "closure"), "closure.closure"));
}

MonotoneMap gamma_from_json(const json& j)
{
    GroundSet ground = ground_from_json(field(j, "ground", "gamma"), "gamma.ground");
    if (ground.size() > 16)
        fail(ErrorKind::Resource, "monotone map tables are limited to 16 points");
    return MonotoneMap(ground, full_table(ground, field(j, "gamma", "gamma"), "gamma.gamma"));
}

json gamma_to_json(const MonotoneMap& g)
{
    json t = json::object();
    for (Subset a = 0; a < g.table.size(); ++a)
        t[subset_key(g.ground, a)] = subset_to_json(g.ground, g.table[a]);
    return json{{"ground", g.ground.labels}, {"gamma", t}};
}

Enlargement enlargement_from_json(const json& j)
{
    Gts base = space_from_json(field(j, "space", "enlargement"));
    require_key_safe(base.ground(), "enlargement.k");
    const json& t = field(j, "k", "enlargement");
    if (!t.is_object())
        parse_fail("enlargement.k", "expected an object keyed by open sets");
    std::vector<Subset> table(base.opens().size(), 0);
    std::vector<bool> seen(table.size(), false);
    for (auto it = t.begin(); it != t.end(); ++it) {
        Subset m = subset_from_key(base.ground(), it.key(), "enlargement.k");
        auto pos = std::lower_bound(base.opens().begin(), base.opens().end(), m);
        if (pos == base.opens().end() || *pos != m)
            fail(ErrorKind::Validation, "enlargement.k: key \"" + it.key() + "\" is not an open set");
        std::size_t i = pos - base.opens().begin();
        table[i] = subset_from_json(base.ground(), it.value(), "enlargement.k[\"" + it.key() + "\"]");
        seen[i] = true;
    }
    for (std::size_t i = 0; i < table.size(); ++i)
        if (!seen[i])
            fail(ErrorKind::Validation, "enlargement.k: no entry for open " + base.fmt(base.opens()[i]));
    return Enlargement(base, std::move(table));
}

json enlargement_to_json(const Enlargement& k)
{
    json t = json::object();
    for (std::size_t i = 0; i < k.table.size(); ++i)
        t[subset_key(k.base.ground(), k.base.opens()[i])] = subset_to_json(k.base.ground(), k.table[i]);
    return json{{"space", space_to_json(k.base)}, {"k", t}};
}

Gns gns_from_json(const json& j)
{
    GroundSet ground = ground_from_json(field(j, "ground", "gns"), "gns.ground");
    const json& nb = field(j, "nbhd", "gns");
    if (!nb.is_object())
        parse_fail("gns.nbhd", "expected an object keyed by points");
    std::vector<SetFamily> fams(ground.size());
    for (auto it = nb.begin(); it != nb.end(); ++it) {
        int x = ground.index_of(it.key());
        if (x < 0)
            fail(ErrorKind::Validation, "gns.nbhd: unknown point '" + it.key() + "'");
        if (!it.value().is_array())
            parse_fail("gns.nbhd." + it.key(), "expected an array of subsets");
        for (const auto& v : it.value())
            fams[x].push_back(subset_from_json(ground, v, "gns.nbhd." + it.key()));
    }
    return Gns(ground, std::move(fams));
}

json gns_to_json(const Gns& psi)
{
    json nb = json::object();
    for (int x = 0; x < psi.ground.size(); ++x)
        nb[psi.ground.labels[x]] = family_to_json(psi.ground, psi.nbhd[x]);
    return json{{"ground", psi.ground.labels}, {"nbhd", nb}};
}

json verdict_to_json(const Gts& g, const AxiomVerdict& v)
{
    json j{{"axiom", axiom_name(v.axiom)}, {"holds", v.holds}};
    if (!v.witness.empty())
        j["witness"] = family_to_json(g.ground(), v.witness);
    if (!v.detail.empty())
        j["detail"] = v.detail;
    return j;
}

json trace_to_json(const GroundSet& ground, const IterationTrace& t)
{
    json stages = json::array();
    for (auto [k, s] : t.stages)
        stages.push_back(json{{"step", k}, {"set", subset_to_json(ground, s)}});
    return json{{"query", subset_to_json(ground, t.query)}, {"stages", stages}, {"stabilized_at", t.stabilized_at}};
}

json certificate_to_json(const Gts& g, const EmbeddingCertificate& c)
{
    json index = json::array();
    for (std::size_t a = 0; a < c.index.size(); ++a)
        index.push_back(json{{"point", g.ground().labels[c.index[a].first]},
                             {"open", subset_to_json(g.ground(), c.index[a].second)},
                             {"zero_set", subset_to_json(g.ground(), c.zero_sets[a])}});
    json image = json::object();
    for (int x = 0; x < g.size(); ++x)
        image[g.ground().labels[x]] = c.image_labels[x];
    return json{{"index", index},
                {"factor", space_to_json(gamma0_two())},
                {"image", image},
                {"image_subspace", space_to_json(c.image)},
                {"reduced_index", c.reduced},
                {"verdicts",
                 {{"injective", c.injective},
                  {"continuous", c.continuous},
                  {"open_onto_image", c.open_onto_image},
                  {"homeomorphism", c.homeomorphism},
                  {"image_matches_input", c.image_matches_input},
                  {"dense_in_reduced_power", c.dense_in_reduced},
                  {"rechecked_in_materialized_product", c.materialized}}}};
}

json report_to_json(const PropertyReport& r)
{
    json j{{"id", r.id}, {"attempted", r.attempted}, {"passed", r.passed}, {"ok", r.ok()}, {"wall_ms", r.wall_ms}};
    if (r.counterexample)
        j["counterexample"] = json::parse(*r.counterexample);
    if (r.certificate)
        j["certificate"] = *r.certificate;
    if (!r.notes.empty())
        j["notes"] = r.notes;
    return j;
}

json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorKind::Parse, std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
}

} // namespace gentop::io
