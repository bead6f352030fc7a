#pragma once

// Instance-level checks shared by the registry sweeps and counterexample rechecks.

#include <optional>
#include <string>

#include "gentop/json_io.hpp"

namespace gentop::checks {

using nlohmann::json;
using Failure = std::optional<std::string>;

Failure weak_lift(const Source& src);
Failure strong_lift(const Sink& snk);
Sink hypercube_sink(int dimension);
Failure hull_cube(int dimension);
Failure lattice(const GroundSet& ground, const std::vector<Gts>& gs);
Failure csaszar(const std::vector<Gts>& factors);
Failure heredity_subspace(Axiom a, const Gts& g, Subset x0);
Failure heredity_product(Axiom a, const std::vector<Gts>& factors);
Failure embedding_lemma(const Gts& g, const std::vector<GtsMap>& legs);
Failure t0_universality(const Gts& g, const Gts& z, const PointFn& f);
Failure tychonoff(const Gts& g);
Failure order_map(int dom, int cod, const PointFn& f);
Failure normal_product(const std::vector<Gts>& factors);
Failure product_subcover(const std::vector<Gts>& factors, const std::vector<CylinderUnion>& members);
Failure quotient_compact(const Gts& g, int target, const PointFn& q, int budget);
Failure closed_compact(const Gts& g, Subset c, int budget);
Failure dense_extension(const Gts& g);
Failure dense_two(int n);
Failure urysohn(const Gts& g, Subset f1, Subset f2);
Failure prop51_sum(const std::vector<MonotoneMap>& parts);
Failure prop51_subspace(const MonotoneMap& gamma, Subset x0);
Failure prop52_sum(const std::vector<Enlargement>& parts);
Failure prop52_subspace(const Enlargement& k, Subset x0);
Failure gns_stack(const Gns& psi);
Failure gns_roundtrip(const Gts& g);
Failure gns_continuity(const Gns& dom, const Gns& cod, const PointFn& f);

// Hunt predicates: a value means the instance is a counterexample to the converse claim.
Failure hunt_gns_converse(const Gns& dom, const Gns& cod, const PointFn& f);
Failure hunt_prop51_equality(const MonotoneMap& gamma, Subset x0);
Failure hunt_prop52_subspace_converse(const Enlargement& k, Subset x0);
Failure hunt_tautology(const Gts& g);

// JSON instances carry a "kind" naming one of the functions above.
json source_json(const Source& s);
json sink_json(const Sink& s);
json fn_json(const PointFn& f);
json spaces_json(const std::vector<Gts>& gs);
json cylinders_json(const std::vector<Gts>& factors, const std::vector<CylinderUnion>& members);
Failure run_json(const json& instance);

} // namespace gentop::checks
