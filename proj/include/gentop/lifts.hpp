#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gentop/maps.hpp"

namespace gentop {

struct SourceLeg {
    PointFn fn; // carrier -> cod ground
    Gts cod;
};

struct Source {
    GroundSet carrier;
    std::vector<SourceLeg> legs;
};

struct SinkLeg {
    Gts dom;
    PointFn fn; // dom ground -> carrier
};

struct Sink {
    GroundSet carrier;
    std::vector<SinkLeg> legs;
};

void validate(const Source& src);
void validate(const Sink& snk);

struct IterationTrace {
    Subset query = 0;
    std::vector<std::pair<int, Subset>> stages; // (step, γ^step A), strictly increasing
    int stabilized_at = 0;                      // least k with γ^{k+1}A = γ^k A
};

using SubsetFn = std::function<Subset(Subset)>;

// gamma must be increasing and monotone; validated exhaustively for small grounds.
ClosureOp idempotent_hull(const GroundSet& ground, SubsetFn gamma);
IterationTrace hull_trace(const SubsetFn& gamma, Subset a);
void validate_increasing_monotone(const GroundSet& ground, const SubsetFn& gamma);

Gts weak_structure_opens(const Source& src);
ClosureOp weak_structure_closure(const Source& src);
Gts strong_structure_opens(const Sink& snk);
ClosureOp strong_structure_closure(const Sink& snk);
SubsetFn strong_structure_gamma(const Sink& snk);

// Result lives on the compressed ground of x0's labels (in ground order).
Gts subspace(const Gts& g, Subset x0);
ClosureOp subspace_closure(const Gts& g, Subset x0);
GtsMap inclusion(const Gts& g, Subset x0);
Subset compress(Subset a, Subset x0);   // coordinates of a ∩ x0 inside the subspace ground
Subset decompress(Subset a, Subset x0); // inverse of compress

Gts quotient(const Gts& g, const GroundSet& target, const PointFn& q);
ClosureOp quotient_closure(const Gts& g, const GroundSet& target, const PointFn& q);
SubsetFn quotient_gamma(const Gts& g, const GroundSet& target, const PointFn& q);

struct ProductGts {
    Gts space;
    std::vector<GtsMap> projections;
    std::vector<Gts> factors;

    std::vector<int> coords(int point) const;
    int point(const std::vector<int>& coords) const;
};

// Points are tuples in lexicographic order, last factor fastest. Labels "(a,b)".
ProductGts product(const std::vector<Gts>& factors);
GroundSet product_ground(const std::vector<Gts>& factors);
// Closure by the coordinate formula c(M) = ∏ d_α π_α M.
Subset product_closure_formula(const ProductGts& p, Subset m);

struct SumGts {
    Gts space;
    std::vector<GtsMap> injections;
    std::vector<int> offsets; // part α occupies bits [offsets[α], offsets[α] + |X_α|)
};

// Labels are kept when globally distinct, otherwise prefixed "α:".
SumGts sum(const std::vector<Gts>& parts);
GroundSet sum_ground(const std::vector<GroundSet>& parts);

Gts lattice_join(const GroundSet& ground, const std::vector<Gts>& gs);
Gts lattice_meet(const GroundSet& ground, const std::vector<Gts>& gs);
ClosureOp join_closure(const GroundSet& ground, const std::vector<Gts>& gs);
ClosureOp meet_closure(const GroundSet& ground, const std::vector<Gts>& gs);
SubsetFn meet_gamma(const GroundSet& ground, const std::vector<Gts>& gs);

Gts csaszar_product(const std::vector<Gts>& factors);
bool csaszar_coincidence(const std::vector<Gts>& factors);
// The stated characterization: |J| >= 2, all factors nonempty:
// equal <=> every factor strong and at most one factor has opens != {∅, Y}.
bool csaszar_characterization(const std::vector<Gts>& factors);

} // namespace gentop
