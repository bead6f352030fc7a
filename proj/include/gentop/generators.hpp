#pragma once

#include <string>
#include <vector>

#include "gentop/maps.hpp"
#include "gentop/report.hpp"

namespace gentop {

// γ ∈ Γ(X): monotone, not necessarily increasing.
struct MonotoneMap {
    GroundSet ground;
    std::vector<Subset> table;

    MonotoneMap() = default;
    MonotoneMap(GroundSet g, std::vector<Subset> t); // validates monotonicity
    Subset operator()(Subset a) const { return table[a]; }

    static MonotoneMap identity(const GroundSet& g);
    static MonotoneMap constant(const GroundSet& g, Subset value);
};

Gts gt_from_gamma(const MonotoneMap& gamma);
MonotoneMap interior_as_gamma(const Gts& g);

// The two-point counterexample: X = {a,b}, X₀ = {a}, γA = ∅ for A ⊆ X₀, X otherwise.
MonotoneMap prop51_counterexample_gamma();

// Parts laid out as in sum(); γ(A) = ∐ γ_α(A ∩ X_α).
MonotoneMap gamma_sum(const std::vector<MonotoneMap>& parts);
PropertyReport check_prop51_sum(const std::vector<MonotoneMap>& parts);
MonotoneMap gamma_subspace(const MonotoneMap& gamma, Subset x0);
// attempted/passed track the inclusion μ(γ₀) ⊆ μ(γ)|X₀; notes say whether equality held.
PropertyReport check_prop51_subspace(const MonotoneMap& gamma, Subset x0, bool* equality = nullptr);

// k : μ → P(X), stored parallel to base.opens().
struct Enlargement {
    Gts base;
    std::vector<Subset> table;

    Enlargement() = default;
    Enlargement(Gts b, std::vector<Subset> t); // validates M ⊆ kM
    Subset operator()(Subset m) const;

    static Enlargement identity(const Gts& g);
};

Gts kappa_gt(const Enlargement& k);

Enlargement enlargement_sum(const std::vector<Enlargement>& parts);
// Equality predicted <=> at most one nonempty part or every k_α∅ = ∅.
bool prop52_sum_criterion(const std::vector<Enlargement>& parts);
PropertyReport check_prop52_sum(const std::vector<Enlargement>& parts, bool* equality = nullptr);
// Requires k monotone, base closed under pairwise ∩, x0 open; otherwise a precondition error.
Enlargement enlargement_subspace(const Enlargement& k, Subset x0);
PropertyReport check_prop52_subspace(const Enlargement& k, Subset x0, bool* equality = nullptr);

struct Gns {
    GroundSet ground;
    std::vector<SetFamily> nbhd;

    Gns() = default;
    Gns(GroundSet g, std::vector<SetFamily> n); // validates V ∈ ψ(x) ⟹ x ∈ V
};

SetFamily stack_hull(const SetFamily& fam, int n);
Gns stack_hull(const Gns& psi);
Gts gt_from_gns(const Gns& psi);
Gns gns_from_gt(const Gts& g);
bool gns_continuous(const PointFn& f, const Gns& psi_dom, const Gns& psi_cod);

// A finite chain is its ground set in ascending order.
Gts order_gt(const GroundSet& chain);
bool is_monotone_between_chains(const PointFn& f, int cod_size);
// Continuity versus the characterization: no map for |X| = 1 < |Y|, else monotone maps.
PropertyReport check_prop415(const GtsMap& f);
bool prop415_characterization(const PointFn& f, int dom_size, int cod_size);

} // namespace gentop
