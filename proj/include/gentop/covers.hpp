#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gentop/gts.hpp"
#include "gentop/lifts.hpp"
#include "gentop/separation.hpp"

namespace gentop {

struct Cover {
    Gts space;
    SetFamily members;

    Cover(Gts g, SetFamily m); // members open, union = X
};

struct KappaBudget {
    enum class Kind { Finite, Aleph0, Aleph1 };
    Kind kind = Kind::Aleph0;
    int n = 0; // Finite: subcovers must have fewer than n members

    static KappaBudget finite(int n);
    static KappaBudget aleph0() { return {Kind::Aleph0, 0}; }
    static KappaBudget aleph1() { return {Kind::Aleph1, 0}; }
    static KappaBudget parse(const std::string& s);
    std::string str() const;
    bool admits(std::size_t size) const { return kind != Kind::Finite || size < static_cast<std::size_t>(n); }
};

// Exact minimum-cardinality subcover; ties broken by canonical order.
SetFamily min_subcover(const Cover& c);
// Largest cover of X by opens in which every member has a private point.
SetFamily max_irredundant_cover(const Gts& g);
AxiomVerdict is_kappa_compact(const Gts& g, const KappaBudget& kappa);

// A cylinder π_α⁻¹(M) is (α, M); a product cover member is a union of cylinders.
using CylinderUnion = std::vector<std::pair<int, Subset>>;

struct SubcoverExtraction {
    std::vector<int> chosen; // indices into the member list
    int coordinate = -1;     // α₀ whose slices cover Y_α₀
};

// Throws Precondition naming an uncovered point when the members do not cover the product.
SubcoverExtraction product_subcover_extract(const ProductGts& p, const std::vector<CylinderUnion>& members,
                                            const KappaBudget& kappa);
Subset cylinder_union_set(const ProductGts& p, const CylinderUnion& u);

} // namespace gentop
