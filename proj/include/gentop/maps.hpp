#pragma once

#include <string>
#include <vector>

#include "gentop/gts.hpp"

namespace gentop {

using PointFn = std::vector<int>;

struct GtsMap {
    Gts dom;
    Gts cod;
    PointFn table;

    GtsMap() = default;
    // Validates that the table is total into cod.
    GtsMap(Gts d, Gts c, PointFn t);

    static GtsMap identity(const Gts& g);

    Subset image(Subset a) const;
    Subset preimage(Subset b) const;
    bool injective() const;
    bool surjective() const;
};

GtsMap compose(const GtsMap& g, const GtsMap& f); // g ∘ f

// A failing verdict carries the violating sets in witness and a readable detail.
struct Verdict {
    bool holds = true;
    std::vector<Subset> witness;
    std::string detail;

    explicit operator bool() const { return holds; }
};

Verdict is_continuous(const GtsMap& f);
Verdict is_continuous_closure(const GtsMap& f);
Verdict is_open_map(const GtsMap& f);
Verdict is_homeomorphism(const GtsMap& f);
Verdict is_dense(const GtsMap& f);
Gts image_subspace(const GtsMap& f);

} // namespace gentop
