#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentop/maps.hpp"

namespace gentop {

enum class Axiom { T0, T1, T2, Regular, T3, Normal, T4, CompletelyRegular, T3_5 };

std::string axiom_name(Axiom a);
Axiom parse_axiom(const std::string& s); // throws UnknownId

// Witness layout on failure:
//   T0, T1, T2: {point-set of the offending pair}; T1 lists (x, y) as {bit x, bit y}
//   Regular, CompletelyRegular: {bit x, F}
//   Normal: {F1, F2}
struct AxiomVerdict {
    Axiom axiom = Axiom::T0;
    bool holds = true;
    std::vector<Subset> witness;
    std::string detail;
};

AxiomVerdict check_axiom(const Gts& g, Axiom axiom);

// An open D with open complement, x ∈ D, D ∩ F = ∅; first in canonical order.
std::optional<Subset> cr_separator(const Gts& g, int x, Subset f);
// Brute force over maps into a finite γ₀-trace with f(x) = 0, f(F) ⊆ {1}.
bool cr_oracle(const Gts& g, int x, Subset f);

std::pair<Gts, GtsMap> t0_reflection(const Gts& g);

// Two-valued map into the γ₀-trace on {0,1}: 0 on f1, 1 on f2.
GtsMap urysohn_witness(const Gts& g, Subset f1, Subset f2);

} // namespace gentop
