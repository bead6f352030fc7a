#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentop/maps.hpp"
#include "gentop/report.hpp"

namespace gentop {

// Exact point of [0,1].
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    std::string str() const;
    static Rational parse(const std::string& s);

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b)
    {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
};

Rational midpoint(const Rational& a, const Rational& b);

// Trace of ([0,1], γ₀) on the given points; ground sorted ascending, labels from str().
Gts gamma0_trace(std::vector<Rational> points);
const Gts& gamma0_two(); // trace on {0, 1}

struct EmbeddingLemmaResult {
    bool monosource = false;
    bool base_condition = false;
    bool homeomorphism = false; // only evaluated when both conditions hold
    std::optional<Gts> image;   // image subspace of the induced map
    std::string detail;
};

// Legs must be continuous maps out of g (precondition).
EmbeddingLemmaResult check_embedding_lemma(const Gts& g, const std::vector<GtsMap>& legs);
PropertyReport embedding_lemma_report(const Gts& g, const std::vector<GtsMap>& legs);

struct EmbeddingCertificate {
    std::vector<std::pair<int, Subset>> index;  // J = {(x, M) : x ∈ M ∈ μ}, canonical order
    std::vector<Subset> zero_sets;              // per α, the points mapped to 0
    std::vector<std::vector<int>> coordinates;  // per α, the 0/1 value of each point
    std::vector<std::string> image_labels;      // per point, its tuple
    Gts image;                                  // image subspace, relabelled by tuples
    std::vector<int> reduced;                   // J′: indices with M ≠ X
    bool injective = false;
    bool continuous = false;
    bool open_onto_image = false;
    bool homeomorphism = false;
    bool image_matches_input = false;
    bool dense_in_reduced = false;
    bool materialized = false; // product small enough to recheck with the maps predicates
    std::string detail;

    bool verified() const
    {
        return injective && continuous && open_onto_image && homeomorphism && image_matches_input && dense_in_reduced;
    }
};

EmbeddingCertificate tychonoff_embed(const Gts& g);

struct DenseExtension {
    std::optional<Gts> codomain; // present when it fits the ground cap
    std::optional<GtsMap> embedding;
    int reduced_dimension = 0;
    PropertyReport report;
};

DenseExtension dense_compact_t4_extension(const Gts& g);

PropertyReport dense_two_points(int n);

} // namespace gentop
