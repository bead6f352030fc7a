#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "gentop/error.hpp"
#include "gentop/subset.hpp"

namespace gentop {

struct GroundSet {
    std::vector<std::string> labels;

    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> l);

    // Labels "0".."n-1".
    static GroundSet range(int n);

    int size() const { return static_cast<int>(labels.size()); }
    Subset full() const { return full_set(size()); }
    int index_of(const std::string& label) const; // -1 if absent
    bool operator==(const GroundSet&) const = default;
};

std::string format_subset(const GroundSet& ground, Subset s);

// Smallest family containing base and ∅, closed under unions.
SetFamily union_close(const SetFamily& base, int n);

class Gts {
public:
    Gts();
    // Validates ∅ ∈ opens, membership in ground, pairwise-union closure.
    Gts(GroundSet ground, SetFamily opens);

    static Gts from_base(GroundSet ground, const SetFamily& base);
    // Trusted constructor: opens must already be a canonical GT.
    static Gts trusted(GroundSet ground, SetFamily opens);
    static Gts discrete(GroundSet ground);
    static Gts indiscrete(GroundSet ground); // opens {∅}

    const GroundSet& ground() const { return impl_->ground; }
    int size() const { return impl_->ground.size(); }
    Subset full() const { return impl_->ground.full(); }
    const SetFamily& opens() const { return impl_->opens; }

    bool is_open(Subset s) const;
    bool is_closed(Subset s) const { return is_open(full() & ~s); }
    bool strong() const { return is_open(full()); }
    // The largest open set; union-closure makes it the numeric maximum.
    Subset union_of_opens() const { return impl_->opens.back(); }

    Subset closure(Subset a) const;
    Subset interior(Subset a) const;
    SetFamily closed_sets() const;

    std::string fmt(Subset s) const { return format_subset(ground(), s); }

    bool operator==(const Gts& o) const;

private:
    struct Impl {
        GroundSet ground;
        SetFamily opens;
        std::vector<std::uint64_t> bitmap; // membership, for small grounds
    };
    explicit Gts(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    static std::shared_ptr<const Impl> make_impl(GroundSet ground, SetFamily opens);

    std::shared_ptr<const Impl> impl_;
};

Gts gts_from_base(const GroundSet& ground, const SetFamily& base);

// Increasing, monotone, idempotent self-map on subsets.
class ClosureOp {
public:
    using Fn = std::function<Subset(Subset)>;

    static constexpr int kTableLimit = 12;

    // Validates the three laws; the error names the witness subsets.
    static ClosureOp from_table(GroundSet ground, std::vector<Subset> table);
    // Materialized and validated when ground size <= kTableLimit, lazy above.
    static ClosureOp from_function(GroundSet ground, Fn fn);

    const GroundSet& ground() const { return ground_; }
    Subset operator()(Subset a) const { return table_.empty() ? fn_(a) : table_[a]; }
    bool materialized() const { return !table_.empty(); }
    const std::vector<Subset>& table() const { return table_; }

private:
    static void validate(const GroundSet& ground, const std::vector<Subset>& table);

    GroundSet ground_;
    std::vector<Subset> table_;
    Fn fn_;
};

ClosureOp closure_op_from_gts(const Gts& g);
Gts gts_from_closure_op(const ClosureOp& c);

} // namespace gentop
