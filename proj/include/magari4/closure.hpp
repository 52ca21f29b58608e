#pragma once

// Brute-force expressibility oracle. The k-ary fragment of the clone generated by
// a system of operations is the least set of k-ary tables that contains the k
// projections and is closed under composing a member with tables already in the
// set. Constants are not seeded; only variables are free.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "magari4/func_table.hpp"

namespace magari4 {

struct SigmaMember {
    std::string label;
    FuncTable table;
};

class SystemSigma {
public:
    SystemSigma() = default;
    /// Throws UsageError on duplicate labels or arity-0 members.
    explicit SystemSigma(std::vector<SigmaMember> members);

    const std::vector<SigmaMember>& members() const noexcept { return members_; }
    void add(SigmaMember member);

private:
    std::vector<SigmaMember> members_;
};

struct ClosureLimits {
    std::size_t max_tables = std::size_t{1} << 22;
    std::uint64_t max_compositions = 1'000'000'000;
};

class ClosureFragment {
public:
    ClosureFragment(std::size_t k, std::vector<FuncTable> tables);

    std::size_t arity() const noexcept { return k_; }
    std::size_t size() const noexcept { return tables_.size(); }
    /// In discovery order: projections first, then round by round.
    const std::vector<FuncTable>& tables() const noexcept { return tables_; }
    bool contains(const FuncTable& t) const { return index_.count(t) > 0; }

private:
    std::size_t k_;
    std::vector<FuncTable> tables_;
    std::set<FuncTable> index_;
};

/// Least fixpoint for k in 1..3. Throws UsageError for other k and
/// ResourceLimitExceeded when the limits are hit.
ClosureFragment closure_fragment(const SystemSigma& sigma, std::size_t k,
                                 const ClosureLimits& limits = {});

/// Constants c whose unary constant table lies in the unary fragment.
std::vector<Element> expressible_constants(const SystemSigma& sigma,
                                           const ClosureLimits& limits = {});

/// Membership of target in the fragment of its own arity (1..3). Stops as soon as
/// the target is produced; answers false early when some built-in relation is
/// preserved by every member but not by the target.
bool contains(const SystemSigma& sigma, const FuncTable& target, const ClosureLimits& limits = {});

}  // namespace magari4
