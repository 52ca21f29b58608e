#pragma once

// Terms over a system of operations: a variable, or a member applied to terms.
// Every node carries the number of variables of its context, so a term denotes a
// table of that arity. Building F[p1/t1, ..., pn/tn] is a chain of weak
// substitutions; compose() performs it and keeps the result in this normal form.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "magari4/formula.hpp"
#include "magari4/func_table.hpp"

namespace magari4 {

struct TermNode;

class Term {
public:
    static Term variable(std::size_t arity, std::size_t index);
    /// member(args...); every arg must have `arity` variables.
    static Term apply(std::size_t member, std::vector<Term> args, std::size_t arity);

    std::size_t arity() const noexcept;
    const TermNode& node() const noexcept { return *node_; }
    const TermNode* id() const noexcept { return node_.get(); }

private:
    explicit Term(std::shared_ptr<const TermNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const TermNode> node_;
};

struct TermVar {
    std::size_t index;
};
struct TermApply {
    std::size_t member;
    std::vector<Term> args;
};
struct TermNode {
    std::size_t arity;
    std::variant<TermVar, TermApply> value;
};

/// Variable names of a context: p; p, q; p1 ... pk otherwise.
std::vector<std::string> context_variables(std::size_t arity);

/// outer[x_i / args_i]; the result has the arity of the args.
Term compose(const Term& outer, std::span<const Term> args);
Term compose(const Term& outer, std::initializer_list<Term> args);

/// Table of a term from the members' tables, bottom-up over the shared DAG.
FuncTable realize(const Term& t, std::span<const FuncTable> member_tables);

/// The formula the term stands for: each member's formula with its variables
/// (in `member_vars` order) replaced by the argument expansions.
Formula expand(const Term& t, std::span<const Formula> member_formulas,
               std::span<const std::vector<std::string>> member_vars);

/// Compact functional notation, e.g. `F2(F1(p, p))`.
std::string to_string(const Term& t, std::span<const std::string> member_labels);

/// Distinct nodes reachable from t.
std::size_t dag_size(const Term& t);

}  // namespace magari4
