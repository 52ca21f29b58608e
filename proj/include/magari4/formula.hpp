#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "magari4/algebra.hpp"
#include "magari4/func_table.hpp"

namespace magari4 {

enum class UnaryOp : std::uint8_t { Not, Delta };
enum class BinaryOp : std::uint8_t { And, Or, Imp };

struct FormulaNode;

/// Immutable formula over variables, the four constants, and the five connectives.
///
/// Box and equivalence are sugar and never appear as nodes. Subtrees are shared, so
/// copying is cheap and substitution results are DAGs; structural equality and all
/// traversals treat them as the trees they denote.
class Formula {
public:
    Formula();  // the constant 0

    static Formula var(std::string name);
    static Formula constant(Element value);
    static Formula unary(UnaryOp op, Formula child);
    static Formula binary(BinaryOp op, Formula left, Formula right);

    const FormulaNode& node() const noexcept { return *node_; }
    const FormulaNode* id() const noexcept { return node_.get(); }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const FormulaNode> node_;
};

struct VarNode {
    std::string name;
};
struct ConstNode {
    Element value;
};
struct UnaryNode {
    UnaryOp op;
    Formula child;
};
struct BinaryNode {
    BinaryOp op;
    Formula left;
    Formula right;
};

struct FormulaNode {
    std::variant<VarNode, ConstNode, UnaryNode, BinaryNode> value;
};

Formula operator~(const Formula& f);
Formula operator&(const Formula& a, const Formula& b);
Formula operator|(const Formula& a, const Formula& b);
Formula delta(const Formula& f);
Formula implies(const Formula& a, const Formula& b);
/// a & Delta a
Formula box(const Formula& a);
/// (a -> b) & (b -> a)
Formula equiv(const Formula& a, const Formula& b);

using Valuation = std::map<std::string, Element, std::less<>>;

/// Identifier rule for variables: a letter, then letters, digits or '_', and not
/// one of the reserved words `rho`, `sigma`.
bool is_variable_name(std::string_view name);

Formula parse(std::string_view text);
std::string print(const Formula& f);

std::set<std::string> free_variables(const Formula& f);

/// Number of nodes in the tree the formula denotes (shared subtrees counted per
/// occurrence), saturating at SIZE_MAX.
std::size_t tree_size(const Formula& f);

Element evaluate(const Formula& f, const Valuation& v);

/// Throws UsageError if var_order misses a free variable or repeats a name.
FuncTable truth_table(const Formula& f, const std::vector<std::string>& var_order);

/// Truth table over the sorted free variables.
FuncTable truth_table(const Formula& f);

bool equivalent(const Formula& f, const Formula& g);

/// A valuation of the joint free variables on which f and g differ.
std::optional<Valuation> distinguishing_valuation(const Formula& f, const Formula& g);

/// a[p/b]
Formula substitute(const Formula& a, std::string_view p, const Formula& b);

/// Simultaneous substitution of every mapped variable.
Formula substitute(const Formula& a, const std::map<std::string, Formula, std::less<>>& subst);

}  // namespace magari4
