#include "magari4/formula.hpp"

#include <cctype>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "magari4/errors.hpp"

namespace magari4 {

Formula::Formula() : Formula(constant(Element::Zero)) {}

Formula Formula::var(std::string name) {
    if (!is_variable_name(name)) throw UsageError("not a variable name: '" + name + "'");
    return Formula(std::make_shared<const FormulaNode>(FormulaNode{VarNode{std::move(name)}}));
}

Formula Formula::constant(Element value) {
    static const std::array<std::shared_ptr<const FormulaNode>, 4> kConstants{
        std::make_shared<const FormulaNode>(FormulaNode{ConstNode{Element::Zero}}),
        std::make_shared<const FormulaNode>(FormulaNode{ConstNode{Element::Rho}}),
        std::make_shared<const FormulaNode>(FormulaNode{ConstNode{Element::Sigma}}),
        std::make_shared<const FormulaNode>(FormulaNode{ConstNode{Element::One}}),
    };
    return Formula(kConstants[code(value)]);
}

Formula Formula::unary(UnaryOp op, Formula child) {
    return Formula(std::make_shared<const FormulaNode>(FormulaNode{UnaryNode{op, std::move(child)}}));
}

Formula Formula::binary(BinaryOp op, Formula left, Formula right) {
    return Formula(std::make_shared<const FormulaNode>(
        FormulaNode{BinaryNode{op, std::move(left), std::move(right)}}));
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.id() == b.id()) return true;
    const auto& x = a.node().value;
    const auto& y = b.node().value;
    if (x.index() != y.index()) return false;
    if (auto* v = std::get_if<VarNode>(&x)) return v->name == std::get<VarNode>(y).name;
    if (auto* c = std::get_if<ConstNode>(&x)) return c->value == std::get<ConstNode>(y).value;
    if (auto* u = std::get_if<UnaryNode>(&x)) {
        const auto& w = std::get<UnaryNode>(y);
        return u->op == w.op && u->child == w.child;
    }
    const auto& l = std::get<BinaryNode>(x);
    const auto& r = std::get<BinaryNode>(y);
    return l.op == r.op && l.left == r.left && l.right == r.right;
}

Formula operator~(const Formula& f) { return Formula::unary(UnaryOp::Not, f); }
Formula operator&(const Formula& a, const Formula& b) { return Formula::binary(BinaryOp::And, a, b); }
Formula operator|(const Formula& a, const Formula& b) { return Formula::binary(BinaryOp::Or, a, b); }
Formula delta(const Formula& f) { return Formula::unary(UnaryOp::Delta, f); }
Formula implies(const Formula& a, const Formula& b) { return Formula::binary(BinaryOp::Imp, a, b); }
Formula box(const Formula& a) { return a & delta(a); }
Formula equiv(const Formula& a, const Formula& b) { return implies(a, b) & implies(b, a); }

bool is_variable_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return name != "rho" && name != "sigma";
}

std::set<std::string> free_variables(const Formula& f) {
    std::set<std::string> out;
    std::unordered_set<const FormulaNode*> seen;
    auto walk = [&](auto&& self, const Formula& g) -> void {
        if (!seen.insert(g.id()).second) return;
        const auto& n = g.node().value;
        if (auto* v = std::get_if<VarNode>(&n)) {
            out.insert(v->name);
        } else if (auto* u = std::get_if<UnaryNode>(&n)) {
            self(self, u->child);
        } else if (auto* b = std::get_if<BinaryNode>(&n)) {
            self(self, b->left);
            self(self, b->right);
        }
    };
    walk(walk, f);
    return out;
}

std::size_t tree_size(const Formula& f) {
    constexpr auto kMax = std::numeric_limits<std::size_t>::max();
    std::unordered_map<const FormulaNode*, std::size_t> memo;
    auto add = [](std::size_t a, std::size_t b) { return a > kMax - b ? kMax : a + b; };
    auto walk = [&](auto&& self, const Formula& g) -> std::size_t {
        if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
        std::size_t size = 1;
        const auto& n = g.node().value;
        if (auto* u = std::get_if<UnaryNode>(&n)) {
            size = add(size, self(self, u->child));
        } else if (auto* b = std::get_if<BinaryNode>(&n)) {
            size = add(size, add(self(self, b->left), self(self, b->right)));
        }
        memo.emplace(g.id(), size);
        return size;
    };
    return walk(walk, f);
}

namespace {

// Straight-line program over slots, one slot per distinct node, in dependency order.
struct Program {
    enum class Op : std::uint8_t { Var, Const, Not, Delta, And, Or, Imp };
    struct Instr {
        Op op;
        std::uint32_t a;
        std::uint32_t b;
    };
    std::vector<Instr> code;

    Element run(std::span<const Element> inputs, std::vector<Element>& slots) const {
        slots.resize(code.size());
        for (std::size_t i = 0; i < code.size(); ++i) {
            const auto& in = code[i];
            switch (in.op) {
                case Op::Var: slots[i] = inputs[in.a]; break;
                case Op::Const: slots[i] = from_code(in.a); break;
                case Op::Not: slots[i] = complement(slots[in.a]); break;
                case Op::Delta: slots[i] = magari4::delta(slots[in.a]); break;
                case Op::And: slots[i] = meet(slots[in.a], slots[in.b]); break;
                case Op::Or: slots[i] = join(slots[in.a], slots[in.b]); break;
                case Op::Imp: slots[i] = magari4::implies(slots[in.a], slots[in.b]); break;
            }
        }
        return slots.back();
    }
};

// `var_index` maps a variable name to its input position; unknown names are
// reported through `on_unbound`.
template <typename Lookup>
Program compile(const Formula& f, Lookup&& var_index) {
    Program prog;
    std::unordered_map<const FormulaNode*, std::uint32_t> slot_of;
    auto emit = [&](auto&& self, const Formula& g) -> std::uint32_t {
        if (auto it = slot_of.find(g.id()); it != slot_of.end()) return it->second;
        Program::Instr in{};
        const auto& n = g.node().value;
        if (auto* v = std::get_if<VarNode>(&n)) {
            in = {Program::Op::Var, var_index(v->name), 0};
        } else if (auto* c = std::get_if<ConstNode>(&n)) {
            in = {Program::Op::Const, code(c->value), 0};
        } else if (auto* u = std::get_if<UnaryNode>(&n)) {
            const auto a = self(self, u->child);
            in = {u->op == UnaryOp::Not ? Program::Op::Not : Program::Op::Delta, a, 0};
        } else {
            const auto& b = std::get<BinaryNode>(n);
            const auto l = self(self, b.left);
            const auto r = self(self, b.right);
            const auto op = b.op == BinaryOp::And  ? Program::Op::And
                            : b.op == BinaryOp::Or ? Program::Op::Or
                                                   : Program::Op::Imp;
            in = {op, l, r};
        }
        const auto slot = static_cast<std::uint32_t>(prog.code.size());
        prog.code.push_back(in);
        slot_of.emplace(g.id(), slot);
        return slot;
    };
    emit(emit, f);
    return prog;
}

}  // namespace

Element evaluate(const Formula& f, const Valuation& v) {
    std::vector<Element> inputs;
    std::map<std::string, std::uint32_t, std::less<>> index;
    auto prog = compile(f, [&](const std::string& name) -> std::uint32_t {
        if (auto it = index.find(name); it != index.end()) return it->second;
        auto bound = v.find(name);
        if (bound == v.end()) throw EvaluationError(name);
        inputs.push_back(bound->second);
        const auto i = static_cast<std::uint32_t>(inputs.size() - 1);
        index.emplace(name, i);
        return i;
    });
    std::vector<Element> slots;
    return prog.run(inputs, slots);
}

FuncTable truth_table(const Formula& f, const std::vector<std::string>& var_order) {
    std::map<std::string, std::uint32_t, std::less<>> index;
    for (std::uint32_t i = 0; i < var_order.size(); ++i) {
        if (!index.emplace(var_order[i], i).second)
            throw UsageError("variable '" + var_order[i] + "' listed twice");
    }
    auto prog = compile(f, [&](const std::string& name) -> std::uint32_t {
        auto it = index.find(name);
        if (it == index.end())
            throw UsageError("free variable '" + name + "' missing from the variable order");
        return it->second;
    });
    const std::size_t n = var_order.size();
    std::vector<Element> entries(table_rows(n));
    std::vector<Element> inputs(n, Element::Zero);
    std::vector<Element> slots;
    for (std::size_t r = 0; r < entries.size(); ++r) {
        for (std::size_t i = 0; i < n; ++i)
            inputs[i] = from_code(static_cast<unsigned>((r >> (2 * (n - 1 - i))) & 3u));
        entries[r] = prog.run(inputs, slots);
    }
    return FuncTable(n, std::move(entries));
}

FuncTable truth_table(const Formula& f) {
    const auto vars = free_variables(f);
    return truth_table(f, std::vector<std::string>(vars.begin(), vars.end()));
}

std::optional<Valuation> distinguishing_valuation(const Formula& f, const Formula& g) {
    auto vars = free_variables(f);
    vars.merge(free_variables(g));
    const std::vector<std::string> order(vars.begin(), vars.end());
    const auto tf = truth_table(f, order);
    const auto tg = truth_table(g, order);
    for (std::size_t r = 0; r < tf.size(); ++r) {
        if (tf[r] != tg[r]) {
            Valuation v;
            const auto tuple = tuple_of(r, order.size());
            for (std::size_t i = 0; i < order.size(); ++i) v.emplace(order[i], tuple[i]);
            return v;
        }
    }
    return std::nullopt;
}

bool equivalent(const Formula& f, const Formula& g) { return !distinguishing_valuation(f, g); }

Formula substitute(const Formula& a, const std::map<std::string, Formula, std::less<>>& subst) {
    std::unordered_map<const FormulaNode*, Formula> memo;
    auto walk = [&](auto&& self, const Formula& g) -> Formula {
        if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
        Formula out = g;
        const auto& n = g.node().value;
        if (auto* v = std::get_if<VarNode>(&n)) {
            if (auto it = subst.find(v->name); it != subst.end()) out = it->second;
        } else if (auto* u = std::get_if<UnaryNode>(&n)) {
            auto child = self(self, u->child);
            if (child.id() != u->child.id()) out = Formula::unary(u->op, child);
        } else if (auto* b = std::get_if<BinaryNode>(&n)) {
            auto l = self(self, b->left);
            auto r = self(self, b->right);
            if (l.id() != b->left.id() || r.id() != b->right.id())
                out = Formula::binary(b->op, l, r);
        }
        memo.emplace(g.id(), out);
        return out;
    };
    return walk(walk, a);
}

Formula substitute(const Formula& a, std::string_view p, const Formula& b) {
    std::map<std::string, Formula, std::less<>> subst;
    subst.emplace(std::string(p), b);
    return substitute(a, subst);
}

namespace {

// Binding strength: -> 1, | 2, & 3, prefix operators and atoms 4.
int precedence(const Formula& f) {
    const auto& n = f.node().value;
    if (auto* b = std::get_if<BinaryNode>(&n)) {
        switch (b->op) {
            case BinaryOp::Imp: return 1;
            case BinaryOp::Or: return 2;
            case BinaryOp::And: return 3;
        }
    }
    return 4;
}

void print_into(const Formula& f, std::string& out) {
    const auto& n = f.node().value;
    if (auto* v = std::get_if<VarNode>(&n)) {
        out += v->name;
    } else if (auto* c = std::get_if<ConstNode>(&n)) {
        switch (c->value) {
            case Element::Zero: out += '0'; break;
            case Element::Rho: out += "rho"; break;
            case Element::Sigma: out += "sigma"; break;
            case Element::One: out += '1'; break;
        }
    } else if (auto* u = std::get_if<UnaryNode>(&n)) {
        out += u->op == UnaryOp::Not ? '~' : '#';
        const bool paren = precedence(u->child) < 4;
        if (paren) out += '(';
        print_into(u->child, out);
        if (paren) out += ')';
    } else {
        const auto& b = std::get<BinaryNode>(n);
        const int mine = precedence(f);
        // & and | associate to the left, -> to the right.
        const bool right_assoc = b.op == BinaryOp::Imp;
        const bool paren_left = right_assoc ? precedence(b.left) <= mine : precedence(b.left) < mine;
        const bool paren_right =
            right_assoc ? precedence(b.right) < mine : precedence(b.right) <= mine;
        if (paren_left) out += '(';
        print_into(b.left, out);
        if (paren_left) out += ')';
        out += b.op == BinaryOp::And ? " & " : b.op == BinaryOp::Or ? " | " : " -> ";
        if (paren_right) out += '(';
        print_into(b.right, out);
        if (paren_right) out += ')';
    }
}

}  // namespace

std::string print(const Formula& f) {
    std::string out;
    print_into(f, out);
    return out;
}

}  // namespace magari4
