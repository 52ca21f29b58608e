#include "magari4/term.hpp"

#include <unordered_map>
#include <unordered_set>

#include "magari4/errors.hpp"

namespace magari4 {

Term Term::variable(std::size_t arity, std::size_t index) {
    if (index >= arity) throw UsageError("term variable index out of range");
    return Term(std::make_shared<const TermNode>(TermNode{arity, TermVar{index}}));
}

Term Term::apply(std::size_t member, std::vector<Term> args, std::size_t arity) {
    for (const auto& a : args)
        if (a.arity() != arity) throw UsageError("term arguments must share the context arity");
    return Term(std::make_shared<const TermNode>(TermNode{arity, TermApply{member, std::move(args)}}));
}

std::size_t Term::arity() const noexcept { return node_->arity; }

std::vector<std::string> context_variables(std::size_t arity) {
    if (arity == 1) return {"p"};
    if (arity == 2) return {"p", "q"};
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= arity; ++i) out.push_back("p" + std::to_string(i));
    return out;
}

Term compose(const Term& outer, std::span<const Term> args) {
    if (args.size() != outer.arity())
        throw UsageError("compose: " + std::to_string(outer.arity()) + " arguments expected, got " +
                         std::to_string(args.size()));
    if (args.empty()) throw UsageError("compose needs at least one argument");
    const std::size_t k = args.front().arity();
    for (const auto& a : args)
        if (a.arity() != k) throw UsageError("compose arguments must share one arity");
    std::unordered_map<const TermNode*, Term> memo;
    auto walk = [&](auto&& self, const Term& t) -> Term {
        if (auto it = memo.find(t.id()); it != memo.end()) return it->second;
        Term out = args.front();
        if (auto* v = std::get_if<TermVar>(&t.node().value)) {
            out = args[v->index];
        } else {
            const auto& ap = std::get<TermApply>(t.node().value);
            std::vector<Term> sub;
            sub.reserve(ap.args.size());
            for (const auto& a : ap.args) sub.push_back(self(self, a));
            out = Term::apply(ap.member, std::move(sub), k);
        }
        memo.emplace(t.id(), out);
        return out;
    };
    return walk(walk, outer);
}

Term compose(const Term& outer, std::initializer_list<Term> args) {
    return compose(outer, std::span<const Term>(args.begin(), args.size()));
}

FuncTable realize(const Term& t, std::span<const FuncTable> member_tables) {
    std::unordered_map<const TermNode*, FuncTable> memo;
    auto walk = [&](auto&& self, const Term& u) -> const FuncTable& {
        if (auto it = memo.find(u.id()); it != memo.end()) return it->second;
        FuncTable out;
        if (auto* v = std::get_if<TermVar>(&u.node().value)) {
            out = FuncTable::projection(u.arity(), v->index);
        } else {
            const auto& ap = std::get<TermApply>(u.node().value);
            if (ap.member >= member_tables.size()) throw UsageError("term refers to an unknown member");
            const auto& g = member_tables[ap.member];
            if (g.arity() != ap.args.size())
                throw UsageError("member " + std::to_string(ap.member + 1) + " has arity " +
                                 std::to_string(g.arity()) + " but is applied to " +
                                 std::to_string(ap.args.size()) + " argument(s)");
            std::vector<FuncTable> sub;
            sub.reserve(ap.args.size());
            for (const auto& a : ap.args) sub.push_back(self(self, a));
            out = magari4::compose(g, sub);
        }
        return memo.emplace(u.id(), std::move(out)).first->second;
    };
    return walk(walk, t);
}

Formula expand(const Term& t, std::span<const Formula> member_formulas,
               std::span<const std::vector<std::string>> member_vars) {
    const auto names = context_variables(t.arity());
    std::unordered_map<const TermNode*, Formula> memo;
    auto walk = [&](auto&& self, const Term& u) -> Formula {
        if (auto it = memo.find(u.id()); it != memo.end()) return it->second;
        Formula out;
        if (auto* v = std::get_if<TermVar>(&u.node().value)) {
            out = Formula::var(names[v->index]);
        } else {
            const auto& ap = std::get<TermApply>(u.node().value);
            const auto& vars = member_vars[ap.member];
            if (vars.size() != ap.args.size())
                throw UsageError("member variable list does not match its application");
            std::map<std::string, Formula, std::less<>> subst;
            for (std::size_t i = 0; i < vars.size(); ++i) subst.emplace(vars[i], self(self, ap.args[i]));
            out = substitute(member_formulas[ap.member], subst);
        }
        memo.emplace(u.id(), out);
        return out;
    };
    return walk(walk, t);
}

std::string to_string(const Term& t, std::span<const std::string> member_labels) {
    const auto names = context_variables(t.arity());
    std::string out;
    auto walk = [&](auto&& self, const Term& u) -> void {
        if (auto* v = std::get_if<TermVar>(&u.node().value)) {
            out += names[v->index];
            return;
        }
        const auto& ap = std::get<TermApply>(u.node().value);
        out += ap.member < member_labels.size() ? member_labels[ap.member]
                                                : "F" + std::to_string(ap.member + 1);
        out += '(';
        for (std::size_t i = 0; i < ap.args.size(); ++i) {
            if (i) out += ", ";
            self(self, ap.args[i]);
        }
        out += ')';
    };
    walk(walk, t);
    return out;
}

std::size_t dag_size(const Term& t) {
    std::unordered_set<const TermNode*> seen;
    auto walk = [&](auto&& self, const Term& u) -> void {
        if (!seen.insert(u.id()).second) return;
        if (auto* ap = std::get_if<TermApply>(&u.node().value))
            for (const auto& a : ap->args) self(self, a);
    };
    walk(walk, t);
    return seen.size();
}

}  // namespace magari4
