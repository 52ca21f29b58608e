#include "magari4/constants_engine.hpp"

#include <algorithm>

#include "magari4/errors.hpp"
#include "magari4/synthesis.hpp"

namespace magari4 {

std::vector<std::string> member_variables(const Formula& f) {
    const auto vars = free_variables(f);
    if (vars.empty()) return {"p"};
    return {vars.begin(), vars.end()};
}

namespace {

const Term kP = Term::variable(1, 0);

std::string show(Element x) { return std::string(1, to_char(x)); }

std::string show_set(std::initializer_list<Element> xs) {
    std::string out = "{";
    for (Element x : xs) {
        if (out.size() > 1) out += ",";
        out += to_char(x);
    }
    return out + "}";
}

const std::string kLow = show_set({Element::Zero, Element::Rho});
const std::string kHigh = show_set({Element::Sigma, Element::One});

void require(bool ok, const std::string& what) {
    if (!ok) throw InternalProofCheckFailed("derivation check failed: " + what);
}

Element at1(const Derivation& d, Element x) { return d.realized[code(x)]; }

void merge_trace(std::vector<TraceStep>& into, const std::vector<TraceStep>& from) {
    for (const auto& s : from) {
        const bool present = std::any_of(into.begin(), into.end(), [&](const TraceStep& t) {
            return t.label == s.label && t.claim == s.claim;
        });
        if (!present) into.push_back(s);
    }
}

// Collects the trace of one construction and builds derivations from terms.
class Step {
public:
    Step(const TwelveSystem& sys, std::initializer_list<const Derivation*> inputs)
        : tables_(sys.tables()) {
        for (const auto* d : inputs) merge_trace(trace_, d->trace);
    }

    Derivation make(std::string label, Term term) {
        auto realized = realize(term, tables_);
        return Derivation{std::move(label), std::move(term), std::move(realized), trace_};
    }

    // Checks a claim and records it; also refreshes `d`'s trace.
    void claim(Derivation& d, bool ok, const std::string& text) {
        require(ok, d.label + ": " + text);
        note(d.label, text);
        d.trace = trace_;
    }

    void note(std::string label, std::string text) {
        trace_.push_back({std::move(label), std::move(text)});
    }

    Derivation finish(Derivation d) {
        merge_trace(d.trace, trace_);
        return d;
    }

private:
    std::vector<FuncTable> tables_;
    std::vector<TraceStep> trace_;
};

std::vector<Element> witness_values(const ViolationWitness& w) {
    std::vector<Element> out;
    for (const auto& col : w.selected_columns) out.push_back(col.front());
    return out;
}

std::string witness_text(int i, const SystemEntry& e) {
    std::string args;
    for (std::size_t r = 0; r < e.witness.image.size(); ++r) {
        if (r) args += "; ";
        std::string row;
        for (const auto& col : e.witness.selected_columns) row += to_char(col[r]);
        args += "F" + std::to_string(i) + "(" + row + ") = " + to_char(e.witness.image[r]);
    }
    return args + ", outside R" + std::to_string(i);
}

void check_a(const Derivation& a) {
    if (a.realized.arity() != 1 || !is_high(at1(a, Element::Zero)))
        throw PreconditionViolated(1, "A must be unary with A[0] in " + kHigh);
}

void check_b(const Derivation& b) {
    if (b.realized.arity() != 1 || !is_low(at1(b, Element::One)))
        throw PreconditionViolated(2, "B must be unary with B[1] in " + kLow);
}

Derivation lemma4_case1(const Derivation& a, const Derivation& bc, const TwelveSystem& sys);

}  // namespace

TwelveSystem::TwelveSystem(std::array<Formula, 12> formulas,
                           std::array<std::optional<ViolationWitness>, 12> witnesses) {
    for (int i = 1; i <= 12; ++i) {
        const auto k = static_cast<std::size_t>(i - 1);
        auto vars = member_variables(formulas[k]);
        auto table = truth_table(formulas[k], vars);
        const auto& rel = builtin_relation(i);
        ViolationWitness w;
        if (witnesses[k]) {
            w = *witnesses[k];
            bool ok = w.column_indices.size() == table.arity();
            Column image(rel.arity());
            for (std::size_t r = 0; ok && r < rel.arity(); ++r) {
                std::size_t key = 0;
                for (auto c : w.column_indices) {
                    ok = ok && c < rel.columns().size();
                    if (ok) key = (key << 2) | code(rel.columns()[c][r]);
                }
                if (ok) image[r] = table[key];
            }
            if (!ok || rel.contains(image))
                throw PreconditionViolated(i, "supplied witness for F" + std::to_string(i) +
                                                  " is not a violation of R" + std::to_string(i));
            w.selected_columns.clear();
            for (auto c : w.column_indices) w.selected_columns.push_back(rel.columns()[c]);
            w.image = image;
        } else {
            auto found = find_violation(table, rel);
            if (!found)
                throw PreconditionViolated(i, "F" + std::to_string(i) + " preserves R" +
                                                  std::to_string(i));
            w = std::move(*found);
        }
        entries_.push_back({formulas[k], std::move(vars), std::move(table), std::move(w)});
    }
}

TwelveSystem TwelveSystem::from_tables(const std::array<FuncTable, 12>& tables) {
    std::array<Formula, 12> formulas;
    for (std::size_t k = 0; k < 12; ++k) {
        if (tables[k].arity() > 9)
            throw UsageError("member tables are limited to arity 9");
        formulas[k] = synthesize(tables[k]);
    }
    TwelveSystem sys(formulas);
    for (std::size_t k = 0; k < 12; ++k)
        require(sys.entries_[k].table == tables[k], "synthesized F" + std::to_string(k + 1));
    return sys;
}

const SystemEntry& TwelveSystem::entry(int i) const {
    if (i < 1 || i > 12) throw UsageError("system index must be in 1..12");
    return entries_[static_cast<std::size_t>(i - 1)];
}

std::vector<FuncTable> TwelveSystem::tables() const {
    std::vector<FuncTable> out;
    for (const auto& e : entries_) out.push_back(e.table);
    return out;
}

std::vector<Formula> TwelveSystem::formulas() const {
    std::vector<Formula> out;
    for (const auto& e : entries_) out.push_back(e.formula);
    return out;
}

std::vector<std::vector<std::string>> TwelveSystem::variable_lists() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& e : entries_) out.push_back(e.vars);
    return out;
}

std::vector<std::string> TwelveSystem::labels() const {
    std::vector<std::string> out;
    for (int i = 1; i <= 12; ++i) out.push_back("F" + std::to_string(i));
    return out;
}

SystemSigma TwelveSystem::sigma() const {
    std::vector<SigmaMember> members;
    for (int i = 1; i <= 12; ++i) members.push_back({"F" + std::to_string(i), entry(i).table});
    return SystemSigma(std::move(members));
}

Derivation lemma1_A(const TwelveSystem& sys) {
    const auto& e = sys.entry(1);
    const auto alpha = witness_values(e.witness);
    if (!std::all_of(alpha.begin(), alpha.end(), is_low) || !is_high(e.witness.image.front()))
        throw PreconditionViolated(1, "F1 has no violation of R1");
    Step step(sys, {});
    step.note("F1", witness_text(1, e));
    auto d = step.make("A", Term::apply(0, std::vector<Term>(alpha.size(), kP), 1));
    step.claim(d, is_high(at1(d, Element::Zero)),
               "A(p) = F1(p, ..., p), A[0] = " + show(at1(d, Element::Zero)) + " in " + kHigh);
    return d;
}

Derivation lemma2_B(const TwelveSystem& sys) {
    const auto& e = sys.entry(2);
    const auto beta = witness_values(e.witness);
    if (!std::all_of(beta.begin(), beta.end(), is_high) || !is_low(e.witness.image.front()))
        throw PreconditionViolated(2, "F2 has no violation of R2");
    Step step(sys, {});
    step.note("F2", witness_text(2, e));
    auto d = step.make("B", Term::apply(1, std::vector<Term>(beta.size(), kP), 1));
    step.claim(d, is_low(at1(d, Element::One)),
               "B(p) = F2(p, ..., p), B[1] = " + show(at1(d, Element::One)) + " in " + kLow);
    return d;
}

Derivation lemma3(const Derivation& a, const Derivation& b, const TwelveSystem& sys) {
    check_a(a);
    check_b(b);
    if (at1(b, Element::Sigma) != at1(b, Element::One))
        throw PreconditionViolated(0, "lemma 3 needs B[s] = B[1]; " + b.label + " has B[s] = " +
                                          show(at1(b, Element::Sigma)) + ", B[1] = " +
                                          show(at1(b, Element::One)));
    Step step(sys, {&a, &b});
    const std::string role = b.label;
    step.note("Lemma 3", role + " in the role of B: " + role + "[1] = " + role + "[s] = " +
                             show(at1(b, Element::One)) + " in " + kLow);

    if (is_low(at1(b, Element::Zero))) {
        auto d = step.make(role + "[A[" + role + "(p)]]",
                           compose(b.term, {compose(a.term, {b.term})}));
        const auto c = d.realized.constant_value();
        step.claim(d, c && is_low(*c),
                   "case " + role + "[0] in " + kLow + ": constant " + (c ? show(*c) : "?") +
                       " in " + kLow);
        return step.finish(d);
    }

    // B[0] is high: go through F12's violation of R12.
    const auto& f12 = sys.entry(12);
    step.note("F12", witness_text(12, f12));
    std::vector<Term> d_args;
    for (auto c : f12.witness.column_indices) d_args.push_back(Term::variable(8, c));
    auto d = step.make("D", Term::apply(11, std::move(d_args), 8));
    using E = Element;
    const E at_alpha = d.realized.at(std::vector<E>{E::Zero, E::Zero, E::Rho, E::Rho, E::Sigma,
                                                    E::Sigma, E::One, E::One});
    const E at_beta = d.realized.at(std::vector<E>{E::Sigma, E::One, E::Sigma, E::One, E::Zero,
                                                   E::Rho, E::Zero, E::Rho});
    step.claim(d,
               at_alpha == f12.witness.image[0] && at_beta == f12.witness.image[1] &&
                   delta_class(at_alpha) == delta_class(at_beta),
               "D[0,0,r,r,s,s,1,1] = " + show(at_alpha) + ", D[s,1,s,1,0,r,0,r] = " +
                   show(at_beta) + ", same Delta-class");

    const Term p2 = Term::variable(2, 0);
    const Term q2 = Term::variable(2, 1);
    auto d_star = step.make("D*", compose(d.term, {p2, p2, p2, p2, q2, q2, q2, q2}));
    const E s01 = d_star.realized.at(std::vector<E>{E::Zero, E::One});
    const E s10 = d_star.realized.at(std::vector<E>{E::One, E::Zero});
    step.claim(d_star, delta_class(s01) == delta_class(s10),
               "D*(p,q) = D[p,p,p,p,q,q,q,q], D*[0,1] = " + show(s01) + ", D*[1,0] = " +
                   show(s10) + ", same Delta-class");

    const bool wrap = is_high(s01);
    auto d_prime = step.make("D'", wrap ? compose(b.term, {d_star.term}) : d_star.term);
    const E t01 = d_prime.realized.at(std::vector<E>{E::Zero, E::One});
    const E t10 = d_prime.realized.at(std::vector<E>{E::One, E::Zero});
    step.claim(d_prime, is_low(t01) && is_low(t10),
               std::string(wrap ? "D' = " + role + "[D*]" : "D' = D*") + ", D'[0,1] = " +
                   show(t01) + ", D'[1,0] = " + show(t10) + " in " + kLow);

    auto inner = step.make(role + "[D'[p, " + role + "(p)]]",
                           compose(b.term, {compose(d_prime.term, {kP, b.term})}));
    bool all_high = true;
    for (E x : inner.realized.entries()) all_high = all_high && is_high(x);
    step.claim(inner, all_high, "every value in " + kHigh);

    auto out = step.make(role + "[" + inner.label + "]", compose(b.term, {inner.term}));
    const auto c = out.realized.constant_value();
    step.claim(out, c && is_low(*c),
               "case " + role + "[0] in " + kHigh + ": constant " + (c ? show(*c) : "?") + " in " +
                   kLow);
    return step.finish(out);
}

namespace {

Derivation lemma4_case1(const Derivation& a, const Derivation& bc, const TwelveSystem& sys) {
    using E = Element;
    Step step(sys, {&a, &bc});
    const std::string role = bc.label;
    require(at1(bc, E::One) == E::Rho && at1(bc, E::Sigma) == E::Zero,
            "lemma 4 case 1 needs " + role + "[1] = r and " + role + "[s] = 0");
    step.note("Lemma 4.1", role + "[1] = r, " + role + "[s] = 0");

    const auto& f3 = sys.entry(3);
    step.note("F3", witness_text(3, f3));
    std::vector<Term> e_args;
    for (E x : witness_values(f3.witness)) e_args.push_back(x == E::Zero ? bc.term : kP);
    auto e = step.make("E", Term::apply(2, std::move(e_args), 1));
    const E es = at1(e, E::Sigma);
    step.claim(e, es == E::Rho || es == E::One, "E[s] = " + show(es) + " in {r,1}");

    auto e_star = step.make("E*", es == E::Rho ? e.term : compose(bc.term, {e.term}));
    step.claim(e_star, at1(e_star, E::Sigma) == E::Rho,
               std::string(es == E::Rho ? "E* = E" : "E* = " + role + "[E]") + ", E*[s] = r");

    const E e1 = at1(e_star, E::One);
    if (e1 == E::Rho) {
        step.note("Lemma 4.1.1", "E*[1] = r: E* satisfies the lemma 3 hypotheses");
        return lemma3(a, step.finish(e_star), sys);
    }
    step.claim(e_star, e1 == E::Zero, "E*[1] = 0");

    const auto& f7 = sys.entry(7);
    step.note("F7", witness_text(7, f7));
    std::vector<Term> h_args;
    for (E x : witness_values(f7.witness))
        h_args.push_back(x == E::Zero ? bc.term : x == E::Rho ? e_star.term : kP);
    auto h = step.make("H", Term::apply(6, std::move(h_args), 1));
    step.claim(h, at1(h, E::Sigma) == E::One, "H[s] = 1");

    const E h1 = at1(h, E::One);
    if (h1 == E::One) {
        auto bh = step.make(role + "[H]", compose(bc.term, {h.term}));
        step.claim(bh, at1(bh, E::Sigma) == E::Rho && at1(bh, E::One) == E::Rho,
                   "H[1] = 1, so " + role + "[H][s] = " + role + "[H][1] = r");
        return lemma3(a, step.finish(bh), sys);
    }
    step.claim(h, h1 == E::Sigma, "H[1] = s");

    const auto& f11 = sys.entry(11);
    step.note("F11", witness_text(11, f11));
    // Column k of R11 is (gamma, delta); the argument J_k must take gamma at s and
    // delta at 1: (0,r) -> B, (r,0) -> E*, (s,1) -> p, (1,s) -> H.
    const std::array<const Term*, 4> by_column{&bc.term, &e_star.term, &kP, &h.term};
    std::vector<Term> j_args;
    bool uses_h = false;
    for (auto c : f11.witness.column_indices) {
        j_args.push_back(*by_column[c]);
        uses_h = uses_h || c == 3;
    }
    if (uses_h)
        step.note("J", "argument for (gamma, delta) = (1, s) is H, whose profile H[s] = 1, H[1] = s "
                       "matches; " + role + " has profile (0, r)");
    auto j = step.make("J", Term::apply(10, std::move(j_args), 1));
    for (std::size_t i = 0; i < f11.witness.column_indices.size(); ++i) {
        const auto& col = f11.witness.selected_columns[i];
        const auto prof = realize(*by_column[f11.witness.column_indices[i]], sys.tables());
        require(prof[code(E::Sigma)] == col[0] && prof[code(E::One)] == col[1],
                "J argument " + std::to_string(i + 1) + " profile");
    }
    const E js = at1(j, E::Sigma);
    const E j1 = at1(j, E::One);
    step.claim(j, js == j1, "J[s] = J[1] = " + show(j1));

    auto j_star = step.make("J*", is_low(j1) ? j.term : compose(bc.term, {j.term}));
    const E jss = at1(j_star, E::Sigma);
    const E js1 = at1(j_star, E::One);
    step.claim(j_star, jss == js1 && is_low(js1),
               std::string(is_low(j1) ? "J* = J" : "J* = " + role + "[J]") + ", J*[s] = J*[1] = " +
                   show(js1) + " in " + kLow);
    return lemma3(a, step.finish(j_star), sys);
}

}  // namespace

Derivation lemma4(const Derivation& a, const Derivation& b, const TwelveSystem& sys) {
    using E = Element;
    check_a(a);
    check_b(b);
    if (at1(b, E::Sigma) == at1(b, E::One))
        throw PreconditionViolated(0, "lemma 4 needs B[s] != B[1]; use lemma 3");
    if (at1(b, E::One) == E::Rho) return lemma4_case1(a, b, sys);

    // Case 2: B[1] = 0, so B[s] = r. Go through F4's violation of R4.
    Step step(sys, {&a, &b});
    const std::string role = b.label;
    step.note("Lemma 4.2", role + "[1] = 0, " + role + "[s] = " + show(at1(b, E::Sigma)));
    require(at1(b, E::Sigma) == E::Rho, "lemma 4 case 2 needs B[s] = r");

    const auto& f4 = sys.entry(4);
    step.note("F4", witness_text(4, f4));
    std::vector<Term> s_args;
    for (E x : witness_values(f4.witness)) s_args.push_back(x == E::Zero ? b.term : kP);
    auto s = step.make("S", Term::apply(3, std::move(s_args), 1));
    const E s1 = at1(s, E::One);
    step.claim(s, s1 == E::Rho || s1 == E::Sigma, "S[1] = " + show(s1) + " in {r,s}");

    auto s_star = step.make("S*", s1 == E::Rho ? s.term : compose(b.term, {s.term}));
    const E ss = at1(s_star, E::Sigma);
    step.claim(s_star, at1(s_star, E::One) == E::Rho && is_low(ss),
               std::string(s1 == E::Rho ? "S* = S" : "S* = " + role + "[S]") +
                   ", S*[1] = r, S*[s] = " + show(ss) + " in " + kLow);
    if (ss == E::Rho) {
        step.note("Lemma 4.2", "S*[s] = S*[1] = r: S* satisfies the lemma 3 hypotheses");
        return lemma3(a, step.finish(s_star), sys);
    }
    step.note("Lemma 4.2", "S*[s] = 0, S*[1] = r: case 1 with S* in the role of B");
    return lemma4_case1(a, step.finish(s_star), sys);
}

namespace {

// Index i in 3..10 whose unary relation R_i is exactly the given set of constants.
int relation_for(const std::map<Element, Derivation>& have) {
    for (int i = 3; i <= 10; ++i) {
        const auto& cols = builtin_relation(i).columns();
        if (cols.size() != have.size()) continue;
        bool same = true;
        for (const auto& c : cols) same = same && have.count(c.front());
        if (same) return i;
    }
    return 0;
}

}  // namespace

std::map<Element, Derivation> lemma5(const Derivation& k, const Derivation& a,
                                     const TwelveSystem& sys) {
    check_a(a);
    const auto kc = k.realized.arity() == 1 ? k.realized.constant_value() : std::nullopt;
    if (!kc || !is_low(*kc))
        throw PreconditionViolated(0, "lemma 5 needs a unary derivation of 0 or r");

    Step step(sys, {&k, &a});
    std::map<Element, Derivation> have;
    have.emplace(*kc, k);

    auto c2 = step.make("A[" + show(*kc) + "]", compose(a.term, {k.term}));
    const auto v2 = c2.realized.constant_value();
    step.claim(c2, v2 && is_high(*v2),
               "A applied to the constant " + show(*kc) + " is the constant " +
                   (v2 ? show(*v2) : "?") + " in " + kHigh);
    have.emplace(*v2, c2);

    // Two constants, then three, then four; each time the member violating the
    // relation that is exactly the current set of constants yields a new one.
    while (have.size() < 4) {
        const int i = relation_for(have);
        require(i != 0, "no relation matches the current set of constants");
        const auto& e = sys.entry(i);
        step.note("F" + std::to_string(i), witness_text(i, e));
        std::vector<Term> args;
        for (Element x : witness_values(e.witness)) args.push_back(have.at(x).term);
        auto d = step.make("F" + std::to_string(i) + "[constants]",
                           Term::apply(static_cast<std::size_t>(i - 1), std::move(args), 1));
        const auto v = d.realized.constant_value();
        step.claim(d, v && !have.count(*v),
                   "constant " + (v ? show(*v) : std::string("?")) + ", outside R" +
                       std::to_string(i));
        have.emplace(*v, std::move(d));
    }

    for (auto& [c, d] : have) {
        d.label = "constant " + show(c);
        d = step.finish(std::move(d));
    }
    return have;
}

std::map<Element, Derivation> derive_all_constants(const TwelveSystem& sys) {
    const auto a = lemma1_A(sys);
    const auto b = lemma2_B(sys);
    const bool equal_top = at1(b, Element::Sigma) == at1(b, Element::One);
    const auto k = equal_top ? lemma3(a, b, sys) : lemma4(a, b, sys);
    return lemma5(k, a, sys);
}

bool verify_derivation(const Derivation& d, const TwelveSystem& sys) {
    if (realize(d.term, sys.tables()) != d.realized) return false;
    const auto expanded = expand(d.term, sys.formulas(), sys.variable_lists());
    return truth_table(expanded, context_variables(d.term.arity())) == d.realized;
}

}  // namespace magari4
