#include "magari4/synthesis.hpp"

#include "magari4/errors.hpp"
#include "magari4/preservation.hpp"

namespace magari4 {

Formula c_alpha(const AlphaSelector& sel, const std::vector<std::string>& vars) {
    if (sel.alpha.empty()) throw UsageError("C^alpha needs at least one variable");
    if (vars.size() != sel.alpha.size())
        throw UsageError("C^alpha: " + std::to_string(vars.size()) + " variables for a tuple of length " +
                         std::to_string(sel.alpha.size()));
    Formula conj = box(equiv(Formula::var(vars[0]), Formula::constant(sel.alpha[0])));
    for (std::size_t i = 1; i < vars.size(); ++i)
        conj = conj & box(equiv(Formula::var(vars[i]), Formula::constant(sel.alpha[i])));
    return conj & Formula::constant(sel.delta);
}

std::vector<std::string> default_variables(std::size_t arity) {
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= arity; ++i) vars.push_back("p" + std::to_string(i));
    return vars;
}

Formula synthesize(const FuncTable& f, const std::vector<std::string>& vars,
                   SynthesisOptions options) {
    if (f.arity() == 0) throw UsageError("synthesis needs arity >= 1; use a constant formula");
    if (vars.size() != f.arity())
        throw UsageError("synthesis needs " + std::to_string(f.arity()) + " variable names");
    if (!preserves_delta_pairing(f)) {
        const auto w = find_violation(f, delta_pairing_relation());
        std::string detail;
        if (w) {
            std::string rows[2];
            for (const auto& col : w->selected_columns) {
                rows[0] += to_char(col[0]);
                rows[1] += to_char(col[1]);
            }
            detail = ": f(" + rows[0] + ") = " + to_char(w->image[0]) + " but f(" + rows[1] +
                     ") = " + to_char(w->image[1]);
        }
        throw NotRepresentable("table " + f.to_string() +
                               " does not preserve Delta x = Delta y" + detail);
    }

    // Shared leaves keep the DAG small; the printed form is unaffected.
    std::vector<Formula> var_nodes;
    for (const auto& v : vars) var_nodes.push_back(Formula::var(v));
    std::vector<std::array<Formula, 4>> boxed(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (Element e : kElements)
            boxed[i][code(e)] = box(equiv(var_nodes[i], Formula::constant(e)));

    std::optional<Formula> result;
    for (std::size_t r = 0; r < f.size(); ++r) {
        const Element value = f[r];
        if (options.drop_zero_disjuncts && value == Element::Zero) continue;
        const auto alpha = tuple_of(r, f.arity());
        Formula conj = boxed[0][code(alpha[0])];
        for (std::size_t i = 1; i < alpha.size(); ++i) conj = conj & boxed[i][code(alpha[i])];
        Formula disjunct = conj & Formula::constant(value);
        result = result ? (*result | disjunct) : disjunct;
    }
    Formula out = result ? *result : Formula::constant(Element::Zero);
    if (options.drop_zero_disjuncts && truth_table(out, vars) != f)
        throw InternalProofCheckFailed("simplified synthesis result does not realize " + f.to_string());
    return out;
}

Formula synthesize(const FuncTable& f, SynthesisOptions options) {
    return synthesize(f, default_variables(f.arity()), options);
}

}  // namespace magari4
