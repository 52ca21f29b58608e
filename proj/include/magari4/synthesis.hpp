#pragma once

#include <string>
#include <vector>

#include "magari4/formula.hpp"
#include "magari4/func_table.hpp"

namespace magari4 {

struct AlphaSelector {
    std::vector<Element> alpha;
    Element delta;  // f(alpha)
};

/// (&_i [](p_i <-> alpha_i)) & delta
///
/// Evaluates to delta at p = alpha, to sigma & delta when every p_i shares its
/// Delta-class with alpha_i but p != alpha, and to 0 otherwise.
Formula c_alpha(const AlphaSelector& sel, const std::vector<std::string>& vars);

struct SynthesisOptions {
    /// Leave out the disjuncts whose delta is 0. The result is re-checked against
    /// the table.
    bool drop_zero_disjuncts = false;
};

/// p1, ..., pn
std::vector<std::string> default_variables(std::size_t arity);

/// A formula realizing f: the disjunction of c_alpha over every argument tuple in
/// table order. Throws NotRepresentable when f does not preserve Delta x = Delta y
/// and UsageError for arity 0.
Formula synthesize(const FuncTable& f, const std::vector<std::string>& vars,
                   SynthesisOptions options = {});

Formula synthesize(const FuncTable& f, SynthesisOptions options = {});

}  // namespace magari4
