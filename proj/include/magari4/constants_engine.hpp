#pragma once

// Constant derivations from twelve formulas F1..F12 where each F_i fails to
// preserve the built-in relation R_i. Every construction step builds a term over
// the members, recomputes its table from the members' tables, and checks the
// claim the step relies on; a claim that fails on a valid input raises
// InternalProofCheckFailed.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "magari4/closure.hpp"
#include "magari4/formula.hpp"
#include "magari4/func_table.hpp"
#include "magari4/preservation.hpp"
#include "magari4/term.hpp"

namespace magari4 {

struct TraceStep {
    std::string label;  // construction name: A, B, D, D*, D', E, E*, H, J, J*, S, S*, ...
    std::string claim;  // what was checked on the realized table
};

struct Derivation {
    std::string label;
    Term term;
    FuncTable realized;
    std::vector<TraceStep> trace;
};

struct SystemEntry {
    Formula formula;
    std::vector<std::string> vars;  // argument order of `table`
    FuncTable table;
    ViolationWitness witness;  // of R_i, for entry i
};

/// F1..F12 with one recorded violation each.
class TwelveSystem {
public:
    /// Entry i (0-based) must violate R_{i+1}; throws PreconditionViolated(i+1) for
    /// the first that does not. Witnesses come from find_violation unless supplied,
    /// and supplied ones are re-checked.
    explicit TwelveSystem(std::array<Formula, 12> formulas,
                          std::array<std::optional<ViolationWitness>, 12> witnesses = {});

    /// Uses synthesized formulas for tables that come without one.
    static TwelveSystem from_tables(const std::array<FuncTable, 12>& tables);

    const SystemEntry& entry(int i) const;  // i in 1..12
    std::vector<FuncTable> tables() const;
    std::vector<Formula> formulas() const;
    std::vector<std::vector<std::string>> variable_lists() const;
    std::vector<std::string> labels() const;  // F1..F12
    SystemSigma sigma() const;

private:
    std::vector<SystemEntry> entries_;
};

/// Argument order used for a member formula: its sorted free variables, or `p`
/// for a closed formula.
std::vector<std::string> member_variables(const Formula& f);

/// A(p) = F1(p, ..., p) with A[0] in {sigma, 1}.
Derivation lemma1_A(const TwelveSystem& sys);

/// B(p) = F2(p, ..., p) with B[1] in {0, rho}.
Derivation lemma2_B(const TwelveSystem& sys);

/// A constant in {0, rho}, for B with B[sigma] = B[1]. Uses F12 when B[0] is high.
Derivation lemma3(const Derivation& a, const Derivation& b, const TwelveSystem& sys);

/// A constant in {0, rho}, for B with B[sigma] != B[1]. Uses F3, F4, F7, F11 and
/// hands off to lemma3.
Derivation lemma4(const Derivation& a, const Derivation& b, const TwelveSystem& sys);

/// All four constants from a constant k in {0, rho}, via A and F3..F10.
std::map<Element, Derivation> lemma5(const Derivation& k, const Derivation& a,
                                     const TwelveSystem& sys);

std::map<Element, Derivation> derive_all_constants(const TwelveSystem& sys);

/// Re-expands a derivation's term into a formula and compares its truth table with
/// the recorded one, and re-realizes the term from the member tables.
bool verify_derivation(const Derivation& d, const TwelveSystem& sys);

}  // namespace magari4
