#include <doctest.h>

#include <algorithm>
#include <random>

#include "magari4/errors.hpp"
#include "magari4/formula.hpp"
#include "magari4/preservation.hpp"
#include "magari4/synthesis.hpp"

using namespace magari4;

namespace {

constexpr Element O = Element::Zero, R = Element::Rho, S = Element::Sigma, I = Element::One;

// The value c_alpha must take at p, by case split on Delta-classes.
Element expected_c_alpha(const std::vector<Element>& alpha, Element d, const std::vector<Element>& p) {
    if (p == alpha) return d;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (is_high(p[i]) != is_high(alpha[i])) return O;
    return meet(S, d);
}

FuncTable random_pairing_table(std::mt19937& rng, std::size_t arity) {
    const std::size_t rows = table_rows(arity);
    std::vector<unsigned> class_bits(std::size_t{1} << arity);
    for (auto& b : class_bits) b = rng() & 1u;
    std::vector<Element> entries(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t pattern = 0;
        const auto args = tuple_of(r, arity);
        for (std::size_t a = 0; a < arity; ++a) pattern = (pattern << 1) | (is_high(args[a]) ? 1u : 0u);
        entries[r] = from_code((class_bits[pattern] << 1) | (rng() & 1u));
    }
    return FuncTable(arity, entries);
}

}  // namespace

TEST_CASE("c_alpha examples") {
    const auto c = c_alpha({{O}, S}, {"p"});
    CHECK(evaluate(c, {{"p", O}}) == S);
    CHECK(evaluate(c, {{"p", R}}) == S);
    CHECK(evaluate(c, {{"p", I}}) == O);
    CHECK(evaluate(c, {{"p", S}}) == O);
    CHECK(equivalent(c, parse("[](p <-> 0) & sigma")));
    CHECK_THROWS_AS(c_alpha({{O, R}, S}, {"p"}), UsageError);
}

TEST_CASE("c_alpha takes its three values on every tuple") {
    for (std::size_t arity = 1; arity <= 2; ++arity) {
        const auto vars = default_variables(arity);
        for (std::size_t a = 0; a < table_rows(arity); ++a)
            for (Element d : kElements) {
                const auto alpha = tuple_of(a, arity);
                const auto t = truth_table(c_alpha({alpha, d}, vars), vars);
                for (std::size_t r = 0; r < t.size(); ++r)
                    CHECK(t[r] == expected_c_alpha(alpha, d, tuple_of(r, arity)));
            }
    }
}

TEST_CASE("collapse of the disjunction at a tuple") {
    for (Element d : kElements)
        for (Element d2 : kElements)
            if (delta_class(d) == delta_class(d2)) CHECK(join(join(d, O), meet(S, d2)) == d);
}

TEST_CASE("synthesize examples") {
    const auto f = synthesize(FuncTable::of(Connective::Delta));
    CHECK(truth_table(f, {"p1"}).to_string() == "1:ss11");
    const auto g = synthesize(FuncTable::projection(1, 0), std::vector<std::string>{"p"});
    CHECK(truth_table(g, {"p"}).to_string() == "1:0rs1");
    CHECK(default_variables(3) == std::vector<std::string>{"p1", "p2", "p3"});
}

TEST_CASE("all 64 unary tables round-trip") {
    std::vector<Formula> formulas;
    for_each_delta_pairing_table(1, [&](const FuncTable& t) {
        const auto f = synthesize(t, std::vector<std::string>{"p"});
        CHECK(truth_table(f, {"p"}) == t);
        const auto h = synthesize(t, std::vector<std::string>{"p"}, {true});
        CHECK(truth_table(h, {"p"}) == t);
        formulas.push_back(f);
    });
    REQUIRE(formulas.size() == 64);
    for (std::size_t i = 0; i < formulas.size(); ++i)
        for (std::size_t j = i + 1; j < formulas.size(); ++j) CHECK_FALSE(equivalent(formulas[i], formulas[j]));
}

TEST_CASE("sampled binary and ternary tables round-trip") {
    std::mt19937 rng(23);
    for (int i = 0; i < 300; ++i) {
        const auto t = random_pairing_table(rng, 2);
        const auto vars = default_variables(2);
        CHECK(truth_table(synthesize(t), vars) == t);
        CHECK(truth_table(synthesize(t, SynthesisOptions{true}), vars) == t);
    }
    for (int i = 0; i < 10; ++i) {
        const auto t = random_pairing_table(rng, 3);
        CHECK(truth_table(synthesize(t, std::vector<std::string>{"x", "y", "z"}), {"x", "y", "z"}) == t);
    }
}

TEST_CASE("the disjunction has one disjunct per tuple in table order") {
    const auto f = synthesize(FuncTable::of(Connective::And), std::vector<std::string>{"p", "q"});
    std::vector<Formula> disjuncts;
    Formula cur = f;
    while (auto* b = std::get_if<BinaryNode>(&cur.node().value)) {
        if (b->op != BinaryOp::Or) break;
        disjuncts.push_back(b->right);
        cur = b->left;
    }
    disjuncts.push_back(cur);
    std::reverse(disjuncts.begin(), disjuncts.end());
    REQUIRE(disjuncts.size() == 16);
    for (std::size_t r = 0; r < 16; ++r) {
        const auto alpha = tuple_of(r, 2);
        CHECK(equivalent(disjuncts[r], c_alpha({alpha, meet(alpha[0], alpha[1])}, {"p", "q"})));
    }
}

TEST_CASE("tables breaking Delta x = Delta y are rejected") {
    int rejected = 0;
    for (std::size_t r = 0; r < 256; ++r) {
        const FuncTable t(1, tuple_of(r, 4));
        const bool ok = !find_violation(t, delta_pairing_relation());
        if (ok) {
            CHECK_NOTHROW((void)synthesize(t));
        } else {
            CHECK_THROWS_AS((void)synthesize(t), NotRepresentable);
            ++rejected;
        }
    }
    CHECK(rejected == 192);
    std::vector<Element> entries(16, O);
    entries[1] = S;
    CHECK_THROWS_AS((void)synthesize(FuncTable(2, entries)), NotRepresentable);
}

TEST_CASE("synthesis usage errors") {
    CHECK_THROWS_AS((void)synthesize(FuncTable::constant(0, S)), UsageError);
    CHECK_THROWS_AS((void)synthesize(FuncTable::of(Connective::And), std::vector<std::string>{"p"}),
                    UsageError);
}
