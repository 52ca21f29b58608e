#include <doctest.h>

#include <map>
#include <set>

#include "magari4/algebra.hpp"
#include "magari4/errors.hpp"

using namespace magari4;

namespace {

constexpr Element O = Element::Zero, R = Element::Rho, S = Element::Sigma, I = Element::One;

// Reference model: elements as subsets of the two atoms {a, b}, with rho = {a}
// and sigma = {b}, and Delta given pointwise.
using Atoms = std::set<char>;

const std::map<Element, Atoms> kAtoms{{O, {}}, {R, {'a'}}, {S, {'b'}}, {I, {'a', 'b'}}};

Element from_atoms(const Atoms& s) {
    for (const auto& [e, atoms] : kAtoms)
        if (atoms == s) return e;
    FAIL("not a subset of {a, b}");
    return O;
}

Element ref_meet(Element x, Element y) {
    Atoms out;
    for (char c : kAtoms.at(x))
        if (kAtoms.at(y).count(c)) out.insert(c);
    return from_atoms(out);
}

Element ref_join(Element x, Element y) {
    Atoms out = kAtoms.at(x);
    out.insert(kAtoms.at(y).begin(), kAtoms.at(y).end());
    return from_atoms(out);
}

Element ref_not(Element x) {
    Atoms out;
    for (char c : {'a', 'b'})
        if (!kAtoms.at(x).count(c)) out.insert(c);
    return from_atoms(out);
}

Element ref_imp(Element x, Element y) { return ref_join(ref_not(x), y); }

Element ref_delta(Element x) {
    static const std::map<Element, Element> table{{O, S}, {R, S}, {S, I}, {I, I}};
    return table.at(x);
}

}  // namespace

TEST_CASE("connectives agree with the subset model") {
    for (Element x : kElements) {
        CHECK(complement(x) == ref_not(x));
        CHECK(delta(x) == ref_delta(x));
        CHECK(magari4::apply(Connective::Not, std::array{x}) == ref_not(x));
        CHECK(magari4::apply(Connective::Delta, std::array{x}) == ref_delta(x));
        for (Element y : kElements) {
            CHECK(meet(x, y) == ref_meet(x, y));
            CHECK(join(x, y) == ref_join(x, y));
            CHECK(implies(x, y) == ref_imp(x, y));
            CHECK(magari4::apply(Connective::And, std::array{x, y}) == ref_meet(x, y));
            CHECK(magari4::apply(Connective::Or, std::array{x, y}) == ref_join(x, y));
            CHECK(magari4::apply(Connective::Imp, std::array{x, y}) == ref_imp(x, y));
        }
    }
}

TEST_CASE("apply examples") {
    CHECK(magari4::apply(Connective::Delta, std::array{R}) == S);
    for (Element x : kElements) CHECK(magari4::apply(Connective::And, std::array{I, x}) == x);
    CHECK(magari4::apply(Connective::And, std::array{R, S}) == O);
    CHECK(magari4::apply(Connective::Or, std::array{R, S}) == I);
    CHECK(magari4::apply(Connective::Not, std::array{S}) == R);
}

TEST_CASE("apply rejects the wrong number of arguments") {
    CHECK_THROWS_AS(magari4::apply(Connective::Not, std::array{O, O}), UsageError);
    CHECK_THROWS_AS(magari4::apply(Connective::And, std::array{O}), UsageError);
    CHECK_THROWS_AS(magari4::apply(Connective::Delta, std::span<const Element>{}), UsageError);
}

TEST_CASE("box and equivalence") {
    CHECK(box(I) == I);
    CHECK(box(O) == O);
    CHECK(box(S) == S);
    CHECK(box(R) == O);
    for (Element x : kElements) {
        CHECK(box(x) == ref_meet(x, ref_delta(x)));
        CHECK(elem_equiv(x, x) == I);
        for (Element y : kElements)
            CHECK(elem_equiv(x, y) == ref_meet(ref_imp(x, y), ref_imp(y, x)));
    }
    CHECK(elem_equiv(O, R) == S);
    CHECK(elem_equiv(S, I) == S);
}

TEST_CASE("delta classes") {
    CHECK(delta_class(O) == DeltaClass::Low);
    CHECK(delta_class(R) == DeltaClass::Low);
    CHECK(delta_class(S) == DeltaClass::High);
    CHECK(delta_class(I) == DeltaClass::High);
    for (Element x : kElements)
        for (Element y : kElements)
            CHECK((delta_class(x) == delta_class(y)) == (ref_delta(x) == ref_delta(y)));
}

TEST_CASE("boolean algebra axioms") {
    for (Element x : kElements) {
        CHECK(meet(x, complement(x)) == O);
        CHECK(join(x, complement(x)) == I);
        CHECK(complement(complement(x)) == x);
        CHECK(meet(x, x) == x);
        CHECK(join(x, O) == x);
        CHECK(meet(x, I) == x);
        for (Element y : kElements) {
            CHECK(meet(x, y) == meet(y, x));
            CHECK(join(x, y) == join(y, x));
            CHECK(meet(x, join(x, y)) == x);
            CHECK(join(x, meet(x, y)) == x);
            CHECK(complement(meet(x, y)) == join(complement(x), complement(y)));
            for (Element z : kElements) {
                CHECK(meet(x, meet(y, z)) == meet(meet(x, y), z));
                CHECK(join(x, join(y, z)) == join(join(x, y), z));
                CHECK(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)));
                CHECK(join(x, meet(y, z)) == meet(join(x, y), join(x, z)));
            }
        }
    }
}

TEST_CASE("delta is monotone and lands in {sigma, 1}") {
    for (Element x : kElements) {
        CHECK((delta(x) == S || delta(x) == I));
        for (Element y : kElements)
            if (leq(x, y)) CHECK(leq(delta(x), delta(y)));
    }
}

TEST_CASE("Magari identities") {
    const auto report = magari_identity_report();
    REQUIRE(report.size() == 4);
    for (const auto& id : report) {
        CAPTURE(id.name);
        CHECK(id.holds);
    }
    CHECK(report[0].cases == 16);
    CHECK(report[1].cases == 4);
    CHECK(ref_delta(ref_imp(ref_delta(O), O)) == ref_delta(O));
}

TEST_CASE("GL Delta-axioms are valid") {
    const auto report = gl_axiom_report();
    REQUIRE(report.size() == 4);
    for (std::size_t i = 0; i < 3; ++i) {
        CAPTURE(report[i].name);
        CHECK(report[i].holds);
    }
}

TEST_CASE("GL4 axiom values under the reference model") {
    // DD0 & (D(Dp -> q) | D(Dq -> p)) is sigma exactly when p and q are both in
    // {0, rho}, and 1 elsewhere.
    for (Element p : kElements)
        for (Element q : kElements) {
            const Element v = ref_meet(ref_delta(ref_delta(O)),
                                       ref_join(ref_delta(ref_imp(ref_delta(p), q)),
                                                ref_delta(ref_imp(ref_delta(q), p))));
            const bool both_low = is_low(p) && is_low(q);
            CHECK(v == (both_low ? S : I));
            const Element strong = ref_join(ref_delta(ref_imp(ref_meet(p, ref_delta(p)), q)),
                                            ref_delta(ref_imp(ref_meet(q, ref_delta(q)), p)));
            CHECK(strong == I);
        }
    CHECK_FALSE(gl_axiom_report()[3].holds);
}

TEST_CASE("element tokens") {
    CHECK(to_char(O) == '0');
    CHECK(to_char(R) == 'r');
    CHECK(to_char(S) == 's');
    CHECK(to_char(I) == '1');
    CHECK(parse_element("rho") == R);
    CHECK(parse_element("sigma") == S);
    CHECK(parse_element("s") == S);
    CHECK(parse_element("1") == I);
    CHECK_THROWS_AS(parse_element("2"), UsageError);
    CHECK_THROWS_AS(parse_element(""), UsageError);
    CHECK_THROWS_AS(element_from_char('x'), UsageError);
    CHECK(to_string(std::array{O, R, S, I}) == "0rs1");
}
