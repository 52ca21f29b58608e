#include "magari4/algebra.hpp"

#include "magari4/errors.hpp"

namespace magari4 {

Element apply(Connective c, std::span<const Element> args) {
    if (args.size() != arity(c)) {
        throw UsageError(std::string(connective_name(c)) + " expects " +
                         std::to_string(arity(c)) + " argument(s), got " +
                         std::to_string(args.size()));
    }
    switch (c) {
        case Connective::And: return meet(args[0], args[1]);
        case Connective::Or: return join(args[0], args[1]);
        case Connective::Imp: return implies(args[0], args[1]);
        case Connective::Not: return complement(args[0]);
        case Connective::Delta: return delta(args[0]);
    }
    return Element::Zero;
}

std::string_view connective_name(Connective c) noexcept {
    switch (c) {
        case Connective::And: return "and";
        case Connective::Or: return "or";
        case Connective::Imp: return "imp";
        case Connective::Not: return "not";
        case Connective::Delta: return "delta";
    }
    return "?";
}

char to_char(Element x) noexcept {
    static constexpr char kChars[] = {'0', 'r', 's', '1'};
    return kChars[code(x)];
}

Element element_from_char(char c) {
    switch (c) {
        case '0': return Element::Zero;
        case 'r': return Element::Rho;
        case 's': return Element::Sigma;
        case '1': return Element::One;
        default: throw UsageError(std::string("not an element token: '") + c + "'");
    }
}

Element parse_element(std::string_view token) {
    if (token == "rho") return Element::Rho;
    if (token == "sigma") return Element::Sigma;
    if (token.size() == 1) return element_from_char(token[0]);
    throw UsageError("not an element token: '" + std::string(token) + "'");
}

std::string to_string(Element x) { return std::string(1, to_char(x)); }

std::string to_string(std::span<const Element> xs) {
    std::string out;
    out.reserve(xs.size());
    for (Element x : xs) out.push_back(to_char(x));
    return out;
}

namespace {

template <typename Pred>
IdentityCheck sweep1(std::string name, Pred pred) {
    bool ok = true;
    for (Element x : kElements) ok = ok && pred(x);
    return {std::move(name), ok, 4};
}

template <typename Pred>
IdentityCheck sweep2(std::string name, Pred pred) {
    bool ok = true;
    for (Element x : kElements)
        for (Element y : kElements) ok = ok && pred(x, y);
    return {std::move(name), ok, 16};
}

}  // namespace

std::vector<IdentityCheck> magari_identity_report() {
    constexpr auto one = Element::One;
    return {
        sweep2("D(x -> y) -> (Dx -> Dy) = 1",
               [](Element x, Element y) {
                   return implies(delta(implies(x, y)), implies(delta(x), delta(y))) == one;
               }),
        sweep1("Dx -> DDx = 1",
               [](Element x) { return implies(delta(x), delta(delta(x))) == one; }),
        sweep1("D(Dx -> x) = Dx",
               [](Element x) { return delta(implies(delta(x), x)) == delta(x); }),
        {"D1 = 1", delta(one) == one, 1},
    };
}

std::vector<IdentityCheck> gl_axiom_report() {
    constexpr auto one = Element::One;
    constexpr auto zero = Element::Zero;
    return {
        sweep2("D(p -> q) -> (Dp -> Dq)",
               [](Element p, Element q) {
                   return implies(delta(implies(p, q)), implies(delta(p), delta(q))) == one;
               }),
        sweep1("D(Dp -> p) -> Dp",
               [](Element p) { return implies(delta(implies(delta(p), p)), delta(p)) == one; }),
        sweep1("Dp -> DDp", [](Element p) { return implies(delta(p), delta(delta(p))) == one; }),
        sweep2("DD0 & (D(Dp -> q) | D(Dq -> p))",
               [](Element p, Element q) {
                   return meet(delta(delta(zero)), join(delta(implies(delta(p), q)),
                                                        delta(implies(delta(q), p)))) == one;
               }),
    };
}

}  // namespace magari4
