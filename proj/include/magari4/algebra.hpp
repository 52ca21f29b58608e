#pragma once

// The four-element Magari algebra on {0, rho, sigma, 1}.
//
// Elements are encoded in two bits (0 = 00, rho = 01, sigma = 10, 1 = 11) so the
// boolean operations are bitwise and Delta x = 10 | (x >> 1). The encoding is
// internal; everything outside this header talks in terms of Element values and
// their text tokens.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace magari4 {

enum class Element : std::uint8_t { Zero = 0, Rho = 1, Sigma = 2, One = 3 };

/// Enumeration order used by every table and tuple: 0, rho, sigma, 1.
inline constexpr std::array<Element, 4> kElements{Element::Zero, Element::Rho,
                                                  Element::Sigma, Element::One};

constexpr std::uint8_t code(Element x) noexcept { return static_cast<std::uint8_t>(x); }
constexpr Element from_code(unsigned c) noexcept { return static_cast<Element>(c & 3u); }

constexpr Element meet(Element x, Element y) noexcept { return from_code(code(x) & code(y)); }
constexpr Element join(Element x, Element y) noexcept { return from_code(code(x) | code(y)); }
constexpr Element complement(Element x) noexcept { return from_code(code(x) ^ 3u); }
constexpr Element implies(Element x, Element y) noexcept { return join(complement(x), y); }
constexpr Element delta(Element x) noexcept { return from_code(2u | (code(x) >> 1)); }

/// Lattice order of the boolean reduct.
constexpr bool leq(Element x, Element y) noexcept { return meet(x, y) == x; }

/// x & Delta x
constexpr Element box(Element x) noexcept { return meet(x, delta(x)); }

/// (x -> y) & (y -> x)
constexpr Element elem_equiv(Element x, Element y) noexcept {
    return meet(implies(x, y), implies(y, x));
}

/// The two blocks of the partition induced by Delta: {0, rho} and {sigma, 1}.
enum class DeltaClass : std::uint8_t { Low = 0, High = 1 };

constexpr DeltaClass delta_class(Element x) noexcept {
    return delta(x) == Element::One ? DeltaClass::High : DeltaClass::Low;
}

constexpr bool is_low(Element x) noexcept { return delta_class(x) == DeltaClass::Low; }
constexpr bool is_high(Element x) noexcept { return delta_class(x) == DeltaClass::High; }

enum class Connective : std::uint8_t { And, Or, Imp, Not, Delta };

constexpr std::size_t arity(Connective c) noexcept {
    return (c == Connective::Not || c == Connective::Delta) ? 1 : 2;
}

/// Table value of a connective. Throws UsageError on an arity mismatch.
Element apply(Connective c, std::span<const Element> args);

std::string_view connective_name(Connective c) noexcept;

/// Short token: 0, r, s, 1.
char to_char(Element x) noexcept;

/// Accepts the short tokens and the long forms `rho`, `sigma`. Throws UsageError.
Element parse_element(std::string_view token);

/// Accepts exactly one of 0, r, s, 1.
Element element_from_char(char c);

std::string to_string(Element x);
std::string to_string(std::span<const Element> xs);

struct IdentityCheck {
    std::string name;
    bool holds;
    std::size_t cases;
};

/// The four defining identities of a Magari algebra, each swept over every assignment.
std::vector<IdentityCheck> magari_identity_report();

/// The three GL Delta-axioms and the GL4 axiom, checked for validity by sweeping
/// all assignments.
std::vector<IdentityCheck> gl_axiom_report();

}  // namespace magari4
