#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "magari4/algebra.hpp"

namespace magari4 {

/// An n-ary operation on the carrier, stored extensionally.
///
/// Row r lists the value at the argument tuple whose base-4 digits (element codes
/// 0, rho, sigma, 1) spell r, first argument most significant. Text form is
/// `<arity>:<entries>`, e.g. Delta is `1:ss11`.
class FuncTable {
public:
    FuncTable() : arity_(0), entries_{Element::Zero} {}
    FuncTable(std::size_t arity, std::vector<Element> entries);

    static FuncTable constant(std::size_t arity, Element value);
    static FuncTable projection(std::size_t arity, std::size_t index);
    static FuncTable of(Connective c);
    static FuncTable parse(std::string_view text);

    std::size_t arity() const noexcept { return arity_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const Element> entries() const noexcept { return entries_; }

    Element operator[](std::size_t row) const { return entries_[row]; }
    Element at(std::span<const Element> args) const;

    /// The constant value, when every entry is the same.
    std::optional<Element> constant_value() const;

    std::string to_string() const;

    friend bool operator==(const FuncTable&, const FuncTable&) = default;
    friend auto operator<=>(const FuncTable& a, const FuncTable& b) {
        if (a.arity_ != b.arity_) return a.arity_ <=> b.arity_;
        return a.entries_ <=> b.entries_;
    }

private:
    std::size_t arity_;
    std::vector<Element> entries_;
};

/// 4^n, with n limited so the result fits a table index.
std::size_t table_rows(std::size_t arity);

/// Row index of an argument tuple.
std::size_t row_of(std::span<const Element> args);

/// The argument tuple of a row.
std::vector<Element> tuple_of(std::size_t row, std::size_t arity);

/// outer(args[0](x), ..., args[n-1](x)); all args share one arity.
FuncTable compose(const FuncTable& outer, std::span<const FuncTable> args);

}  // namespace magari4
