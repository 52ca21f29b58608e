#include "magari4/func_table.hpp"

#include <charconv>

#include "magari4/errors.hpp"

namespace magari4 {

namespace {
constexpr std::size_t kMaxArity = 12;
}

std::size_t table_rows(std::size_t arity) {
    if (arity > kMaxArity) throw UsageError("arity " + std::to_string(arity) + " is too large");
    return std::size_t{1} << (2 * arity);
}

std::size_t row_of(std::span<const Element> args) {
    std::size_t row = 0;
    for (Element x : args) row = (row << 2) | code(x);
    return row;
}

std::vector<Element> tuple_of(std::size_t row, std::size_t arity) {
    std::vector<Element> out(arity);
    for (std::size_t i = arity; i-- > 0;) {
        out[i] = from_code(static_cast<unsigned>(row & 3u));
        row >>= 2;
    }
    return out;
}

FuncTable::FuncTable(std::size_t arity, std::vector<Element> entries)
    : arity_(arity), entries_(std::move(entries)) {
    if (entries_.size() != table_rows(arity_)) {
        throw UsageError("a table of arity " + std::to_string(arity_) + " needs " +
                         std::to_string(table_rows(arity_)) + " entries, got " +
                         std::to_string(entries_.size()));
    }
}

FuncTable FuncTable::constant(std::size_t arity, Element value) {
    return FuncTable(arity, std::vector<Element>(table_rows(arity), value));
}

FuncTable FuncTable::projection(std::size_t arity, std::size_t index) {
    if (index >= arity) throw UsageError("projection index out of range");
    std::vector<Element> entries(table_rows(arity));
    const std::size_t shift = 2 * (arity - 1 - index);
    for (std::size_t r = 0; r < entries.size(); ++r)
        entries[r] = from_code(static_cast<unsigned>((r >> shift) & 3u));
    return FuncTable(arity, std::move(entries));
}

FuncTable FuncTable::of(Connective c) {
    const std::size_t n = magari4::arity(c);
    std::vector<Element> entries(table_rows(n));
    for (std::size_t r = 0; r < entries.size(); ++r) {
        auto args = tuple_of(r, n);
        entries[r] = apply(c, args);
    }
    return FuncTable(n, std::move(entries));
}

FuncTable FuncTable::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw UsageError("table must look like <arity>:<entries>, got '" + std::string(text) + "'");
    std::size_t arity = 0;
    const auto head = text.substr(0, colon);
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), arity);
    if (ec != std::errc{} || ptr != head.data() + head.size())
        throw UsageError("bad table arity '" + std::string(head) + "'");
    const auto body = text.substr(colon + 1);
    std::vector<Element> entries;
    entries.reserve(body.size());
    for (char c : body) entries.push_back(element_from_char(c));
    return FuncTable(arity, std::move(entries));
}

Element FuncTable::at(std::span<const Element> args) const {
    if (args.size() != arity_)
        throw UsageError("table of arity " + std::to_string(arity_) + " applied to " +
                         std::to_string(args.size()) + " argument(s)");
    return entries_[row_of(args)];
}

std::optional<Element> FuncTable::constant_value() const {
    for (Element x : entries_)
        if (x != entries_.front()) return std::nullopt;
    return entries_.front();
}

std::string FuncTable::to_string() const {
    return std::to_string(arity_) + ":" + magari4::to_string(std::span<const Element>(entries_));
}

FuncTable compose(const FuncTable& outer, std::span<const FuncTable> args) {
    if (args.size() != outer.arity())
        throw UsageError("composition needs " + std::to_string(outer.arity()) + " arguments");
    const std::size_t k = args.empty() ? 0 : args.front().arity();
    for (const auto& a : args)
        if (a.arity() != k) throw UsageError("composition arguments must share one arity");
    std::vector<Element> entries(table_rows(k));
    for (std::size_t r = 0; r < entries.size(); ++r) {
        std::size_t row = 0;
        for (const auto& a : args) row = (row << 2) | code(a[r]);
        entries[r] = outer[row];
    }
    return FuncTable(k, std::move(entries));
}

}  // namespace magari4
