#include "magari4/preservation.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "magari4/errors.hpp"

namespace magari4 {

RelationMatrix::RelationMatrix(std::vector<Column> columns, std::string name)
    : arity_(0), columns_(std::move(columns)), name_(std::move(name)) {
    if (columns_.empty()) throw UsageError("a relation needs at least one column");
    arity_ = columns_.front().size();
    if (arity_ == 0) throw UsageError("a relation needs arity >= 1");
    member_.assign(table_rows(arity_), false);
    for (const auto& c : columns_) {
        if (c.size() != arity_) throw UsageError("relation columns must all have the same length");
        const auto key = row_of(c);
        if (member_[key]) throw UsageError("duplicate column " + magari4::to_string(c));
        member_[key] = true;
    }
}

RelationMatrix RelationMatrix::parse(std::string_view text) {
    if (text.size() >= 2 && (text[0] == 'R' || text[0] == 'r') &&
        std::isdigit(static_cast<unsigned char>(text[1]))) {
        int i = 0;
        auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), i);
        if (ec != std::errc{} || ptr != text.data() + text.size())
            throw UsageError("bad relation name '" + std::string(text) + "'");
        return builtin_relation(i);
    }
    std::vector<std::string_view> rows;
    std::size_t start = 0;
    while (true) {
        const auto semi = text.find(';', start);
        rows.push_back(text.substr(start, semi == std::string_view::npos ? semi : semi - start));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    const std::size_t width = rows.front().size();
    for (auto row : rows)
        if (row.size() != width) throw UsageError("relation rows must have equal length");
    std::vector<Column> columns(width, Column(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < width; ++k) columns[k][r] = element_from_char(rows[r][k]);
    return RelationMatrix(std::move(columns));
}

bool RelationMatrix::contains(std::span<const Element> tuple) const {
    return tuple.size() == arity_ && member_[row_of(tuple)];
}

std::string RelationMatrix::to_string() const {
    std::string out;
    for (std::size_t r = 0; r < arity_; ++r) {
        if (r) out += ';';
        for (const auto& c : columns_) out += to_char(c[r]);
    }
    return out;
}

std::optional<ViolationWitness> find_violation(const FuncTable& f, const RelationMatrix& r) {
    const std::size_t n = f.arity();
    const std::size_t m = r.arity();
    const auto& cols = r.columns();
    std::vector<std::size_t> idx(n, 0);
    Column image(m);
    while (true) {
        for (std::size_t row = 0; row < m; ++row) {
            std::size_t key = 0;
            for (std::size_t a = 0; a < n; ++a) key = (key << 2) | code(cols[idx[a]][row]);
            image[row] = f[key];
        }
        if (!r.contains(image)) {
            ViolationWitness w{idx, {}, image};
            for (auto i : idx) w.selected_columns.push_back(cols[i]);
            return w;
        }
        // Odometer, last position fastest.
        std::size_t a = n;
        while (a > 0 && ++idx[a - 1] == cols.size()) idx[--a] = 0;
        if (a == 0) return std::nullopt;
    }
}

bool preserves(const FuncTable& f, const RelationMatrix& r) { return !find_violation(f, r); }

namespace {

constexpr Element O = Element::Zero, P = Element::Rho, S = Element::Sigma, I = Element::One;

std::vector<RelationMatrix> make_builtins() {
    auto unary = [](std::initializer_list<Element> xs, std::string name) {
        std::vector<Column> cols;
        for (Element x : xs) cols.push_back({x});
        return RelationMatrix(std::move(cols), std::move(name));
    };
    std::vector<RelationMatrix> out;
    out.push_back(unary({O, P}, "R1"));
    out.push_back(unary({S, I}, "R2"));
    out.push_back(unary({O, S}, "R3"));
    out.push_back(unary({O, I}, "R4"));
    out.push_back(unary({P, S}, "R5"));
    out.push_back(unary({P, I}, "R6"));
    out.push_back(unary({O, P, S}, "R7"));
    out.push_back(unary({O, P, I}, "R8"));
    out.push_back(unary({O, S, I}, "R9"));
    out.push_back(unary({P, S, I}, "R10"));
    out.emplace_back(std::vector<Column>{{O, P}, {P, O}, {S, I}, {I, S}}, "R11");
    out.emplace_back(
        std::vector<Column>{{O, S}, {O, I}, {P, S}, {P, I}, {S, O}, {S, P}, {I, O}, {I, P}},
        "R12");
    return out;
}

constexpr std::array<std::array<Element, 2>, 8> kTableColumns{{
    {O, O}, {O, P}, {P, O}, {P, P}, {S, S}, {S, I}, {I, S}, {I, I}}};

}  // namespace

const RelationMatrix& builtin_relation(int i) {
    static const std::vector<RelationMatrix> kBuiltins = make_builtins();
    if (i < 1 || i > 12) throw UsageError("relation index " + std::to_string(i) + " not in 1..12");
    return kBuiltins[static_cast<std::size_t>(i - 1)];
}

const RelationMatrix& delta_pairing_relation() {
    static const RelationMatrix kPairing(
        std::vector<Column>{{O, O}, {O, P}, {P, O}, {P, P}, {S, S}, {S, I}, {I, S}, {I, I}},
        "DeltaPairing");
    return kPairing;
}

bool preserves_delta_pairing(const FuncTable& f) {
    const std::size_t n = f.arity();
    if (n > 8) return preserves(f, delta_pairing_relation());
    std::vector<std::int8_t> class_of(std::size_t{1} << n, -1);
    for (std::size_t r = 0; r < f.size(); ++r) {
        std::size_t pattern = 0;
        for (std::size_t a = 0; a < n; ++a) pattern |= ((r >> (2 * a + 1)) & 1u) << a;
        const auto c = static_cast<std::int8_t>(is_high(f[r]));
        if (class_of[pattern] < 0)
            class_of[pattern] = c;
        else if (class_of[pattern] != c)
            return false;
    }
    return true;
}

FuncTable i_op(UnaryOpIndex idx) {
    if (idx.i < 1 || idx.i > 8 || idx.j < 1 || idx.j > 8)
        throw UsageError("I_ij needs i, j in 1..8");
    const auto& lo = kTableColumns[static_cast<std::size_t>(idx.i - 1)];
    const auto& hi = kTableColumns[static_cast<std::size_t>(idx.j - 1)];
    return FuncTable(1, {lo[0], lo[1], hi[0], hi[1]});
}

std::optional<UnaryOpIndex> i_op_index(const FuncTable& f) {
    if (f.arity() != 1) return std::nullopt;
    std::optional<UnaryOpIndex> out;
    for (int i = 1; i <= 8 && !out; ++i)
        for (int j = 1; j <= 8 && !out; ++j)
            if (i_op({i, j}) == f) out = UnaryOpIndex{i, j};
    return out;
}

std::vector<int> classify(const FuncTable& f) {
    std::vector<int> out;
    for (int i = 1; i <= 12; ++i)
        if (preserves(f, builtin_relation(i))) out.push_back(i);
    return out;
}

void for_each_delta_pairing_table(std::size_t arity,
                                  const std::function<void(const FuncTable&)>& visit) {
    if (arity > 2) throw UsageError("enumeration is limited to arity <= 2");
    const std::size_t rows = table_rows(arity);
    const std::size_t patterns = std::size_t{1} << arity;
    std::vector<std::size_t> pattern_of(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t p = 0;
        for (std::size_t a = 0; a < arity; ++a) p |= ((r >> (2 * a + 1)) & 1u) << a;
        pattern_of[r] = p;
    }
    std::vector<Element> entries(rows);
    for (std::size_t class_map = 0; class_map < (std::size_t{1} << patterns); ++class_map) {
        for (std::size_t low_bits = 0; low_bits < (std::size_t{1} << rows); ++low_bits) {
            for (std::size_t r = 0; r < rows; ++r) {
                const unsigned hi = (class_map >> pattern_of[r]) & 1u;
                const unsigned lo = (low_bits >> r) & 1u;
                entries[r] = from_code((hi << 1) | lo);
            }
            visit(FuncTable(arity, entries));
        }
    }
}

}  // namespace magari4
