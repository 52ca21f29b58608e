#include "magari4/closure.hpp"

#include <unordered_map>
#include <unordered_set>

#include "magari4/errors.hpp"
#include "magari4/preservation.hpp"

namespace magari4 {

SystemSigma::SystemSigma(std::vector<SigmaMember> members) {
    for (auto& m : members) add(std::move(m));
}

void SystemSigma::add(SigmaMember member) {
    if (member.table.arity() == 0)
        throw UsageError("member '" + member.label + "' has arity 0");
    for (const auto& m : members_)
        if (m.label == member.label) throw UsageError("duplicate member label '" + member.label + "'");
    members_.push_back(std::move(member));
}

ClosureFragment::ClosureFragment(std::size_t k, std::vector<FuncTable> tables)
    : k_(k), tables_(std::move(tables)), index_(tables_.begin(), tables_.end()) {}

namespace {

// Up to 64 two-bit entries.
struct Packed {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
    bool operator==(const Packed&) const = default;
};

struct PackedHash {
    std::size_t operator()(const Packed& p) const noexcept {
        return std::hash<std::uint64_t>{}(p.lo * 0x9E3779B97F4A7C15ull ^ p.hi);
    }
};

Packed pack(const std::uint8_t* entries, std::size_t rows) {
    Packed p;
    for (std::size_t r = 0; r < rows; ++r) {
        const std::uint64_t bits = static_cast<std::uint64_t>(entries[r]) << (2 * (r % 32));
        (r < 32 ? p.lo : p.hi) |= bits;
    }
    return p;
}

class FixpointSearch {
public:
    FixpointSearch(const SystemSigma& sigma, std::size_t k, const ClosureLimits& limits)
        : sigma_(sigma), k_(k), rows_(table_rows(k)), limits_(limits) {
        for (std::size_t i = 0; i < k; ++i) insert(FuncTable::projection(k, i).entries());
    }

    // Returns true if `target` was produced (when given).
    bool run(const FuncTable* target) {
        std::optional<Packed> goal;
        if (target) {
            std::vector<std::uint8_t> codes;
            for (Element e : target->entries()) codes.push_back(code(e));
            goal = pack(codes.data(), rows_);
            if (seen_.count(*goal)) return true;
        }
        std::size_t start = 0;
        while (true) {
            const std::size_t end = count();
            if (start == end) return false;
            for (const auto& m : sigma_.members()) {
                if (round(m.table, start, end, goal)) return true;
            }
            start = end;
        }
    }

    std::vector<FuncTable> tables() const {
        std::vector<FuncTable> out;
        out.reserve(count());
        for (std::size_t t = 0; t < count(); ++t) {
            std::vector<Element> entries(rows_);
            for (std::size_t r = 0; r < rows_; ++r) entries[r] = from_code(data_[t * rows_ + r]);
            out.emplace_back(k_, std::move(entries));
        }
        return out;
    }

private:
    std::size_t count() const { return data_.size() / rows_; }

    bool insert(std::span<const Element> entries) {
        std::vector<std::uint8_t> codes(entries.size());
        for (std::size_t r = 0; r < entries.size(); ++r) codes[r] = code(entries[r]);
        return insert_codes(codes.data()).second;
    }

    std::pair<Packed, bool> insert_codes(const std::uint8_t* codes) {
        const Packed key = pack(codes, rows_);
        if (!seen_.insert(key).second) return {key, false};
        if (count() >= limits_.max_tables)
            throw ResourceLimitExceeded("closure exceeded " + std::to_string(limits_.max_tables) +
                                        " tables");
        data_.insert(data_.end(), codes, codes + rows_);
        return {key, true};
    }

    // All member applications whose argument tuple has at least one table from
    // [start, end). Tuples are split by the first position holding a new table.
    bool round(const FuncTable& g, std::size_t start, std::size_t end,
               const std::optional<Packed>& goal) {
        const std::size_t n = g.arity();
        std::vector<std::size_t> lo(n), hi(n), idx(n);
        std::vector<std::uint8_t> out(rows_);
        for (std::size_t first_new = 0; first_new < n; ++first_new) {
            for (std::size_t a = 0; a < n; ++a) {
                lo[a] = a == first_new ? start : 0;
                hi[a] = a < first_new ? start : end;
            }
            bool empty = false;
            for (std::size_t a = 0; a < n; ++a) empty = empty || lo[a] >= hi[a];
            if (empty) continue;
            idx = lo;
            while (true) {
                if (++work_ > limits_.max_compositions)
                    throw ResourceLimitExceeded("closure exceeded " +
                                                std::to_string(limits_.max_compositions) +
                                                " compositions");
                for (std::size_t r = 0; r < rows_; ++r) {
                    std::size_t key = 0;
                    for (std::size_t a = 0; a < n; ++a) key = (key << 2) | data_[idx[a] * rows_ + r];
                    out[r] = code(g[key]);
                }
                auto [packed, fresh] = insert_codes(out.data());
                if (fresh && goal && packed == *goal) return true;
                std::size_t a = n;
                while (a > 0 && ++idx[a - 1] == hi[a - 1]) {
                    idx[a - 1] = lo[a - 1];
                    --a;
                }
                if (a == 0) break;
            }
        }
        return false;
    }

    const SystemSigma& sigma_;
    std::size_t k_;
    std::size_t rows_;
    ClosureLimits limits_;
    std::vector<std::uint8_t> data_;
    std::unordered_set<Packed, PackedHash> seen_;
    std::uint64_t work_ = 0;
};

void check_k(std::size_t k) {
    if (k < 1 || k > 3) throw UsageError("closure arity must be in 1..3, got " + std::to_string(k));
}

}  // namespace

ClosureFragment closure_fragment(const SystemSigma& sigma, std::size_t k,
                                 const ClosureLimits& limits) {
    check_k(k);
    FixpointSearch search(sigma, k, limits);
    search.run(nullptr);
    return ClosureFragment(k, search.tables());
}

std::vector<Element> expressible_constants(const SystemSigma& sigma, const ClosureLimits& limits) {
    const auto fragment = closure_fragment(sigma, 1, limits);
    std::vector<Element> out;
    for (Element c : kElements)
        if (fragment.contains(FuncTable::constant(1, c))) out.push_back(c);
    return out;
}

bool contains(const SystemSigma& sigma, const FuncTable& target, const ClosureLimits& limits) {
    check_k(target.arity());
    auto invariant_blocks = [&](const RelationMatrix& r) {
        for (const auto& m : sigma.members())
            if (!preserves(m.table, r)) return false;
        return !preserves(target, r);
    };
    if (invariant_blocks(delta_pairing_relation())) return false;
    for (int i = 1; i <= 12; ++i)
        if (invariant_blocks(builtin_relation(i))) return false;
    FixpointSearch search(sigma, target.arity(), limits);
    return search.run(&target);
}

}  // namespace magari4
