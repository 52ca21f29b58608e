#pragma once

#include <array>
#include <cstdlib>
#include <random>
#include <string>

#include "magari4/func_table.hpp"
#include "magari4/preservation.hpp"

namespace magari4::testing {

/// A uniformly random table whose Delta-class depends only on the classes of its
/// arguments.
inline FuncTable random_pairing_table(std::mt19937_64& rng, std::size_t arity) {
    std::vector<unsigned> class_bits(std::size_t{1} << arity);
    for (auto& b : class_bits) b = static_cast<unsigned>(rng() & 1u);
    std::vector<Element> entries(table_rows(arity));
    for (std::size_t r = 0; r < entries.size(); ++r) {
        std::size_t pattern = 0;
        for (std::size_t a = 0; a < arity; ++a) pattern |= ((r >> (2 * a + 1)) & 1u) << a;
        entries[r] = from_code((class_bits[pattern] << 1) | static_cast<unsigned>(rng() & 1u));
    }
    return FuncTable(arity, std::move(entries));
}

inline std::size_t random_arity(std::mt19937_64& rng, std::size_t max_arity) {
    return 1 + static_cast<std::size_t>(rng() % max_arity);
}

/// Random pairing table of arity 1..max_arity that violates R_i.
inline FuncTable random_violator(std::mt19937_64& rng, int i, std::size_t max_arity) {
    while (true) {
        auto t = random_pairing_table(rng, random_arity(rng, max_arity));
        if (!preserves(t, builtin_relation(i))) return t;
    }
}

inline std::array<FuncTable, 12> random_twelve(std::mt19937_64& rng, std::size_t max_arity) {
    std::array<FuncTable, 12> out;
    for (int i = 1; i <= 12; ++i) out[static_cast<std::size_t>(i - 1)] = random_violator(rng, i, max_arity);
    return out;
}

inline std::uint64_t seed_from_env(std::uint64_t fallback) {
    if (const char* s = std::getenv("MAGARI4_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

}  // namespace magari4::testing
