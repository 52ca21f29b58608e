#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "magari4/algebra.hpp"
#include "magari4/func_table.hpp"

namespace magari4 {

using Column = std::vector<Element>;

/// An m-ary relation given by the list of its tuples (the columns of its matrix).
class RelationMatrix {
public:
    /// Throws UsageError on empty input, ragged columns, or duplicate columns.
    RelationMatrix(std::vector<Column> columns, std::string name = {});

    /// Rows separated by ';', each row a string over {0,r,s,1}; column k is the
    /// k-th character of every row. R11 is `0rs1;r01s`. Also accepts `R1`..`R12`.
    static RelationMatrix parse(std::string_view text);

    std::size_t arity() const noexcept { return arity_; }
    const std::vector<Column>& columns() const noexcept { return columns_; }
    const std::string& name() const noexcept { return name_; }

    bool contains(std::span<const Element> tuple) const;

    std::string to_string() const;

private:
    std::size_t arity_;
    std::vector<Column> columns_;
    std::string name_;
    std::vector<bool> member_;  // indexed by row_of(tuple)
};

struct ViolationWitness {
    /// Positions in the matrix's column list, one per argument of the function.
    std::vector<std::size_t> column_indices;
    std::vector<Column> selected_columns;
    /// The function applied row by row; never a column of the matrix.
    Column image;
};

/// First violation in lexicographic order of column-index sequences.
std::optional<ViolationWitness> find_violation(const FuncTable& f, const RelationMatrix& r);

bool preserves(const FuncTable& f, const RelationMatrix& r);

/// The matrix of R_i, i in 1..12, with columns in the order of the defining table.
const RelationMatrix& builtin_relation(int i);

/// {(x, y) : Delta x = Delta y}
const RelationMatrix& delta_pairing_relation();

/// Whether the Delta-class of f's value depends only on the Delta-classes of its
/// arguments. Same answer as preserves(f, delta_pairing_relation()), computed in
/// one pass over the table.
bool preserves_delta_pairing(const FuncTable& f);

/// I_ij: values on {0, rho} from column i, on {sigma, 1} from column j, where the
/// eight columns are (0,0) (0,r) (r,0) (r,r) (s,s) (s,1) (1,s) (1,1).
struct UnaryOpIndex {
    int i;
    int j;
};

FuncTable i_op(UnaryOpIndex idx);

/// Inverse of i_op for Delta-pairing unary tables.
std::optional<UnaryOpIndex> i_op_index(const FuncTable& f);

/// Indices i in 1..12 with preserves(f, builtin_relation(i)), ascending.
std::vector<int> classify(const FuncTable& f);

/// Calls `visit` on every Delta-pairing table of the given arity (64 unary,
/// 1048576 binary), ordered by class map first and low bits second. Arity <= 2.
void for_each_delta_pairing_table(std::size_t arity,
                                  const std::function<void(const FuncTable&)>& visit);

}  // namespace magari4
