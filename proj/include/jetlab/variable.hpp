#ifndef JETLAB_VARIABLE_HPP
#define JETLAB_VARIABLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "jetlab/errors.hpp"

namespace jetlab {

/// Packed key for a jet variable x_{ij}^{(k)}; the integer order of keys
/// is the total variable order: lexicographic on (k, i, j).
using VarKey = std::uint32_t;

/// Jet coordinate x_{ij}^{(k)}: 1-based row/col, 0-based t-order.
struct JetVariable {
    int row = 1;
    int col = 1;
    int order = 0;

    JetVariable() = default;
    JetVariable(int i, int j, int k) : row(i), col(j), order(k) {
        if (i < 1 || i > 255 || j < 1 || j > 255 || k < 0 || k > 0xffff)
            fail(ErrorCode::InvalidSpec, "jet variable index out of range");
    }

    VarKey key() const {
        return (static_cast<VarKey>(order) << 16) |
               (static_cast<VarKey>(row) << 8) | static_cast<VarKey>(col);
    }

    static JetVariable from_key(VarKey k) {
        JetVariable v;
        v.order = static_cast<int>(k >> 16);
        v.row = static_cast<int>((k >> 8) & 0xff);
        v.col = static_cast<int>(k & 0xff);
        return v;
    }

    /// Interchange name, e.g. x_1_2_0.
    std::string name() const {
        return "x_" + std::to_string(row) + "_" + std::to_string(col) + "_" +
               std::to_string(order);
    }

    /// Parses "x_i_j_k"; throws ParseError otherwise.
    static JetVariable parse(const std::string& text);

    bool operator==(const JetVariable& o) const { return key() == o.key(); }
    bool operator<(const JetVariable& o) const { return key() < o.key(); }
};

inline std::string var_name(VarKey k) { return JetVariable::from_key(k).name(); }

/// All x_{ij}^{(k)} with 1<=i<=rows, 1<=j<=cols, 0<=k<=order, sorted by key.
std::vector<JetVariable> variable_universe(int rows, int cols, int order);

} // namespace jetlab

#endif
