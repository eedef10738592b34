#pragma once

#include <vector>

#include "ogglab/int_matrix.hpp"

namespace reference {

/// Indices of the Z-basis of the level 65 Hecke algebra used below.
inline const std::vector<long> kGeneratorIndices{1, 2, 3, 5, 11};

/// T_1, T_2, T_3, T_5, T_11 on the disc-5 level-13 cuspidal module, in a
/// fixed external basis (row-vector action).
inline std::vector<ogglab::IntMatrix> level65Family() {
    return {
        ogglab::IntMatrix::identity(5),
        {{-1, -1, 1, 0, 0}, {-1, -1, 0, 1, 0}, {2, -1, 0, 0, -1}, {-1, 2, 0, 0, -1}, {0, 0, 0, 0, -1}},
        {{0, -1, 0, 1, -1}, {-1, 0, 1, 0, -1}, {-1, 2, 1, 0, -2}, {2, -1, 0, 1, -2}, {0, 0, 0, 0, -2}},
        {{0, 1, 0, 0, -1}, {1, 0, 0, 0, -1}, {0, 0, 0, 1, -1}, {0, 0, 1, 0, -1}, {0, 0, 0, 0, -1}},
        {{0, 3, 0, -1, 0}, {3, 0, -1, 0, 0}, {1, -2, -1, 2, 1}, {-2, 1, 2, -1, 1}, {0, 0, 0, 0, 2}},
    };
}

/// e_1 S_n stacked for the family above.
inline ogglab::IntMatrix stackedA() {
    return {{1, 0, 0, 0, 0}, {-1, -1, 1, 0, 0}, {0, -1, 0, 1, -1}, {0, 1, 0, 0, -1}, {0, 3, 0, -1, 0}};
}

/// The same stack on the disc-13 level-5 side.
inline ogglab::IntMatrix stackedAPrime() {
    return {{1, 0, 0, 0, 0}, {0, 2, 0, -1, -1}, {-1, 0, 1, 0, -1}, {0, -1, 0, 0, 0}, {1, -2, -1, 0, 2}};
}

}  // namespace reference
