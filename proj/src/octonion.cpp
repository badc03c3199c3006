#include "drtk/octonion.hpp"

namespace drtk {
namespace {

// Quaternion basis products over (1, i, j, k).
constexpr int qsign[4][4] = {
    {+1, +1, +1, +1},
    {+1, -1, +1, -1},
    {+1, -1, -1, +1},
    {+1, +1, -1, -1},
};
constexpr int qindex[4][4] = {
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
};

BasisProduct qmul(int i, int j) { return {qsign[i][j], qindex[i][j]}; }
// q_j* = q_j for j = 0, -q_j otherwise.
int qconj_sign(int j) { return j == 0 ? 1 : -1; }

std::array<std::array<BasisProduct, 8>, 8> build_table() {
    std::array<std::array<BasisProduct, 8>, 8> t{};
    // e_i = (q_i, 0) for i < 4, e_{4+s} = (0, q_s).
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            BasisProduct p{};
            if (i < 4 && j < 4) {
                p = qmul(i, j); // (q_i q_j, 0)
            } else if (i < 4 && j >= 4) {
                p = qmul(j - 4, i); // (0, q_t q_i)
                p.index += 4;
            } else if (i >= 4 && j < 4) {
                p = qmul(i - 4, j); // (0, q_s q_j*)
                p.sign *= qconj_sign(j);
                p.index += 4;
            } else {
                p = qmul(j - 4, i - 4); // (-q_t* q_s, 0)
                p.sign *= -qconj_sign(j - 4);
            }
            t[i][j] = p;
        }
    return t;
}

} // namespace

const std::array<std::array<BasisProduct, 8>, 8>& octonion_table() {
    static const auto table = build_table();
    return table;
}

} // namespace drtk
