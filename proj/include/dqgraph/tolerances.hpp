#pragma once

namespace dqgraph {

// Unit validation of a dual quaternion: | |q_s| - 1 | and |2 Re(q_s q_d*)|.
inline constexpr double kUnitTol = 1e-9;

// A linear system is consistent iff residual <= kSolveTol * (1 + |b|).
inline constexpr double kSolveTol = 1e-8;

// Singular values below kRankTol * sigma_max count as zero.
inline constexpr double kRankTol = 1e-10;

// Threshold on Err and on every per-entry check of the balance procedures
// (symmetry pairs, |x_sj| = 1, orthogonality, cycle products, potential fit).
inline constexpr double kBalanceTol = 1e-8;

// |q_s| at or below this is treated as non-appreciable (not invertible).
inline constexpr double kAppreciableTol = 1e-12;

}  // namespace dqgraph
