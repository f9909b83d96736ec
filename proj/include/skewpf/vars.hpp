#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewpf/error.hpp"

namespace skewpf {

// Global variable table. One flat index space shared by every polynomial:
//   0..4      x0..x4            coordinates on P^4
//   5..79     a_{ijk}           coefficient of x_k in entry (i,j), i<j, 0-based
//   80..154   b_{ijk}           same layout, second-order deformation block
//   155       t                 deformation parameter
// The monomial order is graded reverse lexicographic with
// x0 > x1 > ... > x4 > a010 > ... > b454 > t.
using Var = std::uint16_t;

inline constexpr int kNumX = 5;
inline constexpr int kNumPairs = 15;  // (i,j), 0 <= i < j < 6
inline constexpr Var kABase = 5;
inline constexpr Var kBBase = 80;
inline constexpr Var kTVar = 155;
inline constexpr int kNumVars = 156;

inline Var x_var(int k) { return static_cast<Var>(k); }

inline int pair_index(int i, int j) { return i * (11 - i) / 2 + (j - i - 1); }

inline Var a_var(int i, int j, int k) { return static_cast<Var>(kABase + 5 * pair_index(i, j) + k); }
inline Var b_var(int i, int j, int k) { return static_cast<Var>(kBBase + 5 * pair_index(i, j) + k); }

inline bool is_x(Var v) { return v < kABase; }
inline bool is_a(Var v) { return v >= kABase && v < kBBase; }
inline bool is_b(Var v) { return v >= kBBase && v < kTVar; }

std::string var_name(Var v);
Var parse_var(const std::string& name);

std::vector<Var> x_vars();
std::vector<Var> a_vars();

}  // namespace skewpf
