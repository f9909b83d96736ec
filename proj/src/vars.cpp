#include "skewpf/vars.hpp"

namespace skewpf {

namespace {
// pair_index inverse, computed once
struct PairTable {
  int i[kNumPairs];
  int j[kNumPairs];
  PairTable() {
    int idx = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) {
        i[idx] = a;
        j[idx] = b;
        ++idx;
      }
  }
};
const PairTable kPairs;
}  // namespace

std::string var_name(Var v) {
  if (is_x(v)) return "x" + std::to_string(v);
  if (v == kTVar) return "t";
  char block = is_a(v) ? 'a' : 'b';
  int off = v - (is_a(v) ? kABase : kBBase);
  int pair = off / 5, k = off % 5;
  std::string s(1, block);
  s += std::to_string(kPairs.i[pair]);
  s += std::to_string(kPairs.j[pair]);
  s += std::to_string(k);
  return s;
}

Var parse_var(const std::string& name) {
  if (name == "t") return kTVar;
  if (name.size() == 2 && name[0] == 'x' && name[1] >= '0' && name[1] <= '4')
    return static_cast<Var>(name[1] - '0');
  if (name.size() == 4 && (name[0] == 'a' || name[0] == 'b')) {
    int i = name[1] - '0', j = name[2] - '0', k = name[3] - '0';
    if (i >= 0 && i < j && j < 6 && k >= 0 && k < 5)
      return name[0] == 'a' ? a_var(i, j, k) : b_var(i, j, k);
  }
  fail(Errc::BadInput, "unknown variable '" + name + "'");
}

std::vector<Var> x_vars() {
  std::vector<Var> v(kNumX);
  for (int k = 0; k < kNumX; ++k) v[k] = x_var(k);
  return v;
}

std::vector<Var> a_vars() {
  std::vector<Var> v;
  v.reserve(75);
  for (Var w = kABase; w < kBBase; ++w) v.push_back(w);
  return v;
}

}  // namespace skewpf
