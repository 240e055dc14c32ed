#include "vecint/array.hpp"

namespace vecint {

std::vector<std::string> pair_alphabet_labels() { return {"00", "01", "10", "11"}; }

VectorArray intersection_array(const VectorArray& binary) {
  if (!binary.is_binary()) throw std::invalid_argument("intersection_array: need binary array");
  const int n = binary.n();
  const int dim = binary.dim();
  std::vector<std::vector<IntVec>> entries(n);
  for (int i = 0; i < n; ++i) {
    entries[i].assign(4, IntVec::Zero(dim));
    entries[i][pair_letter(1, 1)] = binary.entry(i, 1);
  }
  return VectorArray(n, pair_alphabet_labels(), dim, std::move(entries), binary.scaling());
}

}  // namespace vecint
