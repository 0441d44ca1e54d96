// Decomposes the order complex of the partition lattice Pi_4 and prints each ear.
#include <cstdio>

#include "earlab/earlab.hpp"

using namespace earlab;

int main() {
  auto pi4 = partition_lattice(4);
  auto labels = derive_sn_labeling(pi4, partition_mchain(pi4, 4));
  auto d = decompose_supersolvable(pi4, labels);
  auto rep = verify_ced(d);

  auto fh = f_h_vectors(d.complex);
  std::printf("Pi_4: %zu maximal chains, h = (", d.chain_count());
  for (std::size_t i = 0; i < fh.h.size(); ++i) std::printf("%s%lld", i ? "," : "", fh.h[i]);
  std::printf("), %zu ears, %s\n", d.ears.size(), rep.passed() ? "certified" : "NOT certified");

  for (std::size_t i = 0; i < d.ears.size(); ++i) {
    const auto& e = d.ears[i];
    std::printf("  ear %zu (%s): %zu chains\n", i + 1, rep.ears[i].kind.c_str(), e.chains.size());
  }

  // rank selection: atoms only
  auto atoms = decompose_rank_selected_supersolvable(pi4, labels, {1});
  std::printf("Pi_4 rank 1: %zu ears, %zu empty blocks\n", atoms.ears.size(), atoms.dropped.size());
  return rep.passed() ? 0 : 1;
}
