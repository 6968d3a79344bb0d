#include "zdlab/canonical.hpp"

#include <algorithm>

#include "zdlab/io.hpp"

namespace zdlab {

std::vector<ElementId> table_key(const FiniteStructure& s) {
  std::vector<ElementId> key;
  if (s.add) key = s.add->cells();
  key.insert(key.end(), s.mul.cells().begin(), s.mul.cells().end());
  return key;
}

FiniteStructure canonical_form(const FiniteStructure& s) {
  s.check_well_formed();
  // (order - fixed)! permutations; 10 keeps the worst case around 40k even
  // for kinds with nothing but zero pinned.
  if (s.order > 10)
    throw resource_error("canonical form is brute force; order " +
                         std::to_string(s.order) + " is past its envelope");

  ElementId first_free = s.has_one() ? 2 : 1;
  std::vector<ElementId> movable;
  for (std::uint32_t i = first_free; i < s.order; ++i)
    movable.push_back(static_cast<ElementId>(i));

  std::vector<ElementId> perm(s.order);
  for (std::uint32_t i = 0; i < s.order; ++i)
    perm[i] = static_cast<ElementId>(i);

  FiniteStructure best = s;
  best.labels.clear();
  std::vector<ElementId> best_key = table_key(best);

  std::vector<ElementId> images = movable;
  while (std::next_permutation(images.begin(), images.end())) {
    for (std::size_t i = 0; i < movable.size(); ++i) perm[movable[i]] = images[i];
    FiniteStructure cand = s;
    cand.labels.clear();
    cand = relabel(cand, perm);
    std::vector<ElementId> key = table_key(cand);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best;
}

}  // namespace zdlab
