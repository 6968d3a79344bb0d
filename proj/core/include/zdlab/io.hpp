#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdlab/structure.hpp"

namespace zdlab {

// Structure files are JSON objects with keys
//   kind  : one of the kind names
//   order : carrier size
//   zero  : index of the zero element
//   one   : index of the one element (kinds that have one)
//   add   : row-major table, add[i][j] = i + j (kinds that have addition)
//   mul   : row-major table, mul[i][j] = i * j
//   labels: optional element names
// Files may place zero/one anywhere; parsing renumbers the carrier so that
// zero lands on index 0 and one on index 1, which is the in-memory normal
// form everything else assumes.

nlohmann::json to_json(const FiniteStructure& s);
nlohmann::json to_json(const ValidationReport& r);

FiniteStructure structure_from_json(const nlohmann::json& j);

FiniteStructure load_structure(const std::filesystem::path& file);
void save_structure(const std::filesystem::path& file,
                    const FiniteStructure& s);

// Renumber a raw structure so zero -> 0 and one -> 1 while keeping all other
// elements in their relative order.  `zero`/`one` are indices in the input.
FiniteStructure normalize(const FiniteStructure& s, ElementId zero,
                          std::optional<ElementId> one);

// The permutation normalize() applies: perm[i] = new index of old element i.
std::vector<ElementId> normalizing_permutation(std::uint32_t order,
                                               ElementId zero,
                                               std::optional<ElementId> one);

// Apply an arbitrary relabeling: element i of the input becomes perm[i].
FiniteStructure relabel(const FiniteStructure& s,
                        const std::vector<ElementId>& perm);

// Small library of ready-made carriers, addressable from the CLI as
// "builtin:<name>".
std::vector<std::string> builtin_names();
FiniteStructure builtin_structure(const std::string& name);

}  // namespace zdlab
