#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cyclehom/group_action.hpp"

namespace cyclehom::io {

// Group description files, format_version "1":
//   { "format_version": "1", "order": n, "table": n x n array,
//     "names": optional n strings }
// Structural problems (bad JSON, wrong types or shapes, unknown version)
// raise ParseError; the multiplication table itself is validated as a group
// by FiniteGroup and reports the violated axiom as ValidationError.
cycles::FiniteGroup parse_group(const std::string& text, const std::string& name);
cycles::FiniteGroup load_group(const std::filesystem::path& file);

// Symmetry action files, format_version "1":
//   { "format_version": "1", "group": <relative path or inline group object>,
//     "generators": list of permutations }
// A relative group path is resolved against base_dir (for load_action, the
// directory of the action file). Generators that fail to be automorphisms
// raise NotAnAutomorphism.
cycles::GroupAction parse_action(const std::string& text, const std::filesystem::path& base_dir,
                                 const std::string& name);
cycles::GroupAction load_action(const std::filesystem::path& file);

// Writes the bundled example inputs (cyclic groups, the symmetric group on
// three letters, root-of-unity inversion actions) into dir, creating it if
// needed; returns the sorted file names written.
std::vector<std::string> write_seed_corpus(const std::filesystem::path& dir);

}  // namespace cyclehom::io
