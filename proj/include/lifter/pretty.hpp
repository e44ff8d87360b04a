#pragma once

#include <string>

#include "lifter/ast.hpp"

namespace lifter {

// Canonical single-line rendering ending in ';'. Re-parses to an equal tree;
// parentheses are emitted only where precedence requires them. Infix atoms
// print infix (Rule 1 Is_Rule_Of Trm_Occ 1), the rest prefix.
std::string pretty_print(const Assertion& assertion);

// Indented tree dump, one node per line, used by the parse subcommand.
std::string ast_tree(const Assertion& assertion);

}  // namespace lifter
