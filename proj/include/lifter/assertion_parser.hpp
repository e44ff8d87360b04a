#pragma once

#include <string>
#include <string_view>

#include "lifter/ast.hpp"

namespace lifter {

// Parses one assertion terminated by ';'. Comments are (* ... *), non-nested.
// Scope violations are rejected here as well; use check_scopes directly for a
// non-throwing check of programmatic trees.
AssertionPtr parse_assertion(std::string_view text,
                             const std::string& origin = {});

// One assertion per .lifter file.
AssertionPtr load_assertion_file(const std::string& path);

}  // namespace lifter
