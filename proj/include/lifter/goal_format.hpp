#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lifter/error.hpp"
#include "lifter/term.hpp"
#include "lifter/type.hpp"

namespace lifter {

using TypeTable = std::map<std::string, SimpleType>;

// Generic S-expression tree with source positions, shared by the goal format
// and the context equations. A node is either a leaf symbol or a list.
struct Sexpr {
  SourcePos pos;
  std::string symbol;        // set iff leaf
  std::vector<Sexpr> items;  // set iff list
  bool leaf = true;
};

// Reads exactly one S-expression covering the whole input (only trailing
// whitespace allowed). base gives the position of the first input character.
Sexpr read_sexpr(std::string_view text, SourcePos base = {1, 1},
                 const std::string& origin = {});

// Type syntax: 'a, nat, 'a list, ('a, 'b) pair, 'a => 'b (right-assoc).
SimpleType parse_type(std::string_view text, SourcePos base = {1, 1},
                      const std::string& origin = {});

// Builds a typed term from an S-expression. Leaf symbols resolve against the
// constant table first, then the free table; applications are rebuilt
// left-associated and checked for arity/type fit against the head's declared
// function type (type variables act as wildcards).
TermPtr elaborate_term(const Sexpr& sexpr, const TypeTable& constants,
                       const TypeTable& frees, const std::string& origin = {});

TermPtr parse_term(std::string_view text, const TypeTable& constants,
                   const TypeTable& frees, SourcePos base = {1, 1},
                   const std::string& origin = {});

// Goal file: free declarations (one per line, "free <name> :: <type>")
// followed by a single "goal <s-expression>" line.
Goal parse_goal_document(std::string_view text, const TypeTable& constants,
                         const std::string& origin = {});

Goal load_goal_file(const std::string& path, const TypeTable& constants);

// Whole-file reader used by the loaders; throws Error when unreadable.
std::string read_text_file(const std::string& path);

}  // namespace lifter
