#pragma once

#include <string_view>

#include "eqlog/formula.hpp"
#include "eqlog/program.hpp"

namespace eqlog {

// Grammar (precedence - > & > | > ->, -> right-associative):
//
//   form := impl
//   impl := disj ("->" impl)?
//   disj := conj ("|" conj)*
//   conj := neg ("&" neg)*
//   neg  := "-" neg | atom | "_|_" | "#t" | "(" form ")"
//
// '%' starts a comment that runs to end of line.
FormulaPtr parse_formula(std::string_view text);

// One rule per line:
//
//   atom ("|" atom)* ":-" lit ("," lit)* "."     lit := atom | "not" atom
//
// Head or body may be empty; facts may omit ":-". '%' starts a comment.
// "not" is reserved and cannot be used as an atom in programs.
Program parse_program(std::string_view text);

}  // namespace eqlog
