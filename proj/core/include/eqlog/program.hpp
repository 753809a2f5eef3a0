#pragma once

#include <string>
#include <vector>

#include "eqlog/vocabulary.hpp"

namespace eqlog {

// Ground disjunctive rule
//
//   h1 | ... | hk :- p1, ..., pm, not n1, ..., not nj.
//
// Any of the three lists may be empty; an empty head is a constraint.
struct Rule {
  std::vector<std::string> heads;
  std::vector<std::string> pos_body;
  std::vector<std::string> neg_body;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Program {
  std::vector<Rule> rules;

  friend bool operator==(const Program&, const Program&) = default;
};

std::string render_rule(const Rule& r);
std::string render_program(const Program& p);

Vocabulary vocabulary_of(const Rule& r);
Vocabulary vocabulary_of(const Program& p);

}  // namespace eqlog
