#include "eqlog/program.hpp"

#include <set>

namespace eqlog {

std::string render_rule(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.heads.size(); ++i) {
    if (i > 0) {
      out += " | ";
    }
    out += r.heads[i];
  }
  if (r.pos_body.empty() && r.neg_body.empty()) {
    if (r.heads.empty()) {
      out += ":-";
    }
    out += ".";
    return out;
  }
  out += r.heads.empty() ? ":- " : " :- ";
  bool first = true;
  for (const auto& a : r.pos_body) {
    if (!first) {
      out += ", ";
    }
    out += a;
    first = false;
  }
  for (const auto& a : r.neg_body) {
    if (!first) {
      out += ", ";
    }
    out += "not " + a;
    first = false;
  }
  out += ".";
  return out;
}

std::string render_program(const Program& p) {
  std::string out;
  for (const auto& r : p.rules) {
    out += render_rule(r);
    out += '\n';
  }
  return out;
}

Vocabulary vocabulary_of(const Rule& r) {
  std::set<std::string> atoms(r.heads.begin(), r.heads.end());
  atoms.insert(r.pos_body.begin(), r.pos_body.end());
  atoms.insert(r.neg_body.begin(), r.neg_body.end());
  return Vocabulary(std::vector<std::string>(atoms.begin(), atoms.end()));
}

Vocabulary vocabulary_of(const Program& p) {
  std::set<std::string> atoms;
  for (const auto& r : p.rules) {
    atoms.insert(r.heads.begin(), r.heads.end());
    atoms.insert(r.pos_body.begin(), r.pos_body.end());
    atoms.insert(r.neg_body.begin(), r.neg_body.end());
  }
  return Vocabulary(std::vector<std::string>(atoms.begin(), atoms.end()));
}

}  // namespace eqlog
