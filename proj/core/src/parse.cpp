#include "eqlog/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "eqlog/error.hpp"

namespace eqlog {

namespace {

bool is_atom_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c));
}

bool is_atom_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// ---------------------------------------------------------------------------
// Formula tokens and lexer.

enum class TokKind {
  atom,
  and_op,
  or_op,
  arrow,
  minus,
  falsum,
  verum,
  lparen,
  rparen,
  end
};

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> lex_formula(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto push = [&](TokKind k, std::string t, int l, int c) {
    out.push_back(Token{k, std::move(t), l, c});
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') {
        ++i;
      }
      continue;
    }
    const int tl = line;
    const int tc = col;
    if (c == '(') {
      push(TokKind::lparen, "(", tl, tc);
      ++i;
      ++col;
    } else if (c == ')') {
      push(TokKind::rparen, ")", tl, tc);
      ++i;
      ++col;
    } else if (c == '&') {
      push(TokKind::and_op, "&", tl, tc);
      ++i;
      ++col;
    } else if (c == '|') {
      push(TokKind::or_op, "|", tl, tc);
      ++i;
      ++col;
    } else if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        push(TokKind::arrow, "->", tl, tc);
        i += 2;
        col += 2;
      } else {
        push(TokKind::minus, "-", tl, tc);
        ++i;
        ++col;
      }
    } else if (c == '_') {
      if (text.substr(i, 3) == "_|_") {
        push(TokKind::falsum, "_|_", tl, tc);
        i += 3;
        col += 3;
      } else {
        throw parse_error("unknown token '_'", tl, tc);
      }
    } else if (c == '#') {
      if (i + 1 < text.size() && text[i + 1] == 't') {
        push(TokKind::verum, "#t", tl, tc);
        i += 2;
        col += 2;
      } else {
        throw parse_error("unknown token '#'", tl, tc);
      }
    } else if (is_atom_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_atom_char(text[j])) {
        ++j;
      }
      push(TokKind::atom, std::string(text.substr(i, j - i)), tl, tc);
      col += static_cast<int>(j - i);
      i = j;
    } else {
      throw parse_error(std::string("unknown token '") + c + "'", tl, tc);
    }
  }
  push(TokKind::end, "", line, col);
  return out;
}

// Recursive descent over the token list.
class FormulaParser {
 public:
  explicit FormulaParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr run() {
    FormulaPtr f = parse_impl();
    if (peek().kind != TokKind::end) {
      throw parse_error("unexpected '" + peek().text + "'", peek().line,
                        peek().column);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  FormulaPtr parse_impl() {
    FormulaPtr l = parse_disj();
    if (peek().kind == TokKind::arrow) {
      take();
      return Formula::implication(std::move(l), parse_impl());
    }
    return l;
  }

  FormulaPtr parse_disj() {
    FormulaPtr l = parse_conj();
    while (peek().kind == TokKind::or_op) {
      take();
      l = Formula::disjunction(std::move(l), parse_conj());
    }
    return l;
  }

  FormulaPtr parse_conj() {
    FormulaPtr l = parse_neg();
    while (peek().kind == TokKind::and_op) {
      take();
      l = Formula::conjunction(std::move(l), parse_neg());
    }
    return l;
  }

  FormulaPtr parse_neg() {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::minus:
        take();
        return Formula::negation(parse_neg());
      case TokKind::atom:
        return Formula::atom(take().text);
      case TokKind::falsum:
        take();
        return Formula::falsum();
      case TokKind::verum:
        take();
        return Formula::verum();
      case TokKind::lparen: {
        take();
        FormulaPtr f = parse_impl();
        if (peek().kind != TokKind::rparen) {
          throw parse_error("expected ')'", peek().line, peek().column);
        }
        take();
        return f;
      }
      default:
        throw parse_error("expected a formula, got '" + t.text + "'", t.line,
                          t.column);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Program rules, one per line.

enum class RTokKind { atom, not_kw, or_op, comma, implied_by, dot, end };

struct RToken {
  RTokKind kind;
  std::string text;
  int column;
};

std::vector<RToken> lex_rule_line(std::string_view text, int line) {
  std::vector<RToken> out;
  std::size_t i = 0;
  int col = 1;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    if (c == '%') {
      break;
    }
    const int tc = col;
    if (c == '|') {
      out.push_back({RTokKind::or_op, "|", tc});
      ++i;
      ++col;
    } else if (c == ',') {
      out.push_back({RTokKind::comma, ",", tc});
      ++i;
      ++col;
    } else if (c == '.') {
      out.push_back({RTokKind::dot, ".", tc});
      ++i;
      ++col;
    } else if (c == ':') {
      if (i + 1 < text.size() && text[i + 1] == '-') {
        out.push_back({RTokKind::implied_by, ":-", tc});
        i += 2;
        col += 2;
      } else {
        throw parse_error("unknown token ':'", line, tc);
      }
    } else if (is_atom_start(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && is_atom_char(text[j])) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      out.push_back({word == "not" ? RTokKind::not_kw : RTokKind::atom,
                     std::move(word), tc});
      col += static_cast<int>(j - i);
      i = j;
    } else {
      throw parse_error(std::string("unknown token '") + c + "'", line, tc);
    }
  }
  out.push_back({RTokKind::end, "", col});
  return out;
}

Rule parse_rule_line(std::string_view text, int line) {
  std::vector<RToken> toks = lex_rule_line(text, line);
  std::size_t pos = 0;
  auto peek = [&]() -> const RToken& { return toks[pos]; };
  auto take = [&]() -> const RToken& { return toks[pos++]; };

  Rule rule;
  if (peek().kind == RTokKind::not_kw) {
    throw parse_error("'not' cannot appear in a rule head", line,
                      peek().column);
  }
  if (peek().kind == RTokKind::atom) {
    rule.heads.push_back(take().text);
    while (peek().kind == RTokKind::or_op) {
      take();
      if (peek().kind != RTokKind::atom) {
        throw parse_error("expected atom after '|', got '" + peek().text + "'",
                          line, peek().column);
      }
      rule.heads.push_back(take().text);
    }
  }
  bool has_arrow = false;
  if (peek().kind == RTokKind::implied_by) {
    has_arrow = true;
    take();
    if (peek().kind != RTokKind::dot) {
      for (;;) {
        bool neg = false;
        if (peek().kind == RTokKind::not_kw) {
          take();
          neg = true;
        }
        if (peek().kind != RTokKind::atom) {
          throw parse_error(
              "expected atom in rule body, got '" + peek().text + "'", line,
              peek().column);
        }
        const std::string atom = take().text;
        (neg ? rule.neg_body : rule.pos_body).push_back(atom);
        if (peek().kind == RTokKind::comma) {
          take();
          continue;
        }
        break;
      }
    }
  }
  if (rule.heads.empty() && !has_arrow) {
    throw parse_error("expected a rule", line, peek().column);
  }
  if (peek().kind != RTokKind::dot) {
    throw parse_error("expected '.', got '" + peek().text + "'", line,
                      peek().column);
  }
  take();
  if (peek().kind != RTokKind::end) {
    throw parse_error("unexpected '" + peek().text + "' after '.'", line,
                      peek().column);
  }
  return rule;
}

}  // namespace

FormulaPtr parse_formula(std::string_view text) {
  return FormulaParser(lex_formula(text)).run();
}

Program parse_program(std::string_view text) {
  Program out;
  int line = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line_text = nl == std::string_view::npos
                                     ? text.substr(start)
                                     : text.substr(start, nl - start);
    // A line is blank when nothing remains before any comment.
    std::size_t cut = line_text.find('%');
    std::string_view body =
        cut == std::string_view::npos ? line_text : line_text.substr(0, cut);
    if (body.find_first_not_of(" \t\r") != std::string_view::npos) {
      out.rules.push_back(parse_rule_line(line_text, line));
    }
    if (nl == std::string_view::npos) {
      break;
    }
    start = nl + 1;
    ++line;
  }
  return out;
}

}  // namespace eqlog
