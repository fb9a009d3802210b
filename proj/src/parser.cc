/*
 *  Copyright (C) 2026  pcasp authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 *
 */

#include "pcasp/parser.h"

#include <cctype>
#include <sstream>
#include <vector>

namespace pcasp {

namespace {

enum class Tok { Ident, Not, Pipe, Comma, Dot, If, WeakIf, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    const int line = line_, column = column_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, column};
    const char c = text_[pos_];
    if (c == '|') return advance(), Token{Tok::Pipe, "|", line, column};
    if (c == ',') return advance(), Token{Tok::Comma, ",", line, column};
    if (c == '.') return advance(), Token{Tok::Dot, ".", line, column};
    if (c == ':') {
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-')
        return advance(), advance(), Token{Tok::If, ":-", line, column};
      if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '~')
        return advance(), advance(), Token{Tok::WeakIf, ":~", line, column};
      throw ParseError("expected ':-' or ':~'", line, column);
    }
    if (c == '[')
      throw ParseError("weak constraint weights are not supported", line, column);
    if (c >= 'a' && c <= 'z') {
      std::string word;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        word.push_back(text_[pos_]);
        advance();
      }
      if (word == "not") return {Tok::Not, word, line, column};
      return {Tok::Ident, word, line, column};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, column);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseOptions& options) : lexer_(text), options_(options) {
    shift();
  }

  Program run() {
    Program p;
    while (current_.kind != Tok::End) statement(p);
    return p;
  }

 private:
  void shift() { current_ = lexer_.next(); }

  int atom(Program& p) {
    if (current_.kind != Tok::Ident)
      throw ParseError("expected atom name", current_.line, current_.column);
    if (!options_.allow_reserved && has_reserved_prefix(current_.text))
      throw ParseError("atom name uses reserved prefix '" + current_.text + "'", current_.line,
                       current_.column);
    const int id = p.signature().base_atom(current_.text);
    shift();
    return id;
  }

  void body(Program& p, std::vector<int>& pos, std::vector<int>& neg) {
    while (true) {
      if (current_.kind == Tok::Not) {
        shift();
        neg.push_back(atom(p));
      } else {
        pos.push_back(atom(p));
      }
      if (current_.kind != Tok::Comma) break;
      shift();
    }
  }

  void expect_dot() {
    if (current_.kind != Tok::Dot)
      throw ParseError("expected '.'", current_.line, current_.column);
    shift();
  }

  void statement(Program& p) {
    if (current_.kind == Tok::WeakIf) {
      shift();
      std::vector<int> pos, neg;
      body(p, pos, neg);
      expect_dot();
      p.add_weak(WeakConstraint::make(std::move(pos), std::move(neg)));
      return;
    }

    std::vector<int> head;
    const Token start = current_;
    if (current_.kind == Tok::Ident) {
      head.push_back(atom(p));
      while (current_.kind == Tok::Pipe) {
        shift();
        head.push_back(atom(p));
      }
    }
    std::vector<int> pos, neg;
    if (current_.kind == Tok::If) {
      shift();
      body(p, pos, neg);
    }
    if (head.empty() && pos.empty() && neg.empty())
      throw ParseError("statement with empty head and empty body", start.line, start.column);
    expect_dot();
    p.add_rule(Rule::make(std::move(head), std::move(pos), std::move(neg)));
  }

  Lexer lexer_;
  ParseOptions options_;
  Token current_{Tok::End, "", 1, 1};
};

void print_body(std::ostringstream& out, const std::vector<int>& pos, const std::vector<int>& neg,
                const Signature& sig) {
  bool first = true;
  for (int a : pos) {
    if (!first) out << ", ";
    out << sig[a].name;
    first = false;
  }
  for (int a : neg) {
    if (!first) out << ", ";
    out << "not " << sig[a].name;
    first = false;
  }
}

}  // namespace

Program parse(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).run();
}

std::string print(const Rule& r, const Signature& sig) {
  std::ostringstream out;
  bool first = true;
  for (int a : r.head) {
    if (!first) out << " | ";
    out << sig[a].name;
    first = false;
  }
  if (!r.positive_body.empty() || !r.negative_body.empty()) {
    if (!r.head.empty()) out << " ";
    out << ":- ";
    print_body(out, r.positive_body, r.negative_body, sig);
  }
  out << ".";
  return out.str();
}

std::string print(const WeakConstraint& w, const Signature& sig) {
  std::ostringstream out;
  out << ":~ ";
  print_body(out, w.positive_body, w.negative_body, sig);
  out << ".";
  return out.str();
}

std::string print(const Program& p) {
  std::ostringstream out;
  for (const Program::StatementRef& s : p.statements()) {
    if (s.is_weak)
      out << print(p.weak()[s.index], p.signature()) << "\n";
    else
      out << print(p.rules()[s.index], p.signature()) << "\n";
  }
  return out.str();
}

}  // namespace pcasp
