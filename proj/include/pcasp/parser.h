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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pcasp/program.h"

namespace pcasp {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParseOptions {
  /// Accept atom names with generated prefixes (k_, gap_k_, lam_), e.g. when
  /// re-reading the output of `pcasp transform`. Such atoms are plain base
  /// atoms to the parser.
  bool allow_reserved = false;
};

/// Parses the ground, aggregate-free fragment: one statement per '.',
/// `head :- body`, disjunction with '|', default negation with `not`,
/// weak constraints with ':~', comments with '%'. Atom ids are assigned in
/// first-occurrence order.
Program parse(std::string_view text, const ParseOptions& options = {});

/// Canonical text form: statements in stored order, one per line, literals
/// sorted by atom id. parse(print(p)) is structurally equal to p.
std::string print(const Program& p);

std::string print(const Rule& r, const Signature& sig);
std::string print(const WeakConstraint& w, const Signature& sig);

}  // namespace pcasp
