// Copyright 2026 The Entropic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entropic/parser.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <utility>

namespace entropic {
namespace {

enum class Tok {
  kIdent,
  kNumber,
  kSlash,
  kStar,
  kPlus,
  kMinus,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kSemicolon,
  kBar,
  kGe,
  kLe,
  kEq,
  kImplies,
  kAnd,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

std::string Describe(const Token& t) {
  if (t.kind == Tok::kEnd) return "end of input";
  return "'" + t.text + "'";
}

bool IsIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> Lex(std::string_view src) {
  std::vector<Token> out;
  size_t i = 0;
  int line = 1;
  size_t line_start = 0;
  auto span_at = [&](size_t start, size_t end) {
    return SourceSpan{start, end, line, static_cast<int>(start - line_start) + 1};
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      ++line;
      line_start = ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    size_t start = i;
    if (IsIdentStart(c)) {
      while (i < src.size() && IsIdentChar(src[i])) ++i;
      out.push_back({Tok::kIdent, std::string(src.substr(start, i - start)),
                     span_at(start, i)});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
        ++i;
      out.push_back({Tok::kNumber, std::string(src.substr(start, i - start)),
                     span_at(start, i)});
      continue;
    }
    auto two = src.substr(i, 2);
    Tok kind;
    size_t len = 1;
    if (two == ">=") {
      kind = Tok::kGe, len = 2;
    } else if (two == "<=") {
      kind = Tok::kLe, len = 2;
    } else if (two == "=>") {
      kind = Tok::kImplies, len = 2;
    } else if (two == "==") {
      kind = Tok::kEq, len = 2;
    } else if (two == "&&") {
      kind = Tok::kAnd, len = 2;
    } else {
      switch (c) {
        case '/': kind = Tok::kSlash; break;
        case '*': kind = Tok::kStar; break;
        case '+': kind = Tok::kPlus; break;
        case '-': kind = Tok::kMinus; break;
        case '(': kind = Tok::kLParen; break;
        case ')': kind = Tok::kRParen; break;
        case '[': kind = Tok::kLBracket; break;
        case ']': kind = Tok::kRBracket; break;
        case ',': kind = Tok::kComma; break;
        case ';': kind = Tok::kSemicolon; break;
        case '|': kind = Tok::kBar; break;
        case '=': kind = Tok::kEq; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'",
                           span_at(start, start + 1));
      }
    }
    i += len;
    out.push_back({kind, std::string(src.substr(start, len)), span_at(start, i)});
  }
  out.push_back({Tok::kEnd, "", span_at(src.size(), src.size())});
  return out;
}

// Variable names either fixed up front or collected on first use.
class VariableTable {
 public:
  explicit VariableTable(std::optional<std::vector<std::string>> fixed)
      : fixed_(fixed.has_value()), names_(fixed.value_or(std::vector<std::string>{})) {
    if (names_.size() > kMaxVariables) {
      throw InvalidArgument("more than 16 variables declared");
    }
  }

  // Resolves an identifier inside H(...)/I(...) into variables.
  VarSet Resolve(const Token& tok) {
    const std::string& s = tok.text;
    if (auto idx = Find(s)) return VarSet::Singleton(*idx);
    VarSet out;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t len = 0;
      if (fixed_) {
        for (const std::string& name : names_) {
          if (name.size() > len && s.compare(pos, name.size(), name) == 0) {
            len = name.size();
          }
        }
        if (len == 0) {
          throw ParseError("unknown variable in '" + s + "'", tok.span);
        }
      } else {
        len = 1;
        while (pos + len < s.size() && !std::isalpha(static_cast<unsigned char>(s[pos + len]))) {
          ++len;
        }
      }
      out = out | VarSet::Singleton(Intern(s.substr(pos, len), tok.span));
      pos += len;
    }
    return out;
  }

  const std::vector<std::string>& names() const { return names_; }

 private:
  std::optional<int> Find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<int>(it - names_.begin());
  }

  int Intern(const std::string& name, const SourceSpan& span) {
    if (auto idx = Find(name)) return *idx;
    if (fixed_) throw ParseError("unknown variable '" + name + "'", span);
    if (names_.size() == kMaxVariables) {
      throw ParseError("more than 16 variables", span);
    }
    names_.push_back(name);
    return static_cast<int>(names_.size()) - 1;
  }

  bool fixed_;
  std::vector<std::string> names_;
};

// A parsed sub-expression: constant + linear part. Expressions are parsed
// over kMaxVariables and narrowed once the variable count is known.
struct Value {
  Rational constant = 0;
  LinExpr linear{kMaxVariables};
};

enum class Relation { kGe, kLe, kEq };

struct Atom {
  LinExpr expr;  // read as expr >= 0, or expr = 0 for equalities
  bool equality = false;
  SourceSpan span;
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, VariableTable* vars)
      : tokens_(std::move(tokens)), vars_(vars) {}

  std::vector<Clause> ParseConstraint() {
    std::vector<Clause> clauses;
    do {
      for (Clause& c : ParseClause()) clauses.push_back(std::move(c));
    } while (Accept(Tok::kAnd));
    Expect(Tok::kEnd, "'&&' or end of input");
    return clauses;
  }

  Value ParseStandaloneExpr() {
    Value v = ParseSum();
    Expect(Tok::kEnd, "end of expression");
    return v;
  }

 private:
  const Token& Peek(size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& Next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool Accept(Tok kind) {
    if (Peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  const Token& Expect(Tok kind, const std::string& what) {
    if (Peek().kind != kind) {
      throw ParseError("expected " + what + ", found " + Describe(Peek()),
                       Peek().span);
    }
    return Next();
  }

  std::vector<Clause> ParseClause() {
    Clause clause;
    if (Accept(Tok::kLBracket)) {
      if (Peek().kind != Tok::kRBracket) {
        do {
          Atom a = ParseAtom();
          clause.antecedents.push_back(a.expr);
          if (a.equality) clause.antecedents.push_back(-a.expr);
        } while (Accept(Tok::kComma));
      }
      Expect(Tok::kRBracket, "']'");
      Expect(Tok::kImplies, "'=>'");
    }
    if (Peek().kind == Tok::kIdent && Peek().text == "max" &&
        Peek(1).kind == Tok::kLParen) {
      SourceSpan start = Next().span;
      Next();
      std::vector<Value> args;
      do {
        args.push_back(ParseSum());
      } while (Accept(Tok::kComma));
      Expect(Tok::kRParen, "')' closing max");
      const Token& rel = Next();
      if (rel.kind == Tok::kEq) {
        throw ParseError("equality is not allowed on a disjunctive consequent",
                         rel.span);
      }
      if (rel.kind != Tok::kGe) {
        throw ParseError("max(...) must be compared with '>='", rel.span);
      }
      Value rhs = ParseSum();
      for (Value& a : args) {
        clause.consequents.push_back(Homogeneous(Sub(a, rhs), start));
      }
      return {clause};
    }
    Atom a = ParseAtom();
    clause.consequents.push_back(a.expr);
    if (!a.equality) return {clause};
    Clause second = clause;
    second.consequents = {-a.expr};
    return {clause, second};
  }

  Atom ParseAtom() {
    SourceSpan start = Peek().span;
    Value lhs = ParseSum();
    const Token& rel = Next();
    Relation r;
    switch (rel.kind) {
      case Tok::kGe: r = Relation::kGe; break;
      case Tok::kLe: r = Relation::kLe; break;
      case Tok::kEq: r = Relation::kEq; break;
      default:
        throw ParseError("expected '>=', '<=' or '=', found " + Describe(rel),
                         rel.span);
    }
    Value rhs = ParseSum();
    Atom atom;
    atom.span = start;
    atom.span.end = tokens_[pos_ - 1].span.end;
    atom.expr = Homogeneous(r == Relation::kLe ? Sub(rhs, lhs) : Sub(lhs, rhs),
                            atom.span);
    atom.equality = r == Relation::kEq;
    return atom;
  }

  static Value Sub(Value a, const Value& b) {
    a.constant -= b.constant;
    a.linear -= b.linear;
    return a;
  }

  static LinExpr Homogeneous(const Value& v, const SourceSpan& span) {
    if (v.constant != 0) {
      throw ParseError("constant term " + ToDisplayString(v.constant) +
                           " in an information inequality",
                       span);
    }
    return v.linear;
  }

  Value ParseSum() {
    Value acc;
    bool negate = false;
    if (Accept(Tok::kMinus)) {
      negate = true;
    } else {
      Accept(Tok::kPlus);
    }
    acc = ParseProduct();
    if (negate) Scale(acc, -1);
    while (true) {
      if (Accept(Tok::kPlus)) {
        Value t = ParseProduct();
        acc.constant += t.constant;
        acc.linear += t.linear;
      } else if (Accept(Tok::kMinus)) {
        acc = Sub(acc, ParseProduct());
      } else {
        return acc;
      }
    }
  }

  static void Scale(Value& v, const Rational& s) {
    v.constant *= s;
    v.linear *= s;
  }

  Value ParseProduct() {
    Value acc = ParseFactor();
    while (true) {
      const Token& t = Peek();
      if (t.kind == Tok::kStar) {
        Next();
        acc = Multiply(acc, ParseFactor(), t.span);
      } else if (t.kind == Tok::kSlash) {
        Next();
        SourceSpan span = Peek().span;
        Value d = ParseFactor();
        if (!d.linear.is_zero()) {
          throw ParseError("division by a non-constant expression", span);
        }
        if (d.constant == 0) throw ParseError("division by zero", span);
        Scale(acc, 1 / d.constant);
      } else if (t.kind == Tok::kIdent || t.kind == Tok::kLParen) {
        acc = Multiply(acc, ParseFactor(), t.span);
      } else {
        return acc;
      }
    }
  }

  static Value Multiply(Value a, Value b, const SourceSpan& span) {
    if (!a.linear.is_zero() && !b.linear.is_zero()) {
      throw ParseError("product of two entropy terms is not linear", span);
    }
    if (!a.linear.is_zero()) std::swap(a, b);
    // a is now constant.
    Scale(b, a.constant);
    return b;
  }

  Value ParseFactor() {
    const Token& t = Next();
    switch (t.kind) {
      case Tok::kNumber: {
        Value v;
        v.constant = Rational(BigInt(t.text, 10));
        return v;
      }
      case Tok::kLParen: {
        Value v = ParseSum();
        Expect(Tok::kRParen, "')'");
        return v;
      }
      case Tok::kMinus: {
        Value v = ParseFactor();
        Scale(v, -1);
        return v;
      }
      case Tok::kIdent:
        if ((t.text == "H" || t.text == "h") && Peek().kind == Tok::kLParen) {
          return ParseEntropy();
        }
        if (t.text == "I" && Peek().kind == Tok::kLParen) {
          return ParseMutualInformation();
        }
        throw ParseError("unknown function or stray identifier '" + t.text +
                             "' (use H(...) or I(...))",
                         t.span);
      default:
        throw ParseError("expected a term, found " + Describe(t), t.span);
    }
  }

  VarSet ParseVarList() {
    VarSet s;
    while (true) {
      const Token& t = Peek();
      if (t.kind == Tok::kIdent) {
        s = s | vars_->Resolve(Next());
      } else if (t.kind == Tok::kComma) {
        Next();
      } else {
        return s;
      }
    }
  }

  Value ParseEntropy() {
    Expect(Tok::kLParen, "'('");
    VarSet y = ParseVarList();
    VarSet x;
    if (Accept(Tok::kBar)) x = ParseVarList();
    Expect(Tok::kRParen, "')' closing H(...)");
    Value v;
    v.linear = LinExpr::ConditionalEntropy(kMaxVariables, y, x);
    return v;
  }

  Value ParseMutualInformation() {
    Expect(Tok::kLParen, "'('");
    VarSet y = ParseVarList();
    Expect(Tok::kSemicolon, "';' inside I(...)");
    VarSet z = ParseVarList();
    VarSet x;
    if (Accept(Tok::kBar)) x = ParseVarList();
    Expect(Tok::kRParen, "')' closing I(...)");
    Value v;
    v.linear = LinExpr::MutualInformation(kMaxVariables, y, z, x);
    return v;
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
  VariableTable* vars_;
};

LinExpr Narrow(const LinExpr& wide, int n) {
  LinExpr out(n);
  for (const auto& [s, c] : wide.terms()) out.Add(s, c);
  return out;
}

// Blanks out `vars` directive lines (keeping offsets) and returns the names.
std::optional<std::vector<std::string>> ExtractVarsDirective(std::string& src) {
  std::optional<std::vector<std::string>> names;
  size_t line_start = 0;
  int line_no = 1;
  while (line_start <= src.size()) {
    size_t line_end = src.find('\n', line_start);
    if (line_end == std::string::npos) line_end = src.size();
    std::string line = src.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    std::string first;
    if (is >> first && first == "vars") {
      if (names) {
        throw ParseError("duplicate vars line",
                         SourceSpan{line_start, line_end, line_no, 1});
      }
      names.emplace();
      std::string name;
      while (is >> name) {
        bool ok = IsIdentStart(name[0]) &&
                  std::all_of(name.begin(), name.end(), IsIdentChar);
        if (!ok || std::find(names->begin(), names->end(), name) != names->end()) {
          throw ParseError("bad or repeated variable name '" + name + "'",
                           SourceSpan{line_start, line_end, line_no, 1});
        }
        names->push_back(name);
      }
      std::fill(src.begin() + line_start, src.begin() + line_end, ' ');
    }
    line_start = line_end + 1;
    ++line_no;
  }
  return names;
}

BooleanConstraint Finish(std::vector<Clause> wide, const VariableTable& vars) {
  BooleanConstraint out;
  out.variable_names = vars.names();
  out.n = static_cast<int>(out.variable_names.size());
  for (Clause& c : wide) {
    Clause narrow;
    for (const LinExpr& e : c.antecedents) narrow.antecedents.push_back(Narrow(e, out.n));
    for (const LinExpr& e : c.consequents) narrow.consequents.push_back(Narrow(e, out.n));
    out.clauses.push_back(std::move(narrow));
  }
  return out;
}

BooleanConstraint ParseConstraintImpl(
    std::string_view text, std::optional<std::vector<std::string>> fixed) {
  std::string src(text);
  auto declared = ExtractVarsDirective(src);
  if (declared && fixed && *declared != *fixed) {
    throw ParseError("vars line disagrees with the supplied variable order",
                     SourceSpan{});
  }
  if (!fixed) fixed = declared;
  VariableTable vars(fixed);
  Parser parser(Lex(src), &vars);
  return Finish(parser.ParseConstraint(), vars);
}

bool AllSingleChar(const std::vector<std::string>& names, VarSet s) {
  for (int i : s.Members()) {
    if (names.at(i).size() != 1) return false;
  }
  return true;
}

}  // namespace

ParseError::ParseError(const std::string& message, SourceSpan span)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
            ": " + message),
      span_(span),
      detail_(message) {}

LinExpr ParseExpr(std::string_view text,
                  const std::vector<std::string>& variables) {
  VariableTable vars(variables);
  Parser parser(Lex(text), &vars);
  Value v = parser.ParseStandaloneExpr();
  if (v.constant != 0) {
    throw ParseError("constant term in a linear entropy expression",
                     SourceSpan{0, text.size(), 1, 1});
  }
  return Narrow(v.linear, static_cast<int>(variables.size()));
}

BooleanConstraint ParseConstraint(std::string_view text) {
  return ParseConstraintImpl(text, std::nullopt);
}

BooleanConstraint ParseConstraint(std::string_view text,
                                  const std::vector<std::string>& variables) {
  return ParseConstraintImpl(text, variables);
}

VarSet ParseVarSet(std::string_view text,
                   const std::vector<std::string>& variables) {
  VariableTable vars(variables);
  VarSet s;
  for (const Token& t : Lex(text)) {
    if (t.kind == Tok::kIdent) {
      s = s | vars.Resolve(t);
    } else if (t.kind != Tok::kComma && t.kind != Tok::kEnd) {
      throw ParseError("unexpected " + Describe(t) + " in a variable set",
                       t.span);
    }
  }
  return s;
}

std::string FormatVarSet(VarSet s, const std::vector<std::string>& names) {
  std::string out;
  const bool juxtapose = AllSingleChar(names, s);
  for (int i : s.Members()) {
    if (!out.empty() && !juxtapose) out += ",";
    out += names.at(i);
  }
  return out;
}

std::string FormatExpr(const LinExpr& e, const std::vector<std::string>& names) {
  if (e.is_zero()) return "0";
  std::vector<std::pair<VarSet, Rational>> terms(e.terms().begin(),
                                                 e.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::make_pair(a.first.size(), a.first.bits()) <
           std::make_pair(b.first.size(), b.first.bits());
  });
  std::string out;
  bool first = true;
  for (const auto& [s, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) out += ToDisplayString(mag) + "*";
    out += "H(" + FormatVarSet(s, names) + ")";
  }
  return out;
}

std::string FormatConstraint(const BooleanConstraint& c) {
  std::string out = "vars";
  for (const std::string& name : c.variable_names) out += " " + name;
  out += "\n";
  for (size_t i = 0; i < c.clauses.size(); ++i) {
    const Clause& clause = c.clauses[i];
    if (i > 0) out += "\n&& ";
    if (!clause.antecedents.empty()) {
      out += "[";
      for (size_t k = 0; k < clause.antecedents.size(); ++k) {
        if (k > 0) out += ", ";
        out += FormatExpr(clause.antecedents[k], c.variable_names) + " >= 0";
      }
      out += "] => ";
    }
    if (clause.consequents.size() == 1) {
      out += FormatExpr(clause.consequents[0], c.variable_names) + " >= 0";
    } else {
      out += "max(";
      for (size_t k = 0; k < clause.consequents.size(); ++k) {
        if (k > 0) out += ", ";
        out += FormatExpr(clause.consequents[k], c.variable_names);
      }
      out += ") >= 0";
    }
  }
  out += "\n";
  return out;
}

}  // namespace entropic
