// Copyright 2026 The CompLog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "complog/syntax.hpp"

#include <cctype>
#include <unordered_set>

namespace complog {

const char* to_string(Machine m) {
  return m == Machine::epistemic ? "epistemic" : "productive";
}

const char* to_string(QueryError::Code c) {
  switch (c) {
    case QueryError::Code::unknown_atom: return "UNKNOWN_ATOM";
    case QueryError::Code::unknown_event: return "UNKNOWN_EVENT";
    case QueryError::Code::mixed_query: return "MIXED_QUERY";
    case QueryError::Code::no_candidates: return "NO_CANDIDATES";
    case QueryError::Code::invalid_argument: return "INVALID_ARGUMENT";
    case QueryError::Code::too_many_goals: return "TOO_MANY_GOALS";
  }
  return "?";
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string EventRef::label() const {
  switch (kind) {
    case EventKind::named: return "#" + base.name;
    case EventKind::initiate: return "+" + base.name;
    case EventKind::terminate: return "-" + base.name;
  }
  return base.name;
}

EventRef named(std::string base) { return {EventKind::named, {std::move(base)}}; }
EventRef initiate(std::string base) { return {EventKind::initiate, {std::move(base)}}; }
EventRef terminate(std::string base) { return {EventKind::terminate, {std::move(base)}}; }

bool is_declarative(const Statement& s) {
  return std::holds_alternative<ConditionFact>(s) ||
         std::holds_alternative<DeclRule>(s) || std::holds_alternative<Given>(s);
}

void Program::add(Statement s, SourceSpan span) {
  statements.push_back(std::move(s));
  spans.push_back(span);
}

bool operator==(const Program& a, const Program& b) {
  return a.statements == b.statements;
}

namespace {

// ---- lexer ----------------------------------------------------------------

enum class Tok {
  ident,
  number,
  coloncolon,
  colon,
  arrow,      // ->
  fat_arrow,  // =>
  comma,
  dot,
  hash,
  plus,
  minus,
  langle,
  rangle,
  end,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::number: return "number";
    case Tok::coloncolon: return "'::'";
    case Tok::colon: return "':'";
    case Tok::arrow: return "'->'";
    case Tok::fat_arrow: return "'=>'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::hash: return "'#'";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::langle: return "'<'";
    case Tok::rangle: return "'>'";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      if (pos_ >= src_.size()) {
        out.push_back({Tok::end, "", line_, col_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_blank() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance(1);
      } else {
        return;
      }
    }
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
        ++col_;
      }
      ++pos_;
    }
  }

  bool starts_with(std::string_view s) const {
    return src_.substr(pos_, s.size()) == s;
  }

  Token make(Tok kind, std::size_t len) {
    Token t{kind, std::string(src_.substr(pos_, len)), line_, col_};
    advance(len);
    return t;
  }

  Token next() {
    const char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      while (pos_ + len < src_.size()) {
        char d = src_[pos_ + len];
        if (!std::isalnum(static_cast<unsigned char>(d)) && d != '_') break;
        ++len;
      }
      return make(Tok::ident, len);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t len = 1;
      auto digit_at = [&](std::size_t i) {
        return i < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i]));
      };
      while (digit_at(pos_ + len)) ++len;
      if (pos_ + len < src_.size() && src_[pos_ + len] == '.' &&
          digit_at(pos_ + len + 1)) {
        ++len;
        while (digit_at(pos_ + len)) ++len;
      }
      return make(Tok::number, len);
    }
    if (starts_with("::")) return make(Tok::coloncolon, 2);
    if (starts_with("->")) return make(Tok::arrow, 2);
    if (starts_with("=>")) return make(Tok::fat_arrow, 2);
    if (starts_with("⟨")) return make(Tok::langle, 3);
    if (starts_with("⟩")) return make(Tok::rangle, 3);
    switch (c) {
      case ':': return make(Tok::colon, 1);
      case ',': return make(Tok::comma, 1);
      case '.': return make(Tok::dot, 1);
      case '#': return make(Tok::hash, 1);
      case '+': return make(Tok::plus, 1);
      case '-': return make(Tok::minus, 1);
      case '<': return make(Tok::langle, 1);
      case '>': return make(Tok::rangle, 1);
      default: break;
    }
    // Report the whole UTF-8 sequence of the offending character.
    std::size_t len = 1;
    while (pos_ + len < src_.size() &&
           (static_cast<unsigned char>(src_[pos_ + len]) & 0xC0) == 0x80) {
      ++len;
    }
    throw ParseError(ParseError::Kind::lex, line_, col_,
                     "unexpected character '" +
                         std::string(src_.substr(pos_, len)) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ---- parser ---------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    Program p;
    std::unordered_set<std::string> seen;
    while (peek().kind != Tok::end) {
      const Token& first = peek();
      SourceSpan span{first.line, first.column};
      Statement s = statement();
      if (!seen.insert(render_statement(s)).second) {
        throw ParseError(ParseError::Kind::duplicate, span.line, span.column,
                         "duplicate statement '" + render_statement(s) + "'");
      }
      p.add(std::move(s), span);
    }
    return p;
  }

  GoalSet goal() {
    GoalSet g;
    std::optional<Tok> close;
    if (peek().kind == Tok::langle) {
      take();
      close = Tok::rangle;
    }
    const Tok stop = close.value_or(Tok::end);
    if (peek().kind != stop) {
      for (;;) {
        if (peek().kind == Tok::ident) {
          g.conditions.insert(Atom{take().text});
        } else {
          g.events.insert(event_ref());
        }
        if (peek().kind != Tok::comma) break;
        take();
      }
    }
    expect(stop);
    if (close) expect(Tok::end);
    return g;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  Token take() {
    Token t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& expected) const {
    std::string found = describe(at.kind);
    if (at.kind != Tok::end) found += " '" + at.text + "'";
    throw ParseError(ParseError::Kind::syntax, at.line, at.column,
                     "expected " + expected + ", found " + found);
  }

  Token expect(Tok kind) {
    if (peek().kind != kind) fail(peek(), describe(kind));
    return take();
  }

  static bool starts_event(Tok k) {
    return k == Tok::hash || k == Tok::plus || k == Tok::minus;
  }

  EventRef event_ref() {
    const Token& t = peek();
    EventKind kind;
    switch (t.kind) {
      case Tok::hash: kind = EventKind::named; break;
      case Tok::plus: kind = EventKind::initiate; break;
      case Tok::minus: kind = EventKind::terminate; break;
      default: fail(t, "event ('#x', '+x' or '-x')");
    }
    take();
    Token name = expect(Tok::ident);
    return EventRef{kind, Atom{name.text}};
  }

  Statement statement() {
    std::optional<Bits> weight;
    const Token start = peek();
    if (start.kind == Tok::minus && peek(1).kind == Tok::number) {
      throw ParseError(ParseError::Kind::negative_weight, start.line,
                       start.column,
                       "negative weight '-" + peek(1).text + "'");
    }
    if (start.kind == Tok::number) {
      Token num = take();
      weight = Bits::parse(num.text);
      if (!weight) {
        throw ParseError(ParseError::Kind::bad_weight, num.line, num.column,
                         "weight '" + num.text +
                             "' must have at most 6 decimals and not exceed " +
                             std::to_string(Bits::kMaxWhole));
      }
      expect(Tok::coloncolon);
    }
    const Bits w = weight.value_or(Bits{});
    const Token& head = peek();

    if (head.kind == Tok::ident && head.text == "given" &&
        peek(1).kind == Tok::colon) {
      if (weight) {
        throw ParseError(ParseError::Kind::invalid, start.line, start.column,
                         "'given' statements carry no weight");
      }
      take();
      take();
      Statement s;
      if (peek().kind == Tok::ident) {
        s = Given{Atom{take().text}};
      } else {
        s = GivenEvent{event_ref()};
      }
      expect(Tok::dot);
      return s;
    }

    if (head.kind == Tok::ident) {
      Token body = take();
      if (peek().kind == Tok::dot) {
        take();
        return ConditionFact{Atom{body.text}, w};
      }
      if (peek().kind != Tok::arrow) fail(peek(), "'.' or '->'");
      take();
      Token target = expect(Tok::ident);
      expect(Tok::dot);
      if (target.text == body.text) {
        throw ParseError(ParseError::Kind::invalid, body.line, body.column,
                         "declarative rule '" + body.text + " -> " +
                             target.text + "' is a self-loop");
      }
      return DeclRule{Atom{body.text}, Atom{target.text}, w};
    }

    ActiveRule rule;
    rule.weight = w;
    if (starts_event(head.kind)) {
      EventRef e = event_ref();
      if (peek().kind == Tok::dot) {
        take();
        return EventFact{e, w};
      }
      rule.trigger = e;
    }
    if (peek().kind == Tok::colon) {
      take();
      for (;;) {
        rule.context.insert(Atom{expect(Tok::ident).text});
        if (peek().kind != Tok::comma) break;
        take();
      }
    }
    if (peek().kind != Tok::fat_arrow) {
      if (!rule.trigger && rule.context.empty()) {
        fail(peek(), "statement");
      }
      fail(peek(), rule.context.empty() ? "'.', ':' or '=>'" : "',' or '=>'");
    }
    take();
    for (;;) {
      rule.effects.push_back(event_ref());
      if (peek().kind != Tok::comma) break;
      take();
    }
    expect(Tok::dot);
    return rule;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string weight_prefix(Bits w) {
  return w == Bits{} ? std::string() : w.str() + " :: ";
}

}  // namespace

Program parse_program(std::string_view text) {
  return Parser(Lexer(text).run()).program();
}

GoalSet parse_goal(std::string_view text) {
  return Parser(Lexer(text).run()).goal();
}

std::string render_statement(const Statement& s) {
  struct Visitor {
    std::string operator()(const ConditionFact& f) const {
      return weight_prefix(f.weight) + f.cond.name + ".";
    }
    std::string operator()(const EventFact& f) const {
      return weight_prefix(f.weight) + f.event.label() + ".";
    }
    std::string operator()(const DeclRule& r) const {
      return weight_prefix(r.weight) + r.body.name + " -> " + r.head.name + ".";
    }
    std::string operator()(const ActiveRule& r) const {
      std::string out = weight_prefix(r.weight);
      if (r.trigger) out += r.trigger->label() + " ";
      if (!r.context.empty()) {
        out += ": ";
        bool first = true;
        for (const Atom& a : r.context) {
          if (!first) out += ", ";
          out += a.name;
          first = false;
        }
        out += " ";
      }
      out += "=> ";
      for (std::size_t i = 0; i < r.effects.size(); ++i) {
        if (i) out += ", ";
        out += r.effects[i].label();
      }
      return out + ".";
    }
    std::string operator()(const Given& g) const {
      return "given: " + g.cond.name + ".";
    }
    std::string operator()(const GivenEvent& g) const {
      return "given: " + g.event.label() + ".";
    }
  };
  return std::visit(Visitor{}, s);
}

std::string render_program(const Program& p) {
  std::string out;
  for (const Statement& s : p.statements) {
    out += render_statement(s);
    out += '\n';
  }
  return out;
}

std::string render_goal(const GoalSet& g) {
  std::string out = "<";
  bool first = true;
  for (const Atom& a : g.conditions) {
    if (!first) out += ", ";
    out += a.name;
    first = false;
  }
  for (const EventRef& e : g.events) {
    if (!first) out += ", ";
    out += e.label();
    first = false;
  }
  return out + ">";
}

}  // namespace complog
