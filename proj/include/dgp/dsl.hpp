#pragma once

// Text syntax for values, codes of every universe, and code environments.
// One lexer and one precedence parser serve all universes; each universe
// enables its own atoms, and indexed codes are elaborated against their
// in/out headers afterwards.
//
//   code   := sum
//   sum    := prod ("+" sum)?          "+" < "*" < "@" < "fix", all right-assoc
//   prod   := comp ("*" prod)?
//   comp   := prefix ("@" ["{" label* "}"] comp)?
//   prefix := "fix" prefix | atom
//   atom   := U | P | I | I@label | !label | K "sort" | K!(label, label)
//           | K@name | R name | "(" code ")"

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgp/error.hpp"
#include "dgp/indexed.hpp"
#include "dgp/instant.hpp"
#include "dgp/multirec.hpp"
#include "dgp/polyp.hpp"
#include "dgp/regular.hpp"
#include "dgp/value.hpp"

namespace dgp::dsl {

struct Token {
  enum class Type : std::uint8_t { Ident, String, Sym, Newline, End } type;
  std::string text;
  std::size_t line, col;
  std::size_t begin, end;  // byte offsets

  std::string describe() const {
    switch (type) {
      case Type::Ident: return "'" + text + "'";
      case Type::String: return "\"" + text + "\"";
      case Type::Sym: return "'" + text + "'";
      case Type::Newline: return "end of line";
      case Type::End: return "end of input";
    }
    return "?";
  }
};

inline bool ident_byte(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_' || c == '\'' || c == '.' || c >= 0x80;
}

/// Splits text into tokens; `;` counts as a line break. Columns count code points.
inline std::vector<Token> lex(std::string_view text, std::size_t first_line = 1) {
  std::vector<Token> out;
  std::size_t line = first_line, col = 1, i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i)
      if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++col;
  };
  while (i < text.size()) {
    const unsigned char c = text[i];
    if (c == '\n' || c == ';') {
      out.push_back({Token::Type::Newline, std::string(1, static_cast<char>(c)), line, col, i, i + 1});
      ++i;
      if (c == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    } else if (std::isspace(c) != 0) {
      advance(1);
    } else if (c == '"') {
      const std::size_t l = line, cl = col, b = i;
      advance(1);
      const std::size_t start = i;
      while (i < text.size() && text[i] != '"' && text[i] != '\n') advance(1);
      if (i >= text.size() || text[i] != '"')
        throw ParseError(l, cl, {"closing '\"'"}, i >= text.size() ? "end of input" : "end of line");
      std::string body(text.substr(start, i - start));
      advance(1);
      out.push_back({Token::Type::String, std::move(body), l, cl, b, i});
    } else if (ident_byte(c)) {
      const std::size_t l = line, cl = col, b = i;
      while (i < text.size() && ident_byte(static_cast<unsigned char>(text[i]))) advance(1);
      out.push_back({Token::Type::Ident, std::string(text.substr(b, i - b)), l, cl, b, i});
    } else if (std::string_view("+*@()<>,#!{}=:").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Type::Sym, std::string(1, static_cast<char>(c)), line, col, i, i + 1});
      advance(1);
    } else {
      throw ParseError(line, col, {}, "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }
  }
  out.push_back({Token::Type::End, "", line, col, i, i});
  return out;
}

/// "inl.inr.x" ↦ Left (Right x)
inline IndexLabel label_from_text(std::string_view text) {
  std::vector<Side> tags;
  while (text.size() > 4 && (text.substr(0, 4) == "inl." || text.substr(0, 4) == "inr.")) {
    tags.push_back(text[2] == 'l' ? Side::Left : Side::Right);
    text.remove_prefix(4);
  }
  IndexLabel l{std::string(text)};
  for (auto it = tags.rbegin(); it != tags.rend(); ++it) l = *it == Side::Left ? IndexLabel::left(l) : IndexLabel::right(l);
  return l;
}

/// Untyped code tree shared by every universe.
struct Ast {
  enum class Kind : std::uint8_t { Unit, Par, Id, IdAt, Tag, Sum, Prod, Comp, Fix, KPrim, KEq, KRef, Rec } kind;
  std::size_t line = 0, col = 0;
  IndexLabel label, label2;
  std::string text;
  std::optional<std::vector<IndexLabel>> middle;
  std::shared_ptr<const Ast> lhs, rhs;
};

/// The atoms and operators one universe admits.
struct Dialect {
  bool par = false, id = false, id_at = false, tag = false, comp = false, fix = false, konst = false, rec = false;

  static Dialect regular() { return {false, true, false, false, false, false, false, false}; }
  static Dialect polyp() { return {true, true, false, false, true, false, false, false}; }
  static Dialect multirec() { return {false, false, true, true, false, false, false, false}; }
  static Dialect indexed() { return {false, false, true, true, true, true, false, false}; }
  static Dialect instant() { return {false, false, false, false, false, false, true, true}; }
};

class Parser {
 public:
  Parser(std::vector<Token> tokens, Dialect d) : toks_(std::move(tokens)), d_(d) {}

  // -- token access ----------------------------------------------------------

  const Token& peek() {
    skip_newlines();
    return toks_[pos_];
  }
  const Token& peek_raw() const { return toks_[pos_]; }
  const Token& next() {
    skip_newlines();
    return toks_[pos_++];
  }
  void skip_newlines() {
    while (toks_[pos_].type == Token::Type::Newline) ++pos_;
  }
  bool at_sym(const char* s) {
    const Token& t = peek();
    return t.type == Token::Type::Sym && t.text == s;
  }
  bool at_ident(const char* s) {
    const Token& t = peek();
    return t.type == Token::Type::Ident && t.text == s;
  }
  [[noreturn]] void fail(const Token& t, std::vector<std::string> expected) {
    throw ParseError(t.line, t.col, std::move(expected), t.describe());
  }
  const Token& expect_sym(const char* s) {
    if (!at_sym(s)) fail(peek(), {std::string("'") + s + "'"});
    return next();
  }
  const Token& expect_ident(const std::string& what) {
    if (peek().type != Token::Type::Ident) fail(peek(), {what});
    return next();
  }
  /// The next token starts exactly where the previous one ended.
  bool adjacent() const { return pos_ > 0 && toks_[pos_].begin == toks_[pos_ - 1].end; }
  void expect_end() {
    if (peek().type != Token::Type::End) fail(peek(), end_expected());
  }

  // -- codes -----------------------------------------------------------------

  std::shared_ptr<const Ast> code() { return sum(); }

  /// Labels up to the end of the current line.
  std::vector<IndexLabel> header_labels() {
    std::vector<IndexLabel> out;
    while (peek_raw().type == Token::Type::Ident) out.push_back(label_from_text(toks_[pos_++].text));
    const Token& t = peek_raw();
    if (t.type != Token::Type::Newline && t.type != Token::Type::End) fail(t, {"index label", "end of line"});
    return out;
  }

  /// `keyword ':' labels` on one line.
  std::vector<IndexLabel> header(const char* keyword) {
    if (!at_ident(keyword)) fail(peek(), {std::string("'") + keyword + ":'"});
    next();
    expect_sym(":");
    return header_labels();
  }

  // -- values ----------------------------------------------------------------

  Value value() {
    const Token& t = peek();
    if (t.type == Token::Type::Sym) {
      if (t.text == "<") {
        next();
        Value v = value();
        expect_sym(">");
        return Value::roll(v);
      }
      if (t.text == "(") {
        next();
        Value a = value();
        expect_sym(",");
        Value b = value();
        expect_sym(")");
        return Value::pair(a, b);
      }
    } else if (t.type == Token::Type::Ident) {
      if (t.text == "tt") return next(), Value::tt();
      if (t.text == "refl") return next(), Value::refl();
      if (t.text == "in1") return next(), Value::in1(value());
      if (t.text == "in2") return next(), Value::in2(value());
      if (t.text == "k") return next(), Value::konst(value());
      if (t.text == "rec") return next(), Value::rec(value());
      const Token sort = next();
      if (!at_sym("#")) fail(peek(), {"'#'"});
      next();
      const Token& n = peek();
      if (n.type != Token::Type::Ident || n.text.find_first_not_of("0123456789") != std::string::npos ||
          n.text.size() > 18)
        fail(n, {"token number"});
      next();
      return Value::payload(sort.text, std::stoull(n.text));
    }
    fail(t, {"tt", "refl", "in1", "in2", "k", "rec", "'<'", "'('", "payload token"});
  }

 private:
  std::vector<std::string> end_expected() const {
    std::vector<std::string> out{"'+'", "'*'"};
    if (d_.comp) out.push_back("'@'");
    out.push_back("end of input");
    return out;
  }

  std::shared_ptr<Ast> node(Ast::Kind k, const Token& at) {
    auto a = std::make_shared<Ast>();
    a->kind = k;
    a->line = at.line;
    a->col = at.col;
    return a;
  }

  std::shared_ptr<const Ast> binary(Ast::Kind k, const Token& at, std::shared_ptr<const Ast> l,
                                    std::shared_ptr<const Ast> r) {
    auto a = node(k, at);
    a->lhs = std::move(l);
    a->rhs = std::move(r);
    return a;
  }

  std::shared_ptr<const Ast> sum() {
    auto l = prod();
    if (!at_sym("+")) return l;
    const Token op = next();
    return binary(Ast::Kind::Sum, op, l, sum());
  }

  std::shared_ptr<const Ast> prod() {
    auto l = comp();
    if (!at_sym("*")) return l;
    const Token op = next();
    return binary(Ast::Kind::Prod, op, l, prod());
  }

  std::shared_ptr<const Ast> comp() {
    auto l = prefix();
    if (!d_.comp || !at_sym("@")) return l;
    const Token op = next();
    std::optional<std::vector<IndexLabel>> middle;
    if (d_.fix && adjacent() && at_sym("{")) {
      next();
      middle.emplace();
      while (peek().type == Token::Type::Ident) middle->push_back(label_from_text(next().text));
      expect_sym("}");
    }
    auto r = comp();
    auto a = node(Ast::Kind::Comp, op);
    a->lhs = l;
    a->rhs = r;
    a->middle = std::move(middle);
    return a;
  }

  std::shared_ptr<const Ast> prefix() {
    if (d_.fix && at_ident("fix")) {
      const Token kw = next();
      auto a = node(Ast::Kind::Fix, kw);
      a->lhs = prefix();
      return a;
    }
    return atom();
  }

  std::vector<std::string> atom_expected() const {
    std::vector<std::string> out{"U"};
    if (d_.par) out.emplace_back("P");
    if (d_.id) out.emplace_back("I");
    if (d_.id_at) out.emplace_back("I@label");
    if (d_.tag) out.emplace_back("!label");
    if (d_.konst) out.emplace_back("K");
    if (d_.rec) out.emplace_back("R name");
    if (d_.fix) out.emplace_back("fix");
    out.emplace_back("'('");
    return out;
  }

  IndexLabel label_token(const char* what) { return label_from_text(expect_ident(what).text); }

  std::shared_ptr<const Ast> atom() {
    const Token t = peek();
    if (t.type == Token::Type::Sym && t.text == "(") {
      next();
      auto inner = sum();
      expect_sym(")");
      return inner;
    }
    if (t.type == Token::Type::Sym && t.text == "!" && d_.tag) {
      next();
      auto a = node(Ast::Kind::Tag, t);
      a->label = label_token("index label");
      return a;
    }
    if (t.type == Token::Type::Ident) {
      if (t.text == "U") return next(), node(Ast::Kind::Unit, t);
      if (t.text == "P" && d_.par) return next(), node(Ast::Kind::Par, t);
      if (t.text == "I" && (d_.id || d_.id_at)) {
        next();
        if (d_.id_at) {
          if (!(adjacent() && at_sym("@"))) fail(peek(), {"'@' directly after I"});
          next();
          auto a = node(Ast::Kind::IdAt, t);
          a->label = label_token("index label");
          return a;
        }
        return node(Ast::Kind::Id, t);
      }
      if (t.text == "R" && d_.rec) {
        next();
        auto a = node(Ast::Kind::Rec, t);
        a->text = expect_ident("code name").text;
        return a;
      }
      if (t.text == "K" && d_.konst) {
        next();
        const Token& n = peek();
        if (n.type == Token::Type::String) {
          auto a = node(Ast::Kind::KPrim, t);
          a->text = next().text;
          return a;
        }
        if (adjacent() && at_sym("!")) {
          next();
          expect_sym("(");
          auto a = node(Ast::Kind::KEq, t);
          a->label = label_token("index label");
          expect_sym(",");
          a->label2 = label_token("index label");
          expect_sym(")");
          return a;
        }
        if (adjacent() && at_sym("@")) {
          next();
          auto a = node(Ast::Kind::KRef, t);
          a->text = expect_ident("code name").text;
          return a;
        }
        fail(n, {"\"sort\"", "'!('", "'@'"});
      }
    }
    fail(t, atom_expected());
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Dialect d_;
};

// -- Elaboration ---------------------------------------------------------------

[[noreturn]] inline void elaboration_error(const Ast& a, std::vector<std::string> expected, const std::string& found) {
  throw ParseError(a.line, a.col, std::move(expected), found);
}

inline regular::Code to_regular(const Ast& a) {
  using regular::Code;
  switch (a.kind) {
    case Ast::Kind::Unit: return Code::unit();
    case Ast::Kind::Id: return Code::id();
    case Ast::Kind::Sum: return Code::sum(to_regular(*a.lhs), to_regular(*a.rhs));
    case Ast::Kind::Prod: return Code::prod(to_regular(*a.lhs), to_regular(*a.rhs));
    default: elaboration_error(a, {"U", "I"}, "another atom");
  }
}

inline polyp::Code to_polyp(const Ast& a) {
  using polyp::Code;
  switch (a.kind) {
    case Ast::Kind::Unit: return Code::unit();
    case Ast::Kind::Par: return Code::par();
    case Ast::Kind::Id: return Code::id();
    case Ast::Kind::Sum: return Code::sum(to_polyp(*a.lhs), to_polyp(*a.rhs));
    case Ast::Kind::Prod: return Code::prod(to_polyp(*a.lhs), to_polyp(*a.rhs));
    case Ast::Kind::Comp: return Code::comp(to_polyp(*a.lhs), to_polyp(*a.rhs));
    default: elaboration_error(a, {"U", "P", "I"}, "another atom");
  }
}

inline multirec::Body to_multirec(const Ast& a, const IndexSet& indices) {
  using multirec::Body;
  switch (a.kind) {
    case Ast::Kind::Unit: return Body::unit();
    case Ast::Kind::IdAt:
    case Ast::Kind::Tag:
      if (!indices.contains(a.label)) elaboration_error(a, {"a declared index"}, "'" + a.label.to_string() + "'");
      return a.kind == Ast::Kind::IdAt ? Body::id(a.label) : Body::tag(a.label);
    case Ast::Kind::Sum: return Body::sum(to_multirec(*a.lhs, indices), to_multirec(*a.rhs, indices));
    case Ast::Kind::Prod: return Body::prod(to_multirec(*a.lhs, indices), to_multirec(*a.rhs, indices));
    default: elaboration_error(a, {"U", "I@label", "!label"}, "another atom");
  }
}

inline indexed::Code to_indexed(const Ast& a, const IndexSet& in, const IndexSet& out) {
  using indexed::Code;
  switch (a.kind) {
    case Ast::Kind::Unit: return Code::unit(in, out);
    case Ast::Kind::IdAt:
      if (!in.contains(a.label)) elaboration_error(a, {"an input index"}, "'" + a.label.to_string() + "'");
      return Code::id(in, out, a.label);
    case Ast::Kind::Tag:
      if (!out.contains(a.label)) elaboration_error(a, {"an output index"}, "'" + a.label.to_string() + "'");
      return Code::tag(in, out, a.label);
    case Ast::Kind::Sum: return Code::sum(to_indexed(*a.lhs, in, out), to_indexed(*a.rhs, in, out));
    case Ast::Kind::Prod: return Code::prod(to_indexed(*a.lhs, in, out), to_indexed(*a.rhs, in, out));
    case Ast::Kind::Comp: {
      const IndexSet middle = a.middle ? IndexSet(*a.middle) : out;
      return Code::comp(to_indexed(*a.lhs, middle, out), to_indexed(*a.rhs, in, middle));
    }
    case Ast::Kind::Fix: {
      Code body = to_indexed(*a.lhs, disjoint_union(in, out), out);
      return Code::fix(std::move(body));
    }
    default: elaboration_error(a, {"U", "I@label", "!label", "fix"}, "another atom");
  }
}

inline instant::Code to_instant(const Ast& a) {
  using instant::Code;
  using instant::KSet;
  switch (a.kind) {
    case Ast::Kind::Unit: return Code::unit();
    case Ast::Kind::KPrim: return Code::k(KSet::prim(a.text));
    case Ast::Kind::KEq: return Code::k(KSet::eq(a.label, a.label2));
    case Ast::Kind::KRef: return Code::k(KSet::of_code(a.text));
    case Ast::Kind::Rec: return Code::r(a.text);
    case Ast::Kind::Sum: return Code::sum(to_instant(*a.lhs), to_instant(*a.rhs));
    case Ast::Kind::Prod: return Code::prod(to_instant(*a.lhs), to_instant(*a.rhs));
    default: elaboration_error(a, {"U", "K", "R name"}, "another atom");
  }
}

// -- Entry points --------------------------------------------------------------

inline Value parse_value(std::string_view text) {
  Parser p(lex(text), Dialect{});
  Value v = p.value();
  if (p.peek().type != Token::Type::End) p.fail(p.peek(), {"end of input"});
  return v;
}

inline IndexLabel parse_label(std::string_view text) {
  Parser p(lex(text), Dialect{});
  const IndexLabel l = label_from_text(p.expect_ident("index label").text);
  if (p.peek().type != Token::Type::End) p.fail(p.peek(), {"end of input"});
  return l;
}

inline regular::Code parse_regular(std::string_view text) {
  Parser p(lex(text), Dialect::regular());
  auto a = p.code();
  p.expect_end();
  return to_regular(*a);
}

inline polyp::Code parse_polyp(std::string_view text) {
  Parser p(lex(text), Dialect::polyp());
  auto a = p.code();
  p.expect_end();
  return to_polyp(*a);
}

/// "indices: a b" on the first line, then the body.
inline multirec::Code parse_multirec(std::string_view text) {
  Parser p(lex(text), Dialect::multirec());
  const IndexSet indices(p.header("indices"));
  auto a = p.code();
  p.expect_end();
  return {indices, to_multirec(*a, indices)};
}

/// "in: ..." and "out: ..." lines, then the body.
inline indexed::Code parse_indexed(std::string_view text) {
  Parser p(lex(text), Dialect::indexed());
  const IndexSet in(p.header("in"));
  const IndexSet out(p.header("out"));
  auto a = p.code();
  p.expect_end();
  return to_indexed(*a, in, out);
}

inline instant::Code parse_instant(std::string_view text) {
  Parser p(lex(text), Dialect::instant());
  auto a = p.code();
  p.expect_end();
  return to_instant(*a);
}

/// One "NAME = code" per line; blank lines and lines starting with '#' are skipped.
inline instant::CodeEnv parse_env(std::string_view text) {
  instant::CodeEnv env;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    ++line_no;
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      Parser p(lex(line, line_no), Dialect::instant());
      const std::string name = p.expect_ident("code name").text;
      p.expect_sym("=");
      auto a = p.code();
      p.expect_end();
      env.define(name, to_instant(*a));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return env;
}

}  // namespace dgp::dsl
