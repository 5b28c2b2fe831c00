#include "reslat/parser.hpp"

#include <cctype>
#include <string>

namespace reslat {

namespace {

enum class Tok { Ident, TruthLabel, OneConst, LParen, RParen, Comma, Eq, Amp, Bar, Star, LSlash, RSlash, Forall, Exists, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    current_.offset = pos_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      current_.text.clear();
      return;
    }
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      current_.kind = k;
      current_.text = std::string(1, c);
      ++pos_;
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case '=': return single(Tok::Eq);
      case '&': return single(Tok::Amp);
      case '|': return single(Tok::Bar);
      case '*': return single(Tok::Star);
      case '\\': return single(Tok::LSlash);
      case '/': return single(Tok::RSlash);
      default: break;
    }
    if (c == '@') {
      std::size_t start = ++pos_;
      while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
      if (pos_ == start)
        throw Error(ErrorCode::SyntaxError, "empty truth-constant label", current_.offset);
      current_.kind = Tok::TruthLabel;
      current_.text = std::string(text_.substr(start, pos_ - start));
      return;
    }
    if (c == '1' && !is_ident_char(pos_ + 1 < text_.size() ? text_[pos_ + 1] : ' ')) {
      current_.kind = Tok::OneConst;
      current_.text = "1";
      ++pos_;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      current_.text = std::string(text_.substr(start, pos_ - start));
      if (current_.text == "forall")
        current_.kind = Tok::Forall;
      else if (current_.text == "exists")
        current_.kind = Tok::Exists;
      else
        current_.kind = Tok::Ident;
      return;
    }
    throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + c + "'", pos_);
  }

  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }
  static bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '/' || c == '.' ||
           c == '+' || c == '-';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(Arena& arena, std::string_view text) : arena_(arena), lex_(text) {}

  Formula run() {
    Formula f = parse_quant();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::SyntaxError, "expected " + what, lex_.peek().offset);
  }

  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) fail(what);
    return lex_.take();
  }

  Formula parse_quant() {
    const Tok k = lex_.peek().kind;
    if (k == Tok::Forall || k == Tok::Exists) {
      lex_.take();
      Token name = expect(Tok::Ident, "variable name");
      if (arena_.sig().constant_id(name.text))
        throw Error(ErrorCode::SyntaxError, "cannot quantify over constant '" + name.text + "'",
                    name.offset);
      const int v = arena_.var(name.text);
      Formula body = parse_quant();
      return k == Tok::Forall ? arena_.forall(v, body) : arena_.exists(v, body);
    }
    return parse_join();
  }

  Formula parse_join() {
    std::vector<Formula> parts{parse_meet()};
    while (lex_.peek().kind == Tok::Bar) {
      lex_.take();
      parts.push_back(parse_meet());
    }
    return parts.size() == 1 ? parts[0] : arena_.join(std::move(parts));
  }

  Formula parse_meet() {
    std::vector<Formula> parts{parse_res()};
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      parts.push_back(parse_res());
    }
    return parts.size() == 1 ? parts[0] : arena_.meet(std::move(parts));
  }

  Formula parse_res() {
    Formula f = parse_fuse();
    for (;;) {
      const Tok k = lex_.peek().kind;
      if (k == Tok::LSlash) {
        lex_.take();
        f = arena_.lres(f, parse_fuse());
      } else if (k == Tok::RSlash) {
        lex_.take();
        f = arena_.rres(f, parse_fuse());
      } else {
        return f;
      }
    }
  }

  Formula parse_fuse() {
    Formula f = parse_primary();
    while (lex_.peek().kind == Tok::Star) {
      lex_.take();
      f = arena_.fuse(f, parse_primary());
    }
    return f;
  }

  Term resolve_term(const Token& t) {
    if (auto cid = arena_.sig().constant_id(t.text)) return Term{TermKind::Const, *cid};
    return Term{TermKind::Var, arena_.var(t.text)};
  }

  Formula parse_primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::LParen: {
        lex_.take();
        Formula f = parse_quant();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::OneConst:
        lex_.take();
        return arena_.one();
      case Tok::TruthLabel: {
        Token lbl = lex_.take();
        auto e = arena_.algebra().element_of(lbl.text);
        if (!e)
          throw Error(ErrorCode::UnknownSymbol, "no algebra element labelled '" + lbl.text + "'");
        return arena_.truth_const(*e);
      }
      case Tok::Forall:
      case Tok::Exists:
        throw Error(ErrorCode::SyntaxError, "quantifier must be parenthesized here", t.offset);
      case Tok::Ident: {
        Token head = lex_.take();
        if (lex_.peek().kind == Tok::LParen) {
          auto rid = arena_.sig().relation_id(head.text);
          if (!rid)
            throw Error(ErrorCode::UnknownSymbol, "unknown relation '" + head.text + "'");
          lex_.take();
          std::vector<Term> args;
          if (lex_.peek().kind != Tok::RParen) {
            args.push_back(resolve_term(expect(Tok::Ident, "term")));
            while (lex_.peek().kind == Tok::Comma) {
              lex_.take();
              args.push_back(resolve_term(expect(Tok::Ident, "term")));
            }
          }
          expect(Tok::RParen, "')' or ','");
          return arena_.atom(*rid, std::move(args));  // ArityMismatch surfaces here
        }
        if (lex_.peek().kind == Tok::Eq) {
          lex_.take();
          Term lhs = resolve_term(head);
          Term rhs = resolve_term(expect(Tok::Ident, "term"));
          return arena_.eq(lhs, rhs);
        }
        if (auto rid = arena_.sig().relation_id(head.text)) {
          if (arena_.sig().relation(*rid).arity != 0)
            throw Error(ErrorCode::ArityMismatch,
                        head.text + " has positive arity and needs arguments");
          return arena_.atom(*rid, {});
        }
        throw Error(ErrorCode::UnknownSymbol,
                    "'" + head.text + "' is not a relation (a bare term is not a formula)");
      }
      default:
        fail("a formula");
    }
  }

  Arena& arena_;
  Lexer lex_;
};

}  // namespace

Formula parse(Arena& arena, std::string_view text) { return Parser(arena, text).run(); }

}  // namespace reslat
