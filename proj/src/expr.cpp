#include "monoval/expr.hpp"

#include <cctype>
#include <map>

#include "monoval/rational.hpp"

namespace monoval {

namespace {

enum class TokKind { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      out.push_back({TokKind::Int, text.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      out.push_back({TokKind::Ident, text.substr(start, i - start), start});
      continue;
    }
    TokKind k;
    switch (c) {
      case '+': k = TokKind::Plus; break;
      case '-': k = TokKind::Minus; break;
      case '*': k = TokKind::Star; break;
      case '/': k = TokKind::Slash; break;
      case '^': k = TokKind::Caret; break;
      case '(': k = TokKind::LParen; break;
      case ')': k = TokKind::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({TokKind::End, "", text.size()});
  return out;
}

class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& variables)
      : tokens_(tokenize(text)) {
    for (std::size_t j = 0; j < variables.size(); ++j)
      vars_[variables[j]] = static_cast<int>(j);
    nvars_ = static_cast<int>(variables.size());
  }

  ParsedExpr parse() {
    Poly num = parse_expr();
    if (peek().kind == TokKind::Slash) {
      next();
      Poly den = parse_expr();
      expect_end();
      return ParsedExpr{num, den, true};
    }
    expect_end();
    return ParsedExpr{num, Poly::constant(nvars_, 1), false};
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return tokens_[i < tokens_.size() ? i : tokens_.size() - 1];
  }
  Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  void expect_end() {
    if (peek().kind != TokKind::End)
      throw ParseError("unexpected token \"" + peek().text + "\"", peek().offset);
  }

  Poly parse_expr() {
    bool negate = false;
    if (peek().kind == TokKind::Minus) {
      next();
      negate = true;
    }
    Poly acc = parse_term();
    if (negate) acc = -acc;
    while (peek().kind == TokKind::Plus || peek().kind == TokKind::Minus) {
      bool minus = next().kind == TokKind::Minus;
      Poly t = parse_term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    while (peek().kind == TokKind::Star) {
      next();
      acc = acc * parse_factor();
    }
    return acc;
  }

  Poly parse_factor() {
    Poly a = parse_atom();
    if (peek().kind == TokKind::Caret) {
      next();
      const Token t = peek();
      if (t.kind != TokKind::Int)
        throw ParseError("exponent must be a nonnegative integer literal", t.offset);
      next();
      mpz_class e(t.text);
      if (!e.fits_sint_p()) throw ParseError("exponent too large", t.offset);
      return a.pow(static_cast<int>(e.get_si()));
    }
    return a;
  }

  Poly parse_atom() {
    const Token t = peek();
    switch (t.kind) {
      case TokKind::Int: {
        next();
        mpz_class num(t.text);
        // A '/' continues the literal only inside parentheses; at depth 0 it
        // is the numerator/denominator separator.
        if (depth_ > 0 && peek().kind == TokKind::Slash &&
            peek(1).kind == TokKind::Int) {
          next();
          const Token d = next();
          mpz_class den(d.text);
          if (den == 0) throw ParseError("zero denominator in rational literal", d.offset);
          return Poly::constant(nvars_, make_rational(num, den));
        }
        return Poly::constant(nvars_, mpq_class(num));
      }
      case TokKind::Ident: {
        next();
        auto it = vars_.find(t.text);
        if (it == vars_.end())
          throw ParseError("unknown identifier \"" + t.text + "\"", t.offset);
        return Poly::variable(nvars_, it->second);
      }
      case TokKind::LParen: {
        next();
        ++depth_;
        Poly e = parse_expr();
        if (peek().kind != TokKind::RParen)
          throw ParseError("expected ')'", peek().offset);
        next();
        --depth_;
        return e;
      }
      default:
        throw ParseError("expected a value", t.offset);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  int nvars_ = 0;
  std::map<std::string, int> vars_;
};

std::string coeff_to_string(const mpq_class& a) {
  // literal rationals must be parenthesized to survive re-parsing
  if (a.get_den() == 1) return a.get_num().get_str();
  return "(" + rational_to_string(a) + ")";
}

}  // namespace

ParsedExpr parse_expr(const std::string& text, const std::vector<std::string>& variables) {
  if (variables.empty()) throw Error("no variables declared");
  return Parser(text, variables).parse();
}

std::string poly_to_string(const Poly& f, const std::vector<std::string>& variables) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string vars;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += variables[j];
      if (e[j] > 1) vars += "^" + std::to_string(e[j]);
    }
    mpq_class a = abs(c);
    std::string piece;
    if (vars.empty())
      piece = coeff_to_string(a);
    else if (a == 1)
      piece = vars;
    else
      piece = coeff_to_string(a) + "*" + vars;
    if (first) {
      out += (c < 0 ? "-" : "") + piece;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

std::string ratfn_to_string(const RatFn& f, const std::vector<std::string>& variables) {
  const Poly one = Poly::constant(f.nvars(), 1);
  std::string num = poly_to_string(f.num(), variables);
  if (f.den() == one) return num;
  std::string den = poly_to_string(f.den(), variables);
  if (f.num().terms().size() > 1) num = "(" + num + ")";
  if (f.den().terms().size() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

std::string parsed_to_string(const ParsedExpr& e, const std::vector<std::string>& variables) {
  return e.is_ratfn ? ratfn_to_string(e.ratfn(), variables)
                    : poly_to_string(e.num, variables);
}

namespace {

std::string laurent_to_string(const LaurentMap& m) {
  if (m.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string vars;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "Y" + std::to_string(i + 1);
      if (e[i] != 1) vars += "^" + e[i].get_str();
    }
    mpq_class a = abs(c);
    std::string piece;
    if (vars.empty())
      piece = coeff_to_string(a);
    else if (a == 1)
      piece = vars;
    else
      piece = coeff_to_string(a) + "*" + vars;
    if (first) {
      out += (c < 0 ? "-" : "") + piece;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + piece;
    }
  }
  return out;
}

bool is_laurent_one(const LaurentMap& m) {
  if (m.size() != 1) return false;
  const auto& [e, c] = *m.begin();
  if (c != 1) return false;
  for (const auto& x : e)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::string residue_to_string(const ResidueElement& e) {
  if (e.is_zero()) return "0";
  std::string num = laurent_to_string(e.num());
  if (is_laurent_one(e.den())) return num;
  std::string den = laurent_to_string(e.den());
  if (e.num().size() > 1) num = "(" + num + ")";
  bool den_wrap = e.den().size() > 1;
  if (!den_wrap) {
    const auto& [exps, c] = *e.den().begin();
    bool has_vars = false;
    for (const auto& x : exps)
      if (x != 0) has_vars = true;
    den_wrap = has_vars && c != 1;
  }
  if (den_wrap) den = "(" + den + ")";
  return num + "/" + den;
}

}  // namespace monoval
