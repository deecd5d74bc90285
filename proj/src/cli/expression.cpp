#include <cctype>

#include "strathom/cli/input.hpp"

namespace strathom::cli {

namespace {

struct Token {
  enum class Type { Name, Number, Punct, End };
  Type type = Type::End;
  std::string text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    Token t;
    t.column = i + 1;
    if (std::isalpha(c) || c == '_') {
      t.type = Token::Type::Name;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) t.text += s[i++];
    } else if (std::isdigit(c)) {
      t.type = Token::Type::Number;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) t.text += s[i++];
    } else if (std::string("()[],*-").find(static_cast<char>(c)) != std::string::npos) {
      t.type = Token::Type::Punct;
      t.text = s.substr(i++, 1);
    } else {
      throw ValidationError("column " + std::to_string(i + 1) + ": unexpected character '" + s.substr(i, 1) + "'");
    }
    out.push_back(t);
  }
  Token end;
  end.column = s.size() + 1;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  SpaceExpr parse() {
    SpaceExpr e = expr();
    if (peek().type != Token::Type::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("column " + std::to_string(peek().column) + ": " + what);
  }

  bool accept(const std::string& punct) {
    if (peek().type == Token::Type::Punct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(const std::string& punct) {
    if (!accept(punct)) fail("expected '" + punct + "'");
  }

  bool at_product_operator() const {
    const Token& t = peek();
    return (t.type == Token::Type::Punct && t.text == "*") || (t.type == Token::Type::Name && t.text == "x");
  }

  SpaceExpr expr() {
    SpaceExpr first = term();
    if (!at_product_operator()) return first;
    SpaceExpr p;
    p.kind = SpaceExpr::Kind::Product;
    auto push = [&p](SpaceExpr f) {
      if (f.kind == SpaceExpr::Kind::Product)
        for (auto& g : f.args) p.args.push_back(std::move(g));
      else
        p.args.push_back(std::move(f));
    };
    push(std::move(first));
    while (at_product_operator()) {
      ++pos_;
      push(term());
    }
    return p;
  }

  std::vector<SpaceExpr> arguments() {
    std::vector<SpaceExpr> args;
    args.push_back(expr());
    while (accept(",")) args.push_back(expr());
    return args;
  }

  EulerTerm euler_term() {
    EulerTerm t;
    bool negative = accept("-");
    bool any = false;
    t.coefficient = 1;
    if (peek().type == Token::Type::Number) {
      t.coefficient = Integer(next().text);
      accept("*");
      any = true;
    }
    if (peek().type == Token::Type::Name) {
      t.cls = next().text;
      any = true;
    }
    if (!any) fail("expected an Euler term such as 3w, a or 0");
    if (negative) t.coefficient = -t.coefficient;
    if (t.coefficient == 0) t.cls.clear();
    if (t.coefficient != 0 && t.cls.empty()) fail("a nonzero Euler term needs a class name");
    return t;
  }

  SpaceExpr term() {
    if (accept("(")) {
      SpaceExpr e = expr();
      expect(")");
      return e;
    }
    if (peek().type != Token::Type::Name) fail("expected a space");
    const Token name = next();
    SpaceExpr e;
    if (!accept("(")) {
      e.kind = SpaceExpr::Kind::Atom;
      e.name = name.text;
      return e;
    }
    const std::string& f = name.text;
    if (f == "cone" || f == "susp" || f == "suspension") {
      e.kind = f == "cone" ? SpaceExpr::Kind::Cone : SpaceExpr::Kind::Suspension;
      e.args.push_back(expr());
    } else if (f == "union") {
      e.kind = SpaceExpr::Kind::Union;
      e.args = arguments();
      if (e.args.size() < 2) fail("union needs at least two spaces");
    } else if (f == "isolated") {
      e.kind = SpaceExpr::Kind::Isolated;
      e.args = arguments();
    } else if (f == "thom") {
      e.kind = SpaceExpr::Kind::Thom;
      e.args.push_back(expr());
      expect(",");
      expect("[");
      e.euler.push_back(euler_term());
      while (accept(",")) e.euler.push_back(euler_term());
      expect("]");
    } else if (f == "mapping_torus" || f == "torus") {
      e.kind = SpaceExpr::Kind::MappingTorus;
      e.args.push_back(expr());
      expect(",");
      if (peek().type != Token::Type::Name) fail("expected the name of an automorphism");
      e.name = next().text;
    } else {
      pos_ -= 2;
      fail("unknown constructor '" + f + "'");
    }
    expect(")");
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

std::string euler_string(const EulerTerm& t) {
  if (t.coefficient == 0) return "0";
  if (t.coefficient == 1) return t.cls;
  if (t.coefficient == -1) return "-" + t.cls;
  return t.coefficient.get_str() + t.cls;
}

}  // namespace

SpaceExpr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string SpaceExpr::to_string() const {
  auto join = [this](const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? sep : "") + args[i].to_string();
    return s;
  };
  switch (kind) {
    case Kind::Atom:
      return name;
    case Kind::Product:
      return join("*");
    case Kind::Cone:
      return "cone(" + join(", ") + ")";
    case Kind::Suspension:
      return "susp(" + join(", ") + ")";
    case Kind::Union:
      return "union(" + join(", ") + ")";
    case Kind::Isolated:
      return "isolated(" + join(", ") + ")";
    case Kind::MappingTorus:
      return "mapping_torus(" + join(", ") + ", " + name + ")";
    case Kind::Thom: {
      std::string s = "thom(" + join(", ") + ", [";
      for (std::size_t i = 0; i < euler.size(); ++i) s += (i ? ", " : "") + euler_string(euler[i]);
      return s + "])";
    }
  }
  return {};
}

}  // namespace strathom::cli
