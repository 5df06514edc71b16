#include <cctype>
#include <memory>

#include "quiddity/ring.hpp"

namespace quiddity {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  char peek_raw(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return std::string(text_.substr(start, pos_ - start));
  }
  /// Text up to the parenthesis matching one just consumed; consumes the ')'.
  std::string_view balanced() {
    const std::size_t start = pos_;
    int depth = 1;
    while (pos_ < text_.size()) {
      if (text_[pos_] == '(') ++depth;
      if (text_[pos_] == ')' && --depth == 0) {
        auto inner = text_.substr(start, pos_ - start);
        ++pos_;
        return inner;
      }
      ++pos_;
    }
    fail("unbalanced parentheses");
  }
  std::size_t position() const { return offset_ + pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, position()); }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

// --- ring grammar ---------------------------------------------------------------

RingPtr parse_product(Cursor& in);

RingPtr parse_atom(Cursor& in) {
  const std::size_t at = in.position();
  try {
    if (in.accept_word("Frac")) {
      in.expect('(');
      auto inner = parse_product(in);
      in.expect(')');
      return Ring::fraction(std::move(inner));
    }
    if (in.accept('(')) {
      auto inner = parse_product(in);
      in.expect(')');
      return inner;
    }
    if (in.accept('Q')) return Ring::rationals();
    if (in.accept('Z')) {
      if (in.peek_raw() == '/' && std::isdigit(static_cast<unsigned char>(in.peek_raw(1)))) {
        in.accept('/');
        const std::string n = in.digits();
        if (n.size() > 19) in.fail("modulus too large");
        return Ring::mod_int(std::stoull(n));
      }
      return Ring::integers();
    }
  } catch (const RingError& e) {
    throw RingError(std::string(e.what()) + " (at position " + std::to_string(at) + ")");
  }
  in.fail("expected ring ('Z', 'Q', 'Z/N', 'Frac(...)' or '(...)')");
}

RingPtr parse_postfix(Cursor& in) {
  RingPtr ring = parse_atom(in);
  while (in.peek() == '[') {
    in.accept('[');
    const std::string var = in.identifier();
    in.expect(']');
    ring = Ring::polynomial(ring, var);
    if (in.peek() == '/' && in.peek_raw(1) == '(') {
      in.accept('/');
      in.accept('(');
      const std::size_t start = in.position();
      const std::string_view body = in.balanced();
      Element modulus = ring->zero();
      try {
        modulus = ring->parse_element(body);
      } catch (const ParseError& e) {
        throw ParseError("in quotient modulus: " + e.detail(), start + e.position());
      }
      try {
        ring = Ring::quotient(ring, modulus);
      } catch (const RingError& e) {
        throw RingError(std::string(e.what()) + " (at position " + std::to_string(start) + ")");
      }
    }
  }
  return ring;
}

RingPtr parse_product(Cursor& in) {
  RingPtr ring = parse_postfix(in);
  while (in.accept('*')) ring = Ring::product(ring, parse_postfix(in));
  return ring;
}

// --- element grammar ------------------------------------------------------------

struct Node {
  enum Kind { Int, Var, Add, Sub, Mul, Div, Neg, Pow, Pair } kind;
  std::size_t pos;
  mpz_class value;
  std::string name;
  std::uint64_t exponent = 0;
  std::unique_ptr<Node> lhs, rhs;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr make_node(Node::Kind k, std::size_t pos) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  n->pos = pos;
  return n;
}

NodePtr parse_expr(Cursor& in);

NodePtr parse_primary(Cursor& in) {
  const char c = in.peek();
  const std::size_t pos = in.position();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    auto n = make_node(Node::Int, pos);
    n->value = mpz_class(in.digits());
    return n;
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    auto n = make_node(Node::Var, pos);
    n->name = in.identifier();
    return n;
  }
  if (in.accept('(')) {
    NodePtr first = parse_expr(in);
    if (in.accept(',')) {
      auto n = make_node(Node::Pair, pos);
      n->lhs = std::move(first);
      n->rhs = parse_expr(in);
      in.expect(')');
      return n;
    }
    in.expect(')');
    return first;
  }
  in.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
}

NodePtr parse_power(Cursor& in) {
  NodePtr base = parse_primary(in);
  if (in.peek() == '^') {
    const std::size_t pos = in.position();
    in.accept('^');
    const std::string e = in.digits();
    if (e.size() > 9) in.fail("exponent too large");
    auto n = make_node(Node::Pow, pos);
    n->exponent = std::stoull(e);
    n->lhs = std::move(base);
    return n;
  }
  return base;
}

NodePtr parse_unary(Cursor& in) {
  if (in.peek() == '-') {
    const std::size_t pos = in.position();
    in.accept('-');
    auto n = make_node(Node::Neg, pos);
    n->lhs = parse_unary(in);
    return n;
  }
  if (in.peek() == '+') {
    in.accept('+');
    return parse_unary(in);
  }
  return parse_power(in);
}

NodePtr parse_term(Cursor& in) {
  NodePtr lhs = parse_unary(in);
  while (in.peek() == '*' || in.peek() == '/') {
    const std::size_t pos = in.position();
    const Node::Kind k = in.accept('*') ? Node::Mul : (in.accept('/'), Node::Div);
    auto n = make_node(k, pos);
    n->lhs = std::move(lhs);
    n->rhs = parse_unary(in);
    lhs = std::move(n);
  }
  return lhs;
}

NodePtr parse_expr(Cursor& in) {
  NodePtr lhs = parse_term(in);
  while (in.peek() == '+' || in.peek() == '-') {
    const std::size_t pos = in.position();
    const Node::Kind k = in.accept('+') ? Node::Add : (in.accept('-'), Node::Sub);
    auto n = make_node(k, pos);
    n->lhs = std::move(lhs);
    n->rhs = parse_term(in);
    lhs = std::move(n);
  }
  return lhs;
}

Element evaluate(const Node& n, const Ring& ring) {
  try {
    switch (n.kind) {
      case Node::Int:
        return ring.from_int(n.value);
      case Node::Var:
        return ring.variable(n.name);
      case Node::Add:
        return ring.add(evaluate(*n.lhs, ring), evaluate(*n.rhs, ring));
      case Node::Sub:
        return ring.sub(evaluate(*n.lhs, ring), evaluate(*n.rhs, ring));
      case Node::Mul:
        return ring.mul(evaluate(*n.lhs, ring), evaluate(*n.rhs, ring));
      case Node::Div:
        return ring.divide(evaluate(*n.lhs, ring), evaluate(*n.rhs, ring));
      case Node::Neg:
        return ring.neg(evaluate(*n.lhs, ring));
      case Node::Pow:
        return ring.pow(evaluate(*n.lhs, ring), n.exponent);
      case Node::Pair:
        switch (ring.kind()) {
          case RingKind::Product:
            return ring.pair(evaluate(*n.lhs, *ring.left()), evaluate(*n.rhs, *ring.right()));
          case RingKind::Polynomial:
          case RingKind::Quotient:
            return ring.coerce(evaluate(n, *ring.coefficient_ring()));
          case RingKind::Fraction:
            return ring.coerce(evaluate(n, *ring.domain()));
          default:
            throw ParseError("pair literal outside a product ring", n.pos);
        }
    }
  } catch (const RingError& e) {
    throw ParseError(e.what(), n.pos);
  }
  throw ParseError("bad expression", n.pos);
}

}  // namespace

RingPtr Ring::parse(std::string_view expr) {
  Cursor in(expr);
  RingPtr ring = parse_product(in);
  if (!in.at_end()) in.fail("trailing input");
  return ring;
}

Element Ring::parse_element(std::string_view text) const {
  Cursor in(text);
  NodePtr root = parse_expr(in);
  if (!in.at_end()) in.fail("trailing input");
  return evaluate(*root, *this);
}

std::vector<Element> Ring::parse_tuple(std::string_view text) const {
  // Tolerate an enclosing [ ... ].
  std::size_t offset = 0;
  const std::size_t first = text.find_first_not_of(" \t\n");
  const std::size_t last = text.find_last_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '[' && text[last] == ']') {
    offset = first + 1;
    text = text.substr(offset, last - offset);
  }
  std::vector<Element> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      const std::string_view piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t\n") == std::string_view::npos) {
        throw ParseError("empty tuple entry", offset + start);
      }
      try {
        out.push_back(parse_element(piece));
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), offset + start + e.position());
      }
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in tuple", offset + text.size());
  return out;
}

}  // namespace quiddity
