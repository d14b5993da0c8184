#include "linkhom/parse.hpp"

#include <cctype>
#include <sstream>

namespace linkhom {

namespace {

class Parser {
 public:
  Parser(const std::string& s, const ParseContext& ctx) : s_(s), ctx_(ctx) {}

  GroupExpr run() {
    GroupExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_atom_start() { return peek('x') || peek('[') || peek('('); }

  GroupExpr expr() {
    std::vector<GroupExpr> terms;
    if (!at_atom_start()) fail("expected a generator, '[' or '('");
    while (at_atom_start()) terms.push_back(term());
    if (terms.size() == 1) return std::move(terms[0]);
    return GroupExpr::product(std::move(terms));
  }

  GroupExpr term() {
    bool bare = peek('x');
    GroupExpr a = atom();
    if (!peek('^')) return a;
    ++pos_;
    Int e = signed_int();
    if (bare) {
      a.exponent = e;
      return a;
    }
    return GroupExpr::power(std::move(a), e);
  }

  Int signed_int() {
    skip();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = digits;
      fail("expected an integer exponent");
    }
    std::string t = s_.substr(start, pos_ - start);
    if (t[0] == '+') t = t.substr(1);
    return Int(t);
  }

  int unsigned_small() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    if (pos_ - start > 4) {
      pos_ = start;
      fail("index too large");
    }
    return std::stoi(s_.substr(start, pos_ - start));
  }

  GroupExpr atom() {
    skip();
    if (peek('(')) {
      ++pos_;
      if (peek(')')) {
        ++pos_;
        return GroupExpr::identity();
      }
      GroupExpr e = expr();
      expect(')');
      return e;
    }
    if (peek('[')) {
      ++pos_;
      GroupExpr a = expr();
      expect(',');
      GroupExpr b = expr();
      expect(']');
      return GroupExpr::comm(std::move(a), std::move(b));
    }
    return generator();
  }

  GroupExpr generator() {
    std::size_t start = pos_;
    expect('x');
    if (ctx_.kind == ParseContext::Kind::RF) {
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected generator index");
      int i = unsigned_small();
      if (i < 1 || i > ctx_.rank) {
        pos_ = start;
        fail("generator index out of range");
      }
      return GroupExpr::generator({i, 0});
    }
    int i = 0, j = 0;
    if (pos_ < s_.size() && s_[pos_] == '{') {
      ++pos_;
      skip();
      i = unsigned_small();
      expect(',');
      skip();
      j = unsigned_small();
      expect('}');
    } else {
      std::size_t d = pos_;
      while (d < s_.size() && std::isdigit(static_cast<unsigned char>(s_[d]))) ++d;
      if (d - pos_ != 2) fail("expected two single-digit indices or the braced form x{i,j}");
      if (ctx_.rank > 9) fail("braced form x{i,j} is required when n > 9");
      i = s_[pos_] - '0';
      j = s_[pos_ + 1] - '0';
      pos_ = d;
    }
    if (i < 1 || j <= i || j > ctx_.rank) {
      pos_ = start;
      fail("generator indices must satisfy 1 <= i < j <= n");
    }
    return GroupExpr::generator({i, j});
  }

  const std::string& s_;
  ParseContext ctx_;
  std::size_t pos_ = 0;
};

void print_gen(std::ostringstream& os, const Gen& g, const ParseContext& ctx) {
  if (ctx.kind == ParseContext::Kind::RF)
    os << 'x' << g.i;
  else if (ctx.rank <= 9)
    os << 'x' << g.i << g.j;
  else
    os << "x{" << g.i << ',' << g.j << '}';
}

void print_rec(std::ostringstream& os, const GroupExpr& e, const ParseContext& ctx) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::GenPower:
      print_gen(os, e.gen, ctx);
      if (e.exponent != 1) os << '^' << e.exponent;
      return;
    case K::Product:
      if (e.children.empty()) {
        os << "()";
        return;
      }
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) os << ' ';
        const auto& c = e.children[i];
        bool paren = c.kind == K::Product && !c.children.empty();
        if (paren) os << '(';
        print_rec(os, c, ctx);
        if (paren) os << ')';
      }
      return;
    case K::Commutator:
      os << '[';
      print_rec(os, e.children[0], ctx);
      os << ',';
      print_rec(os, e.children[1], ctx);
      os << ']';
      return;
    case K::Power: {
      const auto& b = e.children[0];
      bool paren = b.kind != K::Commutator && !(b.kind == K::Product && b.children.empty());
      if (paren) os << '(';
      print_rec(os, b, ctx);
      if (paren) os << ')';
      os << '^' << e.exponent;
      return;
    }
  }
}

}  // namespace

GroupExpr parse(const std::string& text, const ParseContext& ctx) {
  if (ctx.rank < 1) throw DomainError("parse context needs a positive rank");
  return Parser(text, ctx).run();
}

std::string print(const GroupExpr& e, const ParseContext& ctx) {
  std::ostringstream os;
  print_rec(os, e, ctx);
  return os.str();
}

}  // namespace linkhom
