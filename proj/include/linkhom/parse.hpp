#pragma once

#include "linkhom/rf.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkhom {

/// Where a word lives: RF(rank) with generators x<i>, or H(rank) with generators x<i><j> / x{i,j}.
struct ParseContext {
  enum class Kind { RF, H };
  Kind kind = Kind::RF;
  int rank = 0;

  static ParseContext rf(int m) { return {Kind::RF, m}; }
  static ParseContext hlink(int n) { return {Kind::H, n}; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// expr := term {term};  term := atom ['^' signed-int];
/// atom := gen | '[' expr ',' expr ']' | '(' expr ')'.  Whitespace is ignored.
GroupExpr parse(const std::string& text, const ParseContext& ctx);

/// Inverse of parse for parser-shaped trees.
std::string print(const GroupExpr& e, const ParseContext& ctx);

}  // namespace linkhom
