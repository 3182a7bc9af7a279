#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "meanlab/mean.hpp"

namespace meanlab {

/// Syntax error in a mean expression; position() is a 0-based offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses
///   EXPR  := H | G | L | I | A | S | P | T
///          | holder(NUM) | lehmer(NUM) | genlog(NUM) | stolarsky(NUM, NUM)
///          | lambda(NUM) | k(NUM) | dual(EXPR) | pow(EXPR, NUM)
///   NUM   := decimal | integer/integer, optionally signed
/// Whitespace is ignored between tokens. Parameters beyond the clamp raise
/// std::domain_error from the family factory.
MeanDescriptor parse_mean_expr(const std::string& text);

}  // namespace meanlab
