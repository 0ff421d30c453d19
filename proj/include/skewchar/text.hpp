#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "skewchar/partition.hpp"
#include "skewchar/skew.hpp"

namespace skewchar {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " +
                              std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Comma list of parts, each optionally with a multiplicity: "6,6,4" or
// "6^2,4". Blank input, "0" and "∅" are the empty partition. Throws
// ParseError on malformed text and NotWeaklyDecreasing if parts increase.
Partition parse_partition(std::string_view text);

// "<outer>/<inner>"; without a slash the inner partition is empty.
SkewDiagram parse_skew(std::string_view text);

// "k,l".
GrassmannianContext parse_context(std::string_view text);

// "(3,2,1)"; the empty partition is "()".
std::string bracketed(const Partition& p);

}  // namespace skewchar
