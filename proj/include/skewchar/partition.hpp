#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewchar {

class NotWeaklyDecreasing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An integer partition stored in canonical form: positive parts, weakly
// decreasing, no trailing zeros. Equality is structural.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  bool empty() const { return parts_.empty(); }

  // Part i (0-indexed); zero past the end.
  int operator[](int i) const {
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
  }
  int largest() const { return empty() ? 0 : parts_.front(); }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// (size, multiplicity) blocks with strictly decreasing sizes.
struct PartBlock {
  int size;
  int multiplicity;
  bool operator==(const PartBlock&) const = default;
};

enum class ShapeClass {
  empty,
  one_line_rectangle,
  two_line_rectangle,
  rectangle,
  near_rectangle,
  fat_hook,
  other,
};

Partition conjugate(const Partition& p);

// Multiset union of the parts, λ ∪ ν.
Partition union_rows(const Partition& p, const Partition& q);

// p + (w^n): adds w boxes to each of the first n rows.
Partition add_columns(const Partition& p, int n, int w);

// Columnwise sum p + q, i.e. (p_i + q_i)_i.
Partition add_partitions(const Partition& p, const Partition& q);

bool contains(const Partition& outer, const Partition& inner);

std::vector<PartBlock> distinct_part_profile(const Partition& p);
Partition from_profile(const std::vector<PartBlock>& profile);

// Shape predicates. All are false for the empty partition; rectangles are
// neither near-rectangles nor fat hooks here.
bool is_rectangle(const Partition& p);
bool is_k_line_rectangle(const Partition& p, int k);
bool is_near_rectangle(const Partition& p);
bool is_fat_hook(const Partition& p);

// The most specific class of p.
ShapeClass shape_class(const Partition& p);
const char* to_string(ShapeClass c);

// All partitions fitting in a width x height box, in increasing size then
// lexicographically decreasing order.
std::vector<Partition> partitions_in_box(int width, int height);

// All partitions of n contained in bound, lexicographically decreasing.
std::vector<Partition> partitions_within(int n, const Partition& bound);

// Comma form, e.g. "3,2,1"; the empty partition prints as "".
std::string to_string(const Partition& p);

}  // namespace skewchar
