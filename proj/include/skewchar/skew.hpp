#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewchar/partition.hpp"

namespace skewchar {

class NotBasic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotProper : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DoesNotFit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Cell {
  int row;
  int col;
  auto operator<=>(const Cell&) const = default;
};

// The skew shape outer/inner. Cell (r, c) is present iff
// inner[r] <= c < outer[r].
class SkewDiagram {
 public:
  SkewDiagram() = default;
  // Throws std::invalid_argument unless inner ⊆ outer.
  SkewDiagram(Partition outer, Partition inner = {});

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  int size() const { return outer_.size() - inner_.size(); }
  int rows() const { return outer_.length(); }
  bool has_cell(int row, int col) const {
    return row >= 0 && row < rows() && inner_[row] <= col && col < outer_[row];
  }
  // Cells in reading order: rows top to bottom, columns left to right.
  std::vector<Cell> cells() const;

  auto operator<=>(const SkewDiagram&) const = default;
  bool operator==(const SkewDiagram&) const = default;

 private:
  Partition outer_;
  Partition inner_;
};

// Segment lengths of the two boundary paths of a basic proper diagram,
// both traversed from the lower-left to the upper-right corner.
struct LatticePathProfile {
  std::vector<int> inner_segments;  // up, right, up, ..., right
  std::vector<int> outer_segments;  // right, up, right, ..., up
  int s_in = 0;
  int s_out = 0;
};

// The translate whose top row and left column are occupied.
SkewDiagram canonical(const SkewDiagram& d);

SkewDiagram rotate180(const SkewDiagram& d);

// Maximal groups of cells sharing no row or column with other groups, each
// in its own bounding box, ordered by (top row, left column).
std::vector<SkewDiagram> components(const SkewDiagram& d);

// upper_right placed strictly above and right of lower_left.
SkewDiagram disjoint_union(const Partition& upper_right,
                           const Partition& lower_left);

// Deletes every empty row and empty column.
SkewDiagram to_basic(const SkewDiagram& d);

// Neither a partition nor a rotated partition (and not empty).
bool is_proper(const SkewDiagram& d);

// The partition a non-proper diagram is a translate of, after rotation if
// needed; empty for an empty diagram. Throws std::domain_error if d is
// proper.
Partition straighten_trivial(const SkewDiagram& d);

LatticePathProfile lattice_paths(const SkewDiagram& d);

struct GrassmannianContext {
  int k = 1;  // rectangle width, n - l
  int l = 1;  // rectangle height
  int n() const { return k + l; }
  Partition rectangle() const;
};

bool fits(const Partition& p, const GrassmannianContext& ctx);

// ((k^l)/p)° as a partition. Throws DoesNotFit unless p ⊆ (k^l).
Partition complement_in_rectangle(const Partition& p,
                                  const GrassmannianContext& ctx);

// "outer/inner" in comma form, e.g. "3,2,1/2,1".
std::string to_string(const SkewDiagram& d);

// Rows of '.' for inner cells and '#' for diagram cells.
std::string render_ascii(const SkewDiagram& d);

}  // namespace skewchar
