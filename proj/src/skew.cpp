#include "skewchar/skew.hpp"

#include <algorithm>
#include <numeric>

namespace skewchar {

SkewDiagram::SkewDiagram(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_)) {
    throw std::invalid_argument("inner partition " + to_string(inner_) +
                                " is not contained in " + to_string(outer_));
  }
}

std::vector<Cell> SkewDiagram::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 0; r < rows(); ++r) {
    for (int c = inner_[r]; c < outer_[r]; ++c) out.push_back({r, c});
  }
  return out;
}

SkewDiagram canonical(const SkewDiagram& d) {
  int top = -1, bottom = -1, left = d.outer().largest();
  for (int r = 0; r < d.rows(); ++r) {
    if (d.inner()[r] < d.outer()[r]) {
      if (top < 0) top = r;
      bottom = r;
      left = std::min(left, d.inner()[r]);
    }
  }
  if (top < 0) return {};
  std::vector<int> outer, inner;
  for (int r = top; r <= bottom; ++r) {
    outer.push_back(d.outer()[r] - left);
    inner.push_back(d.inner()[r] - left);
  }
  return {Partition(std::move(outer)), Partition(std::move(inner))};
}

SkewDiagram rotate180(const SkewDiagram& d) {
  const int n = d.rows();
  const int width = d.outer().largest();
  std::vector<int> outer(static_cast<std::size_t>(n)),
      inner(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    outer[static_cast<std::size_t>(i)] = width - d.inner()[n - 1 - i];
    inner[static_cast<std::size_t>(i)] = width - d.outer()[n - 1 - i];
  }
  return canonical({Partition(std::move(outer)), Partition(std::move(inner))});
}

namespace {

// Row intervals of a skew diagram overlap in columns exactly when the rows
// are adjacent and [inner_r, outer_r) meets [inner_{r+1}, outer_{r+1}), so
// components are maximal runs of consecutive linked rows.
bool rows_linked(const SkewDiagram& d, int upper) {
  const int lower = upper + 1;
  const bool both_nonempty = d.inner()[upper] < d.outer()[upper] &&
                             d.inner()[lower] < d.outer()[lower];
  return both_nonempty && d.outer()[lower] > d.inner()[upper];
}

SkewDiagram slice(const SkewDiagram& d, int top, int bottom) {
  int left = d.outer()[top];
  for (int r = top; r <= bottom; ++r) left = std::min(left, d.inner()[r]);
  std::vector<int> outer, inner;
  for (int r = top; r <= bottom; ++r) {
    outer.push_back(d.outer()[r] - left);
    inner.push_back(d.inner()[r] - left);
  }
  return {Partition(std::move(outer)), Partition(std::move(inner))};
}

}  // namespace

std::vector<SkewDiagram> components(const SkewDiagram& d) {
  std::vector<SkewDiagram> out;
  int r = 0;
  while (r < d.rows()) {
    if (d.inner()[r] == d.outer()[r]) {
      ++r;
      continue;
    }
    int bottom = r;
    while (bottom + 1 < d.rows() && rows_linked(d, bottom)) ++bottom;
    out.push_back(slice(d, r, bottom));
    r = bottom + 1;
  }
  return out;
}

SkewDiagram disjoint_union(const Partition& upper_right,
                           const Partition& lower_left) {
  const int shift = lower_left.largest();
  std::vector<int> outer, inner;
  for (int part : upper_right.parts()) {
    outer.push_back(shift + part);
    inner.push_back(shift);
  }
  outer.insert(outer.end(), lower_left.parts().begin(),
               lower_left.parts().end());
  return {Partition(std::move(outer)), Partition(std::move(inner))};
}

SkewDiagram to_basic(const SkewDiagram& d) {
  const int width = d.outer().largest();
  // occupied_before[c] = number of non-empty columns strictly left of c.
  std::vector<int> column_used(static_cast<std::size_t>(width), 0);
  for (int r = 0; r < d.rows(); ++r) {
    for (int c = d.inner()[r]; c < d.outer()[r]; ++c) {
      column_used[static_cast<std::size_t>(c)] = 1;
    }
  }
  std::vector<int> occupied_before(static_cast<std::size_t>(width) + 1, 0);
  std::partial_sum(column_used.begin(), column_used.end(),
                   occupied_before.begin() + 1);
  std::vector<int> outer, inner;
  for (int r = 0; r < d.rows(); ++r) {
    if (d.inner()[r] == d.outer()[r]) continue;
    outer.push_back(occupied_before[static_cast<std::size_t>(d.outer()[r])]);
    inner.push_back(occupied_before[static_cast<std::size_t>(d.inner()[r])]);
  }
  return {Partition(std::move(outer)), Partition(std::move(inner))};
}

bool is_proper(const SkewDiagram& d) {
  if (d.size() == 0) return false;
  const SkewDiagram basic = to_basic(d);
  return !basic.inner().empty() && !rotate180(basic).inner().empty();
}

Partition straighten_trivial(const SkewDiagram& d) {
  if (d.size() == 0) return {};
  const SkewDiagram basic = to_basic(d);
  if (basic.inner().empty()) return basic.outer();
  const SkewDiagram rotated = rotate180(basic);
  if (rotated.inner().empty()) return rotated.outer();
  throw std::domain_error("diagram " + to_string(d) + " is proper");
}

namespace {

// Runs of equal values scanned bottom row first; each run contributes an
// up-segment and each increase a right-segment.
std::vector<int> boundary_segments(const Partition& p, int rows, int width,
                                   bool starts_up) {
  std::vector<int> segments;
  int prev = 0;
  int r = rows - 1;
  if (!starts_up) {
    segments.push_back(p[r]);
    prev = p[r];
  }
  while (r >= 0) {
    const int value = p[r];
    if (value != prev) {
      segments.push_back(value - prev);
      prev = value;
    }
    int run = 0;
    while (r >= 0 && p[r] == value) {
      ++run;
      --r;
    }
    segments.push_back(run);
  }
  if (prev != width) segments.push_back(width - prev);
  return segments;
}

}  // namespace

LatticePathProfile lattice_paths(const SkewDiagram& d) {
  if (to_basic(d) != d) {
    throw NotBasic("diagram " + to_string(d) + " is not basic");
  }
  if (!is_proper(d)) {
    throw NotProper("diagram " + to_string(d) + " is not proper");
  }
  const int rows = d.rows();
  const int width = d.outer().largest();
  LatticePathProfile profile;
  profile.inner_segments = boundary_segments(d.inner(), rows, width, true);
  profile.outer_segments = boundary_segments(d.outer(), rows, width, false);
  profile.s_in = *std::min_element(profile.inner_segments.begin(),
                                   profile.inner_segments.end());
  profile.s_out = *std::min_element(profile.outer_segments.begin(),
                                    profile.outer_segments.end());
  return profile;
}

Partition GrassmannianContext::rectangle() const {
  return Partition(std::vector<int>(static_cast<std::size_t>(l), k));
}

bool fits(const Partition& p, const GrassmannianContext& ctx) {
  return p.length() <= ctx.l && p.largest() <= ctx.k;
}

Partition complement_in_rectangle(const Partition& p,
                                  const GrassmannianContext& ctx) {
  if (!fits(p, ctx)) {
    throw DoesNotFit("partition " + to_string(p) + " does not fit in (" +
                     std::to_string(ctx.k) + "^" + std::to_string(ctx.l) +
                     ")");
  }
  std::vector<int> parts(static_cast<std::size_t>(ctx.l));
  for (int i = 0; i < ctx.l; ++i) {
    parts[static_cast<std::size_t>(i)] = ctx.k - p[ctx.l - 1 - i];
  }
  return Partition(std::move(parts));
}

std::string to_string(const SkewDiagram& d) {
  return to_string(d.outer()) + "/" + to_string(d.inner());
}

std::string render_ascii(const SkewDiagram& d) {
  std::string out;
  for (int r = 0; r < d.rows(); ++r) {
    out.append(static_cast<std::size_t>(d.inner()[r]), '.');
    out.append(static_cast<std::size_t>(d.outer()[r] - d.inner()[r]), '#');
    out += '\n';
  }
  return out;
}

}  // namespace skewchar
