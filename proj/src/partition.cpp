#include "skewchar/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace skewchar {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("negative part in partition");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw NotWeaklyDecreasing("parts must be weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition conjugate(const Partition& p) {
  std::vector<int> result(static_cast<std::size_t>(p.largest()), 0);
  for (int part : p.parts()) {
    for (int j = 0; j < part; ++j) ++result[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(result));
}

Partition union_rows(const Partition& p, const Partition& q) {
  std::vector<int> merged;
  merged.reserve(p.parts().size() + q.parts().size());
  std::merge(p.parts().begin(), p.parts().end(), q.parts().begin(),
             q.parts().end(), std::back_inserter(merged), std::greater<>());
  return Partition(std::move(merged));
}

Partition add_columns(const Partition& p, int n, int w) {
  if (n < 0 || w < 0) throw std::invalid_argument("negative column count");
  std::vector<int> parts(static_cast<std::size_t>(std::max(n, p.length())), 0);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    parts[static_cast<std::size_t>(i)] = p[i] + (i < n ? w : 0);
  }
  return Partition(std::move(parts));
}

Partition add_partitions(const Partition& p, const Partition& q) {
  std::vector<int> parts(
      static_cast<std::size_t>(std::max(p.length(), q.length())));
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    parts[static_cast<std::size_t>(i)] = p[i] + q[i];
  }
  return Partition(std::move(parts));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

std::vector<PartBlock> distinct_part_profile(const Partition& p) {
  std::vector<PartBlock> profile;
  for (int part : p.parts()) {
    if (!profile.empty() && profile.back().size == part) {
      ++profile.back().multiplicity;
    } else {
      profile.push_back({part, 1});
    }
  }
  return profile;
}

Partition from_profile(const std::vector<PartBlock>& profile) {
  std::vector<int> parts;
  for (const auto& block : profile) {
    parts.insert(parts.end(), static_cast<std::size_t>(block.multiplicity),
                 block.size);
  }
  return Partition(std::move(parts));
}

bool is_rectangle(const Partition& p) {
  return !p.empty() && p.parts().front() == p.parts().back();
}

bool is_k_line_rectangle(const Partition& p, int k) {
  return is_rectangle(p) && (p.length() == k || p.largest() == k);
}

bool is_fat_hook(const Partition& p) {
  return distinct_part_profile(p).size() == 2;
}

bool is_near_rectangle(const Partition& p) {
  const auto profile = distinct_part_profile(p);
  if (profile.size() != 2) return false;
  const auto& top = profile[0];
  const auto& bottom = profile[1];
  // Deleting a row leaves a rectangle iff one block is a single row;
  // deleting a column iff the widths differ by one or the short rows
  // have width one.
  return top.multiplicity == 1 || bottom.multiplicity == 1 ||
         top.size - bottom.size == 1 || bottom.size == 1;
}

ShapeClass shape_class(const Partition& p) {
  if (p.empty()) return ShapeClass::empty;
  if (is_k_line_rectangle(p, 1)) return ShapeClass::one_line_rectangle;
  if (is_k_line_rectangle(p, 2)) return ShapeClass::two_line_rectangle;
  if (is_rectangle(p)) return ShapeClass::rectangle;
  if (is_near_rectangle(p)) return ShapeClass::near_rectangle;
  if (is_fat_hook(p)) return ShapeClass::fat_hook;
  return ShapeClass::other;
}

const char* to_string(ShapeClass c) {
  switch (c) {
    case ShapeClass::empty: return "empty";
    case ShapeClass::one_line_rectangle: return "one_line_rectangle";
    case ShapeClass::two_line_rectangle: return "two_line_rectangle";
    case ShapeClass::rectangle: return "rectangle";
    case ShapeClass::near_rectangle: return "near_rectangle";
    case ShapeClass::fat_hook: return "fat_hook";
    case ShapeClass::other: return "other";
  }
  return "other";
}

namespace {

// Emits every partition of `remaining` whose part i is at most bound(i),
// parts chosen largest first.
void fill_parts(int remaining, int row, int cap,
                const std::function<int(int)>& row_bound,
                std::vector<int>& parts, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(parts);
    return;
  }
  const int limit = std::min({cap, row_bound(row), remaining});
  for (int part = limit; part >= 1; --part) {
    parts.push_back(part);
    fill_parts(remaining - part, row + 1, part, row_bound, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_within(int n, const Partition& bound) {
  std::vector<Partition> out;
  if (n < 0 || n > bound.size()) return out;
  std::vector<int> parts;
  fill_parts(n, 0, bound.largest(), [&](int row) { return bound[row]; },
             parts, out);
  return out;
}

std::vector<Partition> partitions_in_box(int width, int height) {
  std::vector<Partition> out;
  if (width < 0 || height < 0) return out;
  std::vector<int> box(static_cast<std::size_t>(height), width);
  const Partition bound(box);
  for (int n = 0; n <= width * height; ++n) {
    auto level = partitions_within(n, bound);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

}  // namespace skewchar
