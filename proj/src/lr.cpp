#include "skewchar/lr.hpp"

#include <algorithm>
#include <sstream>

namespace skewchar {

SkewTableau::SkewTableau(SkewDiagram shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows()) {
    throw std::invalid_argument("tableau row count does not match shape");
  }
  for (int r = 0; r < shape_.rows(); ++r) {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) !=
        shape_.outer()[r] - shape_.inner()[r]) {
      throw std::invalid_argument("tableau row " + std::to_string(r) +
                                  " does not match shape");
    }
    if (std::any_of(row.begin(), row.end(), [](int v) { return v < 1; })) {
      throw std::invalid_argument("tableau entries must be positive");
    }
  }
}

int SkewTableau::at(int row, int col) const {
  if (!shape_.has_cell(row, col)) {
    throw std::out_of_range("cell outside tableau shape");
  }
  return rows_[static_cast<std::size_t>(row)]
              [static_cast<std::size_t>(col - shape_.inner()[row])];
}

std::vector<int> SkewTableau::content() const {
  std::vector<int> counts;
  for (const auto& row : rows_) {
    for (int v : row) {
      if (static_cast<int>(counts.size()) < v) {
        counts.resize(static_cast<std::size_t>(v), 0);
      }
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  }
  return counts;
}

bool Decomposition::multiplicity_free() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](const auto& term) { return term.second <= 1; });
}

bool is_semistandard(const SkewTableau& t) {
  const SkewDiagram& shape = t.shape();
  for (const Cell& cell : shape.cells()) {
    const int v = t.at(cell.row, cell.col);
    if (shape.has_cell(cell.row, cell.col + 1) &&
        v > t.at(cell.row, cell.col + 1)) {
      return false;
    }
    if (shape.has_cell(cell.row + 1, cell.col) &&
        v >= t.at(cell.row + 1, cell.col)) {
      return false;
    }
  }
  return true;
}

std::vector<int> reverse_row_word(const SkewTableau& t) {
  std::vector<int> word;
  for (const auto& row : t.rows()) word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

bool is_lattice_word(std::span<const int> word) {
  std::vector<int> counts(1, 0);
  for (int v : word) {
    if (v < 1) return false;
    if (static_cast<int>(counts.size()) <= v) {
      counts.resize(static_cast<std::size_t>(v) + 1, 0);
    }
    ++counts[static_cast<std::size_t>(v)];
    if (v > 1 && counts[static_cast<std::size_t>(v)] >
                     counts[static_cast<std::size_t>(v - 1)]) {
      return false;
    }
  }
  return true;
}

bool is_lr_tableau(const SkewTableau& t) {
  return is_semistandard(t) && is_lattice_word(reverse_row_word(t));
}

namespace {

constexpr int kNone = -1;

// Backtracking over fillings in reverse-row-word order. Each cell sees its
// right neighbour and the cell above already filled, so the row, column and
// lattice conditions all prune at the cell where they first apply.
class LrSearch {
 public:
  // A null content leaves the content free; otherwise value counts are
  // capped by it.
  LrSearch(const SkewDiagram& shape, const Partition* content)
      : shape_(shape), content_(content) {
    std::vector<std::vector<int>> index(static_cast<std::size_t>(shape.rows()));
    for (int r = 0; r < shape.rows(); ++r) {
      const int inner = shape.inner()[r];
      const int outer = shape.outer()[r];
      index[static_cast<std::size_t>(r)].assign(
          static_cast<std::size_t>(outer - inner), kNone);
      for (int c = outer - 1; c >= inner; --c) {
        Slot slot{r, c, kNone, kNone};
        if (c + 1 < outer) slot.right = static_cast<int>(slots_.size()) - 1;
        if (r > 0 && shape.has_cell(r - 1, c)) {
          slot.above = index[static_cast<std::size_t>(r - 1)]
                            [static_cast<std::size_t>(c - shape.inner()[r - 1])];
        }
        index[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - inner)] =
            static_cast<int>(slots_.size());
        slots_.push_back(slot);
      }
    }
    values_.assign(slots_.size(), 0);
    max_value_ = content_ ? content_->length() : shape.rows();
    counts_.assign(static_cast<std::size_t>(max_value_) + 2, 0);
  }

  // Leaf receives the search; returns false to stop.
  template <typename Leaf>
  bool run(Leaf&& leaf) {
    return descend(0, leaf);
  }

  SkewTableau tableau() const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape_.rows()));
    for (int r = 0; r < shape_.rows(); ++r) {
      rows[static_cast<std::size_t>(r)].resize(
          static_cast<std::size_t>(shape_.outer()[r] - shape_.inner()[r]));
    }
    for (std::size_t i = 0; i < slots_.size(); ++i) {
      const Slot& s = slots_[i];
      rows[static_cast<std::size_t>(s.row)]
          [static_cast<std::size_t>(s.col - shape_.inner()[s.row])] = values_[i];
    }
    return {shape_, std::move(rows)};
  }

  std::vector<int> content() const {
    std::vector<int> parts;
    for (int v = 1; v <= max_value_; ++v) {
      if (counts_[static_cast<std::size_t>(v)] == 0) break;
      parts.push_back(counts_[static_cast<std::size_t>(v)]);
    }
    return parts;
  }

 private:
  struct Slot {
    int row;
    int col;
    int right;
    int above;
  };

  template <typename Leaf>
  bool descend(std::size_t pos, Leaf& leaf) {
    if (pos == slots_.size()) return leaf(*this);
    const Slot& slot = slots_[pos];
    const int low = slot.above == kNone
                        ? 1
                        : values_[static_cast<std::size_t>(slot.above)] + 1;
    const int high = std::min(
        max_value_, slot.right == kNone
                        ? slot.row + 1
                        : values_[static_cast<std::size_t>(slot.right)]);
    for (int v = low; v <= high; ++v) {
      auto& count = counts_[static_cast<std::size_t>(v)];
      if (v > 1) {
        const int previous = counts_[static_cast<std::size_t>(v - 1)];
        // No v - 1 seen yet means no larger value can appear either.
        if (previous == 0) break;
        if (previous <= count) continue;
      }
      if (content_ && count >= (*content_)[v - 1]) continue;
      ++count;
      values_[pos] = v;
      const bool keep_going = descend(pos + 1, leaf);
      --count;
      if (!keep_going) return false;
    }
    return true;
  }

  const SkewDiagram& shape_;
  const Partition* content_;
  std::vector<Slot> slots_;
  std::vector<int> values_;
  std::vector<int> counts_;
  int max_value_ = 0;
};

bool content_matches(const SkewDiagram& shape, const Partition& content) {
  return shape.size() == content.size() &&
         content.length() <= shape.rows();
}

}  // namespace

bool for_each_lr_tableau(const SkewDiagram& shape, const Partition& content,
                         const TableauVisitor& visit) {
  if (!content_matches(shape, content)) return true;
  LrSearch search(shape, &content);
  return search.run([&](const LrSearch& s) { return visit(s.tableau()); });
}

std::vector<SkewTableau> enumerate_lr_tableaux(const SkewDiagram& shape,
                                               const Partition& content) {
  std::vector<SkewTableau> out;
  for_each_lr_tableau(shape, content, [&](const SkewTableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

Coefficient count_lr_tableaux(const SkewDiagram& shape,
                              const Partition& content, Coefficient limit) {
  if (!content_matches(shape, content) || limit == 0) return 0;
  Coefficient count = 0;
  LrSearch search(shape, &content);
  search.run([&](const LrSearch&) { return ++count < limit; });
  return count;
}

Coefficient lr_coefficient(const Partition& outer, const Partition& inner,
                           const Partition& content) {
  if (!contains(outer, inner)) return 0;
  return count_lr_tableaux(SkewDiagram(outer, inner), content);
}

Decomposition decompose(const SkewDiagram& d) {
  std::map<std::vector<int>, Coefficient> tally;
  LrSearch search(d, nullptr);
  search.run([&](const LrSearch& s) {
    ++tally[s.content()];
    return true;
  });
  Decomposition out;
  for (auto& [parts, count] : tally) out.terms.emplace(Partition(parts), count);
  return out;
}

std::optional<Partition> multiplicity_witness(const SkewDiagram& d) {
  std::map<std::vector<int>, Coefficient> tally;
  std::optional<Partition> witness;
  LrSearch search(d, nullptr);
  search.run([&](const LrSearch& s) {
    auto content = s.content();
    if (++tally[content] < 2) return true;
    witness = Partition(std::move(content));
    return false;
  });
  return witness;
}

bool has_multiplicity(const SkewDiagram& d) {
  return multiplicity_witness(d).has_value();
}

SkewTableau lift_tableau(const SkewTableau& t, int a, int b) {
  if (b < 0 || a < b) {
    throw BadRange("lift requires a >= b >= 0, got a=" + std::to_string(a) +
                   ", b=" + std::to_string(b));
  }
  if (!is_lr_tableau(t)) throw NotLR("tableau is not an LR tableau");
  const SkewDiagram& shape = t.shape();
  SkewDiagram lifted(add_columns(shape.outer(), a, 1),
                     add_columns(shape.inner(), b, 1));
  std::vector<std::vector<int>> rows = t.rows();
  rows.resize(static_cast<std::size_t>(lifted.rows()));
  for (int i = 1; i <= a - b; ++i) {
    auto& row = rows[static_cast<std::size_t>(b + i - 1)];
    row.insert(std::lower_bound(row.begin(), row.end(), i), i);
  }
  return {std::move(lifted), std::move(rows)};
}

Decomposition schur_product(const Partition& left, const Partition& right) {
  return decompose(disjoint_union(left, right));
}

std::string to_text(const SkewTableau& t) {
  std::string out;
  for (int r = 0; r < t.shape().rows(); ++r) {
    std::vector<std::string> tokens(
        static_cast<std::size_t>(t.shape().inner()[r]), ".");
    for (int v : t.rows()[static_cast<std::size_t>(r)]) {
      tokens.push_back(std::to_string(v));
    }
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i > 0) out += ' ';
      out += tokens[i];
    }
    out += '\n';
  }
  return out;
}

SkewTableau tableau_from_text(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  std::vector<int> outer, inner;
  std::vector<std::vector<int>> rows;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream tokens(line);
    std::string token;
    int dots = 0;
    std::vector<int> row;
    while (tokens >> token) {
      if (token == ".") {
        if (!row.empty()) {
          throw std::invalid_argument("inner cell after an entry: " + line);
        }
        ++dots;
      } else {
        row.push_back(std::stoi(token));
      }
    }
    inner.push_back(dots);
    outer.push_back(dots + static_cast<int>(row.size()));
    rows.push_back(std::move(row));
  }
  return {SkewDiagram(Partition(outer), Partition(inner)), std::move(rows)};
}

}  // namespace skewchar
