#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewchar/partition.hpp"
#include "skewchar/skew.hpp"

namespace skewchar {

using Coefficient = std::uint64_t;

class NotLR : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BadRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A filling of a skew diagram. rows()[r] holds the entries of row r from
// column inner[r] to outer[r] - 1.
class SkewTableau {
 public:
  SkewTableau() = default;
  // Throws std::invalid_argument if the row lengths do not match the shape
  // or an entry is not positive.
  SkewTableau(SkewDiagram shape, std::vector<std::vector<int>> rows);

  const SkewDiagram& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(int row, int col) const;

  // (ν_1, ν_2, ...) with ν_i the number of entries equal to i. Not
  // necessarily a partition unless the tableau is an LR tableau.
  std::vector<int> content() const;

  bool operator==(const SkewTableau&) const = default;
  auto operator<=>(const SkewTableau&) const = default;

 private:
  SkewDiagram shape_;
  std::vector<std::vector<int>> rows_;
};

// Schur expansion: partition -> positive multiplicity.
struct Decomposition {
  std::map<Partition, Coefficient, std::greater<>> terms;

  Coefficient operator[](const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? 0 : it->second;
  }
  bool multiplicity_free() const;
  bool operator==(const Decomposition&) const = default;
};

bool is_semistandard(const SkewTableau& t);
std::vector<int> reverse_row_word(const SkewTableau& t);
bool is_lattice_word(std::span<const int> word);
bool is_lr_tableau(const SkewTableau& t);

// Visitor returns false to stop. Returns false iff stopped early.
using TableauVisitor = std::function<bool(const SkewTableau&)>;

// Visits every LR tableau of the shape with the given content, in
// lexicographic order of reverse row words.
bool for_each_lr_tableau(const SkewDiagram& shape, const Partition& content,
                         const TableauVisitor& visit);

std::vector<SkewTableau> enumerate_lr_tableaux(const SkewDiagram& shape,
                                               const Partition& content);

// Number of LR tableaux, stopping once `limit` have been found.
Coefficient count_lr_tableaux(const SkewDiagram& shape,
                              const Partition& content,
                              Coefficient limit = UINT64_MAX);

// c(λ; μ, ν); zero when μ ⊄ λ or sizes do not match.
Coefficient lr_coefficient(const Partition& outer, const Partition& inner,
                           const Partition& content);

// Skew Schur expansion of the diagram, from a single pass over all LR
// tableaux of the shape.
Decomposition decompose(const SkewDiagram& d);

// Some content occurring at least twice, if any.
std::optional<Partition> multiplicity_witness(const SkewDiagram& d);
bool has_multiplicity(const SkewDiagram& d);

// Adds a zero to each of the first b rows and the entry i to row b + i for
// 1 <= i <= a - b, giving an LR tableau of shape
// (λ + (1^a)) / (μ + (1^b)) with content ν + (1^(a-b)).
SkewTableau lift_tableau(const SkewTableau& t, int a, int b);

// s_μ · s_ν.
Decomposition schur_product(const Partition& left, const Partition& right);

// Rows top to bottom, '.' for inner cells, entries separated by spaces.
std::string to_text(const SkewTableau& t);
SkewTableau tableau_from_text(const std::string& text);

}  // namespace skewchar
