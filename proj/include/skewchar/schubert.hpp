#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "skewchar/classify.hpp"
#include "skewchar/lr.hpp"
#include "skewchar/partition.hpp"
#include "skewchar/skew.hpp"

namespace skewchar {

class IndexOutOfRectangle : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class Triviality { generic, zero, point_class, single_class };
const char* to_string(Triviality t);

// σ_μ · σ_ν in H*(Gr(l, C^n)) as a combination of σ_λ, λ ⊆ (k^l).
struct SchubertProduct {
  std::map<Partition, Coefficient, std::greater<>> terms;
  GrassmannianContext context;
  Triviality triviality = Triviality::generic;

  bool multiplicity_free() const;
  bool operator==(const SchubertProduct& other) const {
    return terms == other.terms && context.k == other.context.k &&
           context.l == other.context.l && triviality == other.triviality;
  }
};

// Coefficients c(λ; μ, ν) for every λ ⊆ (k^l).
SchubertProduct direct_product(const Partition& mu, const Partition& nu,
                               const GrassmannianContext& ctx);

// Decomposes ((k^l)/ν)° / μ and maps each [α] to σ at ((k^l)/α)°.
SchubertProduct product_via_skew(const Partition& mu, const Partition& nu,
                                 const GrassmannianContext& ctx);

// Basic form of ((k^l)/ν)° / μ, or nullopt when μ and ν° overlap in the
// rectangle (the product is zero).
std::optional<SkewDiagram> associated_basic_diagram(
    const Partition& mu, const Partition& nu, const GrassmannianContext& ctx);

// Trivial products report "trivial-zero", "trivial-point-class" or
// "trivial-single-class"; the rest defer to skew_mf_short.
Verdict schubert_mf(const Partition& mu, const Partition& nu,
                    const GrassmannianContext& ctx);

// s_μ · s_ν computed inside the rectangle (μ_1 + ν_1)^(l(μ) + l(ν)).
Decomposition schur_product_via_schubert(const Partition& mu,
                                         const Partition& nu);

}  // namespace skewchar
