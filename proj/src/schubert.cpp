#include "skewchar/schubert.hpp"

#include <algorithm>
#include <string>

namespace skewchar {

namespace {

void require_fits(const Partition& p, const GrassmannianContext& ctx) {
  if (ctx.k < 1 || ctx.l < 1) {
    throw std::invalid_argument("Grassmannian context needs k, l >= 1");
  }
  if (!fits(p, ctx)) {
    throw IndexOutOfRectangle("partition " + to_string(p) +
                              " does not fit in (" + std::to_string(ctx.k) +
                              "^" + std::to_string(ctx.l) + ")");
  }
}

Triviality classify_terms(const SchubertProduct& product) {
  if (product.terms.empty()) return Triviality::zero;
  if (product.terms.size() == 1 && product.terms.begin()->second == 1) {
    return product.terms.begin()->first == product.context.rectangle()
               ? Triviality::point_class
               : Triviality::single_class;
  }
  return Triviality::generic;
}

}  // namespace

const char* to_string(Triviality t) {
  switch (t) {
    case Triviality::generic: return "generic";
    case Triviality::zero: return "zero";
    case Triviality::point_class: return "point_class";
    case Triviality::single_class: return "single_class";
  }
  return "generic";
}

bool SchubertProduct::multiplicity_free() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](const auto& term) { return term.second <= 1; });
}

SchubertProduct direct_product(const Partition& mu, const Partition& nu,
                               const GrassmannianContext& ctx) {
  require_fits(mu, ctx);
  require_fits(nu, ctx);
  SchubertProduct product;
  product.context = ctx;
  for (const Partition& lambda :
       partitions_within(mu.size() + nu.size(), ctx.rectangle())) {
    if (const Coefficient c = lr_coefficient(lambda, mu, nu); c > 0) {
      product.terms.emplace(lambda, c);
    }
  }
  product.triviality = classify_terms(product);
  return product;
}

std::optional<SkewDiagram> associated_basic_diagram(
    const Partition& mu, const Partition& nu, const GrassmannianContext& ctx) {
  require_fits(mu, ctx);
  require_fits(nu, ctx);
  const Partition room = complement_in_rectangle(nu, ctx);
  if (!contains(room, mu)) return std::nullopt;
  return to_basic(SkewDiagram(room, mu));
}

SchubertProduct product_via_skew(const Partition& mu, const Partition& nu,
                                 const GrassmannianContext& ctx) {
  require_fits(mu, ctx);
  require_fits(nu, ctx);
  SchubertProduct product;
  product.context = ctx;
  const Partition room = complement_in_rectangle(nu, ctx);
  if (!contains(room, mu)) {
    product.triviality = Triviality::zero;
    return product;
  }
  const SkewDiagram diagram(room, mu);
  for (const auto& [alpha, c] : decompose(diagram).terms) {
    product.terms.emplace(complement_in_rectangle(alpha, ctx), c);
  }
  if (diagram.size() == 0) {
    product.triviality = Triviality::point_class;
  } else if (!is_proper(diagram)) {
    product.triviality = Triviality::single_class;
  }
  return product;
}

Verdict schubert_mf(const Partition& mu, const Partition& nu,
                    const GrassmannianContext& ctx) {
  const auto basic = associated_basic_diagram(mu, nu, ctx);
  if (!basic) return {true, "trivial-zero", SkewDiagram()};
  if (basic->size() == 0) return {true, "trivial-point-class", *basic};
  if (!is_proper(*basic)) return {true, "trivial-single-class", *basic};
  return skew_mf_short(*basic);
}

Decomposition schur_product_via_schubert(const Partition& mu,
                                         const Partition& nu) {
  Decomposition out;
  if (mu.empty() && nu.empty()) {
    out.terms.emplace(Partition(), 1);
    return out;
  }
  const GrassmannianContext ctx{std::max(1, mu.largest() + nu.largest()),
                                std::max(1, mu.length() + nu.length())};
  for (const auto& [lambda, c] : product_via_skew(mu, nu, ctx).terms) {
    out.terms.emplace(lambda, c);
  }
  return out;
}

}  // namespace skewchar
