#include "skewchar/classify.hpp"

#include <optional>
#include <vector>

#include "skewchar/lr.hpp"

namespace skewchar {

namespace {

Verdict free_by(std::string rule, SkewDiagram normalized) {
  return {true, std::move(rule), std::move(normalized)};
}

Verdict not_free(SkewDiagram normalized) {
  return {false, kNoRule, std::move(normalized)};
}

// The first Stembridge clause satisfied by (a, b) in either order, as an
// index 1..4, or 0.
int stembridge_clause(const Partition& a, const Partition& b) {
  auto holds = [&](auto&& clause) { return clause(a, b) || clause(b, a); };
  if (holds([](const Partition& x, const Partition&) {
        return is_k_line_rectangle(x, 1);
      })) {
    return 1;
  }
  if (holds([](const Partition& x, const Partition& y) {
        return is_k_line_rectangle(x, 2) && is_fat_hook(y);
      })) {
    return 2;
  }
  if (holds([](const Partition& x, const Partition& y) {
        return is_rectangle(x) && is_near_rectangle(y);
      })) {
    return 3;
  }
  if (is_rectangle(a) && is_rectangle(b)) return 4;
  return 0;
}

// Shape parameters of a connected basic λ/α: λ = (λ_1^k_1, ..., λ_i^k_i),
// α = (α_1^l_1, ..., α_j^l_j), k = l(λ), l = l(α). Indices are 1-based to
// mirror the clause statements; out-of-range values read as zero.
struct TreeParams {
  std::vector<PartBlock> lambda;
  std::vector<PartBlock> alpha;
  int i = 0, j = 0, k = 0, l = 0;

  int lam(int a) const { return a <= i ? lambda[a - 1].size : 0; }
  int kk(int a) const { return a <= i ? lambda[a - 1].multiplicity : 0; }
  int alp(int a) const { return a <= j ? alpha[a - 1].size : 0; }
  int ll(int a) const { return a <= j ? alpha[a - 1].multiplicity : 0; }
};

std::optional<std::string> connected_clause(const TreeParams& p) {
  if (p.i == 1) return "2a";
  if (p.j == 1) {
    if (p.alp(1) == 1 || p.ll(1) == 1) return "2b-i";
    if (p.lam(1) == 1 + p.alp(1) || p.k == 1 + p.l) return "2b-ii";
    if (p.i == 2) return "2b-iii";
    if (p.i == 3) {
      if (p.alp(1) == 2 || p.ll(1) == 2) return "2b-iv-alpha";
      if (p.kk(1) == 1 || p.lam(3) == 1) return "2b-iv-beta";
      if (p.kk(2) == 1 || p.lam(2) == 1 + p.lam(3)) return "2b-iv-gamma";
      if (p.kk(3) == 1 || p.lam(1) == 1 + p.lam(2)) return "2b-iv-delta";
      if (p.k == 2 + p.l || p.lam(1) == 2 + p.alp(1)) return "2b-iv-epsilon";
    }
  }
  if (p.i == 2) {
    if (p.lam(1) == 1 + p.lam(2) || p.kk(2) == 1) return "2c-i";
    if (p.lam(2) == 1 || p.kk(1) == 1) return "2c-ii";
  }
  if (p.i == 2 && p.j == 2) {
    if (p.lam(1) == 1 + p.alp(1) || p.k == 1 + p.l) return "2d-i";
    if (p.lam(1) == 2 + p.lam(2) || p.kk(2) == 2) return "2d-ii";
    if (p.lam(2) == 2 || p.kk(1) == 2) return "2d-iii";
    if (p.alp(1) == 1 + p.alp(2) || p.ll(2) == 1) return "2d-iv";
    if (p.alp(2) == 1 || p.ll(1) == 1) return "2d-v";
  }
  return std::nullopt;
}

}  // namespace

Verdict stembridge_mf(const Partition& mu, const Partition& nu) {
  SkewDiagram placed = disjoint_union(mu, nu);
  if (mu.empty() || nu.empty()) return free_by("trivial-empty", placed);
  const int clause = stembridge_clause(mu, nu);
  if (clause == 0) return not_free(placed);
  return free_by("S" + std::to_string(clause), placed);
}

Verdict skew_mf(const SkewDiagram& d) {
  SkewDiagram basic = to_basic(d);
  if (basic.size() == 0) return free_by("empty", basic);

  const auto parts = components(basic);
  if (parts.size() >= 3) return not_free(basic);
  if (parts.size() == 2) {
    if (is_proper(parts[0]) || is_proper(parts[1])) return not_free(basic);
    const int clause = stembridge_clause(straighten_trivial(parts[0]),
                                         straighten_trivial(parts[1]));
    if (clause == 0) return not_free(basic);
    return free_by(std::string("1") + static_cast<char>('a' + clause - 1),
                   basic);
  }

  if (basic.inner().empty()) return free_by("irreducible", basic);
  TreeParams params;
  params.lambda = distinct_part_profile(basic.outer());
  params.alpha = distinct_part_profile(basic.inner());
  params.i = static_cast<int>(params.lambda.size());
  params.j = static_cast<int>(params.alpha.size());
  params.k = basic.outer().length();
  params.l = basic.inner().length();
  if (auto clause = connected_clause(params)) {
    return free_by(*clause, basic);
  }
  return not_free(basic);
}

Verdict skew_mf_short(const SkewDiagram& d) {
  SkewDiagram basic = to_basic(d);
  if (!is_proper(basic)) return free_by("irreducible", basic);

  const Partition& mu = basic.inner();
  const Partition nu = complement_in_rectangle(
      basic.outer(), {basic.outer().largest(), basic.outer().length()});
  const LatticePathProfile paths = lattice_paths(basic);

  struct Side {
    const Partition& shape;
    int segment;
  };
  const Side in{mu, paths.s_in};
  const Side out{nu, paths.s_out};

  using Clause = bool (*)(const Side&, const Side&);
  const std::pair<const char*, Clause> clauses[] = {
      {"T1", [](const Side& a, const Side&) {
         return is_rectangle(a.shape) && a.segment == 1;
       }},
      {"T2", [](const Side& a, const Side& b) {
         return is_rectangle(a.shape) && a.segment == 2 && is_fat_hook(b.shape);
       }},
      {"T3", [](const Side& a, const Side& b) {
         return is_rectangle(a.shape) && is_fat_hook(b.shape) && b.segment == 1;
       }},
      {"T4", [](const Side& a, const Side& b) {
         return is_rectangle(a.shape) && is_rectangle(b.shape);
       }},
  };
  for (const auto& [label, clause] : clauses) {
    if (clause(in, out)) return free_by(label, basic);
    if (clause(out, in)) return free_by(std::string(label) + "'", basic);
  }
  return not_free(basic);
}

bool cross_check(const SkewDiagram& d) {
  const bool tree = skew_mf(d).multiplicity_free;
  const bool paths = skew_mf_short(d).multiplicity_free;
  const bool brute = !has_multiplicity(d);
  return tree == paths && paths == brute;
}

}  // namespace skewchar
