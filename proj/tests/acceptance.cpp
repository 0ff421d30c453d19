// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skewchar/classify.hpp"
#include "skewchar/cli.hpp"
#include "skewchar/lr.hpp"
#include "skewchar/schubert.hpp"
#include "skewchar/verify.hpp"

using namespace skewchar;

namespace {

using Clock = std::chrono::steady_clock;

// Collects the first few failure messages of one criterion.
struct Check {
  int failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome finish(const Check& check, std::string detail) {
  for (const auto& note : check.notes) detail += "\n      " + note;
  if (check.failures > static_cast<int>(check.notes.size())) {
    detail += "\n      ... " + std::to_string(check.failures) + " failures in total";
  }
  return {check.failures == 0, detail};
}

Partition rect(int width, int height) {
  return Partition(std::vector<int>(static_cast<std::size_t>(height), width));
}

std::string show(const SkewDiagram& d) { return to_string(d); }

// ---------------------------------------------------------------- 1

Outcome constants() {
  struct Case {
    std::vector<std::string> args;
    std::string expected;
  };
  const std::vector<Case> cases{
      {{"lrcoef", "3,2,1", "2,1", "2,1"}, "2\n"},
      {{"lrcoef", "6,6,4,4,2,2", "3,3,3", "5,4,3,2,1"}, "2\n"},
      {{"lrcoef", "4,3,2,1", "2,2", "3,2,1"}, "2\n"},
      {{"lrcoef", "7,7,5,5,5,2,1", "6,3,3", "6,5,5,4"}, "2\n"},
      {{"lrcoef", "8,8,6,6,6,3,1", "7,4,3", "7,6,6,5"}, "3\n"},
  };
  Check check;
  const auto start = Clock::now();
  for (const auto& c : cases) {
    std::ostringstream out, err;
    const int status = run(c.args, out, err);
    check.expect(status == 0 && out.str() == c.expected,
                 c.args[1] + ";" + c.args[2] + "," + c.args[3] + " gave " +
                     out.str());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  check.expect(seconds < 1.0, "took " + std::to_string(seconds) + " s");
  return finish(check, std::to_string(cases.size()) + " coefficients in " +
                           std::to_string(seconds) + " s");
}

// ---------------------------------------------------------------- 2

Outcome lattice_path_fixtures() {
  Check check;
  const auto first = lattice_paths(SkewDiagram({7, 7, 7, 5, 5}, {4, 4, 2, 2}));
  check.expect(first.inner_segments == std::vector<int>{1, 2, 2, 2, 2, 3} &&
                   first.outer_segments == std::vector<int>{5, 2, 2, 3} &&
                   first.s_in == 1 && first.s_out == 2,
               "(7,7,7,5,5)/(4,4,2,2)");
  const SkewDiagram raw({6, 6, 4, 4, 2, 2, 2}, {3, 3, 3, 3});
  const auto second = lattice_paths(to_basic(raw));
  check.expect(second.inner_segments == std::vector<int>{3, 2, 4, 3} &&
                   second.outer_segments == std::vector<int>{2, 3, 1, 2, 2, 2} &&
                   second.s_in == 2 && second.s_out == 1,
               "(6,6,4,4,2,2,2)/(3,3,3,3)");
  return finish(check, "2 fixtures");
}

// ---------------------------------------------------------------- 3

Outcome sweep() {
  Check check;
  std::ostringstream detail;
  for (int side : {4, 5}) {
    const VerifyReport report = verify_sweep(side, side);
    for (const auto& d : report.disagreements) {
      check.expect(false, show(d.diagram));
    }
    check.expect(side != 4 || report.wall_time.count() < 10.0, "4x4 smoke too slow");
    detail << side << "x" << side << ": " << report.instances_checked
           << " instances, " << report.brute_force_checked << " brute-forced, "
           << report.disagreements.size() << " disagreements, "
           << report.wall_time.count() << " s; ";
  }
  return finish(check, detail.str());
}

// ---------------------------------------------------------------- 4, 5

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Partition partition_of(int n) {
    const auto all = partitions_within(n, rect(n, n));
    return all[static_cast<std::size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
  }

  Partition sub_partition(const Partition& outer) {
    std::vector<int> parts;
    int cap = outer.largest();
    for (int r = 0; r < outer.length(); ++r) {
      const int v = uniform(0, std::min(cap, outer[r]));
      parts.push_back(v);
      cap = v;
    }
    return Partition(parts);
  }

  // Mostly a content with non-zero coefficient, sometimes any partition of
  // the right size.
  Partition content_for(const SkewDiagram& d) {
    if (uniform(0, 3) == 0) return partition_of(d.size());
    const Decomposition terms = decompose(d);
    auto it = terms.terms.begin();
    std::advance(it, uniform(0, static_cast<int>(terms.terms.size()) - 1));
    return it->first;
  }

 private:
  std::mt19937_64 rng_;
};

Outcome lift_properties() {
  constexpr int kInstances = 500;
  Sampler sample(0x5eed'3200);
  Check check;
  int nonzero = 0, lifted_total = 0;
  const auto start = Clock::now();
  for (int i = 0; i < kInstances; ++i) {
    const Partition lambda = sample.partition_of(sample.uniform(0, 10));
    const Partition mu = sample.sub_partition(lambda);
    const Partition nu = sample.content_for(SkewDiagram(lambda, mu));
    const int a = sample.uniform(0, 3);
    const int b = sample.uniform(0, a);
    std::ostringstream label;
    label << to_string(lambda) << ";" << to_string(mu) << "," << to_string(nu)
          << " a=" << a << " b=" << b;

    const Coefficient base = lr_coefficient(lambda, mu, nu);
    if (base > 0) ++nonzero;
    const Coefficient column_form = lr_coefficient(
        add_columns(lambda, a, 1), add_columns(mu, b, 1), add_columns(nu, a - b, 1));
    const Coefficient row_form =
        lr_coefficient(union_rows(lambda, Partition({a})), union_rows(mu, Partition({b})),
                       union_rows(nu, Partition({a - b})));
    check.expect(base <= column_form, "column form " + label.str());
    check.expect(base <= row_form, "row form " + label.str());

    const SkewDiagram target(add_columns(lambda, a, 1), add_columns(mu, b, 1));
    const Partition target_content = add_columns(nu, a - b, 1);
    std::set<SkewTableau> images;
    const auto tableaux = enumerate_lr_tableaux(SkewDiagram(lambda, mu), nu);
    for (const auto& t : tableaux) {
      const SkewTableau lifted = lift_tableau(t, a, b);
      check.expect(lifted.shape() == target &&
                       Partition(lifted.content()) == target_content &&
                       is_semistandard(lifted) &&
                       is_lattice_word(reverse_row_word(lifted)),
                   "invalid lift " + label.str());
      images.insert(lifted);
    }
    check.expect(images.size() == tableaux.size(), "lift not injective " + label.str());
    lifted_total += static_cast<int>(tableaux.size());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  check.expect(seconds < 60.0, "took " + std::to_string(seconds) + " s");
  std::ostringstream detail;
  detail << kInstances << " instances (" << nonzero << " with c > 0), "
         << lifted_total << " tableaux lifted, " << seconds << " s";
  return finish(check, detail.str());
}

Outcome insertion_equalities() {
  Check check;
  check.expect(lr_coefficient({4, 3, 3, 3, 1}, {3, 3, 3}, {4, 1}) ==
                   lr_coefficient({4, 3, 3, 3, 3, 1}, {3, 3, 3}, {4, 3, 1}),
               "worked instance");

  constexpr int kPerForm = 100;
  Sampler sample(0x5eed'3300);
  int rows_done = 0, columns_done = 0, nonzero = 0;
  const auto start = Clock::now();
  while (rows_done < kPerForm || columns_done < kPerForm) {
    const Partition lambda = sample.partition_of(sample.uniform(1, 10));
    const Partition nu = sample.sub_partition(lambda);
    const Partition mu = sample.content_for(SkewDiagram(lambda, nu));
    const auto blocks = distinct_part_profile(lambda);
    const int block = sample.uniform(0, static_cast<int>(blocks.size()) - 1);
    const int n = sample.uniform(0, 3);
    const Coefficient base = lr_coefficient(lambda, mu, nu);
    std::ostringstream label;
    label << to_string(lambda) << ";" << to_string(mu) << "," << to_string(nu)
          << " block=" << block << " n=" << n;

    // Repeating a row of a block at least as tall as μ.
    if (rows_done < kPerForm && mu.length() <= blocks[block].multiplicity) {
      const Partition extra = rect(blocks[block].size, n);
      check.expect(base == lr_coefficient(union_rows(lambda, extra), mu,
                                           union_rows(nu, extra)),
                   "row form " + label.str());
      ++rows_done;
      if (base > 0) ++nonzero;
    }
    // Widening the rows down to a block whose step is at least μ_1.
    const int next = block + 1 < static_cast<int>(blocks.size())
                         ? blocks[static_cast<std::size_t>(block) + 1].size
                         : 0;
    if (columns_done < kPerForm && mu.largest() <= blocks[block].size - next) {
      int rows = 0;
      for (int h = 0; h <= block; ++h) rows += blocks[static_cast<std::size_t>(h)].multiplicity;
      check.expect(base == lr_coefficient(add_columns(lambda, rows, n), mu,
                                           add_columns(nu, rows, n)),
                   "column form " + label.str());
      ++columns_done;
      if (base > 0) ++nonzero;
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  check.expect(seconds < 30.0, "took " + std::to_string(seconds) + " s");
  std::ostringstream detail;
  detail << "worked instance + " << rows_done << " row-form and " << columns_done
         << " column-form instances (" << nonzero << " with c > 0), " << seconds << " s";
  return finish(check, detail.str());
}

// ---------------------------------------------------------------- 6

Outcome schubert_agreement() {
  Check check;
  int products = 0;
  for (GrassmannianContext ctx : {GrassmannianContext{4, 3}, GrassmannianContext{3, 4}}) {
    const auto box = partitions_in_box(ctx.k, ctx.l);
    for (const auto& mu : box) {
      for (const auto& nu : box) {
        check.expect(product_via_skew(mu, nu, ctx) == direct_product(mu, nu, ctx),
                     to_string(mu) + " * " + to_string(nu));
        ++products;
      }
    }
  }
  const GrassmannianContext gr36{3, 3};
  const std::map<Partition, Coefficient, std::greater<>> expected{
      {Partition({3, 3}), 1}, {Partition({3, 2, 1}), 2}, {Partition({2, 2, 2}), 1}};
  check.expect(product_via_skew({2, 1}, {2, 1}, gr36).terms == expected &&
                   direct_product({2, 1}, {2, 1}, gr36).terms == expected,
               "sigma_(2,1)^2 in Gr(3,6)");
  return finish(check, std::to_string(products) +
                           " products in (4^3) and (3^4), plus the Gr(3,6) example");
}

// ---------------------------------------------------------------- 7, 8

std::vector<SkewDiagram> small_diagrams() {
  std::vector<SkewDiagram> out;
  const auto box = partitions_in_box(5, 5);
  for (const auto& outer : box) {
    for (const auto& inner : box) {
      if (contains(outer, inner) && outer.size() - inner.size() <= 10) {
        out.emplace_back(outer, inner);
      }
    }
  }
  return out;
}

Outcome symmetries() {
  Check check;
  int proper = 0;
  for (const auto& d : small_diagrams()) {
    if (!is_proper(d)) continue;
    ++proper;
    const Decomposition direct = decompose(d);
    check.expect(decompose(rotate180(d)) == direct, "rotation " + show(d));

    Decomposition transposed;
    for (const auto& [nu, c] :
         decompose(SkewDiagram(conjugate(d.outer()), conjugate(d.inner()))).terms) {
      transposed.terms.emplace(conjugate(nu), c);
    }
    check.expect(transposed == direct, "conjugation " + show(d));

    // c(λ; μ, ν) = c(λ; ν, μ) for every ν ⊆ λ of the right size.
    for (const auto& nu : partitions_within(d.size(), d.outer())) {
      check.expect(lr_coefficient(d.outer(), nu, d.inner()) == direct[nu],
                   "commutativity " + show(d) + " " + to_string(nu));
    }
  }
  return finish(check, std::to_string(proper) + " proper diagrams");
}

Outcome irreducibility() {
  Check check;
  int checked = 0;
  for (const auto& d : small_diagrams()) {
    ++checked;
    check.expect((decompose(d).terms.size() == 1) == !is_proper(d), show(d));
  }
  return finish(check, std::to_string(checked) + " diagrams");
}

// ---------------------------------------------------------------- 9

Outcome schubert_classification() {
  Check check;
  std::map<Triviality, int> taxa;
  int products = 0;
  for (GrassmannianContext ctx : {GrassmannianContext{4, 3}, GrassmannianContext{3, 4}}) {
    const auto box = partitions_in_box(ctx.k, ctx.l);
    for (const auto& mu : box) {
      for (const auto& nu : box) {
        const SchubertProduct direct = direct_product(mu, nu, ctx);
        const Verdict v = schubert_mf(mu, nu, ctx);
        check.expect(v.multiplicity_free == direct.multiplicity_free(),
                     to_string(mu) + " * " + to_string(nu) + " rule " + v.matched_rule);
        ++taxa[product_via_skew(mu, nu, ctx).triviality];
        ++products;
      }
    }
  }
  for (Triviality t : {Triviality::zero, Triviality::point_class, Triviality::single_class,
                       Triviality::generic}) {
    check.expect(taxa[t] > 0, std::string("no ") + to_string(t) + " product seen");
  }
  std::ostringstream detail;
  detail << products << " products (zero " << taxa[Triviality::zero] << ", point "
         << taxa[Triviality::point_class] << ", single "
         << taxa[Triviality::single_class] << ", generic " << taxa[Triviality::generic]
         << ")";
  return finish(check, detail.str());
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 known coefficients via lrcoef", constants},
      {"2 lattice-path fixtures", lattice_path_fixtures},
      {"3 classification sweep 5x5 (+4x4 smoke)", sweep},
      {"4 column/row insertion inequalities and lift", lift_properties},
      {"5 insertion equalities", insertion_equalities},
      {"6 Schubert products two ways", schubert_agreement},
      {"7 symmetry suite", symmetries},
      {"8 irreducibility boundary", irreducibility},
      {"9 Schubert classification", schubert_classification},
  };
  int failed = 0;
  for (const auto& [name, body] : criteria) {
    Outcome outcome;
    try {
      outcome = body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << name << " — "
              << outcome.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
