#include "skewchar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "skewchar/classify.hpp"
#include "skewchar/lr.hpp"

namespace skewchar {

LegAnswers evaluate_legs(const SkewDiagram& d, int max_cells) {
  LegAnswers answers;
  answers.tree = skew_mf(d).multiplicity_free;
  answers.paths = skew_mf_short(d).multiplicity_free;
  if (d.size() <= max_cells) answers.brute_force = !has_multiplicity(d);
  return answers;
}

VerifyReport verify_sweep(int max_width, int max_height, int max_cells,
                          unsigned workers) {
  if (max_width < 1 || max_height < 1) {
    throw std::invalid_argument("sweep box must be at least 1x1");
  }
  const auto start = std::chrono::steady_clock::now();

  std::vector<SkewDiagram> instances;
  const auto box = partitions_in_box(max_width, max_height);
  for (const Partition& outer : box) {
    if (outer.empty()) continue;
    for (const Partition& inner : box) {
      if (contains(outer, inner)) instances.emplace_back(outer, inner);
    }
  }

  std::vector<LegAnswers> answers(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      answers[i] = evaluate_legs(instances[i], max_cells);
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  VerifyReport report;
  report.space_description =
      "outer/inner with inner ⊆ outer ⊆ (" + std::to_string(max_width) + "^" +
      std::to_string(max_height) + "), brute force up to " +
      std::to_string(max_cells) + " cells";
  report.instances_checked = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (answers[i].brute_force) ++report.brute_force_checked;
    if (!answers[i].agree()) {
      report.disagreements.push_back({instances[i], answers[i]});
    }
  }
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace skewchar
