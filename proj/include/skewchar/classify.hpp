#pragma once

#include <string>

#include "skewchar/partition.hpp"
#include "skewchar/skew.hpp"

namespace skewchar {

inline constexpr const char* kNoRule = "none";

// Outcome of a closed-form decider. matched_rule names the clause that
// certified multiplicity-freeness, or kNoRule when multiplicity is
// certified instead.
struct Verdict {
  bool multiplicity_free = false;
  std::string matched_rule = kNoRule;
  SkewDiagram normalized_input;
};

// Multiplicity-freeness of s_μ · s_ν. Clauses, each up to swapping μ and ν:
//   S1  μ is a one-line rectangle
//   S2  μ is a two-line rectangle and ν a fat hook
//   S3  μ is a rectangle and ν a near-rectangle
//   S4  μ and ν are rectangles
// An empty factor gives rule "trivial-empty".
Verdict stembridge_mf(const Partition& mu, const Partition& nu);

// Decision tree on the basic form λ/α of d. Disconnected diagrams report
// clauses 1a-1d, connected ones 2a, 2b-i .. 2b-iv-epsilon, 2c-i/ii and
// 2d-i .. 2d-v; partitions report "irreducible" and the empty diagram
// "empty".
Verdict skew_mf(const SkewDiagram& d);

// Boundary-path form on the basic diagram λ/μ with
// ν = ((λ_1^l(λ)) / λ)°. Clauses T1-T4, with a trailing ' for the variant
// exchanging (μ, s_in) and (ν, s_out). Non-proper input reports
// "irreducible".
Verdict skew_mf_short(const SkewDiagram& d);

// Both closed forms agree with the brute-force multiplicity search.
bool cross_check(const SkewDiagram& d);

}  // namespace skewchar
