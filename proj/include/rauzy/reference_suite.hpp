#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rauzy/words.hpp"

namespace rauzy::reference {

// Built-in fixtures for the worked substitution pairs.

/// a->aba, b->ab and a->aba, b->ba.
Substitution two_letter_first();
Substitution two_letter_second();
/// a->a^i b, b->a^i c, c->a; i = 1 is tribonacci.
Substitution tribonacci_family(unsigned i);
/// a->b a^i, b->c a^i, c->a: the reverse of tribonacci_family(i).
Substitution tribonacci_family_reversed(unsigned i);
/// a->ab, b->ca, c->a and a->ba, b->ac, c->a.
Substitution flipped_tribonacci();
Substitution flipped_tribonacci_reversed();
/// a->aabbaabab, b->ab and a->babaabbaa, b->ba.
Substitution nonpalindromic_first();
Substitution nonpalindromic_second();
/// a->abc, b->a, c->ac.
Substitution no_initial_pair();

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::size_t threads = 1;
  /// Point count for the symmetry check.
  std::size_t symmetry_points = 200'000;
  /// Prefix cutoff for the missing-initial-pair check.
  std::size_t pair_cutoff = 1'000'000;
};

struct Check {
  std::string id;
  std::string description;
  std::function<CheckResult(const SuiteOptions&)> run;
};

/// Exact reproduction of the worked pairs, the reflection symmetry at grid
/// scale, and the exact common-point invariant.
const std::vector<Check>& reference_checks();

std::vector<CheckResult> run_reference_suite(const SuiteOptions& options = {});

}  // namespace rauzy::reference
