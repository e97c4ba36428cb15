#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hypoly/hypergraph.hpp"

namespace hypoly {

/// Every labeled hypergraph on vertices "1".."n" (n <= max_n) whose edges
/// form a multiset of at most max_m non-empty subsets of size <= max_edge.
/// Edges are ids a, b, c, ... assigned in nondecreasing subset order.
std::vector<Hypergraph> exhaustive_suite(unsigned max_n = 4, unsigned max_m = 3,
                                         unsigned max_edge = 3);

/// Seeded random instances with 1 <= n <= max_n and m <= max_m. The same
/// seed gives the same list on every platform.
std::vector<Hypergraph> random_suite(std::uint64_t seed, std::size_t count = 200,
                                     unsigned max_n = 6, unsigned max_m = 5);

/// Pass/fail tally for one named identity.
struct IdentityResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  bool passed() const { return failed == 0; }
};

/// Identity results in first-seen order.
class VerifyReport {
 public:
  void record(const std::string& name, bool ok, const std::string& context = {});
  void merge(const VerifyReport& other);

  const std::vector<IdentityResult>& results() const { return results_; }
  bool passed() const;
  /// One "PASS name (k checks)" or "FAIL name ..." line per identity.
  std::string text() const;

 private:
  std::vector<IdentityResult> results_;
};

/// Runs every identity that applies to h. `context` labels failures.
void verify_instance(const Hypergraph& h, VerifyReport& report, const std::string& context = {});

VerifyReport verify_suite(const std::vector<Hypergraph>& suite);

/// Closed forms for paths, cycles, hyperstars and sunflowers against direct
/// computation.
VerifyReport verify_families();

/// Compact label for failure messages, e.g. "{1,2,3 | a:12 b:23}".
std::string describe(const Hypergraph& h);

}  // namespace hypoly
