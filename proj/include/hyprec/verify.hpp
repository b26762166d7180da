#pragma once

// Seeded property suites behind `hyprec verify`. Failures are data: the
// driver never throws for a failed property, only for internal errors.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hyprec::verify {

enum class Suite { Recurrence, Corollaries, SpecialCases, Mean, Regions, Lemma3, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string to_string(Suite suite);

enum class Status { Pass, Fail, Warn, Note };

struct CheckResult {
  std::string suite;
  std::string name;
  Status status = Status::Pass;
  std::size_t cases = 0;
  /// Worst observed error or margin; its meaning is check-specific.
  double worst = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct Summary {
  Suite suite = Suite::All;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  std::size_t count(Status status) const;
};

Summary run(Suite suite, std::uint64_t seed);

std::string render_plain(const Summary& summary);
std::string render_json(const Summary& summary);

}  // namespace hyprec::verify
