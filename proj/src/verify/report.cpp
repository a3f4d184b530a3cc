#include "qlr/verify/report.hpp"

namespace qlr {

namespace {
constexpr std::size_t kKeptFailures = 20;
}

void Report::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) fail(what);
}

void Report::fail(const std::string& what) {
  ++failure_count;
  if (failures.size() < kKeptFailures) failures.push_back(what);
}

void Report::merge(const Report& other) {
  checks += other.checks;
  failure_count += other.failure_count;
  for (const auto& f : other.failures)
    if (failures.size() < kKeptFailures) failures.push_back(f);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

Json Report::to_json() const {
  return Json{{"name", name},           {"range", range},       {"checks", checks},
              {"failures", failure_count}, {"counterexamples", failures}, {"notes", notes},
              {"pass", pass()},         {"elapsed_ms", elapsed_ms}};
}

}  // namespace qlr
