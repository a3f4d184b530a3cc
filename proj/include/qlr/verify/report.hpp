#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "qlr/verify/json_io.hpp"

namespace qlr {

struct Report {
  std::string name;
  std::string range;
  std::int64_t checks = 0;
  std::int64_t failure_count = 0;
  std::vector<std::string> failures;  // first few, for display
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool pass() const { return failure_count == 0; }
  void expect(bool ok, const std::string& what);
  void fail(const std::string& what);
  void merge(const Report& other);
  Json to_json() const;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace qlr
