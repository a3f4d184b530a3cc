#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "qlr/kpoly.hpp"
#include "qlr/qpoly.hpp"

namespace qlr {

// Append-only JSON-lines store of engine results keyed by the normalized
// index; on load the last line for a key wins.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  std::optional<QPoly> get(const std::string& engine, const KIndex& k) const;
  void put(const std::string& engine, const KIndex& k, const QPoly& value);
  std::size_t size() const;

  static std::optional<std::string> key_of(const std::string& engine, const KIndex& k, int* sign = nullptr);

 private:
  std::string path_;
  mutable std::mutex lock_;
  std::map<std::string, QPoly> entries_;
};

}  // namespace qlr
