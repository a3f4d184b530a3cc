#include "qlr/verify/cache.hpp"

#include <algorithm>
#include <fstream>

#include "qlr/verify/json_io.hpp"

namespace qlr {

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key") || !j.contains("poly")) continue;
    entries_[j["key"].get<std::string>()] = qpoly_from_json(j["poly"]);
  }
}

std::optional<std::string> ResultCache::key_of(const std::string& engine, const KIndex& k, int* sign) {
  auto norm = normalize_index(k.lambda, k.gamma, k.eta);
  if (!norm) return std::nullopt;
  // Shift so the smallest entry is zero; K is invariant under this.
  int lo = 0;
  if (!norm->gamma.empty()) {
    lo = *std::min_element(norm->gamma.begin(), norm->gamma.end());
    lo = std::min(lo, *std::min_element(norm->lambda.begin(), norm->lambda.end()));
  }
  for (int& x : norm->lambda) x -= lo;
  for (int& x : norm->gamma) x -= lo;
  if (sign) *sign = norm->sign;
  return engine + "|" + to_json(KIndex{norm->lambda, norm->gamma, k.eta}).dump();
}

std::optional<QPoly> ResultCache::get(const std::string& engine, const KIndex& k) const {
  int sign = 1;
  auto key = key_of(engine, k, &sign);
  if (!key) return std::nullopt;
  std::lock_guard<std::mutex> g(lock_);
  auto it = entries_.find(*key);
  if (it == entries_.end()) return std::nullopt;
  return it->second * sign;
}

void ResultCache::put(const std::string& engine, const KIndex& k, const QPoly& value) {
  int sign = 1;
  auto key = key_of(engine, k, &sign);
  if (!key) return;
  QPoly stored = value * sign;
  std::lock_guard<std::mutex> g(lock_);
  entries_[*key] = stored;
  std::ofstream out(path_, std::ios::app);
  out << Json{{"key", *key}, {"poly", to_json(stored)}}.dump() << "\n";
}

std::size_t ResultCache::size() const {
  std::lock_guard<std::mutex> g(lock_);
  return entries_.size();
}

}  // namespace qlr
