#include "wmp/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace wmp {

Rational z_factor(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  Rational z(1);
  for (const auto& [k, m] : mult) {
    for (int i = 0; i < m; ++i) z *= k;
    for (int i = 2; i <= m; ++i) z *= i;
  }
  return z;
}

std::vector<std::pair<Partition, int>> strip_removals(const Partition& lam, int length) {
  if (length < 1) throw std::invalid_argument("strip_removals: length must be >= 1");
  // Beta-number moves: remove a strip of the given length by lowering one
  // first-column hook coordinate, provided the target slot is free.
  int m = lam.num_parts() + length;
  std::set<int> beta;
  for (int i = 1; i <= m; ++i) beta.insert(lam.part(i) + m - i);
  std::vector<std::pair<Partition, int>> out;
  for (int b : beta) {
    int target = b - length;
    if (target < 0 || beta.count(target)) continue;
    int height = 0;
    for (int x : beta)
      if (x > target && x < b) ++height;
    std::set<int> nb = beta;
    nb.erase(b);
    nb.insert(target);
    std::vector<int> sorted(nb.rbegin(), nb.rend());
    std::vector<int> parts;
    for (int i = 1; i <= m; ++i) {
      int p = sorted[i - 1] - (m - i);
      if (p > 0) parts.push_back(p);
    }
    out.emplace_back(Partition(parts), height);
  }
  return out;
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;
std::map<Key, Rational> g_char_cache;
std::mutex g_char_mutex;

Rational character_rec(const Partition& lam, const std::vector<int>& rho, size_t idx) {
  if (idx == rho.size()) {
    if (lam.size() != 0) throw std::logic_error("character: size mismatch");
    return Rational(1);
  }
  Key key(lam.parts(), std::vector<int>(rho.begin() + idx, rho.end()));
  {
    std::lock_guard<std::mutex> lock(g_char_mutex);
    auto it = g_char_cache.find(key);
    if (it != g_char_cache.end()) return it->second;
  }
  Rational acc(0);
  for (const auto& [mu, height] : strip_removals(lam, rho[idx])) {
    Rational c = character_rec(mu, rho, idx + 1);
    acc += (height % 2 == 0) ? c : -c;
  }
  std::lock_guard<std::mutex> lock(g_char_mutex);
  g_char_cache.emplace(key, acc);
  return acc;
}

} // namespace

Rational sym_character(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size())
    throw std::invalid_argument("sym_character: partitions must have equal size");
  return character_rec(lam, mu.parts(), 0);
}

} // namespace wmp
