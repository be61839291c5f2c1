#include "wmp/partition.hpp"

#include <numeric>
#include <stdexcept>

#include "wmp/maya.hpp"

namespace wmp {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition: parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!tok.empty()) parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int a) const {
  if (a < 1) throw std::invalid_argument("partition: part index is 1-based");
  return a <= num_parts() ? parts_[a - 1] : 0;
}

bool Partition::contains(const Box& box) const {
  return box.a >= 1 && box.b >= 1 && box.b <= part(box.a);
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  for (int a = 1; a <= num_parts(); ++a)
    for (int b = 1; b <= parts_[a - 1]; ++b) out.push_back({a, b});
  return out;
}

Partition Partition::transpose() const {
  std::vector<int> t;
  if (parts_.empty()) return Partition();
  t.resize(parts_[0]);
  for (int b = 1; b <= parts_[0]; ++b) {
    int count = 0;
    for (int p : parts_)
      if (p >= b) ++count;
    t[b - 1] = count;
  }
  return Partition(std::move(t));
}

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s;
}

BoxStats box_stats(const Partition& lam, const Box& box) {
  if (!lam.contains(box)) throw std::invalid_argument("box_stats: box not in partition");
  BoxStats st;
  for (int a2 = box.a + 1; a2 <= lam.num_parts(); ++a2)
    if (lam.part(a2) >= box.b) ++st.arm;
  st.leg = lam.part(box.a) - box.b;
  st.hook = st.arm + st.leg + 1;
  st.content = box.a - box.b;
  return st;
}

bool dominance_leq(const Partition& lam, const Partition& mu, int l) {
  if (lam.size() != mu.size())
    throw std::invalid_argument("dominance: partitions must have equal size");
  if (l > 0 && core_quotient(lam, l).core != core_quotient(mu, l).core) return false;
  int n = std::max(lam.num_parts(), mu.num_parts());
  int sl = 0, sm = 0;
  for (int a = 1; a <= n; ++a) {
    sl += lam.part(a);
    sm += mu.part(a);
    if (sl > sm) return false;
  }
  return true;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(n - p, p, acc, out);
    acc.pop_back();
  }
}

} // namespace

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("all_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> acc;
  gen_partitions(n, n == 0 ? 1 : n, acc, out);
  return out;
}

namespace {

int mod_residue(int x, int l) { return ((x % l) + l) % l; }

FieldElem monomial_t1_t2(int e1, int e2) {
  return FieldElem::var_pow(Var::t1, e1) * FieldElem::var_pow(Var::t2, e2);
}

} // namespace

FieldElem taut_character(const Partition& lam, int m, int l) {
  if (l < 1) throw std::invalid_argument("taut_character: l must be >= 1");
  if (m < 0 || m >= l) throw std::invalid_argument("taut_character: residue out of range");
  FieldElem acc = FieldElem::zero();
  for (const Box& box : lam.boxes())
    if (mod_residue(box.a - box.b, l) == m) acc += monomial_t1_t2(1 - box.b, 1 - box.a);
  return acc;
}

FieldElem classical_descendant(const Partition& lam, int m, int l) {
  if (l < 1) throw std::invalid_argument("classical_descendant: l must be >= 1");
  if (m < 0 || m >= l) throw std::invalid_argument("classical_descendant: residue out of range");
  FieldElem acc = FieldElem::one();
  const FieldElem u = FieldElem::variable(Var::u);
  for (const Box& box : lam.boxes())
    if (mod_residue(box.a - box.b, l) == m)
      acc *= FieldElem::one() + u * monomial_t1_t2(1 - box.b, 1 - box.a);
  return acc;
}

} // namespace wmp
