#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wmp/field.hpp"

namespace wmp {

// Box (a,b): a = part index, b = position within the part, both 1-based.
struct Box {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Box&, const Box&) = default;
};

struct BoxStats {
  int arm = 0;     // parts after a that still reach position b
  int leg = 0;     // boxes after b within part a
  int hook = 0;    // arm + leg + 1
  int content = 0; // a - b
};

// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& s); // "3,2,1"; "" is empty

  int size() const;                       // number of boxes
  int num_parts() const { return static_cast<int>(parts_.size()); }
  int part(int a) const;                  // 1-based; 0 beyond the last part
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  bool contains(const Box& box) const;
  std::vector<Box> boxes() const;         // row-major: (1,1),(1,2),...,(2,1),...

  Partition transpose() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

BoxStats box_stats(const Partition& lam, const Box& box);

// Dominance order lam <= mu: equal sizes (error otherwise) and every prefix
// sum of lam is <= the matching prefix sum of mu. With l > 0 the comparison
// additionally requires equal l-cores (computed first; false if they differ).
bool dominance_leq(const Partition& lam, const Partition& mu, int l = 0);

std::vector<Partition> all_partitions(int n);

// Characters of exterior powers of the residue-m tautological summand at the
// fixed point lam: sum of t1^(1-b) t2^(1-a) over boxes with a-b = m (mod l).
FieldElem taut_character(const Partition& lam, int m, int l);

// Product of (1 + u t1^(1-b) t2^(1-a)) over boxes with a-b = m (mod l).
FieldElem classical_descendant(const Partition& lam, int m, int l);

} // namespace wmp
