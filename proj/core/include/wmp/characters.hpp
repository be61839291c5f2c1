#pragma once

#include "wmp/partition.hpp"
#include "wmp/rational.hpp"

namespace wmp {

// Centralizer order z_mu = prod_k k^{m_k} m_k! over multiplicities m_k.
Rational z_factor(const Partition& mu);

// Symmetric-group character chi^lam(mu) by border-strip recursion, memoized
// and thread-safe. |lam| must equal |mu|.
Rational sym_character(const Partition& lam, const Partition& mu);

// All mu obtained from lam by removing one border strip of the given length,
// with the strip height (rows spanned minus one) alongside.
std::vector<std::pair<Partition, int>> strip_removals(const Partition& lam, int length);

} // namespace wmp
