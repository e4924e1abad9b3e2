#ifndef LIQ_CATALOG_HPP_
#define LIQ_CATALOG_HPP_

#include <string>
#include <utility>
#include <vector>

#include "liq/finite_semigroup.hpp"

namespace liq {

  // The symmetric group on three points, identity first.
  FiniteSemigroup symmetric_group_3();

  // Z₂ ∪ Z₂ glued along the identity map over a 2-chain: the order-4
  // Clifford semigroup.
  FiniteSemigroup clifford_order_4();

  // The groups of order at most 6 up to isomorphism, with display names.
  std::vector<std::pair<std::string, FiniteSemigroup>> small_groups();

  // Named instances:
  //   trivial, Z<n>, Z2xZ2, S3, chain<n>, leftzero<n>, null<n>, clifford4,
  //   B0(Z<n>,<k>)
  // Throws InputError for an unknown name.
  FiniteSemigroup catalog_semigroup(std::string const& name);

  std::vector<std::string> catalog_names();

  // A catalog name, or else a table file.
  FiniteSemigroup resolve_semigroup(std::string const& name_or_path);

}  // namespace liq

#endif  // LIQ_CATALOG_HPP_
