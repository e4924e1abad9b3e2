#ifndef LIQ_ISOMORPHISM_HPP_
#define LIQ_ISOMORPHISM_HPP_

#include <optional>
#include <vector>

#include "liq/finite_semigroup.hpp"
#include "liq/morphism.hpp"

namespace liq {

  // An isomorphism S → T, if one exists. Backtracking over the elements of
  // S with candidates pruned by cheap invariants (idempotency, the sizes of
  // Sa and aS, the cycle shape of a) and images propagated through
  // products of already-mapped elements.
  std::optional<ElementMap> find_isomorphism(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T);

  bool are_isomorphic(FiniteSemigroup const& S, FiniteSemigroup const& T);

  // The lexicographically least relabelled table over all n! relabellings.
  // Equal canonical forms characterise isomorphic semigroups. Throws
  // UnsupportedError above order 7.
  std::vector<Index> canonical_form(FiniteSemigroup const& S);

  // Keeps the first representative of each isomorphism class, in order.
  std::vector<FiniteSemigroup> isomorphism_class_representatives(
      std::vector<FiniteSemigroup> const& all);

}  // namespace liq

#endif  // LIQ_ISOMORPHISM_HPP_
