#ifndef LIQ_MORPHISM_HPP_
#define LIQ_MORPHISM_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "liq/finite_semigroup.hpp"

namespace liq {

  // An element map between finite semigroups; map[a] is the image of a.
  // Source and target are passed alongside, never stored.
  using ElementMap = std::vector<Index>;

  // First pair (a, b) with (ab)φ ≠ (aφ)(bφ), if any. Throws InputError when
  // the map has the wrong length or leaves the target.
  std::optional<std::vector<Index>> morphism_violation(FiniteSemigroup const& S,
                                                       FiniteSemigroup const& T,
                                                       ElementMap const&      map);

  bool is_morphism(FiniteSemigroup const& S, FiniteSemigroup const& T, ElementMap const& map);

  // A bijective morphism.
  bool is_isomorphism(FiniteSemigroup const& S,
                      FiniteSemigroup const& T,
                      ElementMap const&      map);

  ElementMap identity_map(std::size_t n);

  // a ↦ (a first)second.
  ElementMap then(ElementMap const& first, ElementMap const& second);

  // Inverse of a bijection onto [0, map.size()).
  ElementMap inverse_map(ElementMap const& map);

  enum class MorphismKind {
    plain,
    plus_preserving,  // (2,1)-morphisms between left ample semigroups
    monoid            // identity to identity
  };

  // Every morphism S → T of the given kind, found by backtracking over the
  // elements of S in index order with multiplicativity pruning. The
  // callback returns false to stop early.
  void for_each_morphism(FiniteSemigroup const&                  S,
                         FiniteSemigroup const&                  T,
                         MorphismKind                            kind,
                         std::function<bool(ElementMap const&)> const& visit);

  std::vector<ElementMap> all_morphisms(FiniteSemigroup const& S,
                                        FiniteSemigroup const& T,
                                        MorphismKind           kind = MorphismKind::plain);

}  // namespace liq

#endif  // LIQ_MORPHISM_HPP_
