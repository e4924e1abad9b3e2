#ifndef LIQ_SYMBOLIC_HPP_
#define LIQ_SYMBOLIC_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "liq/finite_semigroup.hpp"
#include "liq/types.hpp"

namespace liq {

  // (a, b) in the bicyclic monoid; (0, 0) is the identity.
  struct BicyclicPair {
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    auto operator<=>(BicyclicPair const&) const = default;
  };

  // (a,b)(c,d) = (a - b + max(b,c), d - c + max(b,c)).
  BicyclicPair multiply(BicyclicPair x, BicyclicPair y) noexcept;

  inline BicyclicPair inverse(BicyclicPair x) noexcept {
    return {x.b, x.a};
  }

  std::string to_string(BicyclicPair x);

  enum class SymbolicKind { Bicyclic, AdditiveNaturals, FreeMonoidRank2 };

  std::string to_string(SymbolicKind kind);

  // Throws InputError for anything but "bicyclic", "nat" and "free2".
  SymbolicKind parse_symbolic_kind(std::string const& name);

  // Words of the free monoid are strings over {x, y}; "" is the identity.
  using SymbolicElement = std::variant<BicyclicPair, std::uint64_t, std::string>;

  std::string to_string(SymbolicElement const& x);

  // A closed-form infinite monoid. Elements outside the kind's alternative
  // make every operation throw InputError.
  class SymbolicSemigroup {
   public:
    // Largest window accepted for the free monoid (2^(w+1) - 1 words).
    static constexpr std::uint64_t kMaxFreeWindow = 12;

    // Throws InputError when the window is too large for the kind.
    SymbolicSemigroup(SymbolicKind kind, std::uint64_t window);

    SymbolicKind kind() const noexcept {
      return _kind;
    }

    std::uint64_t window() const noexcept {
      return _window;
    }

    SymbolicElement multiply(SymbolicElement const& x, SymbolicElement const& y) const;

    SymbolicElement identity() const;

    // Only the bicyclic monoid is inverse.
    std::optional<SymbolicElement> inverse(SymbolicElement const& x) const;

    // Bicyclic pairs with both coordinates ≤ window, naturals ≤ window, or
    // words of length ≤ window; in a fixed order.
    std::vector<SymbolicElement> window_elements() const;

    // Closed-form Green and R* oracles. Bicyclic: (a,b) R (c,d) iff a = c,
    // L iff b = d. The other two kinds are cancellative monoids whose only
    // unit is the identity, so R and L are trivial and R* is universal.
    bool r_related(SymbolicElement const& x, SymbolicElement const& y) const;
    bool l_related(SymbolicElement const& x, SymbolicElement const& y) const;
    bool r_star_related(SymbolicElement const& x, SymbolicElement const& y) const;

    // The idempotent R*-related to x. Bicyclic: (a, a); otherwise the identity.
    SymbolicElement plus(SymbolicElement const& x) const;

    // A generator c of Sx ∩ Sy, when that left ideal is principal.
    // Naturals: max(x, y). Words: the longer word when one is a suffix of
    // the other, otherwise absent. Bicyclic: S(a,b) = {(p,q) : q ≥ b}, so
    // (0, max(b, d)).
    std::optional<SymbolicElement> lc_witness(SymbolicElement const& x,
                                              SymbolicElement const& y) const;

    // Symbolic semigroups never become tables.
    [[noreturn]] FiniteSemigroup materialize_table() const;

    // Re-derives the oracles on the window from their definitions: R and L
    // from principal one-sided ideals, R* from the cancellation condition,
    // and lc_witness from the left ideals, with multipliers drawn from a
    // window large enough for the closed forms to be exact. Returns the
    // first disagreement.
    Verdict validate_window() const;

   private:
    SymbolicKind  _kind;
    std::uint64_t _window;
  };

}  // namespace liq

#endif  // LIQ_SYMBOLIC_HPP_
