#ifndef LIQ_FINITE_SEMIGROUP_HPP_
#define LIQ_FINITE_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "liq/types.hpp"

namespace liq {

  // Validates a square table of element indices and reports whether it is
  // associative. Throws InputError naming the offending row or cell when the
  // matrix is not square or an entry is out of range.
  bool is_associative(std::vector<std::vector<Index>> const& rows);

  // Same, for a row-major table of an n-element magma.
  bool is_associative(std::size_t n, std::span<Index const> table);

  // First non-associating triple (a, b, c), if any. The table must be valid.
  std::optional<std::vector<Index>> associativity_violation(
      std::size_t            n,
      std::span<Index const> table);

  // An associative multiplication table over the indices [0, size()).
  //
  // Values are immutable after construction. Names are display only.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    // Validates shape, range and associativity; throws InputError.
    static FiniteSemigroup from_rows(std::vector<std::vector<Index>> const& rows,
                                     std::vector<std::string> names = {});

    static FiniteSemigroup from_table(std::size_t              n,
                                      std::vector<Index>       table,
                                      std::vector<std::string> names = {});

    // Skips the associativity check. Used by constructions whose output is
    // associative by construction and re-verified elsewhere.
    static FiniteSemigroup trusted(std::size_t              n,
                                   std::vector<Index>       table,
                                   std::vector<std::string> names    = {},
                                   bool                     adjoined = false);

    std::size_t size() const noexcept {
      return _n;
    }

    Index product(Index a, Index b) const noexcept {
      return _table[static_cast<std::size_t>(a) * _n + b];
    }

    std::span<Index const> row(Index a) const noexcept {
      return {_table.data() + static_cast<std::size_t>(a) * _n, _n};
    }

    std::vector<Index> const& table() const noexcept {
      return _table;
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    // The display name of a, or its index when unnamed.
    std::string name(Index a) const;

    FiniteSemigroup with_names(std::vector<std::string> names) const;

    bool has_adjoined_identity() const noexcept {
      return _adjoined;
    }

    bool is_idempotent(Index a) const noexcept {
      return product(a, a) == a;
    }

    std::vector<Index> idempotents() const;

    std::optional<Index> identity() const;

    bool is_monoid() const {
      return identity().has_value();
    }

    bool is_commutative() const;

    // S¹. When S is already a monoid this is S itself (flag unset);
    // otherwise a formal identity becomes index 0 and every other element
    // moves up by one.
    FiniteSemigroup with_identity() const;

    // Sa and aS, without the adjoined identity.
    Subset left_multiples(Index a) const;
    Subset right_multiples(Index a) const;

    // The subsemigroup on `members` (sorted), renumbered densely in order.
    // Throws InputError if `members` is not multiplicatively closed.
    FiniteSemigroup restrict_to(std::vector<Index> const& members) const;

    bool operator==(FiniteSemigroup const& that) const {
      return _n == that._n && _table == that._table;
    }

   private:
    FiniteSemigroup(std::size_t              n,
                    std::vector<Index>       table,
                    std::vector<std::string> names,
                    bool                     adjoined)
        : _n(n),
          _table(std::move(table)),
          _names(std::move(names)),
          _adjoined(adjoined) {}

    std::size_t              _n = 0;
    std::vector<Index>       _table;
    std::vector<std::string> _names;
    bool                     _adjoined = false;
  };

  // Small named constructions used throughout the tests and the CLI.
  FiniteSemigroup cyclic_group(std::size_t n);
  FiniteSemigroup trivial_semigroup();
  FiniteSemigroup chain_semilattice(std::size_t n);  // 0 < 1 < ... (meet = min)
  FiniteSemigroup left_zero_semigroup(std::size_t n);
  FiniteSemigroup null_semigroup(std::size_t n);  // all products are 0
  FiniteSemigroup direct_product(FiniteSemigroup const& S, FiniteSemigroup const& T);

  bool is_group(FiniteSemigroup const& S);
  bool is_semilattice(FiniteSemigroup const& S);
  bool is_regular(FiniteSemigroup const& S);
  bool is_right_cancellative(FiniteSemigroup const& S);
  bool is_left_cancellative(FiniteSemigroup const& S);

}  // namespace liq

#endif  // LIQ_FINITE_SEMIGROUP_HPP_
