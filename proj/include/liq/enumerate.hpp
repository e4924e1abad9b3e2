#ifndef LIQ_ENUMERATE_HPP_
#define LIQ_ENUMERATE_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "liq/finite_semigroup.hpp"
#include "liq/kernels.hpp"

namespace liq {

  // Filters combine with bitwise or.
  enum Filter : unsigned {
    kNoFilter    = 0,
    kLeftAmple   = 1u << 0,
    kLC          = 1u << 1,
    kInverse     = 1u << 2,
    kMonoid      = 1u << 3,
    kSemilattice = 1u << 4,
    kGroup       = 1u << 5,
  };

  // Parses "left_ample,lc,inverse" (also monoid, semilattice, group).
  unsigned parse_filters(std::string const& list);

  bool passes(FiniteSemigroup const& S, unsigned filters);

  struct EnumerateOptions {
    std::size_t   order              = 1;
    unsigned      filters            = kNoFilter;
    bool          up_to_isomorphism  = false;
    kernels::Exec exec               = kernels::Exec::parallel;
  };

  inline constexpr std::size_t kMaxEnumerationOrder = 4;

  // Every associative table on {0, ..., n-1} passing the filters, from a
  // backtracking fill in row-major order with associativity pruning. The
  // sequence is lexicographic in the table and identical for both
  // execution modes: the parallel mode splits the search at the first row
  // and concatenates in prefix order. With up_to_isomorphism, only the
  // first table of each isomorphism class is kept. Throws InputError
  // unless 1 ≤ n ≤ 4.
  std::vector<FiniteSemigroup> enumerate_semigroups(EnumerateOptions const& options);

  // Convenience: all semigroups of orders 1..max_order passing the filters.
  std::vector<FiniteSemigroup> enumerate_up_to(std::size_t max_order,
                                               unsigned    filters,
                                               bool        up_to_isomorphism);

}  // namespace liq

#endif  // LIQ_ENUMERATE_HPP_
