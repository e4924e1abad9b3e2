#ifndef LIQ_CLOSURE_HPP_
#define LIQ_CLOSURE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "liq/finite_semigroup.hpp"
#include "liq/partial_bijection.hpp"

namespace liq {

  inline constexpr std::size_t kDefaultClosureBudget = 100000;

  // A semigroup of charts: the multiplication table together with the chart
  // behind each index.
  class ChartSemigroup {
   public:
    ChartSemigroup() = default;
    ChartSemigroup(FiniteSemigroup table, std::vector<PartialBijection> charts);

    FiniteSemigroup const& table() const noexcept {
      return _table;
    }

    std::vector<PartialBijection> const& charts() const noexcept {
      return _charts;
    }

    PartialBijection const& chart(Index i) const {
      return _charts[i];
    }

    std::size_t size() const noexcept {
      return _charts.size();
    }

    std::optional<Index> find(PartialBijection const& f) const;

   private:
    FiniteSemigroup                                                   _table;
    std::vector<PartialBijection>                                     _charts;
    std::unordered_map<PartialBijection, Index, PartialBijectionHash> _lookup;
  };

  // The least set of charts containing `gens` that is closed under compose
  // (and under invert when `under_inverses` is set).
  //
  // Numbering is breadth first: level 0 holds the generators, level k+1 the
  // new products of level-k elements with a generator; each level is sorted
  // by the canonical chart order. Throws InputError for an empty generator
  // set or mixed ground sets, and ResourceError once more than `budget`
  // elements have been found.
  ChartSemigroup closure(std::span<PartialBijection const> gens,
                         bool                              under_inverses,
                         std::size_t budget = kDefaultClosureBudget);

}  // namespace liq

#endif  // LIQ_CLOSURE_HPP_
