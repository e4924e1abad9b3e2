#ifndef LIQ_KERNELS_HPP_
#define LIQ_KERNELS_HPP_

// Data-parallel inner loops. Every kernel has an OpenMP implementation and a
// serial reference implementation with the same contract; the tests check
// that the two agree and bench/ compares their speed.

#include <cstddef>
#include <exception>
#include <functional>
#include <span>
#include <vector>

#include "liq/types.hpp"

namespace liq {
  class FiniteSemigroup;
}

namespace liq::kernels {

  enum class Exec { serial, parallel };

  // Parallel kernels fall back to the serial loop below this many table
  // cells. Tests lower it to force the OpenMP path on small inputs.
  std::size_t min_parallel_cells() noexcept;
  void        set_min_parallel_cells(std::size_t cells) noexcept;

  // True iff all n³ triples associate. The table must be in range.
  bool associative(std::size_t n, std::span<Index const> table, Exec exec);

  // Row-major n×n table with entry (a, b) = f(a, b). f must be safe to call
  // concurrently.
  std::vector<Index> fill_table(std::size_t                             n,
                                std::function<Index(Index, Index)> const& f,
                                Exec                                    exec);

  // Per-element signature of the right translation x ↦ xa on S¹, with the
  // values relabelled by first occurrence. Two elements are R*-related
  // exactly when their signatures are equal.
  std::vector<std::vector<Index>> right_translation_kernels(FiniteSemigroup const& S,
                                                            Exec exec);

  // Row-major boolean matrix of the R* relation.
  std::vector<char> r_star_matrix(FiniteSemigroup const& S, Exec exec);

  // Evaluates f(i) for i in [0, count) and returns the results in index
  // order whatever the schedule. f must be safe to call concurrently, and
  // Result must not be bool (std::vector<bool> packs bits).
  template <typename Result>
  std::vector<Result> ordered_map(std::size_t                                  count,
                                  std::function<Result(std::size_t)> const& f,
                                  Exec                                         exec);

  namespace serial {
    bool associative(std::size_t n, std::span<Index const> table);
    std::vector<Index> fill_table(std::size_t                             n,
                                  std::function<Index(Index, Index)> const& f);
    std::vector<std::vector<Index>> right_translation_kernels(FiniteSemigroup const& S);
    std::vector<char> r_star_matrix(FiniteSemigroup const& S);
  }  // namespace serial

  namespace omp {
    bool associative(std::size_t n, std::span<Index const> table);
    std::vector<Index> fill_table(std::size_t                             n,
                                  std::function<Index(Index, Index)> const& f);
    std::vector<std::vector<Index>> right_translation_kernels(FiniteSemigroup const& S);
    std::vector<char> r_star_matrix(FiniteSemigroup const& S);
  }  // namespace omp

  template <typename Result>
  std::vector<Result> ordered_map(std::size_t                                  count,
                                  std::function<Result(std::size_t)> const& f,
                                  Exec                                         exec) {
    std::vector<Result> out(count);
    if (exec == Exec::serial) {
      for (std::size_t i = 0; i < count; ++i) {
        out[i] = f(i);
      }
      return out;
    }
    // Exceptions must not escape an OpenMP region; the first one (by index)
    // is rethrown after the loop.
    std::vector<std::exception_ptr> errors(count);
    long const                      n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
      try {
        out[i] = f(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
    for (auto const& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return out;
  }

}  // namespace liq::kernels

#endif  // LIQ_KERNELS_HPP_
