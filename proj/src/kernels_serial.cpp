#include "liq/finite_semigroup.hpp"
#include "liq/kernels.hpp"

#include <atomic>

namespace liq::kernels {

  namespace {
    // Below this many cells thread start-up costs more than the loop.
    std::atomic<std::size_t> g_min_cells{4096};
  }  // namespace

  std::size_t min_parallel_cells() noexcept {
    return g_min_cells.load(std::memory_order_relaxed);
  }

  void set_min_parallel_cells(std::size_t cells) noexcept {
    g_min_cells.store(cells, std::memory_order_relaxed);
  }

  namespace serial {

    bool associative(std::size_t n, std::span<Index const> t) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          std::size_t const ab = t[a * n + b];
          for (std::size_t c = 0; c < n; ++c) {
            if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    std::vector<Index> fill_table(std::size_t                             n,
                                  std::function<Index(Index, Index)> const& f) {
      std::vector<Index> out(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          out[a * n + b] = f(static_cast<Index>(a), static_cast<Index>(b));
        }
      }
      return out;
    }

    std::vector<std::vector<Index>> right_translation_kernels(FiniteSemigroup const& S) {
      std::size_t const               n = S.size();
      std::vector<std::vector<Index>> out(n);
      for (Index a = 0; a < n; ++a) {
        // Position 0 stands for the adjoined identity: 1·a = a.
        std::vector<Index> label(n, kNone);
        std::vector<Index> sig(n + 1);
        Index              next = 0;
        for (std::size_t x = 0; x <= n; ++x) {
          Index const v = x == 0 ? a : S.product(static_cast<Index>(x - 1), a);
          if (label[v] == kNone) {
            label[v] = next++;
          }
          sig[x] = label[v];
        }
        out[a] = std::move(sig);
      }
      return out;
    }

    std::vector<char> r_star_matrix(FiniteSemigroup const& S) {
      auto const        sig = right_translation_kernels(S);
      std::size_t const n   = S.size();
      std::vector<char> out(n * n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          out[a * n + b] = sig[a] == sig[b];
        }
      }
      return out;
    }

  }  // namespace serial

  bool associative(std::size_t n, std::span<Index const> table, Exec exec) {
    return exec == Exec::serial ? serial::associative(n, table)
                                : omp::associative(n, table);
  }

  std::vector<Index> fill_table(std::size_t                             n,
                                std::function<Index(Index, Index)> const& f,
                                Exec                                    exec) {
    return exec == Exec::serial ? serial::fill_table(n, f) : omp::fill_table(n, f);
  }

  std::vector<std::vector<Index>> right_translation_kernels(FiniteSemigroup const& S,
                                                            Exec exec) {
    return exec == Exec::serial ? serial::right_translation_kernels(S)
                                : omp::right_translation_kernels(S);
  }

  std::vector<char> r_star_matrix(FiniteSemigroup const& S, Exec exec) {
    return exec == Exec::serial ? serial::r_star_matrix(S) : omp::r_star_matrix(S);
  }

}  // namespace liq::kernels
