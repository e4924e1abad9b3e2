#include <omp.h>

#include "liq/finite_semigroup.hpp"
#include "liq/kernels.hpp"

namespace liq::kernels::omp {

  namespace {
    bool small(std::size_t cells) {
      return cells < min_parallel_cells();
    }
  }  // namespace

  bool associative(std::size_t n, std::span<Index const> t) {
    if (small(n * n)) {
      return serial::associative(n, t);
    }
    bool       ok = true;
    long const m  = static_cast<long>(n * n);
#pragma omp parallel for schedule(static) shared(ok)
    for (long ab_pair = 0; ab_pair < m; ++ab_pair) {
      bool stop;
#pragma omp atomic read
      stop = ok;
      if (!stop) {
        continue;
      }
      std::size_t const a  = static_cast<std::size_t>(ab_pair) / n;
      std::size_t const b  = static_cast<std::size_t>(ab_pair) % n;
      std::size_t const ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
#pragma omp atomic write
          ok = false;
          break;
        }
      }
    }
    return ok;
  }

  std::vector<Index> fill_table(std::size_t                             n,
                                std::function<Index(Index, Index)> const& f) {
    if (small(n * n)) {
      return serial::fill_table(n, f);
    }
    std::vector<Index> out(n * n);
    long const         rows = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
    for (long a = 0; a < rows; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        out[a * n + b] = f(static_cast<Index>(a), static_cast<Index>(b));
      }
    }
    return out;
  }

  std::vector<std::vector<Index>> right_translation_kernels(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    if (small(n * n)) {
      return serial::right_translation_kernels(S);
    }
    std::vector<std::vector<Index>> out(n);
    long const                      m = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long ia = 0; ia < m; ++ia) {
      Index const        a = static_cast<Index>(ia);
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
    std::size_t const n = S.size();
    if (small(n * n)) {
      return serial::r_star_matrix(S);
    }
    auto const        sig = right_translation_kernels(S);
    std::vector<char> out(n * n, 0);
    long const        m = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        out[a * n + b] = sig[a] == sig[b];
      }
    }
    return out;
  }

}  // namespace liq::kernels::omp
