#ifndef LIQ_HULL_HPP_
#define LIQ_HULL_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "liq/closure.hpp"
#include "liq/finite_semigroup.hpp"
#include "liq/inverse.hpp"
#include "liq/symbolic.hpp"

namespace liq {

  // ρ_a: domain Sa⁺, image Sa, x ↦ xa, on the ground set S. Throws
  // PreconditionError unless S is left ample.
  PartialBijection rho(FiniteSemigroup const& S, Index a);

  // A partial shift of ℕ: domain [from, ∞), x ↦ x - from + to. These are
  // the charts of the inverse hull of (ℕ, +); ρ_n is {0, n}.
  struct PartialShift {
    std::uint64_t from = 0;
    std::uint64_t to   = 0;

    std::optional<std::uint64_t> operator()(std::uint64_t x) const noexcept {
      if (x < from) {
        return std::nullopt;
      }
      return x - from + to;
    }

    auto operator<=>(PartialShift const&) const = default;
  };

  // Apply f, then g.
  PartialShift compose(PartialShift f, PartialShift g) noexcept;

  inline PartialShift invert(PartialShift f) noexcept {
    return {f.to, f.from};
  }

  inline PartialShift rho_nat(std::uint64_t n) noexcept {
    return {0, n};
  }

  // Pointwise audit on the window: compose agrees with applying the two
  // shifts in turn on [0, 3·window], the shifts multiply like the bicyclic
  // pairs (from, to), and every shift equals ρ_from⁻¹ρ_to.
  Verdict nat_hull_check(std::uint64_t window);

  // Least c with Sc = Sa ∩ Sb, if any.
  std::optional<Index> lc_witness(FiniteSemigroup const& S, Index a, Index b);

  // Condition (LC); on failure the witness is the first pair (a, b) whose
  // left ideals meet in a non-principal left ideal.
  Verdict has_lc(FiniteSemigroup const& S);

  // lc_witness for every pair, row-major, kNone where absent.
  std::vector<Index> lc_table(FiniteSemigroup const& S);

  struct HullResult {
    ChartSemigroup       charts;
    InverseSemigroupView hull;
    std::vector<Index>   embedding;  // a ↦ index of ρ_a in the hull
    bool                 is_i_order = false;
    Verdict              lc;
    std::vector<Index>   lc_witnesses;  // lc_table(S)

    // Hull elements hit by θ_S, sorted.
    std::vector<Index> image() const;
  };

  // Σ(S) as the closure with inverses of the charts ρ_a. is_i_order is
  // decided by checking that every element of the hull is some ρ_a⁻¹ρ_b,
  // and must agree with Condition (LC); disagreement, or θ_S failing to be
  // an injective (2,1)-morphism, throws ConsistencyError. Throws
  // PreconditionError unless S is left ample and ResourceError when the
  // hull outgrows the budget.
  HullResult inverse_hull(FiniteSemigroup const& S,
                          std::size_t            budget = kDefaultClosureBudget);

  // Sθ is a union of R-classes of the hull.
  bool image_is_union_of_r_classes(HullResult const& H);

  // Chart identities: (domain, image and action of ρ_a⁻¹ρ_b,
  // and their simplified form when a R* b), (ρ_a L ρ_b in the
  // hull iff a L b in S) and (ρ_bρ_c⁻¹ = ρ_u⁻¹ρ_v with u R* v
  // for the canonical u, v). Each returns the first failing tuple.
  Verdict quotient_chart_check(FiniteSemigroup const& S, HullResult const& H);
  Verdict l_reflection_check(FiniteSemigroup const& S, HullResult const& H);
  Verdict chart_swap_check(FiniteSemigroup const& S, HullResult const& H);

  struct BisimpleHullCheck {
    bool hull_bisimple          = false;
    bool lc_and_rstar_l_universal = false;
    bool iorder_and_rstar_l_universal = false;

    bool agree() const noexcept {
      return hull_bisimple == lc_and_rstar_l_universal
          && lc_and_rstar_l_universal == iorder_and_rstar_l_universal;
    }
  };

  // The three clauses computed independently; throws ConsistencyError when
  // they disagree.
  BisimpleHullCheck corollary_3_8_check(FiniteSemigroup const& S);

  // The same three clauses for (ℕ, +) with the hull realised as partial
  // shifts and the bicyclic oracles, over the window. Also checks that
  // ℕθ is exactly the R-class of the identity shift among the window's
  // shifts.
  BisimpleHullCheck nat_bisimple_check(std::uint64_t window);

}  // namespace liq

#endif  // LIQ_HULL_HPP_
