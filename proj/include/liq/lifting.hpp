#ifndef LIQ_LIFTING_HPP_
#define LIQ_LIFTING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "liq/hull.hpp"
#include "liq/inverse.hpp"
#include "liq/iorder.hpp"
#include "liq/morphism.hpp"

namespace liq {

  // Maps between embedded subsemigroups are given over member positions:
  // phi[i] = j sends E.members[i] to F.members[j].

  struct LiftRefusal {
    std::string        condition;  // "(i)" for R, "(ii)" for T
    std::vector<Index> witness;    // ambient indices in Q
  };

  struct LiftOutcome {
    std::optional<ElementMap>  lifted;  // Q → P on ambient indices
    std::optional<LiftRefusal> refusal;
    bool                       onto_checked = false;  // Sφ is a left I-order in P

    explicit operator bool() const noexcept {
      return lifted.has_value();
    }
  };

  // Extends phi to Q via (a⁻¹b) ↦ (aφ)⁻¹(bφ) over straight factorisations,
  // or refuses with the first violated condition. The construction is
  // checked against every straight factorisation of every q, then for
  // restriction to S, multiplicativity and (when Sφ is a left I-order in P)
  // surjectivity; any failure there throws ConsistencyError. Throws
  // PreconditionError unless E is straight and phi is a morphism into F.
  LiftOutcome lift_morphism(SubsetEmbedding const& E,
                            SubsetEmbedding const& F,
                            ElementMap const&      phi);

  struct IsoOverS {
    std::optional<ElementMap>  iso;        // Q → P
    std::string                direction;  // "forward" or "backward" on refusal
    std::optional<LiftRefusal> refusal;

    explicit operator bool() const noexcept {
      return iso.has_value();
    }
  };

  // Lifts phi and its inverse; the two lifts must be mutually inverse.
  // Throws PreconditionError unless phi is a bijection onto F.members and
  // both embeddings are straight left I-orders.
  IsoOverS iso_over_s(SubsetEmbedding const& E, SubsetEmbedding const& F, ElementMap const& phi);

  // phi: S → T with Sb ∩ Sc = Sw implying T(bφ) ∩ T(cφ) = T(wφ); the
  // witness is (b, c, w). Cross-checked against lifting between the hulls,
  // which must succeed exactly when the verdict holds (ConsistencyError
  // otherwise). Throws PreconditionError unless S and T are left ample with
  // (LC) and phi is a (2,1)-morphism.
  Verdict is_lc_preserving(FiniteSemigroup const& S,
                           FiniteSemigroup const& T,
                           ElementMap const&      phi);

  // Lift of a (2,1)-morphism S → T to Σ(S) → Σ(T) through θ_S and θ_T.
  // The outcome's map is over hull indices.
  LiftOutcome lift_through_hulls(HullResult const& HS, HullResult const& HT, ElementMap const& phi);

  // phi over elements of S re-expressed over member positions of the hull
  // embeddings: ρ_a ↦ ρ_{aφ}.
  ElementMap hull_member_map(HullResult const& HS, HullResult const& HT, ElementMap const& phi);

  // Every nonempty multiplicatively closed subset of Q that is a left
  // I-order, by full subset search. Throws InputError when |Q| > 20.
  std::vector<std::vector<Index>> left_i_orders(InverseSemigroupView const& Q);

  // S_i = {(i, g, j)} ∪ {0} in B⁰(G, I).
  std::vector<Index> brandt_row_order(Brandt const& B, Index i);

  // Every isomorphism between two finite semigroups, by backtracking.
  std::vector<ElementMap> all_isomorphisms(FiniteSemigroup const& S, FiniteSemigroup const& T);

}  // namespace liq

#endif  // LIQ_LIFTING_HPP_
