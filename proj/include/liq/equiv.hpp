#ifndef LIQ_EQUIV_HPP_
#define LIQ_EQUIV_HPP_

#include <cstdint>
#include <vector>

#include "liq/hull.hpp"
#include "liq/inverse.hpp"
#include "liq/iorder.hpp"
#include "liq/morphism.hpp"

namespace liq {

  // A left ample semigroup with (LC) and R* ∘ L universal.
  struct LacObject {
    FiniteSemigroup S;

    // Throws PreconditionError naming the missing certificate.
    static LacObject certify(FiniteSemigroup S);
  };

  // Q bisimple inverse and S a subsemigroup that is a union of R-classes.
  // A finite bisimple inverse semigroup is a group, so every finite object
  // has S = Q.
  struct BisObject {
    SubsetEmbedding pair;

    // Throws PreconditionError naming the missing certificate. S having
    // (LC) is recomputed; its failure throws ConsistencyError.
    static BisObject certify(InverseSemigroupView Q, std::vector<Index> members);

    FiniteSemigroup S() const {
      return pair.subsemigroup();
    }
  };

  struct FImage {
    HullResult hull;    // Σ(S)
    BisObject  object;  // (Σ(S), Sθ_S)
  };

  // F on objects; the BIS certificates of the result are re-verified and
  // a failure throws ConsistencyError.
  FImage functor_F(LacObject const& S);

  // G on objects; the LAC certificates of S are re-verified and a failure
  // throws ConsistencyError.
  LacObject functor_G(BisObject const& B);

  // F on a morphism φ: S → T of LAC, over hull indices. Throws
  // PreconditionError unless φ is an (LC)-preserving (2,1)-morphism.
  ElementMap functor_F_map(LacObject const& S,
                           LacObject const& T,
                           FImage const&    FS,
                           FImage const&    FT,
                           ElementMap const& phi);

  // G on a morphism ψ: (Q, S) → (P, T) of BIS: the restriction to S over
  // member positions. Throws PreconditionError unless ψ is a morphism with
  // Sψ ⊆ T; the restriction failing to be (LC)-preserving throws
  // ConsistencyError.
  ElementMap functor_G_map(BisObject const& B, BisObject const& C, ElementMap const& psi);

  // θ_S: S → SFG over member positions of Sθ_S; must be an isomorphism
  // (ConsistencyError otherwise).
  ElementMap theta_iso(LacObject const& S, FImage const& FS);

  // μ_(Q,S): a⁻¹b ↦ ρ_a⁻¹ρ_b over all a R* b in S, checked for
  // well-definedness and to be an isomorphism Q → Σ(S) carrying S onto Sθ_S
  // (ConsistencyError otherwise).
  ElementMap mu(BisObject const& B, FImage const& GF);

  // θ_S(φFG) = (φ)θ_T element-wise; the witness is the first s.
  Verdict lac_naturality(LacObject const& S,
                         LacObject const& T,
                         ElementMap const& phi);

  // μ_(Q,S)(ψGF) = ψμ_(P,T) element-wise; the witness is the first q.
  Verdict bis_naturality(BisObject const& B, BisObject const& C, ElementMap const& psi);

  // FG(S) ≅ S via θ_S, with F(id) = id.
  Verdict lac_roundtrip(LacObject const& S);

  // GF(Q, S) ≅ (Q, S) via μ, with G(id) = id.
  Verdict bis_roundtrip(BisObject const& B);

  // When S is a right cancellative monoid, Σ(S) is a bisimple inverse
  // monoid and Sθ_S is the R-class of its identity.
  Verdict right_cancellative_check(LacObject const& S);

  // The (ℕ, +) and bicyclic objects over the window: LAC and BIS
  // certificates from the oracles, Σ(ℕ) ≅ B via partial shifts, G(B, S) ≅ ℕ
  // via (0, a)(0, b) = (0, a + b), and μ well defined and multiplicative.
  SuiteReport nat_bicyclic_roundtrip(std::uint64_t window);

}  // namespace liq

#endif  // LIQ_EQUIV_HPP_
