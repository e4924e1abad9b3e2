#ifndef LIQ_IORDER_HPP_
#define LIQ_IORDER_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liq/hull.hpp"
#include "liq/inverse.hpp"
#include "liq/symbolic.hpp"

namespace liq {

  // A multiplicatively closed subset S of an inverse semigroup Q. Green's
  // relations on S are always those of Q restricted to S.
  struct SubsetEmbedding {
    InverseSemigroupView ambient;
    std::vector<Index>   members;  // sorted ambient indices
    Subset               mask;

    // Throws InputError on out-of-range or non-closed member sets.
    static SubsetEmbedding make(InverseSemigroupView ambient, std::vector<Index> members);

    bool contains(Index q) const noexcept {
      return mask[q];
    }

    // S as a semigroup in its own right, members renumbered in order.
    FiniteSemigroup subsemigroup() const;

    // a R b and a L b in Q, via aa⁻¹ and a⁻¹a.
    bool r_related(Index a, Index b) const noexcept {
      return ambient.product(a, ambient.inverse(a)) == ambient.product(b, ambient.inverse(b));
    }

    bool l_related(Index a, Index b) const noexcept {
      return ambient.product(ambient.inverse(a), a) == ambient.product(ambient.inverse(b), b);
    }
  };

  // (Sθ, Σ(S)).
  SubsetEmbedding hull_embedding(HullResult const& H);

  // Least (a, b) over members with q = a⁻¹b.
  std::optional<std::pair<Index, Index>> quotient_witness(SubsetEmbedding const& E, Index q);

  // Least (a, b) over members with q = a⁻¹b and a R b in Q.
  std::optional<std::pair<Index, Index>> straight_witness(SubsetEmbedding const& E, Index q);

  // Every element of Q is a quotient; the witness is the first that is not.
  Verdict is_left_i_order(SubsetEmbedding const& E);

  // Every element of Q is a quotient a⁻¹b with a R b. Throws
  // PreconditionError unless E is a left I-order. When S is left ample and
  // closed under a ↦ aa⁻¹ with aa⁻¹ = a⁺, a false verdict contradicts
  // the straightness theorem and throws ConsistencyError.
  Verdict is_straight(SubsetEmbedding const& E);

  // x R y and bc⁻¹ = x⁻¹y imply xb = yc (true when the premise fails).
  bool lemma_2_6_check(InverseSemigroupView const& Q, Index b, Index c, Index x, Index y);

  // lemma_2_6_check over all quadruples of Q.
  Verdict lemma_2_6_sweep(InverseSemigroupView const& Q);

  // Least (x, y) over members with xa = yc, xb = yd, a R x⁻¹, x R y and
  // y L c⁻¹. Throws PreconditionError unless a R b, c R d and all four are
  // members.
  std::optional<std::pair<Index, Index>> lemma_2_7_witness(SubsetEmbedding const& E,
                                                           Index a,
                                                           Index b,
                                                           Index c,
                                                           Index d);

  // Over all member tuples with a R b and c R d: a witness exists iff
  // a⁻¹b = c⁻¹d. Throws PreconditionError unless E is straight. `checked`
  // receives the number of tuples examined.
  Verdict quotient_equality_sweep(SubsetEmbedding const& E, std::size_t* checked = nullptr);

  // T = {(a, b, c) : ab⁻¹Q ⊆ c⁻¹Q} over member triples.
  class TernaryRelation {
   public:
    TernaryRelation(std::size_t ambient_size) : _n(ambient_size), _in(_n * _n * _n, 0) {}

    bool contains(Index a, Index b, Index c) const noexcept {
      return _in[(static_cast<std::size_t>(a) * _n + b) * _n + c] != 0;
    }

    void insert(Index a, Index b, Index c) {
      _in[(static_cast<std::size_t>(a) * _n + b) * _n + c] = 1;
      _triples.push_back({a, b, c});
    }

    std::vector<std::array<Index, 3>> const& triples() const noexcept {
      return _triples;
    }

   private:
    std::size_t                       _n;
    std::vector<char>                 _in;
    std::vector<std::array<Index, 3>> _triples;
  };

  TernaryRelation t_relation(SubsetEmbedding const& E);

  // Membership in xQ¹ for every x, as masks.
  std::vector<Subset> principal_right_ideals(FiniteSemigroup const& Q);

  // One clause of a suite: both sides of a biconditional (or the claim and
  // `true` for a plain assertion), and where they first disagree.
  struct ClauseResult {
    std::string        clause;
    bool               agree = true;
    std::vector<Index> witness;
  };

  struct SuiteReport {
    std::vector<ClauseResult> clauses;

    bool all_agree() const noexcept;

    // Throws ConsistencyError naming the first disagreeing clause.
    void require_agreement(std::string const& suite) const;
  };

  // The seven equivalent conditions, clauses (i) to (vii), each computed on both sides. Throws
  // PreconditionError naming the failed hypothesis: S left ample, S a left
  // I-order in Q, S a union of R-classes of Q.
  SuiteReport lemma_3_6_suite(SubsetEmbedding const& E);

  struct EUnitaryConditions {
    bool e_unitary               = false;
    bool proper_and_embeds       = false;
    bool proper_and_cancellative = false;

    bool agree() const noexcept {
      return e_unitary == proper_and_embeds && proper_and_embeds == proper_and_cancellative;
    }
  };

  // The three conditions, computed independently (same hypotheses as the
  // lemma_3_6_suite).
  EUnitaryConditions theorem_3_9_check(SubsetEmbedding const& E);

  // A right identity of S must be a two-sided identity of Q.
  Verdict right_identity_check(SubsetEmbedding const& E);

  // A straight S meets every L-class of Q.
  Verdict meets_every_l_class(SubsetEmbedding const& E);

  // Left order in the classical sense: every q is a⁻¹b with a in a
  // subgroup of Q (so that a⁻¹ is the group inverse a♯).
  bool is_classical_left_order(SubsetEmbedding const& E);

  // S = {(0, n)} inside the bicyclic monoid, on pairs with coordinates ≤ window.
  struct BicyclicIOrder {
    bool is_i_order = false;
    bool straight   = false;
    bool classical  = false;
    // (a, b) and its least factorisation ((0, x), (0, y)), stored as x, y.
    std::vector<std::pair<BicyclicPair, std::pair<std::uint64_t, std::uint64_t>>> witnesses;
  };

  BicyclicIOrder bicyclic_i_order(std::uint64_t window);

  // Clauses (ii) and (vi) of lemma_3_6_suite on the bicyclic example, over the window.
  SuiteReport bicyclic_straightness_suite(std::uint64_t window);

  // lemma_2_7_witness for S = {(0, n)} in the bicyclic monoid with x, y
  // searched over n ≤ window.
  std::optional<std::pair<BicyclicPair, BicyclicPair>> bicyclic_lemma_2_7_witness(
      BicyclicPair  a,
      BicyclicPair  b,
      BicyclicPair  c,
      BicyclicPair  d,
      std::uint64_t window);

}  // namespace liq

#endif  // LIQ_IORDER_HPP_
