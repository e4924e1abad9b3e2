#ifndef LIQ_RELATIONS_HPP_
#define LIQ_RELATIONS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liq/finite_semigroup.hpp"

namespace liq {

  enum class RelationKind { R, L, H, D, J, Rstar, leqR, leqL, sigma, custom };

  std::string to_string(RelationKind kind);

  // A binary relation on the elements of a finite semigroup, stored as a
  // row-major boolean matrix.
  class RelationTable {
   public:
    RelationTable() = default;
    RelationTable(RelationKind kind, std::size_t n) : _kind(kind), _n(n), _pairs(n * n, 0) {}
    RelationTable(RelationKind kind, std::size_t n, std::vector<char> pairs);

    RelationKind kind() const noexcept {
      return _kind;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    bool operator()(Index a, Index b) const noexcept {
      return _pairs[static_cast<std::size_t>(a) * _n + b] != 0;
    }

    void set(Index a, Index b, bool value = true) {
      _pairs[static_cast<std::size_t>(a) * _n + b] = value;
    }

    std::vector<char> const& pairs() const noexcept {
      return _pairs;
    }

    // Same pairs, whatever the kinds.
    bool same_pairs(RelationTable const& that) const noexcept {
      return _n == that._n && _pairs == that._pairs;
    }

    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_transitive() const;
    bool is_equivalence() const;
    bool is_identity() const;
    bool is_universal() const;
    bool contains(RelationTable const& that) const;  // that ⊆ this

    RelationTable intersect(RelationTable const& that, RelationKind kind = RelationKind::custom) const;

    // For each element, the least member of its class; requires an
    // equivalence.
    std::vector<Index> class_representatives() const;

    // `kind` header, then one `i j` line per related pair in sorted order.
    std::string dump() const;

   private:
    RelationKind      _kind = RelationKind::custom;
    std::size_t       _n    = 0;
    std::vector<char> _pairs;
  };

  // ρ ∘ τ: a (ρ∘τ) b iff a ρ c τ b for some c.
  RelationTable compose(RelationTable const& rho,
                        RelationTable const& tau,
                        RelationKind         kind = RelationKind::custom);

  struct GreenRelations {
    RelationTable leqR, leqL, R, L, H, D, J;
  };

  // a ≤_R b iff aS¹ ⊆ bS¹, a ≤_L b iff S¹a ⊆ S¹b; R, L are the associated
  // equivalences, H = R ∩ L, D = R ∘ L and J from two-sided ideals.
  GreenRelations green(FiniteSemigroup const& S);

  // a R* b iff for all x, y in S¹: xa = ya ⇔ xb = yb.
  RelationTable r_star(FiniteSemigroup const& S);

  // The idempotent R*-related to a, if any. Throws StructureError when the
  // idempotents of S do not commute.
  std::optional<Index> plus_of(FiniteSemigroup const& S, Index a);

  // plus_of for every element, kNone where absent (same StructureError).
  std::vector<Index> plus_map(FiniteSemigroup const& S);

  // First pair of non-commuting idempotents, if any.
  std::optional<std::vector<Index>> noncommuting_idempotents(FiniteSemigroup const& S);

  // Left ample: E(S) a semilattice, every R*-class has an idempotent and
  // (AL) xy⁺ = (xy⁺)⁺x. On failure the clause is one of "E(S) semilattice",
  // "R*-class without idempotent", "(AL)".
  Verdict is_left_ample(FiniteSemigroup const& S);

  // Recomputes R* ∘ L and L ∘ R* independently and compares them.
  bool check_rstar_l_commute(FiniteSemigroup const& S);

}  // namespace liq

#endif  // LIQ_RELATIONS_HPP_
