#ifndef LIQ_INVERSE_HPP_
#define LIQ_INVERSE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liq/finite_semigroup.hpp"
#include "liq/relations.hpp"

namespace liq {

  // A finite inverse semigroup together with its inverse map.
  struct InverseSemigroupView {
    FiniteSemigroup    semigroup;
    std::vector<Index> inv;

    std::size_t size() const noexcept {
      return semigroup.size();
    }

    Index product(Index a, Index b) const noexcept {
      return semigroup.product(a, b);
    }

    Index inverse(Index a) const noexcept {
      return inv[a];
    }

    // a⁻¹b.
    Index quotient(Index a, Index b) const noexcept {
      return product(inv[a], b);
    }

    // Throws StructureError when S is not inverse.
    static InverseSemigroupView of(FiniteSemigroup const& S);
  };

  struct InverseRecognition {
    std::optional<InverseSemigroupView> view;
    // On failure: clause "regular" with a non-regular element, or
    // "E(S) semilattice" with two idempotents that do not commute.
    Verdict verdict;
  };

  InverseRecognition recognize_inverse(FiniteSemigroup const& S);

  inline bool is_inverse(FiniteSemigroup const& S) {
    return recognize_inverse(S).view.has_value();
  }

  // B⁰(G, I) with I = {0, ..., index_size - 1}.
  struct Brandt {
    FiniteSemigroup semigroup;
    std::size_t     group_order = 0;
    std::size_t     index_size  = 0;

    // Element 0 is the zero; (i, g, j) sits at 1 + (i·|G| + g)·|I| + j.
    Index index_of(Index i, Index g, Index j) const noexcept {
      return static_cast<Index>(1 + (i * group_order + g) * index_size + j);
    }

    // (i, g, j) of a nonzero element.
    std::array<Index, 3> coordinates(Index x) const;

    // One `(i,g,j) -> index` line per nonzero element.
    std::string dictionary() const;
  };

  // Throws InputError when `group` is not a group or index_size is 0.
  Brandt brandt(FiniteSemigroup const& group, std::size_t index_size);

  // a σ b iff ea = eb for some idempotent e; defined for any finite S.
  RelationTable sigma_relation(FiniteSemigroup const& S);

  struct SigmaQuotient {
    RelationTable      relation;
    std::vector<Index> class_of;  // element → quotient index
    FiniteSemigroup    quotient;
  };

  // σ on a left ample S and S/σ, classes numbered by least member. Throws
  // PreconditionError unless S is left ample, and ConsistencyError if σ is
  // not a congruence or S/σ is not right cancellative.
  SigmaQuotient sigma(FiniteSemigroup const& S);

  // R* ∩ σ is the identity. Throws PreconditionError unless S is left ample.
  bool is_proper(FiniteSemigroup const& S);

  // e, ea ∈ E(Q) implies a ∈ E(Q).
  bool is_e_unitary(InverseSemigroupView const& Q);

  // The E-unitary condition checked definitionally on bicyclic pairs with
  // coordinates ≤ window.
  Verdict bicyclic_e_unitary(std::uint64_t window);

}  // namespace liq

#endif  // LIQ_INVERSE_HPP_
