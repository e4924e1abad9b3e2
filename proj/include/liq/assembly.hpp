#ifndef LIQ_ASSEMBLY_HPP_
#define LIQ_ASSEMBLY_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liq/finite_semigroup.hpp"
#include "liq/hull.hpp"
#include "liq/iorder.hpp"
#include "liq/morphism.hpp"

namespace liq {

  // α ≥ β in the semilattice Y, that is αβ = β.
  inline bool above(FiniteSemigroup const& Y, Index alpha, Index beta) noexcept {
    return Y.product(alpha, beta) == beta;
  }

  // Y with one component per vertex and a connecting morphism
  // φ_{α,β}: S_α → S_β for every α > β. φ_{α,α} is the identity and may be
  // omitted.
  struct SemilatticeDiagram {
    FiniteSemigroup                              Y;
    std::vector<FiniteSemigroup>                 components;
    std::map<std::pair<Index, Index>, ElementMap> connectors;

    // φ_{α,β}; throws InputError when α is not above β or the map is absent.
    ElementMap connector(Index alpha, Index beta) const;

    // Y a semilattice, one component per vertex, every connector present
    // and a morphism, φ_{α,α} the identity and φ_{α,β}φ_{β,γ} = φ_{α,γ}.
    Verdict validate() const;
  };

  // S(Y; S_α; φ_{α,β}) with vertices in index order and components
  // contiguous.
  struct StrongSemilattice {
    FiniteSemigroup    semigroup;
    std::vector<Index> vertex_of;  // element → vertex
    std::vector<Index> local;      // element → index in its component
    std::vector<Index> offset;     // vertex → first element

    Index element(Index vertex, Index a) const noexcept {
      return offset[vertex] + a;
    }
  };

  // Builds the product a_αb_β = (a_αφ_{α,αβ})(b_βφ_{β,αβ}). Throws InputError
  // naming the failing axiom, and ConsistencyError if the result is not
  // associative.
  StrongSemilattice build_strong_semilattice(SemilatticeDiagram const& D);

  struct DiagramExtraction {
    SemilatticeDiagram diagram;
    std::vector<Index> carrier;  // P element → element of the rebuilt semigroup
  };

  // P with `block[x]` naming the part containing x. Each part must be a
  // monoid M_α, products of parts must land in a single part, and the
  // identities must form a subsemigroup (PreconditionError otherwise).
  // Returns the diagram with φ_{α,β}(a) = ae_β, where vertex α is the part
  // labelled α. The identities must be central and the rebuilt semigroup
  // must reproduce P; either failing throws ConsistencyError.
  DiagramExtraction lemma_4_1_extract(FiniteSemigroup const& P, std::vector<Index> const& block);

  // Every labelling of P's elements meeting the hypotheses of
  // lemma_4_1_extract, labels numbered by first occurrence.
  std::vector<std::vector<Index>> monoid_decompositions(FiniteSemigroup const& P);

  // Clauses for a strong semilattice, each side computed on its own: (a) S is
  // left ample; (b) R* on S is the union of the component R*; (c) when all
  // components have (LC), S has (LC) iff every connector is
  // (LC)-preserving. Throws PreconditionError unless the components are
  // left ample and the connectors (2,1)-morphisms.
  SuiteReport prop_4_2_check(SemilatticeDiagram const& D);

  struct HullAssembly {
    StrongSemilattice       S;
    std::vector<HullResult> hulls;      // Σ(S_α)
    SemilatticeDiagram      q_diagram;  // hulls with lifted connectors
    StrongSemilattice       Q;
    HullResult              sigma;      // Σ(S)
    ElementMap              iso;        // Q → Σ(S), extending θ_S
  };

  // Lifts every connector to the hulls, assembles Q, checks that S is a
  // straight left I-order in Q, and builds the isomorphism Q → Σ(S) over S.
  // Throws PreconditionError unless the components are left ample with
  // (LC), the connectors are (LC)-preserving (2,1)-morphisms and S has
  // (LC); a failure after that throws ConsistencyError naming the stage.
  HullAssembly theorem_4_3_assemble(SemilatticeDiagram const& D);

  // Every diagram over Y with the given components whose connectors are of
  // the given kind and satisfy the composition law.
  std::vector<SemilatticeDiagram> all_diagrams(FiniteSemigroup const&              Y,
                                               std::vector<FiniteSemigroup> const& components,
                                               MorphismKind                        kind);

  // Diagram file, paths relative to the file:
  //
  //   semilattice y.sgp
  //   component 0 s0.sgp
  //   component 1 s1.sgp
  //   connector 1 0 phi10.map
  SemilatticeDiagram read_diagram(std::string const& path);

}  // namespace liq

#endif  // LIQ_ASSEMBLY_HPP_
