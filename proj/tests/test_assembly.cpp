#include <doctest.h>

#include <algorithm>

#include "liq/assembly.hpp"
#include "liq/catalog.hpp"
#include "liq/enumerate.hpp"
#include "liq/isomorphism.hpp"
#include "liq/lifting.hpp"
#include "oracles.hpp"

using namespace liq;

namespace {

  SemilatticeDiagram tower(FiniteSemigroup lower, FiniteSemigroup upper, ElementMap phi) {
    SemilatticeDiagram D;
    D.Y                  = chain_semilattice(2);
    D.components         = {std::move(lower), std::move(upper)};
    D.connectors[{1, 0}] = std::move(phi);
    return D;
  }

  std::string data(std::string const& name) {
    return std::string(LIQ_TEST_DATA) + "/" + name;
  }

}  // namespace

TEST_CASE("building strong semilattices") {
  SemilatticeDiagram single;
  single.Y          = trivial_semigroup();
  single.components = {cyclic_group(3)};
  CHECK(build_strong_semilattice(single).semigroup == cyclic_group(3));

  auto const Y = build_strong_semilattice(tower(trivial_semigroup(), trivial_semigroup(), {0}));
  CHECK(Y.semigroup == chain_semilattice(2));

  auto const C = build_strong_semilattice(tower(cyclic_group(2), cyclic_group(2), {0, 1}));
  CHECK(C.semigroup.size() == 4);
  CHECK(is_inverse(C.semigroup));
  CHECK(C.semigroup == clifford_order_4());
  CHECK(C.vertex_of == std::vector<Index>{0, 0, 1, 1});
  CHECK(C.element(1, 1) == 3);
}

TEST_CASE("the product rule matches a direct computation") {
  auto const D = tower(cyclic_group(2), cyclic_group(4), {0, 1, 0, 1});
  auto const S = build_strong_semilattice(D);
  for (Index x = 0; x < S.semigroup.size(); ++x) {
    for (Index y = 0; y < S.semigroup.size(); ++y) {
      Index const alpha = S.vertex_of[x], beta = S.vertex_of[y];
      Index const meet  = D.Y.product(alpha, beta);
      auto const  carry = [&](Index v, Index a) {
        return v == meet ? a : D.connector(v, meet)[a];
      };
      Index const a = carry(alpha, S.local[x]);
      Index const b = carry(beta, S.local[y]);
      REQUIRE(S.semigroup.product(x, y) == S.element(meet, D.components[meet].product(a, b)));
    }
  }
}

TEST_CASE("diagram axioms") {
  auto bad = tower(cyclic_group(2), cyclic_group(2), {1, 0});
  CHECK_FALSE(bad.validate().holds);
  CHECK_THROWS_AS(build_strong_semilattice(bad), InputError);

  auto missing = tower(cyclic_group(2), cyclic_group(2), {0, 1});
  missing.connectors.clear();
  CHECK_FALSE(missing.validate().holds);
  CHECK_THROWS_AS(missing.connector(0, 1), InputError);

  // φ_{2,1}φ_{1,0} must equal φ_{2,0}
  SemilatticeDiagram chain3;
  chain3.Y                  = chain_semilattice(3);
  chain3.components         = {cyclic_group(2), cyclic_group(2), cyclic_group(2)};
  chain3.connectors[{1, 0}] = {0, 1};
  chain3.connectors[{2, 1}] = {0, 1};
  chain3.connectors[{2, 0}] = {0, 0};
  CHECK_FALSE(chain3.validate().holds);
  chain3.connectors[{2, 0}] = {0, 1};
  CHECK(chain3.validate().holds);
}

TEST_CASE("extracting the diagram of a semilattice of monoids") {
  auto const P = clifford_order_4();
  auto const L = lemma_4_1_extract(P, {0, 0, 1, 1});
  CHECK(L.diagram.connector(1, 0) == ElementMap{0, 1});
  CHECK(build_strong_semilattice(L.diagram).semigroup.size() == 4);

  auto const Y = chain_semilattice(3);
  auto const LY = lemma_4_1_extract(Y, {0, 1, 2});
  for (auto const& [edge, map] : LY.diagram.connectors) {
    CHECK(map == ElementMap{0});
  }

  // not a union of monoids
  CHECK_THROWS_AS(lemma_4_1_extract(null_semigroup(2), {0, 1}), PreconditionError);
  // singleton parts of a left zero semigroup multiply without commuting
  CHECK_THROWS_AS(lemma_4_1_extract(left_zero_semigroup(2), {0, 1}), PreconditionError);
}

TEST_CASE("diagram extraction round trips over small semigroups") {
  std::size_t decompositions = 0;
  for (auto const& P : enumerate_up_to(3, kNoFilter, true)) {
    for (auto const& block : monoid_decompositions(P)) {
      auto const L = lemma_4_1_extract(P, block);
      auto const S = build_strong_semilattice(L.diagram);
      for (Index x = 0; x < P.size(); ++x) {
        for (Index y = 0; y < P.size(); ++y) {
          REQUIRE(L.carrier[P.product(x, y)] == S.semigroup.product(L.carrier[x], L.carrier[y]));
        }
      }
      ++decompositions;
    }
  }
  CHECK(decompositions > 10);
}

TEST_CASE("strong semilattice clauses") {
  auto const clifford = prop_4_2_check(tower(cyclic_group(2), cyclic_group(2), {0, 1}));
  CHECK(clifford.all_agree());
  CHECK(clifford.clauses.size() == 3);

  auto const fold = read_diagram(data("fold.diagram"));
  REQUIRE(fold.validate().holds);
  auto const report = prop_4_2_check(fold);
  CHECK(report.all_agree());
  auto const S = build_strong_semilattice(fold);
  CHECK_FALSE(has_lc(S.semigroup).holds);
  CHECK_FALSE(is_lc_preserving(fold.components[1], fold.components[0], fold.connector(1, 0)).holds);

  SemilatticeDiagram single;
  single.Y          = trivial_semigroup();
  single.components = {chain_semilattice(3)};
  CHECK(prop_4_2_check(single).all_agree());

  CHECK_THROWS_AS(prop_4_2_check(tower(left_zero_semigroup(2), left_zero_semigroup(2), {0, 1})),
                  PreconditionError);
}

TEST_CASE("R* on a strong semilattice stays inside components") {
  for (auto const& D : all_diagrams(chain_semilattice(2), {chain_semilattice(2), cyclic_group(2)},
                                    MorphismKind::plus_preserving)) {
    auto const S  = build_strong_semilattice(D);
    auto const t  = oracle::table_of(S.semigroup);
    for (Index x = 0; x < S.semigroup.size(); ++x) {
      for (Index y = 0; y < S.semigroup.size(); ++y) {
        bool const same = S.vertex_of[x] == S.vertex_of[y];
        bool const comp = same
                       && oracle::r_star(oracle::table_of(D.components[S.vertex_of[x]]), S.local[x],
                                         S.local[y]);
        REQUIRE(oracle::r_star(t, x, y) == comp);
      }
    }
  }
}

TEST_CASE("assembling hulls") {
  SemilatticeDiagram single;
  single.Y          = trivial_semigroup();
  single.components = {chain_semilattice(2)};
  auto const one    = theorem_4_3_assemble(single);
  CHECK(one.Q.semigroup.size() == one.sigma.hull.size());

  auto const clifford = theorem_4_3_assemble(tower(cyclic_group(2), cyclic_group(2), {0, 1}));
  CHECK(are_isomorphic(clifford.Q.semigroup, clifford_order_4()));
  CHECK(is_isomorphism(clifford.Q.semigroup, clifford.sigma.hull.semigroup, clifford.iso));

  CHECK_THROWS_AS(theorem_4_3_assemble(read_diagram(data("fold.diagram"))), PreconditionError);

  std::size_t assembled = 0;
  auto const  parts     = enumerate_up_to(3, kLeftAmple | kLC, true);
  for (auto const& lower : parts) {
    for (auto const& upper : parts) {
      for (auto const& D : all_diagrams(chain_semilattice(2), {lower, upper},
                                        MorphismKind::plus_preserving)) {
        auto const T = theorem_4_3_assemble(D);
        REQUIRE(is_isomorphism(T.Q.semigroup, T.sigma.hull.semigroup, T.iso));
        for (Index a = 0; a < T.S.semigroup.size(); ++a) {
          // the isomorphism extends θ_S; S sits in Q at the same indices as
          // the components sit in their hulls
          Index const v   = T.S.vertex_of[a];
          Index const inQ = T.Q.element(v, T.hulls[v].embedding[T.S.local[a]]);
          REQUIRE(T.iso[inQ] == T.sigma.embedding[a]);
        }
        ++assembled;
      }
    }
  }
  CHECK(assembled > 20);
}

TEST_CASE("group towers give semigroups of left I-quotients") {
  // finite right cancellative monoids are groups
  auto const T = theorem_4_3_assemble(tower(cyclic_group(2), cyclic_group(4), {0, 1, 0, 1}));
  std::vector<Index> members;
  for (Index a = 0; a < T.S.semigroup.size(); ++a) {
    Index const v = T.S.vertex_of[a];
    members.push_back(T.Q.element(v, T.hulls[v].embedding[T.S.local[a]]));
  }
  std::sort(members.begin(), members.end());
  auto const E = SubsetEmbedding::make(InverseSemigroupView::of(T.Q.semigroup), members);
  CHECK(is_left_i_order(E).holds);
  CHECK(is_straight(E).holds);
}

TEST_CASE("diagram files") {
  auto const D = read_diagram(data("clifford4.diagram"));
  CHECK(D.validate().holds);
  CHECK(build_strong_semilattice(D).semigroup == clifford_order_4());
  CHECK_THROWS_AS(read_diagram(data("missing.diagram")), InputError);
}
