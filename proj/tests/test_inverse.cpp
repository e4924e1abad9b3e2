#include <doctest.h>

#include "liq/catalog.hpp"
#include "liq/closure.hpp"
#include "liq/enumerate.hpp"
#include "liq/inverse.hpp"
#include "liq/isomorphism.hpp"
#include "oracles.hpp"

using namespace liq;

TEST_CASE("recognising inverse semigroups") {
  auto const Y = recognize_inverse(chain_semilattice(3));
  REQUIRE(Y.view);
  CHECK(Y.view->inv == std::vector<Index>{0, 1, 2});

  auto const lz = recognize_inverse(left_zero_semigroup(2));
  CHECK_FALSE(lz.view);
  CHECK(lz.verdict.clause == "E(S) semilattice");

  auto const nz = recognize_inverse(null_semigroup(2));
  CHECK_FALSE(nz.view);
  CHECK(nz.verdict.clause == "regular");
  CHECK(nz.verdict.witness == std::vector<Index>{1});

  CHECK_THROWS_AS(InverseSemigroupView::of(left_zero_semigroup(3)), StructureError);
}

TEST_CASE("inverses in a Brandt semigroup transpose coordinates") {
  auto const B = brandt(cyclic_group(3), 2);
  auto const Q = InverseSemigroupView::of(B.semigroup);
  CHECK(Q.inverse(0) == 0);
  for (Index x = 1; x < B.semigroup.size(); ++x) {
    auto const [i, g, j] = B.coordinates(x);
    CHECK(Q.inverse(x) == B.index_of(j, (3 - g) % 3, i));
  }
}

TEST_CASE("recognition agrees with the oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& S : enumerate_semigroups({n})) {
      auto const t = oracle::table_of(S);
      auto const r = recognize_inverse(S);
      REQUIRE(r.view.has_value() == oracle::inverse(t));
      if (r.view) {
        for (Index a = 0; a < n; ++a) {
          REQUIRE(static_cast<int>(r.view->inv[a]) == oracle::inverse_of(t, a));
        }
      }
    }
  }
}

TEST_CASE("Brandt semigroups") {
  CHECK(brandt(cyclic_group(2), 2).semigroup.size() == 9);
  CHECK(brandt(cyclic_group(2), 1).semigroup.size() == 3);
  for (int g = 1; g <= 3; ++g) {
    for (int k = 1; k <= 3; ++k) {
      auto const B = brandt(cyclic_group(g), k);
      CHECK(oracle::table_of(B.semigroup) == oracle::brandt_cyclic(g, k));
      CHECK(is_inverse(B.semigroup));
    }
  }
  std::vector<PartialBijection> gens{PartialBijection::from_entries(2, {{0, 1}})};
  CHECK(are_isomorphic(brandt(trivial_semigroup(), 2).semigroup, closure(gens, true).table()));

  CHECK_THROWS_AS(brandt(chain_semilattice(2), 2), InputError);
  CHECK_THROWS_AS(brandt(cyclic_group(2), 0), InputError);

  auto const B = brandt(cyclic_group(2), 3);
  CHECK(B.dictionary().find("(2,1,2) -> 18") != std::string::npos);
}

TEST_CASE("idempotents act as left identities on nonzero products in Brandt semigroups") {
  auto const B = brandt(cyclic_group(2), 3).semigroup;
  for (Index e : B.idempotents()) {
    for (Index a = 0; a < B.size(); ++a) {
      Index const ea = B.product(e, a);
      if (ea != 0) {
        CHECK(ea == a);
      }
    }
  }
}

TEST_CASE("the least group congruence") {
  auto const G = sigma(cyclic_group(4));
  CHECK(G.relation.is_identity());
  CHECK(G.quotient.size() == 4);

  auto const Y = sigma(chain_semilattice(3));
  CHECK(Y.relation.is_universal());
  CHECK(Y.quotient.size() == 1);

  CHECK_THROWS_AS(sigma(left_zero_semigroup(2)), PreconditionError);

  // definitional cross-check on every left ample semigroup of order ≤ 3
  for (auto const& S : enumerate_up_to(3, kLeftAmple, false)) {
    auto const rel = sigma_relation(S);
    auto const E   = S.idempotents();
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        bool related = false;
        for (Index e : E) {
          related = related || S.product(e, a) == S.product(e, b);
        }
        REQUIRE(rel(a, b) == related);
      }
    }
    auto const q = sigma(S);
    REQUIRE(is_right_cancellative(q.quotient));
  }
}

TEST_CASE("proper and E-unitary") {
  CHECK(is_proper(cyclic_group(3)));
  CHECK(is_proper(chain_semilattice(3)));
  CHECK_THROWS_AS(is_proper(null_semigroup(2)), PreconditionError);
  CHECK(is_e_unitary(InverseSemigroupView::of(cyclic_group(3))));
  CHECK(is_e_unitary(InverseSemigroupView::of(chain_semilattice(3))));
  CHECK_FALSE(is_e_unitary(InverseSemigroupView::of(brandt(cyclic_group(2), 2).semigroup)));
  CHECK(bicyclic_e_unitary(20).holds);
  // injective connecting maps
  CHECK(is_e_unitary(InverseSemigroupView::of(clifford_order_4())));
}
