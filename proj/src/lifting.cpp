#include "liq/lifting.hpp"

#include <algorithm>

#include "liq/relations.hpp"

namespace liq {

  namespace {

    Index position_of(std::vector<Index> const& members, Index q) {
      auto it = std::lower_bound(members.begin(), members.end(), q);
      if (it == members.end() || *it != q) {
        return kNone;
      }
      return static_cast<Index>(it - members.begin());
    }

    bool subset_of(Subset const& a, Subset const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  LiftOutcome lift_morphism(SubsetEmbedding const& E,
                            SubsetEmbedding const& F,
                            ElementMap const&      phi) {
    if (phi.size() != E.members.size()) {
      throw InputError("the map has " + std::to_string(phi.size()) + " entries for "
                       + std::to_string(E.members.size()) + " members");
    }
    for (Index j : phi) {
      if (j >= F.members.size()) {
        throw InputError("the map leaves the target member set");
      }
    }
    if (!is_morphism(E.subsemigroup(), F.subsemigroup(), phi)) {
      throw PreconditionError("the map is not a morphism S -> T");
    }
    if (auto v = is_straight(E); !v) {
      throw PreconditionError("lifting needs a straight left I-order; no straight factorisation of "
                              + to_string(v.witness));
    }
    auto const& Q   = E.ambient;
    auto const& P   = F.ambient;
    auto const  img = [&](Index a) { return F.members[phi[position_of(E.members, a)]]; };

    LiftOutcome out;
    for (Index a : E.members) {
      for (Index b : E.members) {
        if (E.r_related(a, b) && !F.r_related(img(a), img(b))) {
          out.refusal = LiftRefusal{"(i)", {a, b}};
          return out;
        }
      }
    }
    auto const t_q      = t_relation(E);
    auto const p_ideals = principal_right_ideals(P.semigroup);
    for (auto const& [a, b, c] : t_q.triples()) {
      Index const x = P.product(img(a), P.inverse(img(b)));
      if (!subset_of(p_ideals[x], p_ideals[P.inverse(img(c))])) {
        out.refusal = LiftRefusal{"(ii)", {a, b, c}};
        return out;
      }
    }

    ElementMap lifted(Q.size(), kNone);
    for (Index a : E.members) {
      for (Index b : E.members) {
        if (!E.r_related(a, b)) {
          continue;
        }
        Index const q     = Q.quotient(a, b);
        Index const value = P.quotient(img(a), img(b));
        if (lifted[q] == kNone) {
          lifted[q] = value;
        } else if (lifted[q] != value) {
          throw ConsistencyError("the lift is not well defined at " + std::to_string(q) + " via "
                                 + to_string(std::vector<Index>{a, b}));
        }
      }
    }
    for (Index s : E.members) {
      if (lifted[s] != img(s)) {
        throw ConsistencyError("the lift does not restrict to the map at " + std::to_string(s));
      }
    }
    if (auto bad = morphism_violation(Q.semigroup, P.semigroup, lifted)) {
      throw ConsistencyError("the lift is not multiplicative at " + to_string(*bad));
    }
    std::vector<Index> image;
    for (Index j : phi) {
      image.push_back(F.members[j]);
    }
    auto const image_order = SubsetEmbedding::make(P, image);
    if (is_left_i_order(image_order)) {
      out.onto_checked = true;
      Subset hit(P.size(), false);
      for (Index v : lifted) {
        hit[v] = true;
      }
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
        throw ConsistencyError("the lift is not onto although the image is a left I-order");
      }
    }
    out.lifted = std::move(lifted);
    return out;
  }

  IsoOverS iso_over_s(SubsetEmbedding const& E, SubsetEmbedding const& F, ElementMap const& phi) {
    if (phi.size() != E.members.size() || phi.size() != F.members.size()) {
      throw PreconditionError("the map is not a bijection between the member sets");
    }
    Subset seen(F.members.size(), false);
    for (Index j : phi) {
      if (j >= seen.size() || seen[j]) {
        throw PreconditionError("the map is not a bijection between the member sets");
      }
      seen[j] = true;
    }
    IsoOverS   out;
    auto const forward = lift_morphism(E, F, phi);
    if (!forward) {
      out.direction = "forward";
      out.refusal   = forward.refusal;
      return out;
    }
    auto const backward = lift_morphism(F, E, inverse_map(phi));
    if (!backward) {
      out.direction = "backward";
      out.refusal   = backward.refusal;
      return out;
    }
    if (then(*forward.lifted, *backward.lifted) != identity_map(E.ambient.size())
        || then(*backward.lifted, *forward.lifted) != identity_map(F.ambient.size())) {
      throw ConsistencyError("the two lifts are not mutually inverse");
    }
    out.iso = forward.lifted;
    return out;
  }

  ElementMap hull_member_map(HullResult const& HS, HullResult const& HT, ElementMap const& phi) {
    auto const s_members = HS.image();
    auto const t_members = HT.image();
    ElementMap out(s_members.size(), kNone);
    for (Index a = 0; a < phi.size(); ++a) {
      out[position_of(s_members, HS.embedding[a])] =
          position_of(t_members, HT.embedding[phi[a]]);
    }
    return out;
  }

  LiftOutcome lift_through_hulls(HullResult const& HS, HullResult const& HT, ElementMap const& phi) {
    return lift_morphism(hull_embedding(HS), hull_embedding(HT), hull_member_map(HS, HT, phi));
  }

  Verdict is_lc_preserving(FiniteSemigroup const& S,
                           FiniteSemigroup const& T,
                           ElementMap const&      phi) {
    for (auto const* X : {&S, &T}) {
      if (auto v = is_left_ample(*X); !v) {
        throw PreconditionError("(LC)-preservation needs left ample semigroups; " + v.clause
                                + " fails at " + to_string(v.witness));
      }
      if (auto v = has_lc(*X); !v) {
        throw PreconditionError("(LC)-preservation needs Condition (LC); it fails at "
                                + to_string(v.witness));
      }
    }
    if (auto bad = morphism_violation(S, T, phi)) {
      throw PreconditionError("the map is not a morphism at " + to_string(*bad));
    }
    auto const s_plus = plus_map(S);
    auto const t_plus = plus_map(T);
    for (Index a = 0; a < S.size(); ++a) {
      if (phi[s_plus[a]] != t_plus[phi[a]]) {
        throw PreconditionError("the map does not preserve + at " + std::to_string(a));
      }
    }

    std::vector<Subset> t_ideals;
    for (Index x = 0; x < T.size(); ++x) {
      t_ideals.push_back(T.left_multiples(x));
    }
    Verdict    verdict = Verdict::ok();
    auto const lc      = lc_table(S);
    for (Index b = 0; b < S.size() && verdict; ++b) {
      for (Index c = 0; c < S.size(); ++c) {
        Index const w = lc[static_cast<std::size_t>(b) * S.size() + c];
        Subset      m = t_ideals[phi[b]];
        for (Index x = 0; x < T.size(); ++x) {
          m[x] = m[x] && t_ideals[phi[c]][x];
        }
        if (m != t_ideals[phi[w]]) {
          verdict = Verdict::fail("T(b phi) ^ T(c phi) = T(w phi)", {b, c, w});
          break;
        }
      }
    }

    auto const HS     = inverse_hull(S);
    auto const HT     = inverse_hull(T);
    bool const lifted = lift_through_hulls(HS, HT, phi).lifted.has_value();
    if (lifted != verdict.holds) {
      throw ConsistencyError(std::string("(LC)-preservation is ") + (verdict ? "true" : "false")
                             + " but lifting to the hulls " + (lifted ? "succeeds" : "fails"));
    }
    return verdict;
  }

  std::vector<std::vector<Index>> left_i_orders(InverseSemigroupView const& Q) {
    std::size_t const n = Q.size();
    if (n > 20) {
      throw InputError("full subset search is limited to 20 elements");
    }
    std::vector<std::vector<Index>> out;
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
      std::vector<Index> members;
      for (Index a = 0; a < n; ++a) {
        if (bits >> a & 1U) {
          members.push_back(a);
        }
      }
      bool closed = true;
      for (Index a : members) {
        for (Index b : members) {
          if (!(bits >> Q.product(a, b) & 1U)) {
            closed = false;
            break;
          }
        }
        if (!closed) {
          break;
        }
      }
      if (!closed) {
        continue;
      }
      Subset hit(n, false);
      for (Index a : members) {
        for (Index b : members) {
          hit[Q.quotient(a, b)] = true;
        }
      }
      if (std::find(hit.begin(), hit.end(), false) == hit.end()) {
        out.push_back(std::move(members));
      }
    }
    return out;
  }

  std::vector<Index> brandt_row_order(Brandt const& B, Index i) {
    if (i >= B.index_size) {
      throw InputError("row " + std::to_string(i) + " is outside the index set");
    }
    std::vector<Index> out{0};
    for (Index g = 0; g < B.group_order; ++g) {
      for (Index j = 0; j < B.index_size; ++j) {
        out.push_back(B.index_of(i, g, j));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<ElementMap> all_isomorphisms(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    std::vector<ElementMap> out;
    if (S.size() != T.size()) {
      return out;
    }
    for_each_morphism(S, T, MorphismKind::plain, [&](ElementMap const& m) {
      if (is_isomorphism(S, T, m)) {
        out.push_back(m);
      }
      return true;
    });
    return out;
  }

}  // namespace liq
