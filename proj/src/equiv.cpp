#include "liq/equiv.hpp"

#include <algorithm>
#include <map>

#include "liq/lifting.hpp"
#include "liq/relations.hpp"

namespace liq {

  namespace {

    Index position_of(std::vector<Index> const& members, Index q) {
      return static_cast<Index>(std::lower_bound(members.begin(), members.end(), q)
                                - members.begin());
    }

  }  // namespace

  LacObject LacObject::certify(FiniteSemigroup S) {
    if (auto v = is_left_ample(S); !v) {
      throw PreconditionError("not left ample: " + v.clause + " fails at " + to_string(v.witness));
    }
    if (auto v = has_lc(S); !v) {
      throw PreconditionError("Condition (LC) fails at " + to_string(v.witness));
    }
    if (!compose(r_star(S), green(S).L).is_universal()) {
      throw PreconditionError("R* o L is not universal");
    }
    return {std::move(S)};
  }

  BisObject BisObject::certify(InverseSemigroupView Q, std::vector<Index> members) {
    auto E = SubsetEmbedding::make(std::move(Q), std::move(members));
    if (!green(E.ambient.semigroup).D.is_universal()) {
      throw PreconditionError("Q is not bisimple");
    }
    for (Index s : E.members) {
      for (Index q = 0; q < E.ambient.size(); ++q) {
        if (E.r_related(s, q) && !E.contains(q)) {
          throw PreconditionError("S is not a union of R-classes: "
                                  + to_string(std::vector<Index>{s, q}));
        }
      }
    }
    auto const S = E.subsemigroup();
    if (!is_left_ample(S) || !has_lc(S)) {
      throw ConsistencyError("a union of R-classes of a bisimple inverse semigroup is not left "
                             "ample with (LC)");
    }
    return {std::move(E)};
  }

  FImage functor_F(LacObject const& S) {
    auto hull = inverse_hull(S.S);
    try {
      auto object = BisObject::certify(hull.hull, hull.image());
      return {std::move(hull), std::move(object)};
    } catch (PreconditionError const& e) {
      throw ConsistencyError(std::string("F(S) is not a BIS object: ") + e.what());
    }
  }

  LacObject functor_G(BisObject const& B) {
    try {
      return LacObject::certify(B.S());
    } catch (PreconditionError const& e) {
      throw ConsistencyError(std::string("G(Q, S) is not a LAC object: ") + e.what());
    }
  }

  ElementMap functor_F_map(LacObject const& S,
                           LacObject const& T,
                           FImage const&    FS,
                           FImage const&    FT,
                           ElementMap const& phi) {
    if (auto v = is_lc_preserving(S.S, T.S, phi); !v) {
      throw PreconditionError("the map is not (LC)-preserving at " + to_string(v.witness));
    }
    auto lift = lift_through_hulls(FS.hull, FT.hull, phi);
    if (!lift) {
      throw ConsistencyError("an (LC)-preserving map does not lift, condition "
                             + lift.refusal->condition);
    }
    return std::move(*lift.lifted);
  }

  ElementMap functor_G_map(BisObject const& B, BisObject const& C, ElementMap const& psi) {
    auto const& E = B.pair;
    auto const& F = C.pair;
    if (!is_morphism(E.ambient.semigroup, F.ambient.semigroup, psi)) {
      throw PreconditionError("the map is not a morphism Q -> P");
    }
    ElementMap restriction;
    for (Index s : E.members) {
      if (!F.contains(psi[s])) {
        throw PreconditionError("the map does not carry S into T at " + std::to_string(s));
      }
      restriction.push_back(position_of(F.members, psi[s]));
    }
    if (!is_lc_preserving(B.S(), C.S(), restriction)) {
      throw ConsistencyError("the restriction of a BIS morphism is not (LC)-preserving");
    }
    return restriction;
  }

  ElementMap theta_iso(LacObject const& S, FImage const& FS) {
    auto const& members = FS.object.pair.members;
    ElementMap  out;
    for (Index a = 0; a < S.S.size(); ++a) {
      out.push_back(position_of(members, FS.hull.embedding[a]));
    }
    if (!is_isomorphism(S.S, FS.object.S(), out)) {
      throw ConsistencyError("theta_S is not an isomorphism onto S theta_S");
    }
    return out;
  }

  ElementMap mu(BisObject const& B, FImage const& GF) {
    auto const& E   = B.pair;
    auto const& Q   = E.ambient;
    auto const& H   = GF.hull.hull;
    auto const& emb = GF.hull.embedding;
    auto const  rs  = r_star(B.S());
    ElementMap  out(Q.size(), kNone);
    for (Index i = 0; i < E.members.size(); ++i) {
      for (Index j = 0; j < E.members.size(); ++j) {
        if (!rs(i, j)) {
          continue;
        }
        Index const q     = Q.quotient(E.members[i], E.members[j]);
        Index const value = H.quotient(emb[i], emb[j]);
        if (out[q] == kNone) {
          out[q] = value;
        } else if (out[q] != value) {
          throw ConsistencyError("mu is not well defined at " + std::to_string(q));
        }
      }
    }
    if (std::find(out.begin(), out.end(), kNone) != out.end()) {
      throw ConsistencyError("mu is not defined on all of Q");
    }
    if (!is_isomorphism(Q.semigroup, H.semigroup, out)) {
      throw ConsistencyError("mu is not an isomorphism");
    }
    for (Index i = 0; i < E.members.size(); ++i) {
      if (out[E.members[i]] != emb[i]) {
        throw ConsistencyError("mu does not carry S onto S theta_S");
      }
    }
    return out;
  }

  Verdict lac_naturality(LacObject const& S, LacObject const& T, ElementMap const& phi) {
    auto const FS   = functor_F(S);
    auto const FT   = functor_F(T);
    auto const fphi = functor_F_map(S, T, FS, FT, phi);
    for (Index s = 0; s < S.S.size(); ++s) {
      if (fphi[FS.hull.embedding[s]] != FT.hull.embedding[phi[s]]) {
        return Verdict::fail("theta_S (phi FG) = phi theta_T", {s});
      }
    }
    return Verdict::ok();
  }

  Verdict bis_naturality(BisObject const& B, BisObject const& C, ElementMap const& psi) {
    auto const GB    = functor_G(B);
    auto const GC    = functor_G(C);
    auto const GFB   = functor_F(GB);
    auto const GFC   = functor_F(GC);
    auto const mu_b  = mu(B, GFB);
    auto const mu_c  = mu(C, GFC);
    auto const psigf = functor_F_map(GB, GC, GFB, GFC, functor_G_map(B, C, psi));
    for (Index q = 0; q < B.pair.ambient.size(); ++q) {
      if (psigf[mu_b[q]] != mu_c[psi[q]]) {
        return Verdict::fail("mu (psi GF) = psi mu", {q});
      }
    }
    return Verdict::ok();
  }

  Verdict lac_roundtrip(LacObject const& S) {
    auto const FS = functor_F(S);
    auto const G  = functor_G(FS.object);
    theta_iso(S, FS);
    if (!(G.S == FS.object.S())) {
      return Verdict::fail("G(F(S)) is S theta_S");
    }
    auto const id = identity_map(S.S.size());
    if (functor_F_map(S, S, FS, FS, id) != identity_map(FS.hull.hull.size())) {
      return Verdict::fail("F(id) = id");
    }
    return Verdict::ok();
  }

  Verdict bis_roundtrip(BisObject const& B) {
    auto const G  = functor_G(B);
    auto const GF = functor_F(G);
    mu(B, GF);
    auto const id = identity_map(B.pair.ambient.size());
    if (functor_G_map(B, B, id) != identity_map(B.pair.members.size())) {
      return Verdict::fail("G(id) = id");
    }
    return Verdict::ok();
  }

  Verdict right_cancellative_check(LacObject const& S) {
    if (!S.S.is_monoid() || S.S.idempotents().size() != 1) {
      throw PreconditionError("S is not a right cancellative monoid");
    }
    auto const FS = functor_F(S);
    auto const& H = FS.hull.hull.semigroup;
    auto const one = H.identity();
    if (!one) {
      return Verdict::fail("Sigma(S) is a monoid");
    }
    if (!green(H).D.is_universal()) {
      return Verdict::fail("Sigma(S) is bisimple");
    }
    auto const& view = FS.hull.hull;
    std::vector<Index> r_class;
    for (Index q = 0; q < H.size(); ++q) {
      if (view.product(q, view.inverse(q)) == *one) {
        r_class.push_back(q);
      }
    }
    if (r_class != FS.object.pair.members) {
      return Verdict::fail("S theta_S is the R-class of the identity");
    }
    return Verdict::ok();
  }

  SuiteReport nat_bicyclic_roundtrip(std::uint64_t window) {
    SymbolicSemigroup const N(SymbolicKind::AdditiveNaturals, window);
    SymbolicSemigroup const B(SymbolicKind::Bicyclic, window);
    SuiteReport             report;
    auto const              idx = [](std::uint64_t x) { return static_cast<Index>(x); };

    ClauseResult lac{"(N,+) is a LAC object", true, {}};
    for (std::uint64_t a = 0; a <= window && lac.agree; ++a) {
      for (std::uint64_t b = 0; b <= window; ++b) {
        auto const w = N.lc_witness(a, b);
        if (!w || !N.r_star_related(a, b)) {
          lac = {lac.clause, false, {idx(a), idx(b)}};
          break;
        }
        // N + a ∩ N + b = N + w on [0, 3 window].
        auto const c = std::get<std::uint64_t>(*w);
        for (std::uint64_t x = 0; x <= 3 * window; ++x) {
          if ((x >= a && x >= b) != (x >= c)) {
            lac = {lac.clause, false, {idx(a), idx(b)}};
            break;
          }
        }
      }
    }
    report.clauses.push_back(lac);

    ClauseResult bis{"(B, {(0,n)}) is a BIS object", true, {}};
    for (std::uint64_t a = 0; a <= window && bis.agree; ++a) {
      for (std::uint64_t b = 0; b <= window; ++b) {
        BicyclicPair const p{a, b};
        // p R (a, 0) L (0, 0), so the window lies in one D-class.
        BicyclicPair const mid{a, 0};
        if (!B.r_related(p, mid) || !B.l_related(mid, BicyclicPair{0, 0})) {
          bis = {bis.clause, false, {idx(a), idx(b)}};
          break;
        }
        bool const in_s = a == 0;
        if (B.r_related(p, BicyclicPair{0, 0}) != in_s) {
          bis = {bis.clause, false, {idx(a), idx(b)}};
          break;
        }
      }
    }
    report.clauses.push_back(bis);

    auto const hull = nat_hull_check(window);
    report.clauses.push_back({"Sigma(N) = bicyclic on the window", hull.holds, hull.witness});

    ClauseResult theta{"N theta = {(0,n)}", true, {}};
    for (std::uint64_t n = 0; n <= window; ++n) {
      auto const r = rho_nat(n);
      if (r.from != 0 || r.to != n) {
        theta = {theta.clause, false, {idx(n)}};
        break;
      }
    }
    report.clauses.push_back(theta);

    ClauseResult g{"G(B, {(0,n)}) = (N,+)", true, {}};
    for (std::uint64_t a = 0; a <= window && g.agree; ++a) {
      for (std::uint64_t b = 0; b <= window; ++b) {
        if (multiply(BicyclicPair{0, a}, BicyclicPair{0, b}) != BicyclicPair{0, a + b}) {
          g = {g.clause, false, {idx(a), idx(b)}};
          break;
        }
      }
    }
    report.clauses.push_back(g);

    // μ on the window: every factorisation (0,x)⁻¹(0,y) of p gives the same
    // shift ρ_x⁻¹ρ_y, and μ(pq) = μ(p)μ(q).
    ClauseResult                               m{"mu is a well defined morphism", true, {}};
    std::map<BicyclicPair, PartialShift>       mu_of;
    std::uint64_t const                        reach = 2 * window;
    for (std::uint64_t x = 0; x <= reach && m.agree; ++x) {
      for (std::uint64_t y = 0; y <= reach; ++y) {
        BicyclicPair const p     = multiply(inverse(BicyclicPair{0, x}), BicyclicPair{0, y});
        PartialShift const value = compose(invert(rho_nat(x)), rho_nat(y));
        auto [it, fresh]         = mu_of.emplace(p, value);
        if (!fresh && it->second != value) {
          m = {m.clause, false, {idx(x), idx(y)}};
          break;
        }
      }
    }
    for (std::uint64_t a = 0; a <= window && m.agree; ++a) {
      for (std::uint64_t b = 0; b <= window && m.agree; ++b) {
        for (std::uint64_t c = 0; c <= window && m.agree; ++c) {
          for (std::uint64_t d = 0; d <= window; ++d) {
            BicyclicPair const p{a, b}, q{c, d};
            BicyclicPair const pq = multiply(p, q);
            if (mu_of.at(pq) != compose(mu_of.at(p), mu_of.at(q))) {
              m = {m.clause, false, {idx(a), idx(b), idx(c), idx(d)}};
              break;
            }
          }
        }
      }
    }
    report.clauses.push_back(m);
    return report;
  }

}  // namespace liq
