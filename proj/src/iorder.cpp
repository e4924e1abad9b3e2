#include "liq/iorder.hpp"

#include <algorithm>

#include "liq/relations.hpp"

namespace liq {

  SubsetEmbedding SubsetEmbedding::make(InverseSemigroupView ambient, std::vector<Index> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) {
      throw InputError("the member set is empty");
    }
    Subset mask(ambient.size(), false);
    for (Index a : members) {
      if (a >= ambient.size()) {
        throw InputError("member " + std::to_string(a) + " is out of range");
      }
      mask[a] = true;
    }
    for (Index a : members) {
      for (Index b : members) {
        if (!mask[ambient.product(a, b)]) {
          throw InputError("the member set is not closed: " + std::to_string(a) + "*"
                           + std::to_string(b) + " = "
                           + std::to_string(ambient.product(a, b)));
        }
      }
    }
    return {std::move(ambient), std::move(members), std::move(mask)};
  }

  FiniteSemigroup SubsetEmbedding::subsemigroup() const {
    return ambient.semigroup.restrict_to(members);
  }

  SubsetEmbedding hull_embedding(HullResult const& H) {
    return SubsetEmbedding::make(H.hull, H.image());
  }

  std::optional<std::pair<Index, Index>> quotient_witness(SubsetEmbedding const& E, Index q) {
    for (Index a : E.members) {
      for (Index b : E.members) {
        if (E.ambient.quotient(a, b) == q) {
          return std::pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::pair<Index, Index>> straight_witness(SubsetEmbedding const& E, Index q) {
    for (Index a : E.members) {
      for (Index b : E.members) {
        if (E.r_related(a, b) && E.ambient.quotient(a, b) == q) {
          return std::pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

  Verdict is_left_i_order(SubsetEmbedding const& E) {
    Subset hit(E.ambient.size(), false);
    for (Index a : E.members) {
      for (Index b : E.members) {
        hit[E.ambient.quotient(a, b)] = true;
      }
    }
    for (Index q = 0; q < hit.size(); ++q) {
      if (!hit[q]) {
        return Verdict::fail("q = a^-1 b", {q});
      }
    }
    return Verdict::ok();
  }

  namespace {

    // S left ample, closed under a ↦ aa⁻¹ in Q, with aa⁻¹ = a⁺.
    bool is_plus_closed_left_ample(SubsetEmbedding const& E) {
      FiniteSemigroup const S = E.subsemigroup();
      if (!is_left_ample(S)) {
        return false;
      }
      auto const plus = plus_map(S);
      for (Index i = 0; i < E.members.size(); ++i) {
        Index const a = E.members[i];
        if (E.ambient.product(a, E.ambient.inverse(a)) != E.members[plus[i]]) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  Verdict is_straight(SubsetEmbedding const& E) {
    if (auto v = is_left_i_order(E); !v) {
      throw PreconditionError("straightness needs a left I-order; element "
                              + std::to_string(v.witness[0]) + " is not a quotient");
    }
    Verdict out = Verdict::ok();
    for (Index q = 0; q < E.ambient.size(); ++q) {
      if (!straight_witness(E, q)) {
        out = Verdict::fail("q = a^-1 b with a R b", {q});
        break;
      }
    }
    if (!out && is_plus_closed_left_ample(E)) {
      throw ConsistencyError("a left ample (2,1)-subalgebra that is a left I-order is not straight");
    }
    return out;
  }

  bool lemma_2_6_check(InverseSemigroupView const& Q, Index b, Index c, Index x, Index y) {
    bool const x_r_y = Q.product(x, Q.inverse(x)) == Q.product(y, Q.inverse(y));
    if (!x_r_y || Q.product(b, Q.inverse(c)) != Q.quotient(x, y)) {
      return true;
    }
    return Q.product(x, b) == Q.product(y, c);
  }

  Verdict lemma_2_6_sweep(InverseSemigroupView const& Q) {
    Index const n = static_cast<Index>(Q.size());
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        for (Index x = 0; x < n; ++x) {
          for (Index y = 0; y < n; ++y) {
            if (!lemma_2_6_check(Q, b, c, x, y)) {
              return Verdict::fail("xb = yc", {b, c, x, y});
            }
          }
        }
      }
    }
    return Verdict::ok();
  }

  std::optional<std::pair<Index, Index>> lemma_2_7_witness(SubsetEmbedding const& E,
                                                           Index a,
                                                           Index b,
                                                           Index c,
                                                           Index d) {
    for (Index m : {a, b, c, d}) {
      if (m >= E.mask.size() || !E.contains(m)) {
        throw PreconditionError("element " + std::to_string(m) + " is not a member");
      }
    }
    if (!E.r_related(a, b)) {
      throw PreconditionError("a R b fails in Q for " + to_string(std::vector<Index>{a, b}));
    }
    if (!E.r_related(c, d)) {
      throw PreconditionError("c R d fails in Q for " + to_string(std::vector<Index>{c, d}));
    }
    auto const& Q     = E.ambient;
    Index const c_inv = Q.inverse(c);
    for (Index x : E.members) {
      if (!E.r_related(a, Q.inverse(x))) {
        continue;
      }
      for (Index y : E.members) {
        if (Q.product(x, a) == Q.product(y, c) && Q.product(x, b) == Q.product(y, d)
            && E.r_related(x, y) && E.l_related(y, c_inv)) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }

  Verdict quotient_equality_sweep(SubsetEmbedding const& E, std::size_t* checked) {
    if (auto v = is_straight(E); !v) {
      throw PreconditionError("the quotient equality test needs a straight left I-order");
    }
    std::size_t count = 0;
    auto const& Q     = E.ambient;
    for (Index a : E.members) {
      for (Index b : E.members) {
        if (!E.r_related(a, b)) {
          continue;
        }
        for (Index c : E.members) {
          for (Index d : E.members) {
            if (!E.r_related(c, d)) {
              continue;
            }
            ++count;
            bool const equal   = Q.quotient(a, b) == Q.quotient(c, d);
            bool const witness = lemma_2_7_witness(E, a, b, c, d).has_value();
            if (equal != witness) {
              if (checked) {
                *checked = count;
              }
              return Verdict::fail(equal ? "equal quotients without witness"
                                         : "witness for distinct quotients",
                                   {a, b, c, d});
            }
          }
        }
      }
    }
    if (checked) {
      *checked = count;
    }
    return Verdict::ok();
  }

  std::vector<Subset> principal_right_ideals(FiniteSemigroup const& Q) {
    std::vector<Subset> out;
    out.reserve(Q.size());
    for (Index x = 0; x < Q.size(); ++x) {
      Subset s = Q.right_multiples(x);
      s[x]     = true;
      out.push_back(std::move(s));
    }
    return out;
  }

  namespace {

    bool subset_of(Subset const& a, Subset const& b) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && !b[i]) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  TernaryRelation t_relation(SubsetEmbedding const& E) {
    auto const&     Q      = E.ambient;
    auto const      ideals = principal_right_ideals(Q.semigroup);
    TernaryRelation T(Q.size());
    for (Index a : E.members) {
      for (Index b : E.members) {
        Index const ab_inv = Q.product(a, Q.inverse(b));
        for (Index c : E.members) {
          if (subset_of(ideals[ab_inv], ideals[Q.inverse(c)])) {
            T.insert(a, b, c);
          }
        }
      }
    }
    return T;
  }

  bool SuiteReport::all_agree() const noexcept {
    return std::all_of(clauses.begin(), clauses.end(), [](auto const& c) { return c.agree; });
  }

  void SuiteReport::require_agreement(std::string const& suite) const {
    for (auto const& c : clauses) {
      if (!c.agree) {
        throw ConsistencyError(suite + " clause " + c.clause + " fails at " + to_string(c.witness));
      }
    }
  }

  namespace {

    void require_hypotheses(SubsetEmbedding const& E, FiniteSemigroup const& S) {
      if (auto v = is_left_ample(S); !v) {
        throw PreconditionError("hypothesis 'S left ample' fails: " + v.clause);
      }
      if (auto v = is_left_i_order(E); !v) {
        throw PreconditionError("hypothesis 'S a left I-order in Q' fails at "
                                + to_string(v.witness));
      }
      for (Index s : E.members) {
        for (Index q = 0; q < E.ambient.size(); ++q) {
          if (!E.contains(q) && E.r_related(s, q)) {
            throw PreconditionError("hypothesis 'S a union of R-classes of Q' fails at "
                                    + to_string(std::vector<Index>{s, q}));
          }
        }
      }
    }

    std::vector<Subset> left_ideals(FiniteSemigroup const& S) {
      std::vector<Subset> out;
      for (Index a = 0; a < S.size(); ++a) {
        out.push_back(S.left_multiples(a));
      }
      return out;
    }

    Subset meet(Subset const& a, Subset const& b) {
      Subset out(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] && b[i];
      }
      return out;
    }

  }  // namespace

  SuiteReport lemma_3_6_suite(SubsetEmbedding const& E) {
    FiniteSemigroup const S = E.subsemigroup();
    require_hypotheses(E, S);
    auto const&       Q     = E.ambient;
    auto const&       m     = E.members;
    Index const       n     = static_cast<Index>(S.size());
    auto const        plus  = plus_map(S);
    auto const        rs    = r_star(S);
    auto const        gs    = green(S);
    auto const        gq    = green(Q.semigroup);
    auto const        s_ideals = left_ideals(S);
    auto const        q_ideals = left_ideals(Q.semigroup);
    SuiteReport       report;

    ClauseResult i{"(i) (2,1)-subalgebra", true, {}};
    for (Index a = 0; a < n && i.agree; ++a) {
      Index const aa = Q.product(m[a], Q.inverse(m[a]));
      if (!E.contains(aa) || aa != m[plus[a]]) {
        i = {i.clause, false, {m[a]}};
      }
    }
    report.clauses.push_back(i);

    ClauseResult ii{"(ii) a^-1 b idempotent iff a = b", true, {}};
    for (Index a = 0; a < n && ii.agree; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (rs(a, b) && Q.semigroup.is_idempotent(Q.quotient(m[a], m[b])) != (a == b)) {
          ii = {ii.clause, false, {m[a], m[b]}};
          break;
        }
      }
    }
    report.clauses.push_back(ii);

    ClauseResult iii{"(iii) Sa in Sb iff Qa in Qb", true, {}};
    for (Index a = 0; a < n && iii.agree; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (subset_of(s_ideals[a], s_ideals[b]) != subset_of(q_ideals[m[a]], q_ideals[m[b]])) {
          iii = {iii.clause, false, {m[a], m[b]}};
          break;
        }
      }
    }
    report.clauses.push_back(iii);

    ClauseResult iv{"(iv) Sa^Sb = Sc iff Qa^Qb = Qc", true, {}};
    for (Index a = 0; a < n && iv.agree; ++a) {
      for (Index b = 0; b < n && iv.agree; ++b) {
        Subset const s_meet = meet(s_ideals[a], s_ideals[b]);
        Subset const q_meet = meet(q_ideals[m[a]], q_ideals[m[b]]);
        for (Index c = 0; c < n; ++c) {
          if ((s_meet == s_ideals[c]) != (q_meet == q_ideals[m[c]])) {
            iv = {iv.clause, false, {m[a], m[b], m[c]}};
            break;
          }
        }
      }
    }
    report.clauses.push_back(iv);

    auto const lc = has_lc(S);
    ClauseResult v{"(v) Condition (LC)", lc.holds, {}};
    for (Index x : lc.witness) {
      v.witness.push_back(m[x]);
    }
    report.clauses.push_back(v);

    bool const   bisimple = gq.D.is_universal();
    bool const   l_rstar  = compose(gs.L, rs).is_universal();
    ClauseResult vi{"(vi) Q bisimple iff L o R* universal", bisimple == l_rstar, {}};
    report.clauses.push_back(vi);

    bool const simple = gq.J.is_universal();
    bool       rhs    = true;
    for (Index a = 0; a < n && rhs; ++a) {
      for (Index b = 0; b < n && rhs; ++b) {
        bool found = false;
        for (Index c = 0; c < n && !found; ++c) {
          found = rs(a, c) && gs.leqL(c, b);
        }
        rhs = found;
      }
    }
    report.clauses.push_back({"(vii) Q simple iff a R* c <=_L b solvable", simple == rhs, {}});
    return report;
  }

  EUnitaryConditions theorem_3_9_check(SubsetEmbedding const& E) {
    FiniteSemigroup const S = E.subsemigroup();
    require_hypotheses(E, S);
    EUnitaryConditions  out;
    out.e_unitary        = is_e_unitary(E.ambient);
    bool const proper    = is_proper(S);
    auto const sigma_s   = sigma(S);
    auto const sigma_q   = sigma_relation(E.ambient.semigroup);
    bool       embeds    = true;
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        if (sigma_q(E.members[a], E.members[b]) && !sigma_s.relation(a, b)) {
          embeds = false;
        }
      }
    }
    out.proper_and_embeds       = proper && embeds;
    out.proper_and_cancellative = proper && is_left_cancellative(sigma_s.quotient)
                               && is_right_cancellative(sigma_s.quotient);
    return out;
  }

  Verdict right_identity_check(SubsetEmbedding const& E) {
    auto const& Q = E.ambient;
    for (Index e : E.members) {
      bool right_identity = std::all_of(E.members.begin(), E.members.end(),
                                        [&](Index s) { return Q.product(s, e) == s; });
      if (!right_identity) {
        continue;
      }
      for (Index q = 0; q < Q.size(); ++q) {
        if (Q.product(q, e) != q || Q.product(e, q) != q) {
          return Verdict::fail("right identity of S is an identity of Q", {e, q});
        }
      }
    }
    return Verdict::ok();
  }

  Verdict meets_every_l_class(SubsetEmbedding const& E) {
    for (Index q = 0; q < E.ambient.size(); ++q) {
      bool const met = std::any_of(E.members.begin(), E.members.end(),
                                   [&](Index s) { return E.l_related(s, q); });
      if (!met) {
        return Verdict::fail("S meets the L-class", {q});
      }
    }
    return Verdict::ok();
  }

  bool is_classical_left_order(SubsetEmbedding const& E) {
    auto const& Q = E.ambient;
    Subset      hit(Q.size(), false);
    for (Index a : E.members) {
      // a lies in a subgroup iff aa⁻¹ = a⁻¹a, and then a♯ = a⁻¹.
      if (Q.product(a, Q.inverse(a)) != Q.product(Q.inverse(a), a)) {
        continue;
      }
      for (Index b : E.members) {
        hit[Q.quotient(a, b)] = true;
      }
    }
    return std::all_of(hit.begin(), hit.end(), [](bool x) { return x; });
  }

  BicyclicIOrder bicyclic_i_order(std::uint64_t window) {
    SymbolicSemigroup const B(SymbolicKind::Bicyclic, window);
    BicyclicIOrder          out;
    out.is_i_order = true;
    out.straight   = true;
    for (std::uint64_t a = 0; a <= window; ++a) {
      for (std::uint64_t b = 0; b <= window; ++b) {
        BicyclicPair const q{a, b};
        std::optional<std::pair<std::uint64_t, std::uint64_t>> found;
        bool                                                   straight = false;
        for (std::uint64_t x = 0; x <= window; ++x) {
          for (std::uint64_t y = 0; y <= window; ++y) {
            BicyclicPair const s{0, x}, t{0, y};
            if (multiply(inverse(s), t) == q) {
              if (!found) {
                found = std::pair{x, y};
              }
              straight = straight || B.r_related(s, t);
            }
          }
        }
        out.is_i_order = out.is_i_order && found.has_value();
        out.straight   = out.straight && straight;
        if (found) {
          out.witnesses.push_back({q, *found});
        }
      }
    }
    // Only (0, 0) of S lies in a subgroup, and (0,0)♯(0,n) = (0,n).
    bool classical = true;
    for (std::uint64_t a = 0; a <= window && classical; ++a) {
      for (std::uint64_t b = 0; b <= window && classical; ++b) {
        bool found = false;
        for (std::uint64_t x = 0; x <= window && !found; ++x) {
          BicyclicPair const s{0, x};
          if (s.a != s.b) {
            continue;
          }
          for (std::uint64_t y = 0; y <= window && !found; ++y) {
            found = multiply(inverse(s), BicyclicPair{0, y}) == BicyclicPair{a, b};
          }
        }
        classical = found;
      }
    }
    out.classical = classical;
    return out;
  }

  SuiteReport bicyclic_straightness_suite(std::uint64_t window) {
    SymbolicSemigroup const B(SymbolicKind::Bicyclic, window);
    SymbolicSemigroup const N(SymbolicKind::AdditiveNaturals, window);
    SuiteReport             report;

    // S = {(0, n)} ≅ (ℕ, +) via (0, n) ↦ n.
    ClauseResult ii{"(ii) a^-1 b idempotent iff a = b", true, {}};
    for (std::uint64_t a = 0; a <= window && ii.agree; ++a) {
      for (std::uint64_t b = 0; b <= window; ++b) {
        if (!N.r_star_related(a, b)) {
          continue;
        }
        BicyclicPair const q = multiply(inverse(BicyclicPair{0, a}), BicyclicPair{0, b});
        if ((q.a == q.b) != (a == b)) {
          ii = {ii.clause, false, {static_cast<Index>(a), static_cast<Index>(b)}};
          break;
        }
      }
    }
    report.clauses.push_back(ii);

    auto const pairs = B.window_elements();
    bool       bisimple = true;
    for (auto const& p : pairs) {
      for (auto const& q : pairs) {
        bool found = false;
        for (auto const& r : pairs) {
          if (B.r_related(p, r) && B.l_related(r, q)) {
            found = true;
            break;
          }
        }
        bisimple = bisimple && found;
      }
    }
    bool l_rstar = true;
    for (std::uint64_t a = 0; a <= window; ++a) {
      for (std::uint64_t b = 0; b <= window; ++b) {
        bool found = false;
        for (std::uint64_t c = 0; c <= window && !found; ++c) {
          found = N.l_related(a, c) && N.r_star_related(c, b);
        }
        l_rstar = l_rstar && found;
      }
    }
    report.clauses.push_back({"(vi) Q bisimple iff L o R* universal",
                              bisimple && l_rstar,
                              {}});
    return report;
  }

  std::optional<std::pair<BicyclicPair, BicyclicPair>> bicyclic_lemma_2_7_witness(
      BicyclicPair  a,
      BicyclicPair  b,
      BicyclicPair  c,
      BicyclicPair  d,
      std::uint64_t window) {
    SymbolicSemigroup const B(SymbolicKind::Bicyclic, window);
    for (auto const& m : {a, b, c, d}) {
      if (m.a != 0) {
        throw PreconditionError(to_string(m) + " is not in S = {(0,n)}");
      }
    }
    if (!B.r_related(a, b) || !B.r_related(c, d)) {
      throw PreconditionError("the quotient equality test needs a R b and c R d");
    }
    for (std::uint64_t p = 0; p <= window; ++p) {
      BicyclicPair const x{0, p};
      if (!B.r_related(a, inverse(x))) {
        continue;
      }
      for (std::uint64_t r = 0; r <= window; ++r) {
        BicyclicPair const y{0, r};
        if (multiply(x, a) == multiply(y, c) && multiply(x, b) == multiply(y, d)
            && B.r_related(x, y) && B.l_related(y, inverse(c))) {
          return std::pair{x, y};
        }
      }
    }
    return std::nullopt;
  }

}  // namespace liq
