#include "liq/hull.hpp"

#include <algorithm>

#include "liq/relations.hpp"

namespace liq {

  namespace {

    void require_left_ample(FiniteSemigroup const& S, char const* what) {
      if (auto v = is_left_ample(S); !v) {
        throw PreconditionError(std::string(what) + " needs a left ample semigroup; "
                                + v.clause + " fails at " + to_string(v.witness));
      }
    }

    PartialBijection rho_with(FiniteSemigroup const&    S,
                              std::vector<Index> const& plus,
                              Index                     a) {
      auto const dom = S.left_multiples(plus[a]);
      std::vector<std::pair<Index, Index>> entries;
      for (Index x = 0; x < S.size(); ++x) {
        if (dom[x]) {
          entries.emplace_back(x, S.product(x, a));
        }
      }
      return PartialBijection::from_entries(S.size(), entries);
    }

    bool same_set(Subset const& a, Subset const& b) {
      return a == b;
    }

    std::vector<Subset> all_left_multiples(FiniteSemigroup const& S) {
      std::vector<Subset> out;
      out.reserve(S.size());
      for (Index a = 0; a < S.size(); ++a) {
        out.push_back(S.left_multiples(a));
      }
      return out;
    }

  }  // namespace

  PartialBijection rho(FiniteSemigroup const& S, Index a) {
    require_left_ample(S, "rho");
    if (a >= S.size()) {
      throw InputError("element " + std::to_string(a) + " is out of range");
    }
    return rho_with(S, plus_map(S), a);
  }

  PartialShift compose(PartialShift f, PartialShift g) noexcept {
    std::uint64_t const m = std::max(f.to, g.from);
    return {f.from - f.to + m, g.to - g.from + m};
  }

  Verdict nat_hull_check(std::uint64_t window) {
    auto fail = [](char const* what, PartialShift f, PartialShift g) {
      return Verdict::fail(what,
                           {static_cast<Index>(f.from), static_cast<Index>(f.to),
                            static_cast<Index>(g.from), static_cast<Index>(g.to)});
    };
    for (std::uint64_t a = 0; a <= window; ++a) {
      for (std::uint64_t b = 0; b <= window; ++b) {
        PartialShift const f{a, b};
        if (compose(invert(rho_nat(a)), rho_nat(b)) != f) {
          return fail("shift is a quotient", f, f);
        }
        for (std::uint64_t c = 0; c <= window; ++c) {
          for (std::uint64_t d = 0; d <= window; ++d) {
            PartialShift const g{c, d};
            PartialShift const fg = compose(f, g);
            for (std::uint64_t x = 0; x <= 3 * window; ++x) {
              auto const fx  = f(x);
              auto const fgx = fx ? g(*fx) : std::nullopt;
              if (fgx != fg(x)) {
                return fail("pointwise composition", f, g);
              }
            }
            BicyclicPair const p = multiply(BicyclicPair{a, b}, BicyclicPair{c, d});
            if (p.a != fg.from || p.b != fg.to) {
              return fail("bicyclic multiplication", f, g);
            }
          }
        }
      }
    }
    return Verdict::ok();
  }

  std::optional<Index> lc_witness(FiniteSemigroup const& S, Index a, Index b) {
    auto const sa = S.left_multiples(a);
    auto const sb = S.left_multiples(b);
    Subset     meet(S.size());
    for (Index x = 0; x < S.size(); ++x) {
      meet[x] = sa[x] && sb[x];
    }
    for (Index c = 0; c < S.size(); ++c) {
      if (same_set(S.left_multiples(c), meet)) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::vector<Index> lc_table(FiniteSemigroup const& S) {
    std::size_t const n  = S.size();
    auto const        lm = all_left_multiples(S);
    std::vector<Index> out(n * n, kNone);
    Subset             meet(n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        for (Index x = 0; x < n; ++x) {
          meet[x] = lm[a][x] && lm[b][x];
        }
        for (Index c = 0; c < n; ++c) {
          if (lm[c] == meet) {
            out[a * n + b] = c;
            break;
          }
        }
      }
    }
    return out;
  }

  Verdict has_lc(FiniteSemigroup const& S) {
    auto const        table = lc_table(S);
    std::size_t const n     = S.size();
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (table[a * n + b] == kNone) {
          return Verdict::fail("(LC)", {a, b});
        }
      }
    }
    return Verdict::ok();
  }

  std::vector<Index> HullResult::image() const {
    std::vector<Index> out(embedding);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  HullResult inverse_hull(FiniteSemigroup const& S, std::size_t budget) {
    require_left_ample(S, "the inverse hull");
    auto const                    plus = plus_map(S);
    std::vector<PartialBijection> gens;
    gens.reserve(S.size());
    for (Index a = 0; a < S.size(); ++a) {
      gens.push_back(rho_with(S, plus, a));
    }
    ChartSemigroup charts = closure(gens, true, budget);
    auto           view   = InverseSemigroupView::of(charts.table());

    std::vector<Index> embedding(S.size());
    for (Index a = 0; a < S.size(); ++a) {
      embedding[a] = *charts.find(gens[a]);
    }
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        if (a != b && embedding[a] == embedding[b]) {
          throw ConsistencyError("theta is not injective: " + to_string(std::vector<Index>{a, b}));
        }
        if (embedding[S.product(a, b)] != view.product(embedding[a], embedding[b])) {
          throw ConsistencyError("theta is not multiplicative at "
                                 + to_string(std::vector<Index>{a, b}));
        }
      }
      Index const ea = embedding[a];
      if (embedding[plus[a]] != view.product(ea, view.inverse(ea))) {
        throw ConsistencyError("theta does not preserve + at " + std::to_string(a));
      }
    }

    Subset covered(view.size(), false);
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        covered[view.quotient(embedding[a], embedding[b])] = true;
      }
    }
    bool const is_i_order = std::all_of(covered.begin(), covered.end(), [](bool x) { return x; });

    HullResult H{std::move(charts), std::move(view), std::move(embedding), is_i_order,
                 Verdict::ok(), lc_table(S)};
    std::size_t const n = S.size();
    for (Index a = 0; a < n && H.lc.holds; ++a) {
      for (Index b = 0; b < n; ++b) {
        if (H.lc_witnesses[a * n + b] == kNone) {
          H.lc = Verdict::fail("(LC)", {a, b});
          break;
        }
      }
    }
    if (H.is_i_order != H.lc.holds) {
      throw ConsistencyError("left I-order in the hull (" + std::string(H.is_i_order ? "yes" : "no")
                             + ") disagrees with Condition (LC) ("
                             + (H.lc.holds ? "yes" : "no") + ")");
    }
    return H;
  }

  bool image_is_union_of_r_classes(HullResult const& H) {
    auto const& Q = H.hull.semigroup;
    Subset      in_image(Q.size(), false);
    for (Index x : H.embedding) {
      in_image[x] = true;
    }
    // q R q' iff qq⁻¹ = q'q⁻¹'.
    for (Index q = 0; q < Q.size(); ++q) {
      for (Index p = 0; p < Q.size(); ++p) {
        if (in_image[q] && !in_image[p]
            && Q.product(q, H.hull.inverse(q)) == Q.product(p, H.hull.inverse(p))) {
          return false;
        }
      }
    }
    return true;
  }

  Verdict quotient_chart_check(FiniteSemigroup const& S, HullResult const& H) {
    auto const plus = plus_map(S);
    auto const rs   = r_star(S);
    for (Index a = 0; a < S.size(); ++a) {
      PartialBijection const ra_inv = invert(H.charts.chart(H.embedding[a]));
      for (Index b = 0; b < S.size(); ++b) {
        PartialBijection const q = compose(ra_inv, H.charts.chart(H.embedding[b]));
        if (H.charts.find(q) != H.hull.quotient(H.embedding[a], H.embedding[b])) {
          return Verdict::fail("hull table quotient", {a, b});
        }
        if (q.domain() != S.left_multiples(S.product(plus[b], a))) {
          return Verdict::fail("dom = Sb+a", {a, b});
        }
        if (q.image() != S.left_multiples(S.product(plus[a], b))) {
          return Verdict::fail("im = Sa+b", {a, b});
        }
        for (Index y = 0; y < S.size(); ++y) {
          Index const x = S.product(S.product(y, plus[b]), a);
          if (q(x) != S.product(S.product(y, plus[a]), b)) {
            return Verdict::fail("(yb+a) maps to ya+b", {a, b, y});
          }
        }
        if (rs(a, b)) {
          if (q.domain() != S.left_multiples(a) || q.image() != S.left_multiples(b)) {
            return Verdict::fail("dom = Sa, im = Sb when a R* b", {a, b});
          }
          for (Index y = 0; y < S.size(); ++y) {
            if (q(S.product(y, a)) != S.product(y, b)) {
              return Verdict::fail("(ya) maps to yb when a R* b", {a, b, y});
            }
          }
        }
      }
    }
    return Verdict::ok();
  }

  Verdict l_reflection_check(FiniteSemigroup const& S, HullResult const& H) {
    auto const hl = green(H.hull.semigroup).L;
    auto const sl = green(S).L;
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        if (hl(H.embedding[a], H.embedding[b]) != sl(a, b)) {
          return Verdict::fail("rho_a L rho_b iff a L b", {a, b});
        }
      }
    }
    return Verdict::ok();
  }

  Verdict chart_swap_check(FiniteSemigroup const& S, HullResult const& H) {
    auto const plus = plus_map(S);
    auto const rs   = r_star(S);
    auto const lm   = all_left_multiples(S);
    for (Index b = 0; b < S.size(); ++b) {
      PartialBijection const& rb = H.charts.chart(H.embedding[b]);
      for (Index c = 0; c < S.size(); ++c) {
        PartialBijection const lhs = compose(rb, invert(H.charts.chart(H.embedding[c])));
        Subset                 meet(S.size());
        for (Index x = 0; x < S.size(); ++x) {
          meet[x] = lm[b][x] && lm[c][x];
        }
        for (Index w = 0; w < S.size(); ++w) {
          if (lm[w] != meet) {
            continue;
          }
          for (Index u = 0; u < S.size(); ++u) {
            if (S.product(u, b) != w || S.product(u, plus[b]) != u) {
              continue;
            }
            for (Index v = 0; v < S.size(); ++v) {
              if (S.product(v, c) != w || S.product(v, plus[c]) != v) {
                continue;
              }
              PartialBijection const rhs = compose(invert(H.charts.chart(H.embedding[u])),
                                                   H.charts.chart(H.embedding[v]));
              if (lhs != rhs) {
                return Verdict::fail("rho_b rho_c^-1 = rho_u^-1 rho_v", {b, c, w, u, v});
              }
              if (!rs(u, v)) {
                return Verdict::fail("u R* v", {b, c, w, u, v});
              }
            }
          }
        }
      }
    }
    return Verdict::ok();
  }

  namespace {

    bool rstar_l_universal(FiniteSemigroup const& S) {
      return compose(r_star(S), green(S).L).is_universal();
    }

  }  // namespace

  BisimpleHullCheck corollary_3_8_check(FiniteSemigroup const& S) {
    HullResult const H         = inverse_hull(S);
    bool const       universal = rstar_l_universal(S);
    BisimpleHullCheck      out;
    out.hull_bisimple                = green(H.hull.semigroup).D.is_universal();
    out.lc_and_rstar_l_universal     = has_lc(S).holds && universal;
    out.iorder_and_rstar_l_universal = H.is_i_order && universal;
    if (!out.agree()) {
      throw ConsistencyError("the three bisimplicity conditions disagree");
    }
    return out;
  }

  BisimpleHullCheck nat_bisimple_check(std::uint64_t window) {
    SymbolicSemigroup const N(SymbolicKind::AdditiveNaturals, window);
    auto const              nats = N.window_elements();
    std::vector<PartialShift> shifts;
    for (std::uint64_t a = 0; a <= window; ++a) {
      for (std::uint64_t b = 0; b <= window; ++b) {
        shifts.push_back({a, b});
      }
    }
    // Charts are R-related iff their domains agree and L-related iff their
    // images agree; for shifts these are [from, ∞) and [to, ∞).
    auto r_rel = [](PartialShift f, PartialShift g) { return f.from == g.from; };
    auto l_rel = [](PartialShift f, PartialShift g) { return f.to == g.to; };

    BisimpleHullCheck out;
    out.hull_bisimple = std::all_of(shifts.begin(), shifts.end(), [&](PartialShift f) {
      return std::all_of(shifts.begin(), shifts.end(), [&](PartialShift g) {
        return std::any_of(shifts.begin(), shifts.end(), [&](PartialShift h) {
          return r_rel(f, h) && l_rel(h, g);
        });
      });
    });

    bool universal = true;
    bool lc        = N.validate_window().holds;
    for (auto const& x : nats) {
      for (auto const& y : nats) {
        bool found = false;
        for (auto const& z : nats) {
          found = found || (N.r_star_related(x, z) && N.l_related(z, y));
        }
        universal = universal && found;
        lc        = lc && N.lc_witness(x, y).has_value();
      }
    }
    out.lc_and_rstar_l_universal = lc && universal;

    bool iorder = true;
    for (PartialShift f : shifts) {
      bool found = false;
      for (std::uint64_t a = 0; a <= window && !found; ++a) {
        for (std::uint64_t b = 0; b <= window && !found; ++b) {
          found = compose(invert(rho_nat(a)), rho_nat(b)) == f;
        }
      }
      iorder = iorder && found;
    }
    out.iorder_and_rstar_l_universal = iorder && universal;

    // ℕθ is the R-class of the identity shift.
    for (PartialShift f : shifts) {
      if (r_rel(f, PartialShift{0, 0}) != (f == rho_nat(f.to))) {
        throw ConsistencyError("the image of N is not the R-class of the identity");
      }
    }
    if (!out.agree()) {
      throw ConsistencyError("the three bisimplicity conditions disagree for (N,+)");
    }
    return out;
  }

}  // namespace liq
