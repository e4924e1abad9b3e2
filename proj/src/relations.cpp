#include "liq/relations.hpp"

#include <sstream>

#include "liq/kernels.hpp"

namespace liq {

  std::string to_string(RelationKind kind) {
    switch (kind) {
      case RelationKind::R:
        return "R";
      case RelationKind::L:
        return "L";
      case RelationKind::H:
        return "H";
      case RelationKind::D:
        return "D";
      case RelationKind::J:
        return "J";
      case RelationKind::Rstar:
        return "Rstar";
      case RelationKind::leqR:
        return "leqR";
      case RelationKind::leqL:
        return "leqL";
      case RelationKind::sigma:
        return "sigma";
      case RelationKind::custom:
        return "custom";
    }
    return "custom";
  }

  RelationTable::RelationTable(RelationKind kind, std::size_t n, std::vector<char> pairs)
      : _kind(kind), _n(n), _pairs(std::move(pairs)) {
    if (_pairs.size() != n * n) {
      throw InputError("relation matrix has the wrong size");
    }
  }

  bool RelationTable::is_reflexive() const {
    for (Index a = 0; a < _n; ++a) {
      if (!(*this)(a, a)) {
        return false;
      }
    }
    return true;
  }

  bool RelationTable::is_symmetric() const {
    for (Index a = 0; a < _n; ++a) {
      for (Index b = 0; b < _n; ++b) {
        if ((*this)(a, b) != (*this)(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool RelationTable::is_transitive() const {
    return contains(compose(*this, *this));
  }

  bool RelationTable::is_equivalence() const {
    return is_reflexive() && is_symmetric() && is_transitive();
  }

  bool RelationTable::is_identity() const {
    for (Index a = 0; a < _n; ++a) {
      for (Index b = 0; b < _n; ++b) {
        if ((*this)(a, b) != (a == b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool RelationTable::is_universal() const {
    for (char c : _pairs) {
      if (!c) {
        return false;
      }
    }
    return true;
  }

  bool RelationTable::contains(RelationTable const& that) const {
    for (std::size_t i = 0; i < _pairs.size(); ++i) {
      if (that._pairs[i] && !_pairs[i]) {
        return false;
      }
    }
    return true;
  }

  RelationTable RelationTable::intersect(RelationTable const& that, RelationKind kind) const {
    RelationTable out(kind, _n);
    for (std::size_t i = 0; i < _pairs.size(); ++i) {
      out._pairs[i] = _pairs[i] && that._pairs[i];
    }
    return out;
  }

  std::vector<Index> RelationTable::class_representatives() const {
    std::vector<Index> out(_n);
    for (Index a = 0; a < _n; ++a) {
      Index r = a;
      for (Index b = 0; b < a; ++b) {
        if ((*this)(a, b)) {
          r = b;
          break;
        }
      }
      out[a] = r;
    }
    return out;
  }

  std::string RelationTable::dump() const {
    std::ostringstream os;
    os << to_string(_kind) << '\n';
    for (Index a = 0; a < _n; ++a) {
      for (Index b = 0; b < _n; ++b) {
        if ((*this)(a, b)) {
          os << a << ' ' << b << '\n';
        }
      }
    }
    return os.str();
  }

  RelationTable compose(RelationTable const& rho, RelationTable const& tau, RelationKind kind) {
    std::size_t const n = rho.size();
    RelationTable     out(kind, n);
    for (Index a = 0; a < n; ++a) {
      for (Index c = 0; c < n; ++c) {
        if (!rho(a, c)) {
          continue;
        }
        for (Index b = 0; b < n; ++b) {
          if (tau(c, b)) {
            out.set(a, b);
          }
        }
      }
    }
    return out;
  }

  GreenRelations green(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    GreenRelations    g{RelationTable(RelationKind::leqR, n),
                     RelationTable(RelationKind::leqL, n),
                     RelationTable(RelationKind::R, n),
                     RelationTable(RelationKind::L, n),
                     RelationTable(RelationKind::H, n),
                     RelationTable(RelationKind::D, n),
                     RelationTable(RelationKind::J, n)};
    // a ≤_R b iff a ∈ bS¹.
    for (Index b = 0; b < n; ++b) {
      auto const right = S.right_multiples(b);
      auto const left  = S.left_multiples(b);
      for (Index a = 0; a < n; ++a) {
        if (a == b || right[a]) {
          g.leqR.set(a, b);
        }
        if (a == b || left[a]) {
          g.leqL.set(a, b);
        }
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        g.R.set(a, b, g.leqR(a, b) && g.leqR(b, a));
        g.L.set(a, b, g.leqL(a, b) && g.leqL(b, a));
      }
    }
    g.H = g.R.intersect(g.L, RelationKind::H);
    g.D = compose(g.R, g.L, RelationKind::D);

    // S¹bS¹ as a mask per b; a ≤_J b iff a lies in it.
    std::vector<Subset> ideal(n, Subset(n, false));
    for (Index b = 0; b < n; ++b) {
      auto left = S.left_multiples(b);
      left[b]   = true;
      for (Index l = 0; l < n; ++l) {
        if (!left[l]) {
          continue;
        }
        ideal[b][l] = true;
        for (Index y = 0; y < n; ++y) {
          ideal[b][S.product(l, y)] = true;
        }
      }
    }
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        g.J.set(a, b, ideal[b][a] && ideal[a][b]);
      }
    }
    return g;
  }

  RelationTable r_star(FiniteSemigroup const& S) {
    return RelationTable(RelationKind::Rstar,
                         S.size(),
                         kernels::r_star_matrix(S, kernels::Exec::parallel));
  }

  std::optional<std::vector<Index>> noncommuting_idempotents(FiniteSemigroup const& S) {
    auto const es = S.idempotents();
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        if (S.product(es[i], es[j]) != S.product(es[j], es[i])) {
          return std::vector<Index>{es[i], es[j]};
        }
      }
    }
    return std::nullopt;
  }

  namespace {

    std::vector<Index> plus_from_kernels(FiniteSemigroup const&                 S,
                                         std::vector<std::vector<Index>> const& sig) {
      std::vector<Index> out(S.size(), kNone);
      auto const         es = S.idempotents();
      for (Index a = 0; a < S.size(); ++a) {
        for (Index e : es) {
          if (sig[a] == sig[e]) {
            out[a] = e;
            break;
          }
        }
      }
      return out;
    }

  }  // namespace

  std::optional<Index> plus_of(FiniteSemigroup const& S, Index a) {
    if (auto w = noncommuting_idempotents(S)) {
      throw StructureError("idempotents " + S.name((*w)[0]) + " and " + S.name((*w)[1])
                           + " do not commute, so + is not well defined");
    }
    auto const rs = r_star(S);
    for (Index e : S.idempotents()) {
      if (rs(a, e)) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::vector<Index> plus_map(FiniteSemigroup const& S) {
    if (auto w = noncommuting_idempotents(S)) {
      throw StructureError("idempotents " + S.name((*w)[0]) + " and " + S.name((*w)[1])
                           + " do not commute, so + is not well defined");
    }
    return plus_from_kernels(S,
                             kernels::right_translation_kernels(S, kernels::Exec::parallel));
  }

  Verdict is_left_ample(FiniteSemigroup const& S) {
    if (auto w = noncommuting_idempotents(S)) {
      return Verdict::fail("E(S) semilattice", *w);
    }
    auto const plus = plus_map(S);
    for (Index a = 0; a < S.size(); ++a) {
      if (plus[a] == kNone) {
        return Verdict::fail("R*-class without idempotent", {a});
      }
    }
    for (Index x = 0; x < S.size(); ++x) {
      for (Index y = 0; y < S.size(); ++y) {
        Index const xy = S.product(x, plus[y]);
        if (xy != S.product(plus[xy], x)) {
          return Verdict::fail("(AL)", {x, y});
        }
      }
    }
    return Verdict::ok();
  }

  bool check_rstar_l_commute(FiniteSemigroup const& S) {
    auto const rs = r_star(S);
    auto const l  = green(S).L;
    return compose(rs, l).same_pairs(compose(l, rs));
  }

}  // namespace liq
