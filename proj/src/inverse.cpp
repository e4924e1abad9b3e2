#include "liq/inverse.hpp"

#include <sstream>

#include "liq/symbolic.hpp"

namespace liq {

  InverseRecognition recognize_inverse(FiniteSemigroup const& S) {
    if (auto w = noncommuting_idempotents(S)) {
      return {std::nullopt, Verdict::fail("E(S) semilattice", *w)};
    }
    std::vector<Index> inv(S.size(), kNone);
    for (Index a = 0; a < S.size(); ++a) {
      for (Index x = 0; x < S.size(); ++x) {
        if (S.product(S.product(a, x), a) == a && S.product(S.product(x, a), x) == x) {
          inv[a] = x;
          break;
        }
      }
      if (inv[a] == kNone) {
        return {std::nullopt, Verdict::fail("regular", {a})};
      }
    }
    return {InverseSemigroupView{S, std::move(inv)}, Verdict::ok()};
  }

  InverseSemigroupView InverseSemigroupView::of(FiniteSemigroup const& S) {
    auto r = recognize_inverse(S);
    if (!r.view) {
      throw StructureError("not an inverse semigroup: " + r.verdict.clause + " fails at "
                           + to_string(r.verdict.witness));
    }
    return std::move(*r.view);
  }

  std::array<Index, 3> Brandt::coordinates(Index x) const {
    if (x == 0 || x >= semigroup.size()) {
      throw InputError("element " + std::to_string(x) + " has no Brandt coordinates");
    }
    std::size_t r = x - 1;
    Index const j = static_cast<Index>(r % index_size);
    r /= index_size;
    Index const g = static_cast<Index>(r % group_order);
    Index const i = static_cast<Index>(r / group_order);
    return {i, g, j};
  }

  std::string Brandt::dictionary() const {
    std::ostringstream os;
    for (Index x = 1; x < semigroup.size(); ++x) {
      os << semigroup.name(x) << " -> " << x << '\n';
    }
    return os.str();
  }

  Brandt brandt(FiniteSemigroup const& group, std::size_t index_size) {
    if (!is_group(group)) {
      throw InputError("Brandt parameters: the given table is not a group");
    }
    if (index_size == 0) {
      throw InputError("Brandt parameters: the index set must be nonempty");
    }
    Brandt            B{{}, group.size(), index_size};
    std::size_t const n = 1 + index_size * index_size * group.size();
    std::vector<Index>       table(n * n, 0);
    std::vector<std::string> names(n);
    names[0] = "0";
    for (Index i = 0; i < index_size; ++i) {
      for (Index g = 0; g < group.size(); ++g) {
        for (Index j = 0; j < index_size; ++j) {
          Index const x = B.index_of(i, g, j);
          names[x]      = "(" + std::to_string(i) + "," + group.name(g) + ","
                     + std::to_string(j) + ")";
          for (Index k = 0; k < index_size; ++k) {
            for (Index h = 0; h < group.size(); ++h) {
              for (Index l = 0; l < index_size; ++l) {
                if (j == k) {
                  table[x * n + B.index_of(k, h, l)] = B.index_of(i, group.product(g, h), l);
                }
              }
            }
          }
        }
      }
    }
    B.semigroup = FiniteSemigroup::trusted(n, std::move(table), std::move(names));
    return B;
  }

  RelationTable sigma_relation(FiniteSemigroup const& S) {
    RelationTable out(RelationKind::sigma, S.size());
    auto const    es = S.idempotents();
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        for (Index e : es) {
          if (S.product(e, a) == S.product(e, b)) {
            out.set(a, b);
            break;
          }
        }
      }
    }
    return out;
  }

  SigmaQuotient sigma(FiniteSemigroup const& S) {
    if (auto v = is_left_ample(S); !v) {
      throw PreconditionError("sigma needs a left ample semigroup; " + v.clause
                              + " fails at " + to_string(v.witness));
    }
    SigmaQuotient q{sigma_relation(S), {}, {}};
    auto const&   rel = q.relation;
    if (!rel.is_equivalence()) {
      throw ConsistencyError("sigma is not an equivalence on a left ample semigroup");
    }
    auto const         reps = rel.class_representatives();
    std::vector<Index> rep_of_class;
    q.class_of.assign(S.size(), kNone);
    for (Index a = 0; a < S.size(); ++a) {
      if (reps[a] == a) {
        q.class_of[a] = static_cast<Index>(rep_of_class.size());
        rep_of_class.push_back(a);
      } else {
        q.class_of[a] = q.class_of[reps[a]];
      }
    }
    std::size_t const  m = rep_of_class.size();
    std::vector<Index> table(m * m);
    for (Index x = 0; x < m; ++x) {
      for (Index y = 0; y < m; ++y) {
        table[x * m + y] = q.class_of[S.product(rep_of_class[x], rep_of_class[y])];
      }
    }
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        if (table[q.class_of[a] * m + q.class_of[b]] != q.class_of[S.product(a, b)]) {
          throw ConsistencyError("sigma is not a congruence: " + to_string(std::vector<Index>{a, b}));
        }
      }
    }
    q.quotient = FiniteSemigroup::trusted(m, std::move(table));
    if (!is_right_cancellative(q.quotient)) {
      throw ConsistencyError("S/sigma is not right cancellative");
    }
    return q;
  }

  bool is_proper(FiniteSemigroup const& S) {
    if (auto v = is_left_ample(S); !v) {
      throw PreconditionError("properness needs a left ample semigroup; " + v.clause
                              + " fails at " + to_string(v.witness));
    }
    return r_star(S).intersect(sigma_relation(S)).is_identity();
  }

  bool is_e_unitary(InverseSemigroupView const& Q) {
    auto const& S = Q.semigroup;
    for (Index e : S.idempotents()) {
      for (Index a = 0; a < S.size(); ++a) {
        if (S.is_idempotent(S.product(e, a)) && !S.is_idempotent(a)) {
          return false;
        }
      }
    }
    return true;
  }

  Verdict bicyclic_e_unitary(std::uint64_t window) {
    for (std::uint64_t k = 0; k <= window; ++k) {
      BicyclicPair const e{k, k};
      for (std::uint64_t p = 0; p <= window; ++p) {
        for (std::uint64_t r = 0; r <= window; ++r) {
          BicyclicPair const a{p, r};
          BicyclicPair const ea = multiply(e, a);
          if (ea.a == ea.b && a.a != a.b) {
            return Verdict::fail("E-unitary",
                                 {static_cast<Index>(k), static_cast<Index>(p),
                                  static_cast<Index>(r)});
          }
        }
      }
    }
    return Verdict::ok();
  }

}  // namespace liq
