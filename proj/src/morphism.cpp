#include "liq/morphism.hpp"

#include <algorithm>
#include <numeric>

#include "liq/relations.hpp"

namespace liq {

  std::optional<std::vector<Index>> morphism_violation(FiniteSemigroup const& S,
                                                       FiniteSemigroup const& T,
                                                       ElementMap const&      map) {
    if (map.size() != S.size()) {
      throw InputError("map has " + std::to_string(map.size()) + " entries, source has "
                       + std::to_string(S.size()) + " elements");
    }
    for (Index a = 0; a < S.size(); ++a) {
      if (map[a] >= T.size()) {
        throw InputError("image of " + std::to_string(a) + " is outside the target");
      }
    }
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        if (map[S.product(a, b)] != T.product(map[a], map[b])) {
          return std::vector<Index>{a, b};
        }
      }
    }
    return std::nullopt;
  }

  bool is_morphism(FiniteSemigroup const& S, FiniteSemigroup const& T, ElementMap const& map) {
    return !morphism_violation(S, T, map).has_value();
  }

  bool is_isomorphism(FiniteSemigroup const& S,
                      FiniteSemigroup const& T,
                      ElementMap const&      map) {
    if (S.size() != T.size() || !is_morphism(S, T, map)) {
      return false;
    }
    std::vector<bool> hit(T.size(), false);
    for (Index y : map) {
      if (hit[y]) {
        return false;
      }
      hit[y] = true;
    }
    return true;
  }

  ElementMap identity_map(std::size_t n) {
    ElementMap out(n);
    std::iota(out.begin(), out.end(), Index(0));
    return out;
  }

  ElementMap then(ElementMap const& first, ElementMap const& second) {
    ElementMap out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      out[i] = second.at(first[i]);
    }
    return out;
  }

  ElementMap inverse_map(ElementMap const& map) {
    ElementMap out(map.size(), kNone);
    for (Index i = 0; i < map.size(); ++i) {
      if (map[i] >= map.size() || out[map[i]] != kNone) {
        throw InputError("map is not a bijection");
      }
      out[map[i]] = i;
    }
    return out;
  }

  void for_each_morphism(FiniteSemigroup const&                        S,
                         FiniteSemigroup const&                        T,
                         MorphismKind                                  kind,
                         std::function<bool(ElementMap const&)> const& visit) {
    std::size_t const n = S.size();

    std::vector<Index> plus_s, plus_t;
    if (kind == MorphismKind::plus_preserving) {
      plus_s = plus_map(S);
      plus_t = plus_map(T);
      if (std::ranges::count(plus_s, kNone) > 0 || std::ranges::count(plus_t, kNone) > 0) {
        throw PreconditionError("(2,1)-morphisms need + defined on source and target");
      }
    }
    std::optional<Index> id_s, id_t;
    if (kind == MorphismKind::monoid) {
      id_s = S.identity();
      id_t = T.identity();
      if (!id_s || !id_t) {
        throw PreconditionError("monoid morphisms need monoids on both sides");
      }
    }

    // preimages[p] lists the pairs (x, y) with xy = p.
    std::vector<std::vector<std::pair<Index, Index>>> preimages(n);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        preimages[S.product(x, y)].emplace_back(x, y);
      }
    }

    ElementMap map(n, kNone);
    auto consistent = [&](Index a) {
      for (Index x = 0; x <= a; ++x) {
        Index p = S.product(a, x);
        if (p <= a && map[p] != T.product(map[a], map[x])) {
          return false;
        }
        p = S.product(x, a);
        if (p <= a && map[p] != T.product(map[x], map[a])) {
          return false;
        }
      }
      for (auto const& [x, y] : preimages[a]) {
        if (x <= a && y <= a && map[a] != T.product(map[x], map[y])) {
          return false;
        }
      }
      if (kind == MorphismKind::plus_preserving && plus_s[a] <= a
          && map[plus_s[a]] != plus_t[map[a]]) {
        return false;
      }
      if (kind == MorphismKind::plus_preserving) {
        // a may itself be the + of an earlier element.
        for (Index x = 0; x < a; ++x) {
          if (plus_s[x] == a && map[a] != plus_t[map[x]]) {
            return false;
          }
        }
      }
      if (kind == MorphismKind::monoid && a == *id_s && map[a] != *id_t) {
        return false;
      }
      return true;
    };

    bool stop = false;
    std::function<void(Index)> extend = [&](Index a) {
      if (stop) {
        return;
      }
      if (a == n) {
        stop = !visit(map);
        return;
      }
      for (Index t = 0; t < T.size() && !stop; ++t) {
        map[a] = t;
        if (consistent(a)) {
          extend(a + 1);
        }
      }
      map[a] = kNone;
    };
    extend(0);
  }

  std::vector<ElementMap> all_morphisms(FiniteSemigroup const& S,
                                        FiniteSemigroup const& T,
                                        MorphismKind           kind) {
    std::vector<ElementMap> out;
    for_each_morphism(S, T, kind, [&](ElementMap const& m) {
      out.push_back(m);
      return true;
    });
    return out;
  }

}  // namespace liq
