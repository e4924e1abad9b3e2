#include "liq/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace liq {

  namespace {

    using Invariant = std::tuple<bool, std::size_t, std::size_t, std::size_t, std::size_t>;

    // (idempotent, |Sa|, |aS|, index, period) of each element.
    std::vector<Invariant> invariants(FiniteSemigroup const& S) {
      std::vector<Invariant> out;
      out.reserve(S.size());
      for (Index a = 0; a < S.size(); ++a) {
        auto const left  = S.left_multiples(a);
        auto const right = S.right_multiples(a);
        // Powers a, a², ... until the first repeat.
        std::vector<Index> seen_at(S.size(), kNone);
        Index              p = a;
        std::size_t        k = 1;
        while (seen_at[p] == kNone) {
          seen_at[p] = static_cast<Index>(k++);
          p          = S.product(p, a);
        }
        std::size_t const index  = seen_at[p];
        std::size_t const period = k - index;
        out.emplace_back(S.is_idempotent(a),
                         std::count(left.begin(), left.end(), true),
                         std::count(right.begin(), right.end(), true),
                         index,
                         period);
      }
      return out;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteSemigroup const& S, FiniteSemigroup const& T)
          : _s(S),
            _t(T),
            _inv_s(invariants(S)),
            _inv_t(invariants(T)),
            _map(S.size(), kNone),
            _rev(T.size(), kNone) {}

      std::optional<ElementMap> run() {
        auto a = std::vector<Invariant>(_inv_s), b = std::vector<Invariant>(_inv_t);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        if (search()) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      bool assign(Index a, Index t) {
        if (_map[a] != kNone) {
          return _map[a] == t;
        }
        if (_rev[t] != kNone || _inv_s[a] != _inv_t[t]) {
          return false;
        }
        _map[a] = t;
        _rev[t] = a;
        _trail.push_back(a);
        return true;
      }

      // Forces images of products of mapped elements; false on a clash.
      bool propagate(std::size_t from) {
        for (std::size_t i = from; i < _trail.size(); ++i) {
          Index const a = _trail[i];
          for (std::size_t j = 0; j <= i; ++j) {
            Index const x = _trail[j];
            if (!assign(_s.product(a, x), _t.product(_map[a], _map[x]))
                || !assign(_s.product(x, a), _t.product(_map[x], _map[a]))) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          Index const a = _trail.back();
          _trail.pop_back();
          _rev[_map[a]] = kNone;
          _map[a]       = kNone;
        }
      }

      bool search() {
        Index next = kNone;
        for (Index a = 0; a < _s.size(); ++a) {
          if (_map[a] == kNone) {
            next = a;
            break;
          }
        }
        if (next == kNone) {
          return true;
        }
        for (Index t = 0; t < _t.size(); ++t) {
          if (_rev[t] != kNone || _inv_s[next] != _inv_t[t]) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (assign(next, t) && propagate(mark) && search()) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      FiniteSemigroup const& _s;
      FiniteSemigroup const& _t;
      std::vector<Invariant> _inv_s, _inv_t;
      ElementMap             _map, _rev;
      std::vector<Index>     _trail;
    };

  }  // namespace

  std::optional<ElementMap> find_isomorphism(FiniteSemigroup const& S,
                                             FiniteSemigroup const& T) {
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    return IsoSearch(S, T).run();
  }

  bool are_isomorphic(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    return find_isomorphism(S, T).has_value();
  }

  std::vector<Index> canonical_form(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    if (n > 7) {
      throw UnsupportedError("canonical_form is brute force and limited to order 7");
    }
    // perm maps new labels to old ones.
    std::vector<Index> perm(n), pos(n), best, cur(n * n);
    std::iota(perm.begin(), perm.end(), Index(0));
    do {
      for (Index i = 0; i < n; ++i) {
        pos[perm[i]] = i;
      }
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
          cur[i * n + j] = pos[S.product(perm[i], perm[j])];
        }
      }
      if (best.empty() || cur < best) {
        best = cur;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  std::vector<FiniteSemigroup> isomorphism_class_representatives(
      std::vector<FiniteSemigroup> const& all) {
    std::vector<FiniteSemigroup> out;
    std::map<std::pair<std::size_t, std::vector<Index>>, bool> seen;
    for (auto const& S : all) {
      if (S.size() <= 7) {
        if (seen.emplace(std::make_pair(S.size(), canonical_form(S)), true).second) {
          out.push_back(S);
        }
      } else if (std::none_of(out.begin(), out.end(), [&](FiniteSemigroup const& R) {
                   return are_isomorphic(R, S);
                 })) {
        out.push_back(S);
      }
    }
    return out;
  }

}  // namespace liq
