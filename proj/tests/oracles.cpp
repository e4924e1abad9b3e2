#include "oracles.hpp"

#include <algorithm>
#include <deque>

namespace oracle {

  Table table_of(liq::FiniteSemigroup const& S) {
    int const n = static_cast<int>(S.size());
    Table     t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        t[a][b] = static_cast<int>(S.product(a, b));
      }
    }
    return t;
  }

  liq::FiniteSemigroup semigroup_of(Table const& t) {
    std::vector<std::vector<liq::Index>> rows;
    for (auto const& r : t) {
      rows.emplace_back(r.begin(), r.end());
    }
    return liq::FiniteSemigroup::from_rows(rows);
  }

  bool associative(Table const& t) {
    int const n = static_cast<int>(t.size());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          if (t[t[x][y]][z] != t[x][t[y][z]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {

    bool consistent(Table const& t) {
      int const n = static_cast<int>(t.size());
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          int const xy = t[x][y];
          if (xy < 0) {
            continue;
          }
          for (int z = 0; z < n; ++z) {
            int const yz = t[y][z];
            if (yz < 0 || t[xy][z] < 0 || t[x][yz] < 0) {
              continue;
            }
            if (t[xy][z] != t[x][yz]) {
              return false;
            }
          }
        }
      }
      return true;
    }

    void fill(Table& t, int cell, std::vector<Table>& out) {
      int const n = static_cast<int>(t.size());
      if (cell == n * n) {
        out.push_back(t);
        return;
      }
      int const col = cell / n;
      int const row = cell % n;
      for (int v = 0; v < n; ++v) {
        t[row][col] = v;
        if (consistent(t)) {
          fill(t, cell + 1, out);
        }
      }
      t[row][col] = -1;
    }

  }  // namespace

  std::vector<Table> all_semigroups(int n) {
    Table              t(n, std::vector<int>(n, -1));
    std::vector<Table> out;
    fill(t, 0, out);
    return out;
  }

  bool idempotent(Table const& t, int a) {
    return t[a][a] == a;
  }

  bool r_star(Table const& t, int a, int b) {
    int const n = static_cast<int>(t.size());
    // -1 stands for the adjoined identity.
    auto const mul = [&](int x, int y) { return x < 0 ? y : t[x][y]; };
    for (int x = -1; x < n; ++x) {
      for (int y = -1; y < n; ++y) {
        if ((mul(x, a) == mul(y, a)) != (mul(x, b) == mul(y, b))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    std::set<int> left_ideal_1(Table const& t, int a) {
      std::set<int> out{a};
      for (std::size_t x = 0; x < t.size(); ++x) {
        out.insert(t[x][a]);
      }
      return out;
    }

    std::set<int> right_ideal_1(Table const& t, int a) {
      std::set<int> out{a};
      for (std::size_t x = 0; x < t.size(); ++x) {
        out.insert(t[a][x]);
      }
      return out;
    }

  }  // namespace

  bool l_related(Table const& t, int a, int b) {
    return left_ideal_1(t, a) == left_ideal_1(t, b);
  }

  bool r_related(Table const& t, int a, int b) {
    return right_ideal_1(t, a) == right_ideal_1(t, b);
  }

  std::optional<int> plus(Table const& t, int a) {
    for (int e = 0; e < static_cast<int>(t.size()); ++e) {
      if (idempotent(t, e) && r_star(t, a, e)) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool left_ample(Table const& t) {
    int const n = static_cast<int>(t.size());
    for (int e = 0; e < n; ++e) {
      for (int f = 0; f < n; ++f) {
        if (idempotent(t, e) && idempotent(t, f) && t[e][f] != t[f][e]) {
          return false;
        }
      }
    }
    std::vector<int> p(n);
    for (int a = 0; a < n; ++a) {
      auto const e = plus(t, a);
      if (!e) {
        return false;
      }
      p[a] = *e;
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int const xy = t[x][p[y]];
        if (xy != t[p[xy]][x]) {
          return false;
        }
      }
    }
    return true;
  }

  std::set<int> left_ideal(Table const& t, int a) {
    std::set<int> out;
    for (std::size_t x = 0; x < t.size(); ++x) {
      out.insert(t[x][a]);
    }
    return out;
  }

  std::optional<int> lc_witness(Table const& t, int a, int b) {
    auto const sa = left_ideal(t, a);
    auto const sb = left_ideal(t, b);
    std::set<int> meet;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::inserter(meet, meet.begin()));
    for (int c = 0; c < static_cast<int>(t.size()); ++c) {
      if (left_ideal(t, c) == meet) {
        return c;
      }
    }
    return std::nullopt;
  }

  bool lc(Table const& t) {
    int const n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (!lc_witness(t, a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool inverse(Table const& t) {
    int const n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a) {
      int count = 0;
      for (int x = 0; x < n; ++x) {
        if (t[t[a][x]][a] == a && t[t[x][a]][x] == x) {
          ++count;
        }
      }
      if (count != 1) {
        return false;
      }
    }
    return true;
  }

  int inverse_of(Table const& t, int a) {
    for (int x = 0; x < static_cast<int>(t.size()); ++x) {
      if (t[t[a][x]][a] == a && t[t[x][a]][x] == x) {
        return x;
      }
    }
    return -1;
  }

  Chart compose(Chart const& f, Chart const& g) {
    Chart out;
    for (auto const& [x, y] : f) {
      if (auto it = g.find(y); it != g.end()) {
        out[x] = it->second;
      }
    }
    return out;
  }

  Chart invert(Chart const& f) {
    Chart out;
    for (auto const& [x, y] : f) {
      out[y] = x;
    }
    return out;
  }

  Chart rho(Table const& t, int a) {
    int const e = *plus(t, a);
    Chart     out;
    for (std::size_t x = 0; x < t.size(); ++x) {
      int const d = t[x][e];
      out[d]      = t[d][a];
    }
    return out;
  }

  std::set<Chart> hull(Table const& t) {
    std::set<Chart>   seen;
    std::deque<Chart> queue;
    std::vector<Chart> gens;
    for (int a = 0; a < static_cast<int>(t.size()); ++a) {
      gens.push_back(rho(t, a));
      gens.push_back(invert(rho(t, a)));
    }
    for (auto const& g : gens) {
      if (seen.insert(g).second) {
        queue.push_back(g);
      }
    }
    while (!queue.empty()) {
      Chart const f = queue.front();
      queue.pop_front();
      for (auto const& g : gens) {
        for (Chart const& h : {compose(f, g), compose(g, f)}) {
          if (seen.insert(h).second) {
            queue.push_back(h);
          }
        }
      }
    }
    return seen;
  }

  bool is_i_order_in_hull(Table const& t) {
    std::set<Chart> quotients;
    int const       n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        quotients.insert(compose(invert(rho(t, a)), rho(t, b)));
      }
    }
    return quotients == hull(t);
  }

  bool image_union_of_r_classes(Table const& t) {
    std::set<Chart> image;
    for (int a = 0; a < static_cast<int>(t.size()); ++a) {
      image.insert(rho(t, a));
    }
    for (auto const& q : hull(t)) {
      for (auto const& s : image) {
        bool same_domain = q.size() == s.size()
                        && std::equal(q.begin(), q.end(), s.begin(),
                                      [](auto const& x, auto const& y) { return x.first == y.first; });
        if (same_domain && !image.count(q)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::vector<int>> morphisms(Table const& s, Table const& t) {
    int const                     m = static_cast<int>(s.size());
    int const                     n = static_cast<int>(t.size());
    std::vector<std::vector<int>> out;
    std::vector<int>              phi(m, 0);
    while (true) {
      bool ok = true;
      for (int a = 0; a < m && ok; ++a) {
        for (int b = 0; b < m; ++b) {
          if (phi[s[a][b]] != t[phi[a]][phi[b]]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        out.push_back(phi);
      }
      int i = 0;
      while (i < m && ++phi[i] == n) {
        phi[i++] = 0;
      }
      if (i == m) {
        break;
      }
    }
    return out;
  }

  bool plus_preserving(Table const& s, Table const& t, std::vector<int> const& phi) {
    for (int a = 0; a < static_cast<int>(s.size()); ++a) {
      if (phi[*plus(s, a)] != *plus(t, phi[a])) {
        return false;
      }
    }
    return true;
  }

  bool lc_preserving(Table const& s, Table const& t, std::vector<int> const& phi) {
    int const m = static_cast<int>(s.size());
    for (int b = 0; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        int const  w  = *lc_witness(s, b, c);
        auto const tb = left_ideal(t, phi[b]);
        auto const tc = left_ideal(t, phi[c]);
        std::set<int> meet;
        std::set_intersection(tb.begin(), tb.end(), tc.begin(), tc.end(),
                              std::inserter(meet, meet.begin()));
        if (meet != left_ideal(t, phi[w])) {
          return false;
        }
      }
    }
    return true;
  }

  std::pair<std::uint64_t, std::uint64_t> bicyclic(std::pair<std::uint64_t, std::uint64_t> x,
                                                   std::pair<std::uint64_t, std::uint64_t> y) {
    // q^a p^b q^c p^d: pq = 1 cancels min(b, c) letters in the middle.
    std::uint64_t const cancel = std::min(x.second, y.first);
    return {x.first + y.first - cancel, x.second + y.second - cancel};
  }

  Table brandt_cyclic(int g, int index_size) {
    int const n     = 1 + g * index_size * index_size;
    auto const code = [&](int i, int h, int j) { return 1 + (i * g + h) * index_size + j; };
    Table     t(n, std::vector<int>(n, 0));
    for (int i = 0; i < index_size; ++i) {
      for (int h = 0; h < g; ++h) {
        for (int j = 0; j < index_size; ++j) {
          for (int k = 0; k < index_size; ++k) {
            for (int h2 = 0; h2 < g; ++h2) {
              for (int l = 0; l < index_size; ++l) {
                t[code(i, h, j)][code(k, h2, l)] = j == k ? code(i, (h + h2) % g, l) : 0;
              }
            }
          }
        }
      }
    }
    return t;
  }

  std::vector<std::vector<int>> left_i_orders(Table const& q) {
    int const                     n = static_cast<int>(q.size());
    std::vector<std::vector<int>> out;
    for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
      std::vector<int> members;
      for (int a = 0; a < n; ++a) {
        if (bits >> a & 1u) {
          members.push_back(a);
        }
      }
      bool closed = true;
      for (int a : members) {
        for (int b : members) {
          closed = closed && (bits >> q[a][b] & 1u);
        }
      }
      if (!closed) {
        continue;
      }
      std::set<int> quotients;
      for (int a : members) {
        for (int b : members) {
          quotients.insert(q[inverse_of(q, a)][b]);
        }
      }
      if (static_cast<int>(quotients.size()) == n) {
        out.push_back(members);
      }
    }
    return out;
  }

  bool straight(Table const& q, std::vector<int> const& members) {
    std::set<int> quotients;
    for (int a : members) {
      for (int b : members) {
        if (q[a][inverse_of(q, a)] == q[b][inverse_of(q, b)]) {
          quotients.insert(q[inverse_of(q, a)][b]);
        }
      }
    }
    return quotients.size() == q.size();
  }

}  // namespace oracle
