#ifndef LIQ_TESTS_ORACLES_HPP_
#define LIQ_TESTS_ORACLES_HPP_

// Brute-force reference computations written straight from the
// definitions. They share no code with the library beyond reading a table.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "liq/finite_semigroup.hpp"

namespace oracle {

  using Table = std::vector<std::vector<int>>;

  Table table_of(liq::FiniteSemigroup const& S);
  liq::FiniteSemigroup semigroup_of(Table const& t);

  bool associative(Table const& t);

  // Every associative table of order n; plain recursion over cells in
  // column-major order.
  std::vector<Table> all_semigroups(int n);

  bool idempotent(Table const& t, int a);

  // R* computed over S¹.
  bool r_star(Table const& t, int a, int b);

  bool l_related(Table const& t, int a, int b);  // S¹a = S¹b
  bool r_related(Table const& t, int a, int b);  // aS¹ = bS¹

  std::optional<int> plus(Table const& t, int a);

  bool left_ample(Table const& t);

  // Sa (no adjoined identity).
  std::set<int> left_ideal(Table const& t, int a);

  std::optional<int> lc_witness(Table const& t, int a, int b);
  bool               lc(Table const& t);

  bool inverse(Table const& t);
  int  inverse_of(Table const& t, int a);

  // A partial one-one map as a sorted map.
  using Chart = std::map<int, int>;

  Chart compose(Chart const& f, Chart const& g);  // f then g
  Chart invert(Chart const& f);

  Chart rho(Table const& t, int a);

  // Σ(S) as a set of charts, by breadth-first closure.
  std::set<Chart> hull(Table const& t);

  bool is_i_order_in_hull(Table const& t);

  // θ_S(S) is a union of R-classes of Σ(S) (equal domains).
  bool image_union_of_r_classes(Table const& t);

  // Every map S → T (as vectors) that is multiplicative.
  std::vector<std::vector<int>> morphisms(Table const& s, Table const& t);

  bool plus_preserving(Table const& s, Table const& t, std::vector<int> const& phi);

  bool lc_preserving(Table const& s, Table const& t, std::vector<int> const& phi);

  // Bicyclic monoid through the words q^a p^b with pq = 1.
  std::pair<std::uint64_t, std::uint64_t> bicyclic(std::pair<std::uint64_t, std::uint64_t> x,
                                                   std::pair<std::uint64_t, std::uint64_t> y);

  // B⁰(Z_g, I) with zero 0 and (i, h, j) at 1 + (i g + h) |I| + j.
  Table brandt_cyclic(int g, int index_size);

  // Every subset of an inverse semigroup (as a bit mask) that is closed
  // and whose quotients a⁻¹b cover the semigroup.
  std::vector<std::vector<int>> left_i_orders(Table const& q);

  bool straight(Table const& q, std::vector<int> const& members);

}  // namespace oracle

#endif  // LIQ_TESTS_ORACLES_HPP_
