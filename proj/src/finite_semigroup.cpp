#include "liq/finite_semigroup.hpp"

#include <algorithm>
#include <sstream>

#include "liq/kernels.hpp"

namespace liq {

  std::string to_string(std::vector<Index> const& xs) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < xs.size(); ++i) {
      os << (i == 0 ? "" : ",") << xs[i];
    }
    os << ')';
    return os.str();
  }

  namespace {

    void validate_range(std::size_t n, std::span<Index const> table) {
      if (n == 0) {
        throw InputError("a semigroup table must have at least one element");
      }
      if (table.size() != n * n) {
        throw InputError("table has " + std::to_string(table.size())
                         + " entries, expected " + std::to_string(n * n));
      }
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (table[i] >= n) {
          throw InputError("cell (" + std::to_string(i / n) + ","
                           + std::to_string(i % n) + ") = "
                           + std::to_string(table[i]) + " is out of range [0,"
                           + std::to_string(n) + ")");
        }
      }
    }

    std::vector<Index> flatten(std::vector<std::vector<Index>> const& rows) {
      std::size_t const n = rows.size();
      std::vector<Index> flat;
      flat.reserve(n * n);
      for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) {
          throw InputError("row " + std::to_string(r) + " has "
                           + std::to_string(rows[r].size())
                           + " entries, expected " + std::to_string(n));
        }
        flat.insert(flat.end(), rows[r].begin(), rows[r].end());
      }
      return flat;
    }

    void check_names(std::size_t n, std::vector<std::string> const& names) {
      if (!names.empty() && names.size() != n) {
        throw InputError("expected " + std::to_string(n) + " names, got "
                         + std::to_string(names.size()));
      }
    }

  }  // namespace

  bool is_associative(std::vector<std::vector<Index>> const& rows) {
    auto const flat = flatten(rows);
    return is_associative(rows.size(), flat);
  }

  bool is_associative(std::size_t n, std::span<Index const> table) {
    validate_range(n, table);
    return kernels::associative(n, table, kernels::Exec::parallel);
  }

  std::optional<std::vector<Index>> associativity_violation(
      std::size_t            n,
      std::span<Index const> t) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t const ab = t[a * n + b];
        for (std::size_t c = 0; c < n; ++c) {
          if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
            return std::vector<Index>{static_cast<Index>(a),
                                      static_cast<Index>(b),
                                      static_cast<Index>(c)};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup FiniteSemigroup::from_rows(
      std::vector<std::vector<Index>> const& rows,
      std::vector<std::string>               names) {
    return from_table(rows.size(), flatten(rows), std::move(names));
  }

  FiniteSemigroup FiniteSemigroup::from_table(std::size_t              n,
                                              std::vector<Index>       table,
                                              std::vector<std::string> names) {
    validate_range(n, table);
    check_names(n, names);
    if (!kernels::associative(n, table, kernels::Exec::parallel)) {
      auto const w = associativity_violation(n, table);
      throw InputError("table is not associative at (a,b,c) = " + to_string(*w));
    }
    return FiniteSemigroup(n, std::move(table), std::move(names), false);
  }

  FiniteSemigroup FiniteSemigroup::trusted(std::size_t              n,
                                           std::vector<Index>       table,
                                           std::vector<std::string> names,
                                           bool                     adjoined) {
    return FiniteSemigroup(n, std::move(table), std::move(names), adjoined);
  }

  std::string FiniteSemigroup::name(Index a) const {
    if (!_names.empty()) {
      return _names[a];
    }
    return std::to_string(a);
  }

  FiniteSemigroup FiniteSemigroup::with_names(std::vector<std::string> names) const {
    check_names(_n, names);
    return FiniteSemigroup(_n, _table, std::move(names), _adjoined);
  }

  std::vector<Index> FiniteSemigroup::idempotents() const {
    std::vector<Index> out;
    for (Index a = 0; a < _n; ++a) {
      if (is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  std::optional<Index> FiniteSemigroup::identity() const {
    for (Index e = 0; e < _n; ++e) {
      bool ok = true;
      for (Index a = 0; a < _n && ok; ++a) {
        ok = product(e, a) == a && product(a, e) == a;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  bool FiniteSemigroup::is_commutative() const {
    for (Index a = 0; a < _n; ++a) {
      for (Index b = a + 1; b < _n; ++b) {
        if (product(a, b) != product(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteSemigroup FiniteSemigroup::with_identity() const {
    if (is_monoid()) {
      return *this;
    }
    std::size_t const  m = _n + 1;
    std::vector<Index> t(m * m);
    for (Index a = 0; a < m; ++a) {
      for (Index b = 0; b < m; ++b) {
        Index v;
        if (a == 0) {
          v = b;
        } else if (b == 0) {
          v = a;
        } else {
          v = product(a - 1, b - 1) + 1;
        }
        t[a * m + b] = v;
      }
    }
    std::vector<std::string> names;
    if (!_names.empty()) {
      names.push_back("1");
      names.insert(names.end(), _names.begin(), _names.end());
    }
    return FiniteSemigroup(m, std::move(t), std::move(names), true);
  }

  Subset FiniteSemigroup::left_multiples(Index a) const {
    Subset out(_n, false);
    for (Index x = 0; x < _n; ++x) {
      out[product(x, a)] = true;
    }
    return out;
  }

  Subset FiniteSemigroup::right_multiples(Index a) const {
    Subset out(_n, false);
    for (Index x = 0; x < _n; ++x) {
      out[product(a, x)] = true;
    }
    return out;
  }

  FiniteSemigroup FiniteSemigroup::restrict_to(std::vector<Index> const& members) const {
    if (members.empty()) {
      throw InputError("a subsemigroup must be nonempty");
    }
    std::vector<Index> local(_n, kNone);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (members[i] >= _n) {
        throw InputError("member " + std::to_string(members[i]) + " is out of range");
      }
      if (i > 0 && members[i] <= members[i - 1]) {
        throw InputError("members must be sorted and distinct");
      }
      local[members[i]] = static_cast<Index>(i);
    }
    std::size_t const  m = members.size();
    std::vector<Index> t(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        Index const p = product(members[i], members[j]);
        if (local[p] == kNone) {
          throw InputError("members are not closed: " + name(members[i]) + "*"
                           + name(members[j]) + " = " + name(p));
        }
        t[i * m + j] = local[p];
      }
    }
    std::vector<std::string> names;
    if (!_names.empty()) {
      for (Index x : members) {
        names.push_back(_names[x]);
      }
    }
    return FiniteSemigroup(m, std::move(t), std::move(names), false);
  }

  FiniteSemigroup cyclic_group(std::size_t n) {
    std::vector<Index> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a * n + b] = static_cast<Index>((a + b) % n);
      }
    }
    return FiniteSemigroup::trusted(n, std::move(t));
  }

  FiniteSemigroup trivial_semigroup() {
    return cyclic_group(1);
  }

  FiniteSemigroup chain_semilattice(std::size_t n) {
    std::vector<Index> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a * n + b] = static_cast<Index>(std::min(a, b));
      }
    }
    return FiniteSemigroup::trusted(n, std::move(t));
  }

  FiniteSemigroup left_zero_semigroup(std::size_t n) {
    std::vector<Index> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a * n + b] = static_cast<Index>(a);
      }
    }
    return FiniteSemigroup::trusted(n, std::move(t));
  }

  FiniteSemigroup null_semigroup(std::size_t n) {
    return FiniteSemigroup::trusted(n, std::vector<Index>(n * n, 0));
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    std::size_t const  m = S.size(), k = T.size(), n = m * k;
    std::vector<Index> t(n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        t[a * n + b] = static_cast<Index>(S.product(a / k, b / k) * k
                                          + T.product(a % k, b % k));
      }
    }
    return FiniteSemigroup::trusted(n, std::move(t));
  }

  bool is_group(FiniteSemigroup const& S) {
    auto const e = S.identity();
    if (!e) {
      return false;
    }
    for (Index a = 0; a < S.size(); ++a) {
      auto const r = S.row(a);
      if (std::find(r.begin(), r.end(), *e) == r.end()) {
        return false;
      }
    }
    return true;
  }

  bool is_semilattice(FiniteSemigroup const& S) {
    return S.idempotents().size() == S.size() && S.is_commutative();
  }

  bool is_regular(FiniteSemigroup const& S) {
    for (Index a = 0; a < S.size(); ++a) {
      bool found = false;
      for (Index x = 0; x < S.size() && !found; ++x) {
        found = S.product(S.product(a, x), a) == a;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_right_cancellative(FiniteSemigroup const& S) {
    // xa = ya implies x = y: each column is injective.
    for (Index a = 0; a < S.size(); ++a) {
      std::vector<bool> seen(S.size(), false);
      for (Index x = 0; x < S.size(); ++x) {
        Index const p = S.product(x, a);
        if (seen[p]) {
          return false;
        }
        seen[p] = true;
      }
    }
    return true;
  }

  bool is_left_cancellative(FiniteSemigroup const& S) {
    for (Index a = 0; a < S.size(); ++a) {
      std::vector<bool> seen(S.size(), false);
      for (Index x = 0; x < S.size(); ++x) {
        Index const p = S.product(a, x);
        if (seen[p]) {
          return false;
        }
        seen[p] = true;
      }
    }
    return true;
  }

}  // namespace liq
