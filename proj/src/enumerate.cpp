#include "liq/enumerate.hpp"

#include <sstream>

#include "liq/hull.hpp"
#include "liq/inverse.hpp"
#include "liq/isomorphism.hpp"
#include "liq/relations.hpp"

namespace liq {

  unsigned parse_filters(std::string const& list) {
    unsigned           out = kNoFilter;
    std::string        cleaned(list);
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::string        word;
    while (in >> word) {
      if (word == "left_ample") {
        out |= kLeftAmple;
      } else if (word == "lc") {
        out |= kLC;
      } else if (word == "inverse") {
        out |= kInverse;
      } else if (word == "monoid") {
        out |= kMonoid;
      } else if (word == "semilattice") {
        out |= kSemilattice;
      } else if (word == "group") {
        out |= kGroup;
      } else {
        throw InputError("unknown filter '" + word + "'");
      }
    }
    return out;
  }

  bool passes(FiniteSemigroup const& S, unsigned filters) {
    if ((filters & kMonoid) && !S.is_monoid()) {
      return false;
    }
    if ((filters & kSemilattice) && !is_semilattice(S)) {
      return false;
    }
    if ((filters & kGroup) && !is_group(S)) {
      return false;
    }
    if ((filters & kInverse) && !recognize_inverse(S).view) {
      return false;
    }
    if ((filters & kLeftAmple) && !is_left_ample(S)) {
      return false;
    }
    if ((filters & kLC) && !has_lc(S)) {
      return false;
    }
    return true;
  }

  namespace {

    class TableSearch {
     public:
      explicit TableSearch(std::size_t n) : _n(n), _t(n * n, kNone) {}

      // Fixes the first row; false when it already breaks associativity.
      bool seed_first_row(std::size_t code) {
        for (std::size_t b = 0; b < _n; ++b) {
          _t[b] = static_cast<Index>(code % _n);
          code /= _n;
        }
        // Most significant digit first, so prefixes sort lexicographically.
        std::reverse(_t.begin(), _t.begin() + static_cast<long>(_n));
        return consistent();
      }

      void run(std::size_t first_cell, std::vector<FiniteSemigroup>& out) {
        _out = &out;
        fill(first_cell);
      }

     private:
      Index at(std::size_t a, std::size_t b) const {
        return _t[a * _n + b];
      }

      // Every fully defined triple associates.
      bool consistent() const {
        for (std::size_t x = 0; x < _n; ++x) {
          for (std::size_t y = 0; y < _n; ++y) {
            Index const xy = at(x, y);
            if (xy == kNone) {
              continue;
            }
            for (std::size_t z = 0; z < _n; ++z) {
              Index const yz = at(y, z);
              if (yz == kNone) {
                continue;
              }
              Index const l = at(xy, z), r = at(x, yz);
              if (l != kNone && r != kNone && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void fill(std::size_t cell) {
        if (cell == _t.size()) {
          _out->push_back(FiniteSemigroup::trusted(_n, _t));
          return;
        }
        for (Index v = 0; v < _n; ++v) {
          _t[cell] = v;
          if (consistent()) {
            fill(cell + 1);
          }
        }
        _t[cell] = kNone;
      }

      std::size_t                   _n;
      std::vector<Index>            _t;
      std::vector<FiniteSemigroup>* _out = nullptr;
    };

    std::vector<FiniteSemigroup> all_tables(std::size_t n, kernels::Exec exec) {
      if (exec == kernels::Exec::serial) {
        std::vector<FiniteSemigroup> out;
        TableSearch(n).run(0, out);
        return out;
      }
      std::size_t prefixes = 1;
      for (std::size_t i = 0; i < n; ++i) {
        prefixes *= n;
      }
      auto parts = kernels::ordered_map<std::vector<FiniteSemigroup>>(
          prefixes,
          [n](std::size_t code) {
            std::vector<FiniteSemigroup> part;
            TableSearch                  search(n);
            if (search.seed_first_row(code)) {
              search.run(n, part);
            }
            return part;
          },
          exec);
      std::vector<FiniteSemigroup> out;
      for (auto& part : parts) {
        out.insert(out.end(),
                   std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
      }
      return out;
    }

  }  // namespace

  std::vector<FiniteSemigroup> enumerate_semigroups(EnumerateOptions const& options) {
    if (options.order < 1 || options.order > kMaxEnumerationOrder) {
      throw InputError("enumeration order must lie in [1, "
                       + std::to_string(kMaxEnumerationOrder) + "], got "
                       + std::to_string(options.order));
    }
    auto tables = all_tables(options.order, options.exec);
    if (options.filters != kNoFilter) {
      auto keep = kernels::ordered_map<char>(
          tables.size(),
          [&](std::size_t i) -> char { return passes(tables[i], options.filters); },
          options.exec);
      std::vector<FiniteSemigroup> kept;
      for (std::size_t i = 0; i < tables.size(); ++i) {
        if (keep[i]) {
          kept.push_back(std::move(tables[i]));
        }
      }
      tables = std::move(kept);
    }
    if (options.up_to_isomorphism) {
      tables = isomorphism_class_representatives(tables);
    }
    return tables;
  }

  std::vector<FiniteSemigroup> enumerate_up_to(std::size_t max_order,
                                               unsigned    filters,
                                               bool        up_to_isomorphism) {
    std::vector<FiniteSemigroup> out;
    for (std::size_t n = 1; n <= max_order; ++n) {
      auto part = enumerate_semigroups({n, filters, up_to_isomorphism});
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

}  // namespace liq
