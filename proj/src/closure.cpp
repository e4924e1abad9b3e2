#include "liq/closure.hpp"

#include <algorithm>

#include "liq/kernels.hpp"

namespace liq {

  ChartSemigroup::ChartSemigroup(FiniteSemigroup table, std::vector<PartialBijection> charts)
      : _table(std::move(table)), _charts(std::move(charts)) {
    for (Index i = 0; i < _charts.size(); ++i) {
      _lookup.emplace(_charts[i], i);
    }
  }

  std::optional<Index> ChartSemigroup::find(PartialBijection const& f) const {
    auto it = _lookup.find(f);
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ChartSemigroup closure(std::span<PartialBijection const> gens,
                         bool                              under_inverses,
                         std::size_t                       budget) {
    if (gens.empty()) {
      throw InputError("closure needs at least one generator");
    }
    std::size_t const ground = gens.front().ground();
    for (auto const& g : gens) {
      if (g.ground() != ground) {
        throw InputError("generators live on different ground sets");
      }
    }

    std::vector<PartialBijection> generators(gens.begin(), gens.end());
    if (under_inverses) {
      for (auto const& g : gens) {
        generators.push_back(g.inverse());
      }
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    std::vector<PartialBijection>                                     elements;
    std::unordered_map<PartialBijection, Index, PartialBijectionHash> seen;
    auto add = [&](PartialBijection const& f) {
      if (seen.contains(f)) {
        return false;
      }
      if (elements.size() >= budget) {
        throw ResourceError("closure exceeded its budget of " + std::to_string(budget)
                                + " elements",
                            elements.size());
      }
      seen.emplace(f, static_cast<Index>(elements.size()));
      elements.push_back(f);
      return true;
    };

    for (auto const& g : generators) {
      add(g);
    }
    std::size_t level_begin = 0;
    while (level_begin < elements.size()) {
      std::size_t const             level_end = elements.size();
      std::vector<PartialBijection> fresh;
      std::unordered_map<PartialBijection, bool, PartialBijectionHash> fresh_seen;
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (auto const& g : generators) {
          auto p = compose(elements[i], g);
          if (!seen.contains(p) && fresh_seen.emplace(p, true).second) {
            fresh.push_back(std::move(p));
          }
        }
      }
      std::sort(fresh.begin(), fresh.end());
      for (auto const& f : fresh) {
        add(f);
      }
      level_begin = level_end;
    }

    std::size_t const n     = elements.size();
    auto const        table = kernels::fill_table(
        n,
        [&](Index a, Index b) { return seen.at(compose(elements[a], elements[b])); },
        kernels::Exec::parallel);
    return ChartSemigroup(FiniteSemigroup::trusted(n, table), std::move(elements));
  }

}  // namespace liq
