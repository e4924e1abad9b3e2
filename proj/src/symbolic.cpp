#include "liq/symbolic.hpp"

#include <algorithm>
#include <functional>

namespace liq {

  BicyclicPair multiply(BicyclicPair x, BicyclicPair y) noexcept {
    std::uint64_t const m = std::max(x.b, y.a);
    return {x.a - x.b + m, y.b - y.a + m};
  }

  std::string to_string(BicyclicPair x) {
    return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
  }

  std::string to_string(SymbolicKind kind) {
    switch (kind) {
      case SymbolicKind::Bicyclic:
        return "bicyclic";
      case SymbolicKind::AdditiveNaturals:
        return "nat";
      case SymbolicKind::FreeMonoidRank2:
        return "free2";
    }
    return "bicyclic";
  }

  SymbolicKind parse_symbolic_kind(std::string const& name) {
    if (name == "bicyclic") {
      return SymbolicKind::Bicyclic;
    }
    if (name == "nat") {
      return SymbolicKind::AdditiveNaturals;
    }
    if (name == "free2") {
      return SymbolicKind::FreeMonoidRank2;
    }
    throw InputError("unknown built-in '" + name + "' (expected bicyclic, nat or free2)");
  }

  std::string to_string(SymbolicElement const& x) {
    if (auto p = std::get_if<BicyclicPair>(&x)) {
      return to_string(*p);
    }
    if (auto n = std::get_if<std::uint64_t>(&x)) {
      return std::to_string(*n);
    }
    auto const& w = std::get<std::string>(x);
    return w.empty() ? "1" : w;
  }

  namespace {

    bool is_suffix(std::string const& s, std::string const& of) {
      return s.size() <= of.size() && of.compare(of.size() - s.size(), s.size(), s) == 0;
    }

  }  // namespace

  SymbolicSemigroup::SymbolicSemigroup(SymbolicKind kind, std::uint64_t window)
      : _kind(kind), _window(window) {
    if (kind == SymbolicKind::FreeMonoidRank2 && window > kMaxFreeWindow) {
      throw InputError("free monoid window must be at most "
                       + std::to_string(kMaxFreeWindow));
    }
    if (window > 100000) {
      throw InputError("window too large");
    }
  }

  namespace {

    template <typename T>
    T const& as(SymbolicElement const& x, SymbolicKind kind) {
      if (auto p = std::get_if<T>(&x)) {
        return *p;
      }
      throw InputError("element " + to_string(x) + " does not belong to the "
                       + to_string(kind) + " built-in");
    }

  }  // namespace

  SymbolicElement SymbolicSemigroup::multiply(SymbolicElement const& x,
                                              SymbolicElement const& y) const {
    switch (_kind) {
      case SymbolicKind::Bicyclic:
        return liq::multiply(as<BicyclicPair>(x, _kind), as<BicyclicPair>(y, _kind));
      case SymbolicKind::AdditiveNaturals:
        return as<std::uint64_t>(x, _kind) + as<std::uint64_t>(y, _kind);
      case SymbolicKind::FreeMonoidRank2:
        return as<std::string>(x, _kind) + as<std::string>(y, _kind);
    }
    return x;
  }

  SymbolicElement SymbolicSemigroup::identity() const {
    switch (_kind) {
      case SymbolicKind::Bicyclic:
        return BicyclicPair{0, 0};
      case SymbolicKind::AdditiveNaturals:
        return std::uint64_t{0};
      case SymbolicKind::FreeMonoidRank2:
        return std::string{};
    }
    return std::string{};
  }

  std::optional<SymbolicElement> SymbolicSemigroup::inverse(SymbolicElement const& x) const {
    if (_kind != SymbolicKind::Bicyclic) {
      return std::nullopt;
    }
    return liq::inverse(as<BicyclicPair>(x, _kind));
  }

  std::vector<SymbolicElement> SymbolicSemigroup::window_elements() const {
    std::vector<SymbolicElement> out;
    switch (_kind) {
      case SymbolicKind::Bicyclic:
        for (std::uint64_t a = 0; a <= _window; ++a) {
          for (std::uint64_t b = 0; b <= _window; ++b) {
            out.emplace_back(BicyclicPair{a, b});
          }
        }
        break;
      case SymbolicKind::AdditiveNaturals:
        for (std::uint64_t n = 0; n <= _window; ++n) {
          out.emplace_back(n);
        }
        break;
      case SymbolicKind::FreeMonoidRank2: {
        std::vector<std::string> level{""};
        out.emplace_back(std::string{});
        for (std::uint64_t len = 1; len <= _window; ++len) {
          std::vector<std::string> next;
          for (auto const& w : level) {
            next.push_back(w + "x");
            next.push_back(w + "y");
          }
          for (auto const& w : next) {
            out.emplace_back(w);
          }
          level = std::move(next);
        }
        break;
      }
    }
    return out;
  }

  bool SymbolicSemigroup::r_related(SymbolicElement const& x, SymbolicElement const& y) const {
    if (_kind == SymbolicKind::Bicyclic) {
      return as<BicyclicPair>(x, _kind).a == as<BicyclicPair>(y, _kind).a;
    }
    multiply(x, y);  // kind check
    return x == y;
  }

  bool SymbolicSemigroup::l_related(SymbolicElement const& x, SymbolicElement const& y) const {
    if (_kind == SymbolicKind::Bicyclic) {
      return as<BicyclicPair>(x, _kind).b == as<BicyclicPair>(y, _kind).b;
    }
    multiply(x, y);
    return x == y;
  }

  bool SymbolicSemigroup::r_star_related(SymbolicElement const& x,
                                         SymbolicElement const& y) const {
    // The bicyclic monoid is regular, so R* = R there.
    if (_kind == SymbolicKind::Bicyclic) {
      return r_related(x, y);
    }
    multiply(x, y);
    return true;
  }

  SymbolicElement SymbolicSemigroup::plus(SymbolicElement const& x) const {
    if (_kind == SymbolicKind::Bicyclic) {
      auto const p = as<BicyclicPair>(x, _kind);
      return BicyclicPair{p.a, p.a};
    }
    multiply(x, x);
    return identity();
  }

  std::optional<SymbolicElement> SymbolicSemigroup::lc_witness(SymbolicElement const& x,
                                                               SymbolicElement const& y) const {
    switch (_kind) {
      case SymbolicKind::Bicyclic:
        return BicyclicPair{0,
                            std::max(as<BicyclicPair>(x, _kind).b,
                                     as<BicyclicPair>(y, _kind).b)};
      case SymbolicKind::AdditiveNaturals:
        return std::max(as<std::uint64_t>(x, _kind), as<std::uint64_t>(y, _kind));
      case SymbolicKind::FreeMonoidRank2: {
        auto const& u = as<std::string>(x, _kind);
        auto const& v = as<std::string>(y, _kind);
        if (is_suffix(u, v)) {
          return v;
        }
        if (is_suffix(v, u)) {
          return u;
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  FiniteSemigroup SymbolicSemigroup::materialize_table() const {
    throw UnsupportedError("the " + to_string(_kind)
                           + " built-in is infinite and has no multiplication table");
  }

  Verdict SymbolicSemigroup::validate_window() const {
    // Elements under test and the multipliers used to probe ideals.
    std::uint64_t const h = std::min<std::uint64_t>(
        _window, _kind == SymbolicKind::FreeMonoidRank2 ? 3 : 5);
    auto const elements = SymbolicSemigroup(_kind, h).window_elements();
    auto const probes   = SymbolicSemigroup(_kind, 2 * h).window_elements();

    auto in_left = [&](SymbolicElement const& z, SymbolicElement const& x) {
      return std::any_of(probes.begin(), probes.end(), [&](auto const& s) {
        return multiply(s, x) == z;
      });
    };
    auto in_right = [&](SymbolicElement const& z, SymbolicElement const& x) {
      return std::any_of(probes.begin(), probes.end(), [&](auto const& s) {
        return multiply(x, s) == z;
      });
    };
    auto fail = [](std::string what, std::size_t i, std::size_t j) {
      return Verdict::fail(std::move(what), {static_cast<Index>(i), static_cast<Index>(j)});
    };

    for (std::size_t i = 0; i < elements.size(); ++i) {
      auto const& x = elements[i];
      for (std::size_t j = 0; j < elements.size(); ++j) {
        auto const& y = elements[j];
        bool const x_in_yS = in_right(x, y), y_in_xS = in_right(y, x);
        if (r_related(x, y) != (x_in_yS && y_in_xS)) {
          return fail("R oracle", i, j);
        }
        bool const x_in_Sy = in_left(x, y), y_in_Sx = in_left(y, x);
        if (l_related(x, y) != (x_in_Sy && y_in_Sx)) {
          return fail("L oracle", i, j);
        }
        // R* on the window: sx = tx iff sy = ty.
        bool rstar = true;
        for (auto const& s : elements) {
          for (auto const& t : elements) {
            if ((multiply(s, x) == multiply(t, x)) != (multiply(s, y) == multiply(t, y))) {
              rstar = false;
            }
          }
        }
        if (r_star_related(x, y) != rstar) {
          return fail("R* oracle", i, j);
        }
        auto const c = lc_witness(x, y);
        for (auto const& z : elements) {
          bool const in_meet = in_left(z, x) && in_left(z, y);
          bool const in_c    = c && in_left(z, *c);
          if (in_meet != in_c) {
            return fail("LC oracle", i, j);
          }
        }
      }
      if (!(plus(x) == multiply(plus(x), plus(x))) || !r_star_related(x, plus(x))) {
        return fail("plus oracle", i, i);
      }
    }
    return Verdict::ok();
  }

}  // namespace liq
