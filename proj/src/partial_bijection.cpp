#include "liq/partial_bijection.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace liq {

  PartialBijection PartialBijection::from_entries(
      std::size_t                                 ground,
      std::vector<std::pair<Index, Index>> const& entries) {
    PartialBijection  f(ground);
    std::vector<bool> hit(ground, false);
    for (auto const& [s, t] : entries) {
      if (s >= ground || t >= ground) {
        throw InputError("chart entry " + std::to_string(s) + "->" + std::to_string(t)
                         + " lies outside the ground set of size "
                         + std::to_string(ground));
      }
      if (f._image[s] != kNone) {
        throw InputError("chart source " + std::to_string(s) + " repeated");
      }
      if (hit[t]) {
        throw InputError("chart target " + std::to_string(t)
                         + " repeated, the map is not injective");
      }
      f._image[s] = t;
      hit[t]      = true;
    }
    return f;
  }

  PartialBijection PartialBijection::from_images(std::vector<Index> const& images) {
    std::vector<std::pair<Index, Index>> entries;
    for (Index x = 0; x < images.size(); ++x) {
      entries.emplace_back(x, images[x]);
    }
    return from_entries(images.size(), entries);
  }

  PartialBijection PartialBijection::identity(std::size_t ground) {
    PartialBijection f(ground);
    for (Index x = 0; x < ground; ++x) {
      f._image[x] = x;
    }
    return f;
  }

  PartialBijection PartialBijection::identity_on(std::size_t ground, Subset const& points) {
    PartialBijection f(ground);
    for (Index x = 0; x < ground && x < points.size(); ++x) {
      if (points[x]) {
        f._image[x] = x;
      }
    }
    return f;
  }

  std::size_t PartialBijection::rank() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(_image.begin(), _image.end(), [](Index y) { return y != kNone; }));
  }

  std::vector<std::pair<Index, Index>> PartialBijection::entries() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index x = 0; x < _image.size(); ++x) {
      if (_image[x] != kNone) {
        out.emplace_back(x, _image[x]);
      }
    }
    return out;
  }

  Subset PartialBijection::domain() const {
    Subset out(_image.size(), false);
    for (Index x = 0; x < _image.size(); ++x) {
      out[x] = _image[x] != kNone;
    }
    return out;
  }

  Subset PartialBijection::image() const {
    Subset out(_image.size(), false);
    for (Index y : _image) {
      if (y != kNone) {
        out[y] = true;
      }
    }
    return out;
  }

  bool PartialBijection::is_idempotent() const noexcept {
    for (Index x = 0; x < _image.size(); ++x) {
      if (_image[x] != kNone && _image[x] != x) {
        return false;
      }
    }
    return true;
  }

  PartialBijection PartialBijection::inverse() const {
    PartialBijection g(_image.size());
    for (Index x = 0; x < _image.size(); ++x) {
      if (_image[x] != kNone) {
        g._image[_image[x]] = x;
      }
    }
    return g;
  }

  std::string PartialBijection::to_string() const {
    std::ostringstream os;
    os << _image.size() << ';';
    bool first = true;
    for (auto const& [s, t] : entries()) {
      os << (first ? " " : ", ") << s << "->" << t;
      first = false;
    }
    return os.str();
  }

  namespace {

    std::string_view trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r\n");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r\n");
      return s.substr(b, e - b + 1);
    }

    Index parse_index(std::string_view s, std::string_view context) {
      s = trim(s);
      Index v   = 0;
      auto  res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw InputError("cannot parse index '" + std::string(s) + "' in '"
                         + std::string(context) + "'");
      }
      return v;
    }

  }  // namespace

  PartialBijection PartialBijection::parse(std::string_view text) {
    auto const semi = text.find(';');
    if (semi == std::string_view::npos) {
      throw InputError("chart '" + std::string(text) + "' lacks the 'ground;' prefix");
    }
    std::size_t const                    ground = parse_index(text.substr(0, semi), text);
    std::vector<std::pair<Index, Index>> entries;
    std::string_view                     rest = trim(text.substr(semi + 1));
    while (!rest.empty()) {
      auto const       comma = rest.find(',');
      std::string_view item  = trim(rest.substr(0, comma));
      auto const       arrow = item.find("->");
      if (arrow == std::string_view::npos) {
        throw InputError("chart entry '" + std::string(item) + "' lacks '->'");
      }
      entries.emplace_back(parse_index(item.substr(0, arrow), text),
                           parse_index(item.substr(arrow + 2), text));
      rest = comma == std::string_view::npos ? std::string_view{}
                                             : trim(rest.substr(comma + 1));
    }
    return from_entries(ground, entries);
  }

  std::size_t PartialBijection::hash() const noexcept {
    std::size_t h = _image.size();
    for (Index y : _image) {
      h ^= std::hash<Index>{}(y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::strong_ordering PartialBijection::operator<=>(PartialBijection const& that) const {
    if (auto c = _image.size() <=> that._image.size(); c != 0) {
      return c;
    }
    if (auto c = rank() <=> that.rank(); c != 0) {
      return c;
    }
    // Domain lexicographic: compare the sorted source lists.
    auto const mine   = entries();
    auto const theirs = that.entries();
    for (std::size_t i = 0; i < mine.size(); ++i) {
      if (auto c = mine[i].first <=> theirs[i].first; c != 0) {
        return c;
      }
    }
    for (std::size_t i = 0; i < mine.size(); ++i) {
      if (auto c = mine[i].second <=> theirs[i].second; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  PartialBijection compose(PartialBijection const& f, PartialBijection const& g) {
    if (f.ground() != g.ground()) {
      throw InputError("cannot compose charts on ground sets of size "
                       + std::to_string(f.ground()) + " and "
                       + std::to_string(g.ground()));
    }
    PartialBijection out(f.ground());
    for (Index x = 0; x < f.ground(); ++x) {
      Index const y = f._image[x];
      if (y != kNone) {
        out._image[x] = g._image[y];
      }
    }
    return out;
  }

  PartialBijection invert(PartialBijection const& f) {
    return f.inverse();
  }

}  // namespace liq
