#ifndef LIQ_PARTIAL_BIJECTION_HPP_
#define LIQ_PARTIAL_BIJECTION_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liq/types.hpp"

namespace liq {

  // An injective partial map on {0, ..., ground - 1}, acting on the right:
  // x(fg) = (xf)g.
  //
  // Charts are totally ordered by (domain size, domain lexicographic, targets
  // lexicographic in source order); this is the tie-break used to number the
  // elements of closures reproducibly.
  class PartialBijection {
   public:
    PartialBijection() = default;

    // The empty chart on a ground set of the given size.
    explicit PartialBijection(std::size_t ground) : _image(ground, kNone) {}

    // Throws InputError on out-of-range points or a repeated source/target.
    static PartialBijection from_entries(std::size_t                           ground,
                                         std::vector<std::pair<Index, Index>> const& entries);

    // Total chart from the list of images, e.g. a permutation.
    static PartialBijection from_images(std::vector<Index> const& images);

    static PartialBijection identity(std::size_t ground);

    // The identity chart on the points in `points`.
    static PartialBijection identity_on(std::size_t ground, Subset const& points);

    std::size_t ground() const noexcept {
      return _image.size();
    }

    // xf, or kNone when x is outside the domain.
    Index operator()(Index x) const noexcept {
      return _image[x];
    }

    std::size_t rank() const noexcept;

    std::vector<std::pair<Index, Index>> entries() const;
    Subset                               domain() const;
    Subset                               image() const;

    bool is_idempotent() const noexcept;

    PartialBijection inverse() const;

    std::string to_string() const;

    // Parses the `ground; s->t, s->t` form written by to_string().
    static PartialBijection parse(std::string_view text);

    std::size_t hash() const noexcept;

    bool operator==(PartialBijection const& that) const = default;

    std::strong_ordering operator<=>(PartialBijection const& that) const;

    friend PartialBijection compose(PartialBijection const& f, PartialBijection const& g);

   private:
    std::vector<Index> _image;
  };

  // fg: apply f, then g. Throws InputError when the ground sets differ.
  PartialBijection compose(PartialBijection const& f, PartialBijection const& g);

  PartialBijection invert(PartialBijection const& f);

  struct PartialBijectionHash {
    std::size_t operator()(PartialBijection const& f) const noexcept {
      return f.hash();
    }
  };

}  // namespace liq

#endif  // LIQ_PARTIAL_BIJECTION_HPP_
