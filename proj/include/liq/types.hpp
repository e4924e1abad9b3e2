#ifndef LIQ_TYPES_HPP_
#define LIQ_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liq {

  // Elements of every finite semigroup are dense indices.
  using Index = std::uint32_t;

  inline constexpr Index kNone = std::numeric_limits<Index>::max();

  // Membership mask over the elements of a finite semigroup.
  using Subset = std::vector<bool>;

  // Outcome of a checked claim: when it fails, `clause` names what failed
  // and `witness` holds the elements that reproduce the failure.
  struct Verdict {
    bool                holds = true;
    std::string         clause;
    std::vector<Index> witness;

    explicit operator bool() const noexcept {
      return holds;
    }

    static Verdict ok() {
      return {};
    }

    static Verdict fail(std::string clause, std::vector<Index> witness = {}) {
      return {false, std::move(clause), std::move(witness)};
    }
  };

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: bad tables, bad files, out-of-range values.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // An element budget was exceeded.
  class ResourceError : public Error {
   public:
    ResourceError(std::string const& what, std::size_t partial)
        : Error(what), _partial(partial) {}

    std::size_t partial_size() const noexcept {
      return _partial;
    }

   private:
    std::size_t _partial;
  };

  // The semigroup lacks structure an operation relies on (e.g. commuting
  // idempotents for the + operation).
  class StructureError : public Error {
   public:
    using Error::Error;
  };

  // An operation's precondition does not hold for its arguments.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // The operation has no oracle for a symbolic semigroup of this kind.
  class UnsupportedError : public Error {
   public:
    using Error::Error;
  };

  // Two routes that must agree by theory disagree: an implementation bug.
  class ConsistencyError : public Error {
   public:
    using Error::Error;
  };

  std::string to_string(std::vector<Index> const& xs);

}  // namespace liq

#endif  // LIQ_TYPES_HPP_
