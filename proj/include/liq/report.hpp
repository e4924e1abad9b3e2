#ifndef LIQ_REPORT_HPP_
#define LIQ_REPORT_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "liq/finite_semigroup.hpp"

namespace liq {

  struct VerdictLine {
    std::string              claim;
    bool                     holds = true;
    std::vector<std::string> witness;

    bool operator==(VerdictLine const&) const = default;
  };

  struct Timing {
    std::string label;
    double      seconds = 0;
  };

  // What a CLI command found: verdicts with witnesses, plus free-form data
  // (counts, tables, witness tables) in insertion order.
  struct Report {
    std::string              command;
    std::vector<VerdictLine> verdicts;
    nlohmann::ordered_json   data = nlohmann::ordered_json::object();
    // Left out of JSON when empty and ignored by ==.
    std::vector<Timing>      timings;

    // Witness elements are printed by name when S is given.
    void add(std::string claim, Verdict const& v, FiniteSemigroup const* S = nullptr);
    void add(std::string claim, bool holds, std::vector<std::string> witness = {});

    bool all_hold() const noexcept;

    std::string to_text() const;
    std::string to_json() const;

    // Inverse of to_json. Throws InputError on malformed input.
    static Report from_json(std::string const& text);

    bool operator==(Report const& that) const {
      return command == that.command && verdicts == that.verdicts && data == that.data;
    }
  };

  std::vector<std::string> element_names(std::vector<Index> const& xs,
                                         FiniteSemigroup const*    S = nullptr);

}  // namespace liq

#endif  // LIQ_REPORT_HPP_
