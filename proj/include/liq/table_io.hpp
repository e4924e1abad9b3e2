#ifndef LIQ_TABLE_IO_HPP_
#define LIQ_TABLE_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "liq/finite_semigroup.hpp"
#include "liq/morphism.hpp"
#include "liq/partial_bijection.hpp"

namespace liq::io {

  // Cayley table text format:
  //
  //   3
  //   0 0 0
  //   0 1 1
  //   0 1 2
  //   # names: z e 1
  //
  // The first non-comment line is n, then n rows of n 0-based indices.
  // Lines starting with '#' are comments, except `# names:` which gives the
  // display names.
  FiniteSemigroup read_table(std::istream& in);
  FiniteSemigroup read_table_file(std::string const& path);
  FiniteSemigroup parse_table(std::string const& text);

  void        write_table(std::ostream& out, FiniteSemigroup const& S);
  std::string format_table(FiniteSemigroup const& S);

  // One chart per line in the `ground; s->t, ...` form.
  std::vector<PartialBijection> read_charts(std::istream& in);
  void write_charts(std::ostream& out, std::vector<PartialBijection> const& charts);

  // Member lists: indices separated by commas or whitespace, either inline
  // ("0,2,3") or in a file.
  std::vector<Index> parse_members(std::string const& text);
  std::vector<Index> read_members(std::string const& path_or_list);

  // Map files: one `i -> j` line per element of the source.
  std::vector<std::pair<Index, Index>> read_map_pairs(std::istream& in);
  std::vector<std::pair<Index, Index>> read_map_file(std::string const& path);
  void write_map(std::ostream& out, ElementMap const& map);

  std::string slurp(std::string const& path);

}  // namespace liq::io

#endif  // LIQ_TABLE_IO_HPP_
