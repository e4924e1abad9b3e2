#include "liq/catalog.hpp"

#include <array>
#include <filesystem>
#include <regex>

#include "liq/assembly.hpp"
#include "liq/inverse.hpp"
#include "liq/table_io.hpp"

namespace liq {

  FiniteSemigroup symmetric_group_3() {
    // Permutations of {0, 1, 2} as images, composed left to right.
    std::array<std::array<Index, 3>, 6> const perms{{
        {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1},
    }};
    std::vector<Index> table(36);
    for (Index a = 0; a < 6; ++a) {
      for (Index b = 0; b < 6; ++b) {
        std::array<Index, 3> ab{};
        for (Index x = 0; x < 3; ++x) {
          ab[x] = perms[b][perms[a][x]];
        }
        for (Index c = 0; c < 6; ++c) {
          if (perms[c] == ab) {
            table[a * 6 + b] = c;
          }
        }
      }
    }
    return FiniteSemigroup::from_table(6, table, {"e", "(01)", "(12)", "(02)", "(012)", "(021)"});
  }

  FiniteSemigroup clifford_order_4() {
    SemilatticeDiagram D;
    D.Y          = chain_semilattice(2);
    D.components = {cyclic_group(2), cyclic_group(2)};
    D.connectors[{1, 0}] = identity_map(2);
    return build_strong_semilattice(D).semigroup;
  }

  std::vector<std::pair<std::string, FiniteSemigroup>> small_groups() {
    return {
        {"Z1", cyclic_group(1)},
        {"Z2", cyclic_group(2)},
        {"Z3", cyclic_group(3)},
        {"Z4", cyclic_group(4)},
        {"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))},
        {"Z5", cyclic_group(5)},
        {"Z6", cyclic_group(6)},
        {"S3", symmetric_group_3()},
    };
  }

  FiniteSemigroup catalog_semigroup(std::string const& name) {
    std::smatch m;
    auto const  number = [&](int i) { return static_cast<std::size_t>(std::stoul(m[i].str())); };
    if (name == "trivial") {
      return trivial_semigroup();
    }
    if (name == "Z2xZ2") {
      return direct_product(cyclic_group(2), cyclic_group(2));
    }
    if (name == "S3") {
      return symmetric_group_3();
    }
    if (name == "clifford4") {
      return clifford_order_4();
    }
    if (std::regex_match(name, m, std::regex(R"(Z(\d+))")) && number(1) > 0) {
      return cyclic_group(number(1));
    }
    if (std::regex_match(name, m, std::regex(R"(chain(\d+))")) && number(1) > 0) {
      return chain_semilattice(number(1));
    }
    if (std::regex_match(name, m, std::regex(R"(leftzero(\d+))")) && number(1) > 0) {
      return left_zero_semigroup(number(1));
    }
    if (std::regex_match(name, m, std::regex(R"(null(\d+))")) && number(1) > 0) {
      return null_semigroup(number(1));
    }
    if (std::regex_match(name, m, std::regex(R"(B0\((\w+),(\d+)\))"))) {
      auto const group = m[1].str() == "trivial" ? trivial_semigroup() : catalog_semigroup(m[1].str());
      return brandt(group, number(2)).semigroup;
    }
    throw InputError("unknown semigroup name '" + name + "'");
  }

  std::vector<std::string> catalog_names() {
    return {"trivial",    "Z<n>",      "Z2xZ2",     "S3",          "chain<n>",
            "leftzero<n>", "null<n>",  "clifford4", "B0(<group>,<k>)"};
  }

  FiniteSemigroup resolve_semigroup(std::string const& name_or_path) {
    if (std::filesystem::is_regular_file(name_or_path)) {
      return io::read_table_file(name_or_path);
    }
    try {
      return catalog_semigroup(name_or_path);
    } catch (InputError const&) {
      throw InputError("'" + name_or_path + "' is neither a table file nor a catalog name");
    }
  }

}  // namespace liq
