#include "liq/table_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace liq::io {

  namespace {

    std::string trim(std::string const& s) {
      auto const b = s.find_first_not_of(" \t\r\n");
      if (b == std::string::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r\n");
      return s.substr(b, e - b + 1);
    }

    long parse_long(std::string const& token, std::size_t line) {
      std::size_t used = 0;
      long        v    = 0;
      try {
        v = std::stol(token, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != token.size() || token.empty()) {
        throw InputError("line " + std::to_string(line) + ": expected an integer, got '"
                         + token + "'");
      }
      return v;
    }

  }  // namespace

  std::string slurp(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  FiniteSemigroup read_table(std::istream& in) {
    std::string                     line;
    std::size_t                     lineno = 0;
    long                            n      = -1;
    std::vector<std::vector<Index>> rows;
    std::vector<std::string>        names;
    while (std::getline(in, line)) {
      ++lineno;
      std::string const t = trim(line);
      if (t.empty()) {
        continue;
      }
      if (t.front() == '#') {
        std::string const body = trim(t.substr(1));
        if (body.rfind("names:", 0) == 0) {
          std::istringstream ns(body.substr(6));
          std::string        name;
          names.clear();
          while (ns >> name) {
            names.push_back(name);
          }
        }
        continue;
      }
      std::istringstream ls(t);
      std::string        token;
      if (n < 0) {
        ls >> token;
        n = parse_long(token, lineno);
        if (n <= 0) {
          throw InputError("line " + std::to_string(lineno) + ": order must be positive");
        }
        if (ls >> token) {
          throw InputError("line " + std::to_string(lineno)
                           + ": the order line must hold a single integer");
        }
        continue;
      }
      std::vector<Index> row;
      while (ls >> token) {
        long const v = parse_long(token, lineno);
        if (v < 0 || v >= n) {
          throw InputError("line " + std::to_string(lineno) + ": entry " + token
                           + " is out of range [0," + std::to_string(n) + ")");
        }
        row.push_back(static_cast<Index>(v));
      }
      if (static_cast<long>(row.size()) != n) {
        throw InputError("line " + std::to_string(lineno) + ": row has "
                         + std::to_string(row.size()) + " entries, expected "
                         + std::to_string(n));
      }
      rows.push_back(std::move(row));
    }
    if (n < 0) {
      throw InputError("empty table");
    }
    if (static_cast<long>(rows.size()) != n) {
      throw InputError("expected " + std::to_string(n) + " rows, found "
                       + std::to_string(rows.size()));
    }
    return FiniteSemigroup::from_rows(rows, std::move(names));
  }

  FiniteSemigroup read_table_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open table file '" + path + "'");
    }
    return read_table(in);
  }

  FiniteSemigroup parse_table(std::string const& text) {
    std::istringstream in(text);
    return read_table(in);
  }

  void write_table(std::ostream& out, FiniteSemigroup const& S) {
    out << S.size() << '\n';
    for (Index a = 0; a < S.size(); ++a) {
      auto const r = S.row(a);
      for (std::size_t b = 0; b < r.size(); ++b) {
        out << (b == 0 ? "" : " ") << r[b];
      }
      out << '\n';
    }
    if (!S.names().empty()) {
      out << "# names:";
      for (auto const& name : S.names()) {
        out << ' ' << name;
      }
      out << '\n';
    }
  }

  std::string format_table(FiniteSemigroup const& S) {
    std::ostringstream os;
    write_table(os, S);
    return os.str();
  }

  std::vector<PartialBijection> read_charts(std::istream& in) {
    std::vector<PartialBijection> out;
    std::string                   line;
    while (std::getline(in, line)) {
      std::string const t = trim(line);
      if (t.empty() || t.front() == '#') {
        continue;
      }
      out.push_back(PartialBijection::parse(t));
    }
    return out;
  }

  void write_charts(std::ostream& out, std::vector<PartialBijection> const& charts) {
    for (auto const& f : charts) {
      out << f.to_string() << '\n';
    }
  }

  std::vector<Index> parse_members(std::string const& text) {
    std::string cleaned = text;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream ls(cleaned);
    std::string        token;
    std::vector<Index> out;
    while (ls >> token) {
      if (token.front() == '#') {
        std::getline(ls, token);
        continue;
      }
      long const v = parse_long(token, 1);
      if (v < 0) {
        throw InputError("member indices must be non-negative");
      }
      out.push_back(static_cast<Index>(v));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) {
      throw InputError("member list is empty");
    }
    return out;
  }

  std::vector<Index> read_members(std::string const& path_or_list) {
    if (std::filesystem::exists(path_or_list)) {
      return parse_members(slurp(path_or_list));
    }
    return parse_members(path_or_list);
  }

  std::vector<std::pair<Index, Index>> read_map_pairs(std::istream& in) {
    std::vector<std::pair<Index, Index>> out;
    std::string                          line;
    std::size_t                          lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string const t = trim(line);
      if (t.empty() || t.front() == '#') {
        continue;
      }
      auto const arrow = t.find("->");
      if (arrow == std::string::npos) {
        throw InputError("line " + std::to_string(lineno) + ": expected 'i -> j'");
      }
      long const i = parse_long(trim(t.substr(0, arrow)), lineno);
      long const j = parse_long(trim(t.substr(arrow + 2)), lineno);
      if (i < 0 || j < 0) {
        throw InputError("line " + std::to_string(lineno) + ": negative index");
      }
      out.emplace_back(static_cast<Index>(i), static_cast<Index>(j));
    }
    return out;
  }

  std::vector<std::pair<Index, Index>> read_map_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open map file '" + path + "'");
    }
    return read_map_pairs(in);
  }

  void write_map(std::ostream& out, ElementMap const& map) {
    for (Index i = 0; i < map.size(); ++i) {
      out << i << " -> " << map[i] << '\n';
    }
  }

}  // namespace liq::io
