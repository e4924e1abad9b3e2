#include "liq/report.hpp"

#include <sstream>

namespace liq {

  using json = nlohmann::ordered_json;

  std::vector<std::string> element_names(std::vector<Index> const& xs, FiniteSemigroup const* S) {
    std::vector<std::string> out;
    for (Index x : xs) {
      out.push_back(S && x < S->size() ? S->name(x) : std::to_string(x));
    }
    return out;
  }

  void Report::add(std::string claim, Verdict const& v, FiniteSemigroup const* S) {
    verdicts.push_back({std::move(claim), v.holds, element_names(v.witness, S)});
  }

  void Report::add(std::string claim, bool holds, std::vector<std::string> witness) {
    verdicts.push_back({std::move(claim), holds, std::move(witness)});
  }

  bool Report::all_hold() const noexcept {
    for (auto const& v : verdicts) {
      if (!v.holds) {
        return false;
      }
    }
    return true;
  }

  namespace {

    void print_value(std::ostream& os, std::string const& key, json const& value, int indent) {
      std::string const pad(indent, ' ');
      if (value.is_array() && !value.empty() && (value[0].is_array() || value[0].is_object())) {
        os << pad << key << ":\n";
        for (auto const& row : value) {
          os << pad << "  " << row.dump() << '\n';
        }
      } else if (value.is_object()) {
        os << pad << key << ":\n";
        for (auto const& [k, v] : value.items()) {
          print_value(os, k, v, indent + 2);
        }
      } else if (value.is_string()) {
        std::string const text = value.get<std::string>();
        if (text.find('\n') != std::string::npos) {
          os << pad << key << ":\n" << text;
          if (text.back() != '\n') {
            os << '\n';
          }
        } else {
          os << pad << key << ": " << text << '\n';
        }
      } else {
        os << pad << key << ": " << value.dump() << '\n';
      }
    }

  }  // namespace

  std::string Report::to_text() const {
    std::ostringstream os;
    os << command << '\n';
    for (auto const& v : verdicts) {
      os << "  " << v.claim << ": " << (v.holds ? "true" : "false");
      if (!v.witness.empty()) {
        os << "  witness:";
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
          os << (i ? ", " : " ") << v.witness[i];
        }
      }
      os << '\n';
    }
    for (auto const& [k, v] : data.items()) {
      print_value(os, k, v, 2);
    }
    for (auto const& t : timings) {
      os << "  time " << t.label << ": " << t.seconds << "s\n";
    }
    return os.str();
  }

  std::string Report::to_json() const {
    json j;
    j["command"]  = command;
    j["verdicts"] = json::array();
    for (auto const& v : verdicts) {
      j["verdicts"].push_back({{"claim", v.claim}, {"holds", v.holds}, {"witness", v.witness}});
    }
    j["data"] = data;
    if (!timings.empty()) {
      j["timings"] = json::object();
      for (auto const& t : timings) {
        j["timings"][t.label] = t.seconds;
      }
    }
    return j.dump(2) + "\n";
  }

  Report Report::from_json(std::string const& text) {
    try {
      auto const j = json::parse(text);
      Report     r;
      r.command = j.at("command").get<std::string>();
      for (auto const& v : j.at("verdicts")) {
        r.verdicts.push_back({v.at("claim").get<std::string>(), v.at("holds").get<bool>(),
                              v.at("witness").get<std::vector<std::string>>()});
      }
      r.data = j.at("data");
      if (j.contains("timings")) {
        for (auto const& [label, seconds] : j["timings"].items()) {
          r.timings.push_back({label, seconds.get<double>()});
        }
      }
      return r;
    } catch (json::exception const& e) {
      throw InputError(std::string("malformed report: ") + e.what());
    }
  }

}  // namespace liq
