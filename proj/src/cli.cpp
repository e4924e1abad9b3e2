#include "liq/cli.hpp"

#include <chrono>

#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "liq/assembly.hpp"
#include "liq/catalog.hpp"
#include "liq/enumerate.hpp"
#include "liq/equiv.hpp"
#include "liq/hull.hpp"
#include "liq/inverse.hpp"
#include "liq/iorder.hpp"
#include "liq/lifting.hpp"
#include "liq/relations.hpp"
#include "liq/report.hpp"
#include "liq/symbolic.hpp"
#include "liq/table_io.hpp"

namespace liq::cli {

  namespace {

    using json = nlohmann::ordered_json;

    Report run_check(FiniteSemigroup const& S, bool ample, bool lc, bool inverse, bool proper) {
      Report r;
      r.data["size"] = S.size();
      if (!ample && !lc && !inverse && !proper) {
        ample = lc = inverse = true;
      }
      if (ample) {
        r.add("left_ample", is_left_ample(S), &S);
      }
      if (lc) {
        r.add("lc", has_lc(S), &S);
      }
      if (inverse) {
        r.add("inverse", recognize_inverse(S).verdict, &S);
      }
      if (proper) {
        r.add("proper", is_proper(S));
      }
      return r;
    }

    Report run_hull(FiniteSemigroup const& S, std::size_t budget, bool table) {
      Report     r;
      auto const H = inverse_hull(S, budget);
      r.data["size"]      = S.size();
      r.data["hull_size"] = H.hull.size();
      json image          = json::array();
      for (Index a = 0; a < S.size(); ++a) {
        image.push_back({S.name(a), H.embedding[a]});
      }
      r.data["theta"] = image;
      r.add("left_i_order", H.is_i_order);
      r.add("lc", H.lc, &S);
      r.add("image_union_of_r_classes", image_is_union_of_r_classes(H));
      r.add("quotient_charts", quotient_chart_check(S, H));
      r.add("l_reflection", l_reflection_check(S, H));
      r.add("chart_swap", chart_swap_check(S, H));
      if (table) {
        r.data["hull_table"] = io::format_table(H.hull.semigroup);
        std::ostringstream charts;
        io::write_charts(charts, H.charts.charts());
        r.data["charts"] = charts.str();
      }
      return r;
    }

    void add_suite(Report& r, std::string const& prefix, SuiteReport const& suite) {
      for (auto const& c : suite.clauses) {
        r.add(prefix + " " + c.clause, c.agree, element_names(c.witness, nullptr));
      }
    }

    Report run_iorder_builtin(std::string const&              kind,
                              std::uint64_t                   window,
                              std::vector<std::string> const& suites) {
      if (parse_symbolic_kind(kind) != SymbolicKind::Bicyclic) {
        throw InputError("the built-in I-order is S = {(0,n)} in the bicyclic monoid");
      }
      Report     r;
      auto const B = bicyclic_i_order(window);
      r.add("left_i_order", B.is_i_order);
      r.add("straight", B.straight);
      r.data["classical_left_order"] = B.classical;
      json rows                      = json::array();
      for (auto const& [q, xy] : B.witnesses) {
        rows.push_back({to_string(q), to_string(BicyclicPair{0, xy.first}),
                        to_string(BicyclicPair{0, xy.second})});
      }
      r.data["factorisations"] = rows;
      for (auto const& name : suites) {
        if (name != "lemma3.6") {
          throw InputError("the built-in instance only supports --suite lemma3.6");
        }
        add_suite(r, "lemma3.6", bicyclic_straightness_suite(window));
      }
      return r;
    }

    Report run_iorder(FiniteSemigroup const&          Qs,
                      std::vector<Index> const&       members,
                      std::vector<std::string> const& suites) {
      Report     r;
      auto const E   = SubsetEmbedding::make(InverseSemigroupView::of(Qs), members);
      auto const& Q  = E.ambient.semigroup;
      auto const iorder = is_left_i_order(E);
      r.add("left_i_order", iorder, &Q);
      r.data["classical_left_order"] = is_classical_left_order(E);
      if (!iorder) {
        return r;
      }
      auto const straight = is_straight(E);
      r.add("straight", straight, &Q);
      json rows = json::array();
      for (Index q = 0; q < Q.size(); ++q) {
        auto const w = straight ? straight_witness(E, q) : quotient_witness(E, q);
        rows.push_back({Q.name(q), Q.name(w->first), Q.name(w->second)});
      }
      r.data["factorisations"] = rows;
      if (straight) {
        r.add("meets_every_l_class", meets_every_l_class(E), &Q);
        std::size_t checked = 0;
        r.add("quotient_equality", quotient_equality_sweep(E, &checked), &Q);
        r.data["quotient_equality_tuples"] = checked;
      }
      for (auto const& name : suites) {
        if (name == "lemma3.6") {
          add_suite(r, "lemma3.6", lemma_3_6_suite(E));
        } else {
          auto const t = theorem_3_9_check(E);
          r.add("thm3.9 conditions agree", t.agree());
          r.data["thm3.9"] = {{"e_unitary", t.e_unitary},
                              {"proper_and_embeds", t.proper_and_embeds},
                              {"proper_and_cancellative", t.proper_and_cancellative}};
        }
      }
      return r;
    }

    ElementMap read_member_map(std::string const& path, std::size_t n) {
      auto const pairs = io::read_map_file(path);
      ElementMap map(n, kNone);
      for (auto const& [i, j] : pairs) {
        if (i >= n || map[i] != kNone) {
          throw InputError(path + ": member index " + std::to_string(i)
                           + " is out of range or repeated");
        }
        map[i] = j;
      }
      for (Index i = 0; i < n; ++i) {
        if (map[i] == kNone) {
          throw InputError(path + ": member index " + std::to_string(i) + " has no image");
        }
      }
      return map;
    }

    Report run_lift(std::string const& q, std::string const& s, std::string const& p,
                    std::string const& t, std::string const& phi_file) {
      Report     r;
      auto const E   = SubsetEmbedding::make(InverseSemigroupView::of(resolve_semigroup(q)),
                                             io::read_members(s));
      auto const F   = SubsetEmbedding::make(InverseSemigroupView::of(resolve_semigroup(p)),
                                             io::read_members(t));
      auto const phi = read_member_map(phi_file, E.members.size());
      auto const out = lift_morphism(E, F, phi);
      if (out) {
        r.add("lifts", true);
        json rows = json::array();
        for (Index x = 0; x < out.lifted->size(); ++x) {
          rows.push_back({E.ambient.semigroup.name(x), F.ambient.semigroup.name((*out.lifted)[x])});
        }
        r.data["lift"]         = rows;
        r.data["onto_checked"] = out.onto_checked;
      } else {
        r.add("lifts", false, element_names(out.refusal->witness, &E.ambient.semigroup));
        r.data["violated_condition"] = out.refusal->condition;
      }
      return r;
    }

    Report run_assemble(std::string const& path, bool theorem) {
      Report     r;
      auto const D = read_diagram(path);
      auto const v = D.validate();
      r.add("diagram_axioms", v);
      if (!v) {
        return r;
      }
      auto const S = build_strong_semilattice(D);
      r.data["size"]  = S.semigroup.size();
      r.data["table"] = io::format_table(S.semigroup);
      bool const ample = std::all_of(D.components.begin(), D.components.end(),
                                     [](auto const& C) { return is_left_ample(C).holds; });
      if (!ample) {
        r.data["prop_4_2"] = "skipped: a component is not left ample";
        return r;
      }
      for (auto const& c : prop_4_2_check(D).clauses) {
        r.add("semilattice " + c.clause, c.agree, element_names(c.witness));
      }
      r.add("lc", has_lc(S.semigroup), &S.semigroup);
      if (theorem) {
        auto const T = theorem_4_3_assemble(D);
        r.add("q_isomorphic_to_hull", is_isomorphism(T.Q.semigroup, T.sigma.hull.semigroup, T.iso));
        r.data["q_size"] = T.Q.semigroup.size();
      }
      return r;
    }

    Report run_equiv(std::string const& object, std::string const& members, std::uint64_t window) {
      Report r;
      if (object == "nat" || object == "bicyclic") {
        for (auto const& c : nat_bicyclic_roundtrip(window).clauses) {
          r.add(c.clause, c.agree, element_names(c.witness));
        }
        r.data["window"] = window;
        return r;
      }
      auto const S = resolve_semigroup(object);
      if (!members.empty()) {
        auto const B = BisObject::certify(InverseSemigroupView::of(S), io::read_members(members));
        r.data["note"] = "a finite bisimple inverse semigroup is a group";
        r.add("bis_certificates", true);
        r.add("GF(Q,S) = (Q,S) via mu", bis_roundtrip(B));
        return r;
      }
      auto const L = LacObject::certify(S);
      r.add("lac_certificates", true);
      r.add("FG(S) = S via theta", lac_roundtrip(L));
      if (S.is_monoid() && S.idempotents().size() == 1) {
        r.add("right_cancellative_monoid_to_bisimple_monoid", right_cancellative_check(L));
      }
      return r;
    }

    Report run_enumerate(std::size_t n, std::string const& filters, bool iso, bool serial, bool tables) {
      Report           r;
      EnumerateOptions options;
      options.order             = n;
      options.filters           = parse_filters(filters);
      options.up_to_isomorphism = iso;
      options.exec              = serial ? kernels::Exec::serial : kernels::Exec::parallel;
      auto const found          = enumerate_semigroups(options);
      r.data["order"]           = n;
      r.data["count"]           = found.size();
      if (tables) {
        json rows = json::array();
        for (auto const& S : found) {
          rows.push_back(S.table());
        }
        r.data["tables"] = rows;
      }
      return r;
    }

    Report run_builtin(std::string const& kind, std::uint64_t window, bool table) {
      Report                  r;
      SymbolicSemigroup const X(parse_symbolic_kind(kind), window);
      auto const              elements = X.window_elements();
      r.data["kind"]     = to_string(X.kind());
      r.data["window"]   = window;
      r.data["elements"] = elements.size();
      json names         = json::array();
      for (auto const& x : elements) {
        names.push_back(to_string(x));
      }
      r.data["element_names"] = names;
      r.add("oracles_agree_on_window", X.validate_window());
      if (table) {
        json rows = json::array();
        for (auto const& x : elements) {
          for (auto const& y : elements) {
            rows.push_back({to_string(x), to_string(y), to_string(X.multiply(x, y))});
          }
        }
        r.data["products"] = rows;
      }
      return r;
    }

  }  // namespace

  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Left I-quotients of left ample semigroups", "liq"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Print the report as JSON");
    bool json_timings = false;
    app.add_flag("--timings", json_timings, "Include timings in JSON output");

    std::function<Report()> action;

    auto* check = app.add_subcommand("check", "Structural checks on a finite semigroup");
    std::string check_s;
    bool        ample = false, lc = false, inverse = false, proper = false;
    check->add_option("semigroup", check_s, "Table file or catalog name")->required();
    check->add_flag("--ample", ample, "Left ample");
    check->add_flag("--lc", lc, "Condition (LC)");
    check->add_flag("--inverse", inverse, "Inverse semigroup");
    check->add_flag("--proper", proper, "Proper (left ample only)");
    check->callback([&] {
      action = [&] { return run_check(resolve_semigroup(check_s), ample, lc, inverse, proper); };
    });

    auto* hull = app.add_subcommand("hull", "Inverse hull of a left ample semigroup");
    std::string hull_s;
    std::size_t budget     = kDefaultClosureBudget;
    bool        hull_table = false;
    hull->add_option("semigroup", hull_s, "Table file or catalog name")->required();
    hull->add_option("--budget", budget, "Element budget for the closure");
    hull->add_flag("--table", hull_table, "Print the hull table and charts");
    hull->callback([&] { action = [&] { return run_hull(resolve_semigroup(hull_s), budget, hull_table); }; });

    auto* iorder = app.add_subcommand("iorder", "Left I-order and straightness checks");
    std::string   iorder_q, iorder_members;
    bool          builtin = false;
    std::uint64_t window  = 20;
    iorder->add_option("ambient", iorder_q, "Inverse semigroup (or 'bicyclic' with --builtin)")
        ->required();
    iorder->add_option("members", iorder_members, "Member list or file");
    iorder->add_flag("--builtin", builtin, "Use S = {(0,n)} in the bicyclic monoid");
    iorder->add_option("--window", window, "Window for built-in instances");
    std::vector<std::string> iorder_suites;
    iorder->add_option("--suite", iorder_suites, "Extra suites: lemma3.6, thm3.9")
        ->check(CLI::IsMember({"lemma3.6", "thm3.9"}));
    iorder->callback([&] {
      action = [&] {
        if (builtin) {
          return run_iorder_builtin(iorder_q, window, iorder_suites);
        }
        if (iorder_members.empty()) {
          throw InputError("iorder needs a member list");
        }
        return run_iorder(resolve_semigroup(iorder_q), io::read_members(iorder_members), iorder_suites);
      };
    });

    auto* lift = app.add_subcommand("lift", "Lift a morphism S -> T to Q -> P");
    std::string lift_q, lift_s, lift_p, lift_t, lift_phi;
    lift->add_option("Q", lift_q, "Ambient of S")->required();
    lift->add_option("S", lift_s, "Members of S")->required();
    lift->add_option("P", lift_p, "Ambient of T")->required();
    lift->add_option("T", lift_t, "Members of T")->required();
    lift->add_option("phi", lift_phi, "Map file over member positions")->required();
    lift->callback([&] { action = [&] { return run_lift(lift_q, lift_s, lift_p, lift_t, lift_phi); }; });

    auto* assemble = app.add_subcommand("assemble", "Strong semilattice from a diagram file");
    std::string diagram;
    bool        theorem = false;
    assemble->add_option("diagram", diagram, "Diagram file")->required()->check(CLI::ExistingFile);
    assemble->add_flag("--theorem", theorem, "Assemble the hulls and compare with the hull of S");
    assemble->callback([&] { action = [&] { return run_assemble(diagram, theorem); }; });

    auto* equiv = app.add_subcommand("equiv", "LAC and BIS round trips");
    std::string   equiv_mode, equiv_object, equiv_members;
    std::uint64_t equiv_window = 20;
    equiv->add_option("mode", equiv_mode, "Only 'roundtrip'")->required()->check(CLI::IsMember({"roundtrip"}));
    equiv->add_option("object", equiv_object, "Table file, catalog name, 'nat' or 'bicyclic'")->required();
    equiv->add_option("--members", equiv_members, "Treat the table as Q with these members of S");
    equiv->add_option("--window", equiv_window, "Window for nat and bicyclic");
    equiv->callback([&] { action = [&] { return run_equiv(equiv_object, equiv_members, equiv_window); }; });

    auto* enumerate = app.add_subcommand("enumerate", "Count semigroups of a given order");
    std::size_t order = 1;
    std::string filters;
    bool        iso = false, serial = false, tables = false;
    enumerate->add_option("-n,--order", order, "Order (1 to 4)")->required();
    enumerate->add_option("--filter", filters, "left_ample,lc,inverse,monoid,semilattice,group");
    enumerate->add_flag("--iso", iso, "One table per isomorphism class");
    enumerate->add_flag("--serial", serial, "Use the serial search");
    enumerate->add_flag("--tables", tables, "Print the tables");
    enumerate->callback([&] { action = [&] { return run_enumerate(order, filters, iso, serial, tables); }; });

    auto* builtin_cmd = app.add_subcommand("builtin", "Materialise a symbolic instance on a window");
    std::string   builtin_kind;
    std::uint64_t builtin_window = 5;
    bool          builtin_table  = false;
    builtin_cmd->add_option("kind", builtin_kind, "bicyclic, nat or free2")
        ->required()
        ->check(CLI::IsMember({"bicyclic", "nat", "free2"}));
    builtin_cmd->add_option("--window", builtin_window, "Window size");
    builtin_cmd->add_flag("--table", builtin_table, "Print all products of window elements");
    builtin_cmd->callback([&] {
      action = [&] { return run_builtin(builtin_kind, builtin_window, builtin_table); };
    });

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      err << app.help();
      return kExitInput;
    }

    std::string command = "liq";
    for (int i = 1; i < argc; ++i) {
      command += " ";
      command += argv[i];
    }
    try {
      auto const start  = std::chrono::steady_clock::now();
      Report     report = action();
      report.command    = command;
      if (!as_json || json_timings) {
        report.timings.push_back(
            {"total", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
      }
      out << (as_json ? report.to_json() : report.to_text());
      return report.all_hold() ? kExitHolds : kExitFails;
    } catch (ConsistencyError const& e) {
      err << "internal consistency failure: " << e.what() << '\n';
      return kExitConsistency;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return kExitInput;
    }
  }

}  // namespace liq::cli
