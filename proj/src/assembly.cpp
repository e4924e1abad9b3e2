#include "liq/assembly.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "liq/inverse.hpp"
#include "liq/lifting.hpp"
#include "liq/relations.hpp"
#include "liq/table_io.hpp"

namespace liq {

  ElementMap SemilatticeDiagram::connector(Index alpha, Index beta) const {
    if (alpha == beta) {
      if (alpha >= components.size()) {
        throw InputError("vertex " + std::to_string(alpha) + " has no component");
      }
      return identity_map(components[alpha].size());
    }
    if (alpha >= Y.size() || beta >= Y.size() || !above(Y, alpha, beta)) {
      throw InputError("vertex " + std::to_string(alpha) + " is not above "
                       + std::to_string(beta));
    }
    auto it = connectors.find({alpha, beta});
    if (it == connectors.end()) {
      throw InputError("no connector from " + std::to_string(alpha) + " to "
                       + std::to_string(beta));
    }
    return it->second;
  }

  Verdict SemilatticeDiagram::validate() const {
    if (!is_semilattice(Y)) {
      return Verdict::fail("Y is a semilattice");
    }
    Index const k = static_cast<Index>(Y.size());
    if (components.size() != k) {
      return Verdict::fail("one component per vertex");
    }
    for (auto const& [key, map] : connectors) {
      auto const [alpha, beta] = key;
      if (alpha >= k || beta >= k || !above(Y, alpha, beta)) {
        return Verdict::fail("connectors join comparable vertices", {alpha, beta});
      }
      if (alpha == beta && map != identity_map(components[alpha].size())) {
        return Verdict::fail("phi(a,a) is the identity", {alpha});
      }
    }
    for (Index alpha = 0; alpha < k; ++alpha) {
      for (Index beta = 0; beta < k; ++beta) {
        if (alpha == beta || !above(Y, alpha, beta)) {
          continue;
        }
        auto it = connectors.find({alpha, beta});
        if (it == connectors.end()) {
          return Verdict::fail("connector present", {alpha, beta});
        }
        auto const& map = it->second;
        if (map.size() != components[alpha].size()
            || std::any_of(map.begin(), map.end(),
                           [&](Index x) { return x >= components[beta].size(); })) {
          return Verdict::fail("connector maps S_a into S_b", {alpha, beta});
        }
        if (!is_morphism(components[alpha], components[beta], map)) {
          return Verdict::fail("connector is a morphism", {alpha, beta});
        }
      }
    }
    for (Index alpha = 0; alpha < k; ++alpha) {
      for (Index beta = 0; beta < k; ++beta) {
        for (Index gamma = 0; gamma < k; ++gamma) {
          if (above(Y, alpha, beta) && above(Y, beta, gamma)
              && then(connector(alpha, beta), connector(beta, gamma))
                     != connector(alpha, gamma)) {
            return Verdict::fail("phi(a,b) phi(b,c) = phi(a,c)", {alpha, beta, gamma});
          }
        }
      }
    }
    return Verdict::ok();
  }

  StrongSemilattice build_strong_semilattice(SemilatticeDiagram const& D) {
    if (auto v = D.validate(); !v) {
      throw InputError("diagram axiom '" + v.clause + "' fails at " + to_string(v.witness));
    }
    Index const       k = static_cast<Index>(D.Y.size());
    StrongSemilattice out;
    std::size_t       n = 0;
    for (Index alpha = 0; alpha < k; ++alpha) {
      out.offset.push_back(static_cast<Index>(n));
      for (Index a = 0; a < D.components[alpha].size(); ++a) {
        out.vertex_of.push_back(alpha);
        out.local.push_back(a);
      }
      n += D.components[alpha].size();
    }
    std::vector<std::vector<ElementMap>> phi(k, std::vector<ElementMap>(k));
    for (Index alpha = 0; alpha < k; ++alpha) {
      for (Index beta = 0; beta < k; ++beta) {
        if (above(D.Y, alpha, beta)) {
          phi[alpha][beta] = D.connector(alpha, beta);
        }
      }
    }
    std::vector<Index>       table(n * n);
    std::vector<std::string> names(n);
    for (Index x = 0; x < n; ++x) {
      Index const alpha = out.vertex_of[x];
      names[x] = D.components[alpha].name(out.local[x]) + "@" + D.Y.name(alpha);
      for (Index y = 0; y < n; ++y) {
        Index const beta  = out.vertex_of[y];
        Index const gamma = D.Y.product(alpha, beta);
        Index const a     = phi[alpha][gamma][out.local[x]];
        Index const b     = phi[beta][gamma][out.local[y]];
        table[x * n + y]  = out.offset[gamma] + D.components[gamma].product(a, b);
      }
    }
    if (auto bad = associativity_violation(n, table)) {
      throw ConsistencyError("the strong semilattice is not associative at " + to_string(*bad));
    }
    out.semigroup = FiniteSemigroup::trusted(n, std::move(table), std::move(names));
    return out;
  }

  namespace {

    struct Decomposition {
      std::vector<std::vector<Index>> parts;      // label → sorted members
      std::vector<Index>              local;      // element → index in its part
      std::vector<Index>              identity;   // label → e_α
    };

    // Checks that P is a semilattice of monoids; the message names the first
    // failure.
    std::optional<std::string> decompose(FiniteSemigroup const&    P,
                                         std::vector<Index> const& block,
                                         Decomposition&            out) {
      if (block.size() != P.size()) {
        return "the labelling has " + std::to_string(block.size()) + " entries for "
             + std::to_string(P.size()) + " elements";
      }
      Index const k = block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
      out.parts.assign(k, {});
      out.local.assign(P.size(), kNone);
      for (Index x = 0; x < P.size(); ++x) {
        out.local[x] = static_cast<Index>(out.parts[block[x]].size());
        out.parts[block[x]].push_back(x);
      }
      for (Index alpha = 0; alpha < k; ++alpha) {
        if (out.parts[alpha].empty()) {
          return "part " + std::to_string(alpha) + " is empty";
        }
      }
      out.identity.assign(k, kNone);
      for (Index alpha = 0; alpha < k; ++alpha) {
        auto const& part = out.parts[alpha];
        for (Index e : part) {
          bool const is_identity = std::all_of(part.begin(), part.end(), [&](Index x) {
            return P.product(e, x) == x && P.product(x, e) == x;
          });
          if (is_identity) {
            out.identity[alpha] = e;
            break;
          }
        }
        if (out.identity[alpha] == kNone) {
          return "part " + std::to_string(alpha) + " is not a monoid";
        }
      }
      for (Index x = 0; x < P.size(); ++x) {
        for (Index y = 0; y < P.size(); ++y) {
          Index const expected =
              block[P.product(out.identity[block[x]], out.identity[block[y]])];
          if (block[P.product(x, y)] != expected) {
            return "products of parts " + std::to_string(block[x]) + " and "
                 + std::to_string(block[y]) + " do not lie in one part: "
                 + to_string(std::vector<Index>{x, y});
          }
        }
      }
      // The parts must multiply like a semilattice; idempotence is automatic.
      for (Index alpha = 0; alpha < k; ++alpha) {
        for (Index beta = 0; beta < alpha; ++beta) {
          Index const ef = P.product(out.identity[alpha], out.identity[beta]);
          Index const fe = P.product(out.identity[beta], out.identity[alpha]);
          if (block[ef] != block[fe]) {
            return "parts " + std::to_string(alpha) + " and " + std::to_string(beta)
                 + " do not commute";
          }
        }
      }
      for (Index alpha = 0; alpha < k; ++alpha) {
        for (Index beta = 0; beta < k; ++beta) {
          Index const ef = P.product(out.identity[alpha], out.identity[beta]);
          if (ef != out.identity[block[ef]]) {
            return "the identities are not closed: e" + std::to_string(alpha) + " e"
                 + std::to_string(beta);
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  DiagramExtraction lemma_4_1_extract(FiniteSemigroup const& P, std::vector<Index> const& block) {
    Decomposition dec;
    if (auto defect = decompose(P, block, dec)) {
      throw PreconditionError("not a semilattice of monoids with closed identities: " + *defect);
    }
    Index const k = static_cast<Index>(dec.parts.size());
    for (Index alpha = 0; alpha < k; ++alpha) {
      Index const e = dec.identity[alpha];
      for (Index x = 0; x < P.size(); ++x) {
        if (P.product(e, x) != P.product(x, e)) {
          throw ConsistencyError("identity " + std::to_string(e) + " is not central at "
                                 + std::to_string(x));
        }
      }
    }
    std::vector<Index> y_table(static_cast<std::size_t>(k) * k);
    for (Index alpha = 0; alpha < k; ++alpha) {
      for (Index beta = 0; beta < k; ++beta) {
        y_table[alpha * k + beta] =
            block[P.product(dec.identity[alpha], dec.identity[beta])];
      }
    }
    DiagramExtraction out;
    auto&   D = out.diagram;
    D.Y       = FiniteSemigroup::trusted(k, std::move(y_table));
    if (!is_semilattice(D.Y)) {
      throw ConsistencyError("the identities do not form a semilattice");
    }
    for (Index alpha = 0; alpha < k; ++alpha) {
      D.components.push_back(P.restrict_to(dec.parts[alpha]));
    }
    for (Index alpha = 0; alpha < k; ++alpha) {
      for (Index beta = 0; beta < k; ++beta) {
        if (alpha == beta || !above(D.Y, alpha, beta)) {
          continue;
        }
        ElementMap phi;
        for (Index a : dec.parts[alpha]) {
          phi.push_back(dec.local[P.product(a, dec.identity[beta])]);
        }
        if (phi[dec.local[dec.identity[alpha]]] != dec.local[dec.identity[beta]]) {
          throw ConsistencyError("the connector from " + std::to_string(alpha) + " to "
                                 + std::to_string(beta) + " is not a monoid morphism");
        }
        D.connectors[{alpha, beta}] = std::move(phi);
      }
    }
    if (auto v = D.validate(); !v) {
      throw ConsistencyError("the extracted diagram fails '" + v.clause + "' at "
                             + to_string(v.witness));
    }
    auto const rebuilt = build_strong_semilattice(D);
    out.carrier.resize(P.size());
    for (Index x = 0; x < P.size(); ++x) {
      out.carrier[x] = rebuilt.element(block[x], dec.local[x]);
    }
    for (Index x = 0; x < P.size(); ++x) {
      for (Index y = 0; y < P.size(); ++y) {
        if (rebuilt.semigroup.product(out.carrier[x], out.carrier[y])
            != out.carrier[P.product(x, y)]) {
          throw ConsistencyError("the rebuilt strong semilattice differs from P at "
                                 + to_string(std::vector<Index>{x, y}));
        }
      }
    }
    return out;
  }

  std::vector<std::vector<Index>> monoid_decompositions(FiniteSemigroup const& P) {
    std::size_t const n = P.size();
    if (n > 8) {
      throw InputError("partition search is limited to 8 elements");
    }
    std::vector<std::vector<Index>> out;
    std::vector<Index>              block(n, 0);
    // Restricted growth strings enumerate set partitions with labels in
    // order of first occurrence.
    auto const recurse = [&](auto&& self, std::size_t i, Index used) -> void {
      if (i == n) {
        Decomposition dec;
        if (!decompose(P, block, dec)) {
          out.push_back(block);
        }
        return;
      }
      for (Index label = 0; label <= used; ++label) {
        block[i] = label;
        self(self, i + 1, label == used ? used + 1 : used);
      }
    };
    if (n > 0) {
      block[0] = 0;
      recurse(recurse, 1, 1);
    }
    return out;
  }

  namespace {

    void require_left_ample_diagram(SemilatticeDiagram const& D) {
      if (auto v = D.validate(); !v) {
        throw InputError("diagram axiom '" + v.clause + "' fails at " + to_string(v.witness));
      }
      std::vector<std::vector<Index>> plus;
      for (Index alpha = 0; alpha < D.components.size(); ++alpha) {
        if (auto v = is_left_ample(D.components[alpha]); !v) {
          throw PreconditionError("component " + std::to_string(alpha) + " is not left ample: "
                                  + v.clause);
        }
        plus.push_back(plus_map(D.components[alpha]));
      }
      for (auto const& [key, phi] : D.connectors) {
        auto const [alpha, beta] = key;
        for (Index a = 0; a < phi.size(); ++a) {
          if (phi[plus[alpha][a]] != plus[beta][phi[a]]) {
            throw PreconditionError("connector " + std::to_string(alpha) + " -> "
                                    + std::to_string(beta) + " does not preserve + at "
                                    + std::to_string(a));
          }
        }
      }
    }

  }  // namespace

  SuiteReport prop_4_2_check(SemilatticeDiagram const& D) {
    require_left_ample_diagram(D);
    auto const  S = build_strong_semilattice(D);
    SuiteReport report;

    auto const ample = is_left_ample(S.semigroup);
    report.clauses.push_back({"(a) S is left ample", ample.holds, ample.witness});

    std::vector<RelationTable> local_rstar;
    for (auto const& C : D.components) {
      local_rstar.push_back(r_star(C));
    }
    auto const   rs = r_star(S.semigroup);
    ClauseResult b{"(b) R* is the union of the component R*", true, {}};
    for (Index x = 0; x < S.semigroup.size() && b.agree; ++x) {
      for (Index y = 0; y < S.semigroup.size(); ++y) {
        bool const local = S.vertex_of[x] == S.vertex_of[y]
                        && local_rstar[S.vertex_of[x]](S.local[x], S.local[y]);
        if (rs(x, y) != local) {
          b = {b.clause, false, {x, y}};
          break;
        }
      }
    }
    report.clauses.push_back(b);

    bool const all_lc = std::all_of(D.components.begin(), D.components.end(),
                                    [](auto const& C) { return has_lc(C).holds; });
    if (!all_lc) {
      report.clauses.push_back({"(c) vacuous: a component lacks (LC)", true, {}});
      return report;
    }
    bool const s_lc         = has_lc(S.semigroup).holds;
    bool       preserving   = true;
    std::vector<Index> first;
    for (auto const& [key, phi] : D.connectors) {
      auto const [alpha, beta] = key;
      if (alpha == beta) {
        continue;
      }
      if (!is_lc_preserving(D.components[alpha], D.components[beta], phi)) {
        preserving = false;
        first      = {alpha, beta};
        break;
      }
    }
    report.clauses.push_back(
        {"(c) S has (LC) iff every connector is (LC)-preserving", s_lc == preserving, first});
    return report;
  }

  HullAssembly theorem_4_3_assemble(SemilatticeDiagram const& D) {
    require_left_ample_diagram(D);
    for (Index alpha = 0; alpha < D.components.size(); ++alpha) {
      if (auto v = has_lc(D.components[alpha]); !v) {
        throw PreconditionError("component " + std::to_string(alpha) + " lacks (LC)");
      }
    }
    for (auto const& [key, phi] : D.connectors) {
      auto const [alpha, beta] = key;
      if (alpha != beta && !is_lc_preserving(D.components[alpha], D.components[beta], phi)) {
        throw PreconditionError("connector " + std::to_string(alpha) + " -> "
                                + std::to_string(beta) + " is not (LC)-preserving");
      }
    }
    HullAssembly out;
    out.S = build_strong_semilattice(D);
    if (!has_lc(out.S.semigroup)) {
      throw PreconditionError("the strong semilattice lacks (LC)");
    }

    auto& QD = out.q_diagram;
    QD.Y     = D.Y;
    for (auto const& C : D.components) {
      out.hulls.push_back(inverse_hull(C));
      QD.components.push_back(out.hulls.back().hull.semigroup);
    }
    for (auto const& [key, phi] : D.connectors) {
      auto const [alpha, beta] = key;
      if (alpha == beta) {
        continue;
      }
      auto lift = lift_through_hulls(out.hulls[alpha], out.hulls[beta], phi);
      if (!lift) {
        throw ConsistencyError("stage lift: connector " + std::to_string(alpha) + " -> "
                               + std::to_string(beta) + " does not lift, condition "
                               + lift.refusal->condition);
      }
      QD.connectors[key] = std::move(*lift.lifted);
    }
    if (auto v = QD.validate(); !v) {
      throw ConsistencyError("stage hull diagram: '" + v.clause + "' fails at "
                             + to_string(v.witness));
    }
    out.Q = build_strong_semilattice(QD);
    auto const Qview = [&] {
      auto r = recognize_inverse(out.Q.semigroup);
      if (!r.view) {
        throw ConsistencyError("stage inverse: Q is not inverse, " + r.verdict.clause);
      }
      return std::move(*r.view);
    }();

    std::size_t const  n = out.S.semigroup.size();
    std::vector<Index> in_q(n);
    for (Index x = 0; x < n; ++x) {
      Index const alpha = out.S.vertex_of[x];
      in_q[x]           = out.Q.element(alpha, out.hulls[alpha].embedding[out.S.local[x]]);
    }
    auto const EQ = SubsetEmbedding::make(Qview, in_q);
    if (EQ.members.size() != n || !is_left_i_order(EQ) || !is_straight(EQ)) {
      throw ConsistencyError("stage order: S is not a straight left I-order in Q");
    }

    out.sigma         = inverse_hull(out.S.semigroup);
    auto const ESigma = hull_embedding(out.sigma);
    ElementMap phi(n);
    for (Index x = 0; x < n; ++x) {
      auto const pos_q = std::lower_bound(EQ.members.begin(), EQ.members.end(), in_q[x])
                       - EQ.members.begin();
      auto const pos_s = std::lower_bound(ESigma.members.begin(), ESigma.members.end(),
                                          out.sigma.embedding[x])
                       - ESigma.members.begin();
      phi[pos_q] = static_cast<Index>(pos_s);
    }
    auto iso = iso_over_s(EQ, ESigma, phi);
    if (!iso) {
      throw ConsistencyError("stage isomorphism: the " + iso.direction + " lift refuses, condition "
                             + iso.refusal->condition);
    }
    if (!is_isomorphism(out.Q.semigroup, out.sigma.hull.semigroup, *iso.iso)) {
      throw ConsistencyError("stage isomorphism: the lift is not an isomorphism");
    }
    for (Index x = 0; x < n; ++x) {
      if ((*iso.iso)[in_q[x]] != out.sigma.embedding[x]) {
        throw ConsistencyError("stage isomorphism: the lift does not extend theta at "
                               + std::to_string(x));
      }
    }
    out.iso = std::move(*iso.iso);
    return out;
  }

  std::vector<SemilatticeDiagram> all_diagrams(FiniteSemigroup const&              Y,
                                               std::vector<FiniteSemigroup> const& components,
                                               MorphismKind                        kind) {
    if (components.size() != Y.size()) {
      throw InputError("one component per vertex is required");
    }
    std::vector<std::pair<Index, Index>> pairs;
    std::vector<std::vector<ElementMap>> candidates;
    for (Index alpha = 0; alpha < Y.size(); ++alpha) {
      for (Index beta = 0; beta < Y.size(); ++beta) {
        if (alpha != beta && above(Y, alpha, beta)) {
          pairs.push_back({alpha, beta});
          candidates.push_back(all_morphisms(components[alpha], components[beta], kind));
        }
      }
    }
    std::vector<SemilatticeDiagram> out;
    SemilatticeDiagram              D{Y, components, {}};
    auto const recurse = [&](auto&& self, std::size_t i) -> void {
      if (i == pairs.size()) {
        if (D.validate()) {
          out.push_back(D);
        }
        return;
      }
      for (auto const& map : candidates[i]) {
        D.connectors[pairs[i]] = map;
        self(self, i + 1);
      }
      D.connectors.erase(pairs[i]);
    };
    recurse(recurse, 0);
    return out;
  }

  SemilatticeDiagram read_diagram(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open diagram file " + path);
    }
    auto const base     = std::filesystem::path(path).parent_path();
    auto const resolve  = [&](std::string const& p) { return (base / p).string(); };
    SemilatticeDiagram D;
    bool               have_y = false;
    std::map<Index, FiniteSemigroup> components;
    std::string        line;
    std::size_t        line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ls(line);
      std::string        word;
      if (!(ls >> word) || word[0] == '#') {
        continue;
      }
      auto const where = path + ":" + std::to_string(line_no) + ": ";
      if (word == "semilattice") {
        std::string file;
        if (!(ls >> file)) {
          throw InputError(where + "expected 'semilattice <file>'");
        }
        D.Y    = io::read_table_file(resolve(file));
        have_y = true;
      } else if (word == "component") {
        Index       v;
        std::string file;
        if (!(ls >> v >> file)) {
          throw InputError(where + "expected 'component <vertex> <file>'");
        }
        components[v] = io::read_table_file(resolve(file));
      } else if (word == "connector") {
        Index       a, b;
        std::string file;
        if (!(ls >> a >> b >> file)) {
          throw InputError(where + "expected 'connector <from> <to> <file>'");
        }
        auto const pairs = io::read_map_file(resolve(file));
        ElementMap map(pairs.size(), kNone);
        for (auto const& [i, j] : pairs) {
          if (i >= map.size() || map[i] != kNone) {
            throw InputError(where + "the map file does not list each source element once");
          }
          map[i] = j;
        }
        D.connectors[{a, b}] = std::move(map);
      } else {
        throw InputError(where + "unknown directive '" + word + "'");
      }
    }
    if (!have_y) {
      throw InputError(path + ": no semilattice line");
    }
    for (Index v = 0; v < D.Y.size(); ++v) {
      auto it = components.find(v);
      if (it == components.end()) {
        throw InputError(path + ": vertex " + std::to_string(v) + " has no component");
      }
      D.components.push_back(it->second);
    }
    if (components.size() != D.Y.size()) {
      throw InputError(path + ": component for a vertex outside Y");
    }
    return D;
  }

}  // namespace liq
