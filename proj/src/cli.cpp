#include "fpoly/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fpoly/chromatic.hpp"
#include "fpoly/gallery.hpp"
#include "fpoly/parameters.hpp"
#include "fpoly/polytope.hpp"

namespace fpoly::cli {
namespace {

using nlohmann::ordered_json;

/// Failure that maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  bool decimal = false;
  Caps caps;
  std::string graph_path;
  std::string point_path;
  std::string variant = "q";
  std::string mode = "cover";
  bool first_only = false;
  std::string gallery_name;
  std::optional<std::uint64_t> k;
  std::size_t count = 200;
  std::uint64_t seed = 42;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Printer {
 public:
  Printer(const Options& options, std::ostream& out) : options_(options), out_(out) {}

  bool json() const { return options_.format == "json"; }

  std::string rational(const Rational& r) const {
    if (!options_.decimal) return to_string(r);
    return to_string(r) + "  (~" + to_decimal_string(r) + ", approximate)";
  }

  void emit(const std::string& command, ordered_json result) const {
    ordered_json doc;
    doc["schema"] = kSchema;
    doc["command"] = command;
    doc["result"] = std::move(result);
    out_ << doc.dump(2) << '\n';
  }

  std::ostream& text() const { return out_; }

 private:
  const Options& options_;
  std::ostream& out_;
};

ordered_json rational_json(const Rational& r) { return to_string(r); }

ordered_json names_json(const WeightedGraph& g, const VertexSet& vertices) {
  ordered_json arr = ordered_json::array();
  for (VertexId v : vertices) arr.push_back(g.name(v));
  return arr;
}

std::string names_text(const WeightedGraph& g, const VertexSet& vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i > 0) out += ",";
    out += g.name(vertices[i]);
  }
  return out + "}";
}

ordered_json point_json(const EdgePoint& x) {
  ordered_json arr = ordered_json::array();
  for (const auto& v : x.values()) arr.push_back(to_string(v));
  return arr;
}

ordered_json weights_json(const std::vector<std::pair<FMatching, Rational>>& weights) {
  ordered_json arr = ordered_json::array();
  for (const auto& [m, w] : weights) {
    arr.push_back({{"edges", m.edges()}, {"weight", to_string(w)}});
  }
  return arr;
}

std::string edges_text(const EdgeSet& edges) {
  std::string out = "{";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += (i > 0 ? "," : "") + std::to_string(edges[i]);
  }
  return out + "}";
}

WeightedGraph load_graph(const Options& o) { return parse_graph(read_file(o.graph_path)); }

EdgePoint load_point(const Options& o, const WeightedGraph& g, std::ostream& err) {
  auto file = parse_point(read_file(o.point_path), g.edge_count());
  for (const auto& w : file.warnings) err << "warning: " << w << '\n';
  return std::move(file.point);
}

int cmd_params(const Options& o, const Printer& p) {
  const auto g = load_graph(o);
  const auto r = parameter_report(g, o.caps.vertices);
  if (p.json()) {
    p.emit("params", {{"delta_star", rational_json(r.delta_star)},
                      {"delta", r.delta},
                      {"density_star", rational_json(r.density_star)},
                      {"density", r.density},
                      {"density_witness", names_json(g, r.density_witness)},
                      {"gamma_star", rational_json(r.gamma_star)},
                      {"gamma", r.gamma},
                      {"gamma_witness",
                       {{"vertices", names_json(g, r.gamma_witness.vertices)},
                        {"boundary_size", r.gamma_witness.boundary_size}}},
                      {"lemma5_holds", lemma5_holds(r)}});
  } else {
    auto& out = p.text();
    out << "Δ*_f  = " << p.rational(r.delta_star) << '\n';
    out << "Δf    = " << r.delta << '\n';
    out << "w*_f  = " << p.rational(r.density_star) << "   U = "
        << names_text(g, r.density_witness) << '\n';
    out << "wf    = " << r.density << '\n';
    out << "Γ*_f  = " << p.rational(r.gamma_star) << "   U = "
        << names_text(g, r.gamma_witness.vertices) << ", |F| = " << r.gamma_witness.boundary_size
        << '\n';
    out << "Γf    = " << r.gamma << '\n';
    out << "max{Δf+1, Γf} = max{Δf+1, wf}: " << (lemma5_holds(r) ? "yes" : "NO") << '\n';
  }
  return lemma5_holds(r) ? kExitOk : kExitClaimFailed;
}

int cmd_frac_index(const Options& o, const Printer& p) {
  const auto g = load_graph(o);
  const auto mode = parse_lp_mode(o.mode);
  const auto r = frac_index_lp(g, mode, o.caps.edges);
  std::optional<Rational> formula;
  if (g.vertex_count() > 0 && delta_star(g) >= 1) formula = frac_index_formula(g, o.caps.vertices);
  const bool agrees = !formula || *formula == r.value;
  if (p.json()) {
    ordered_json result{{"mode", label(mode)},
                        {"value", rational_json(r.value)},
                        {"weights", weights_json(r.colouring.weights)}};
    result["formula"] = formula ? ordered_json(to_string(*formula)) : ordered_json(nullptr);
    p.emit("frac-index", std::move(result));
  } else {
    auto& out = p.text();
    out << "χ'*_f = " << p.rational(r.value) << "   (" << label(mode) << " LP)\n";
    if (formula) {
      out << "max{Δ*_f, Γ*_f} = " << p.rational(*formula) << '\n';
    } else {
      out << "max{Δ*_f, Γ*_f}: not applicable (Δ*_f < 1)\n";
    }
    out << "weighting:\n";
    for (const auto& [m, w] : r.colouring.weights) {
      out << "  " << to_string(w) << "  " << edges_text(m.edges()) << '\n';
    }
  }
  return agrees ? kExitOk : kExitClaimFailed;
}

int cmd_index(const Options& o, const Printer& p) {
  const auto g = load_graph(o);
  const auto r = exact_index(g, o.caps);
  const bool ok = partition_check(g, r.classes);
  if (p.json()) {
    ordered_json classes = ordered_json::array();
    for (const auto& c : r.classes) classes.push_back(c.edges());
    p.emit("index", {{"chi", r.index}, {"classes", classes}});
  } else {
    p.text() << "χ'_f = " << r.index << '\n';
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      p.text() << "  class " << i << ": " << edges_text(r.classes[i].edges()) << '\n';
    }
  }
  return ok ? kExitOk : kExitClaimFailed;
}

int cmd_bounds(const Options& o, const Printer& p) {
  const auto g = load_graph(o);
  const auto r = bounds_report(g, o.caps);
  const bool proved = r.fractional_lower_ok && r.lower_bound_ok && r.nns_ok &&
                      r.ceil_identity_ok.value_or(true) && r.lemma5_ok;
  if (p.json()) {
    ordered_json result{{"chi", r.chi},
                        {"chi_star", rational_json(r.chi_star)},
                        {"delta_star", rational_json(r.parameters.delta_star)},
                        {"delta", r.parameters.delta},
                        {"density_star", rational_json(r.parameters.density_star)},
                        {"density", r.parameters.density},
                        {"gamma_star", rational_json(r.parameters.gamma_star)},
                        {"gamma", r.parameters.gamma},
                        {"fractional_lower_ok", r.fractional_lower_ok},
                        {"lower_bound_ok", r.lower_bound_ok},
                        {"nns_ok", r.nns_ok},
                        {"conjecture1_ok", r.conjecture1_ok}};
    result["ceil_identity_ok"] =
        r.ceil_identity_ok ? ordered_json(*r.ceil_identity_ok) : ordered_json("not applicable");
    result["sandwich_ok"] = r.sandwich_ok;
    result["lemma5_ok"] = r.lemma5_ok;
    p.emit("bounds", std::move(result));
  } else {
    auto& out = p.text();
    auto flag = [](bool b) { return b ? "holds" : "FAILS"; };
    out << "χ'_f  = " << r.chi << '\n';
    out << "χ'*_f = " << p.rational(r.chi_star) << '\n';
    out << "Δ*_f = " << to_string(r.parameters.delta_star) << ", Δf = " << r.parameters.delta
        << ", w*_f = " << to_string(r.parameters.density_star) << ", wf = "
        << r.parameters.density << ", Γ*_f = " << to_string(r.parameters.gamma_star)
        << ", Γf = " << r.parameters.gamma << '\n';
    out << "χ'*_f <= χ'_f                        " << flag(r.fractional_lower_ok) << '\n';
    out << "χ'_f >= max{Δf, wf}                  " << flag(r.lower_bound_ok) << '\n';
    out << "χ'_f <= max{9/8 Δf + 6/8, wf}        " << flag(r.nns_ok) << '\n';
    out << "χ'_f <= max{Δf + 1, wf} (conjecture) " << flag(r.conjecture1_ok) << '\n';
    out << "ceil(χ'*_f) = max{Δf, Γf}            "
        << (r.ceil_identity_ok ? flag(*r.ceil_identity_ok) : "not applicable (Δ*_f < 1)") << '\n';
    out << "ceil(χ'*_f) <= χ'_f <= ceil(χ'*_f)+1 " << flag(r.sandwich_ok) << " (observation)\n";
    out << "max{Δf+1, Γf} = max{Δf+1, wf}        " << flag(r.lemma5_ok) << '\n';
  }
  return proved ? kExitOk : kExitClaimFailed;
}

int cmd_member(const Options& o, const Printer& p, std::ostream& err) {
  const auto g = load_graph(o);
  const auto x = load_point(o, g, err);
  const auto verdict = membership(g, x, o.caps.edges);
  if (const auto* member = std::get_if<Member>(&verdict)) {
    if (p.json()) {
      p.emit("member", {{"verdict", "member"}, {"weights", weights_json(member->weights)}});
    } else {
      p.text() << "member: x = Σ λ_M i_M with\n";
      for (const auto& [m, w] : member->weights) {
        p.text() << "  " << to_string(w) << "  " << edges_text(m.edges()) << '\n';
      }
    }
  } else {
    const auto& f = std::get<NonMember>(verdict).functional;
    if (p.json()) {
      p.emit("member", {{"verdict", "non-member"},
                        {"functional",
                         {{"coefficients", point_json(f.coefficients)},
                          {"bound", rational_json(f.bound)},
                          {"value_at_point", rational_json(f.coefficients.dot(x))}}}});
    } else {
      p.text() << "non-member: a·i_M <= " << to_string(f.bound)
               << " for every f-matching M, but a·x = " << to_string(f.coefficients.dot(x))
               << "\n  a = " << f.coefficients.str() << '\n';
    }
  }
  return kExitOk;
}

int cmd_qcheck(const Options& o, const Printer& p, std::ostream& err) {
  const auto g = load_graph(o);
  const auto x = load_point(o, g, err);
  const auto variant = parse_variant(o.variant);
  CheckOptions options;
  options.first_only = o.first_only;
  options.vertex_cap = o.caps.vertices;
  const auto violations = check_system(g, x, variant, options);
  if (p.json()) {
    ordered_json list = ordered_json::array();
    for (const auto& v : violations) {
      list.push_back({{"kind", label(v.kind)},
                      {"vertices", names_json(g, v.vertices)},
                      {"edges", v.edges},
                      {"lhs", rational_json(v.lhs)},
                      {"rhs", rational_json(v.rhs)}});
    }
    p.emit("qcheck", {{"variant", label(variant)},
                      {"violation_count", violations.size()},
                      {"violations", list}});
  } else {
    p.text() << violations.size() << " violations (" << label(variant) << ")\n";
    for (const auto& v : violations) {
      p.text() << "  " << label(v.kind);
      if (!v.vertices.empty()) p.text() << " U=" << names_text(g, v.vertices);
      if (!v.edges.empty()) p.text() << " F=" << edges_text(v.edges);
      p.text() << ": " << to_string(v.lhs) << " > " << to_string(v.rhs) << '\n';
    }
  }
  return violations.empty() ? kExitOk : kExitClaimFailed;
}

int cmd_gallery_list(const Printer& p) {
  const auto names = gallery_names();
  if (p.json()) {
    p.emit("gallery list", {{"items", names}});
  } else {
    for (const auto& n : names) p.text() << n << '\n';
  }
  return kExitOk;
}

int cmd_gallery_verify(const Options& o, const Printer& p) {
  GalleryItem item;
  try {
    item = gallery_item(o.gallery_name, o.k);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto results = verify(item);
  const bool ok = all_passed(results);
  if (p.json()) {
    ordered_json claims = ordered_json::array();
    for (const auto& r : results) {
      claims.push_back({{"claim", r.description}, {"passed", r.passed}, {"detail", r.detail}});
    }
    ordered_json result{{"item", item.name}, {"graph", serialize_graph(item.graph)}};
    result["witness"] = item.witness ? point_json(*item.witness) : ordered_json(nullptr);
    if (!item.note.empty()) result["note"] = item.note;
    result["claims"] = claims;
    result["all_passed"] = ok;
    p.emit("gallery verify", std::move(result));
  } else {
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.passed;
    p.text() << item.name << (item.note.empty() ? "" : " (" + item.note + ")") << ": " << passed
             << "/" << results.size() << " claims passed\n";
    if (item.witness) p.text() << "  witness x = " << item.witness->str() << '\n';
    for (const auto& r : results) {
      p.text() << "  [" << (r.passed ? "pass" : "FAIL") << "] " << r.description;
      if (!r.detail.empty()) p.text() << ": " << r.detail;
      p.text() << '\n';
    }
  }
  return ok ? kExitOk : kExitClaimFailed;
}

int cmd_sweep(const Options& o, const Printer& p) {
  SweepLimits limits;
  limits.caps.vertices = o.caps.vertices;
  limits.caps.edges = std::max(o.caps.edges, limits.caps.edges);
  const auto r = sweep(o.count, o.seed, limits);
  if (p.json()) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : r.qf_gap_witnesses) {
      witnesses.push_back({{"graph", serialize_graph(w.graph)}, {"point", point_json(w.point)}});
    }
    p.emit("sweep", {{"instances_tested", r.instances_tested},
                     {"seed", r.seed},
                     {"corollary3_confirmed", r.corollary3_confirmed},
                     {"corollary4_confirmed", r.corollary4_confirmed},
                     {"lemma5_confirmed", r.lemma5_confirmed},
                     {"theorem3_confirmed", r.theorem3_confirmed},
                     {"theorem2_confirmed", r.theorem2_confirmed},
                     {"mode_agreement_confirmed", r.mode_agreement_confirmed},
                     {"bounds_confirmed", r.bounds_confirmed},
                     {"gamma_exceeds_density_count", r.gamma_exceeds_density_count},
                     {"qf_gap_witnesses", witnesses},
                     {"conjecture_exceptions", r.conjecture_exceptions},
                     {"failures", r.failures}});
  } else {
    auto& out = p.text();
    out << "instances tested            " << r.instances_tested << " (seed " << r.seed << ")\n";
    out << "χ'* = max{Δ*, w*}, f = 1    " << r.corollary3_confirmed << '\n';
    out << "χ'*_f = max{Δ*_f, Γ*_f}     " << r.corollary4_confirmed << '\n';
    out << "Γf identity confirmed       " << r.lemma5_confirmed << '\n';
    out << "(a)-(c) membership pairs    " << r.theorem3_confirmed << '\n';
    out << "(1)-(3) membership pairs    " << r.theorem2_confirmed << '\n';
    out << "LP mode agreement           " << r.mode_agreement_confirmed << '\n';
    out << "bound suite confirmed       " << r.bounds_confirmed << '\n';
    out << "Γ*_f > max{Δ*_f, w*_f}      " << r.gamma_exceeds_density_count << '\n';
    out << "Q_f gap witnesses           " << r.qf_gap_witnesses.size() << '\n';
    for (const auto& w : r.qf_gap_witnesses) {
      out << "  x = " << w.point.str() << " on\n";
      std::istringstream lines(serialize_graph(w.graph));
      for (std::string line; std::getline(lines, line);) out << "    " << line << '\n';
    }
    out << "conjecture exceptions       " << r.conjecture_exceptions.size() << '\n';
    out << "failures                    " << r.failures.size() << '\n';
    for (const auto& f : r.failures) out << "  " << f << '\n';
  }
  return r.failures.empty() ? kExitOk : kExitClaimFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact f-colouring parameters and f-matching polytope checks", "fpoly"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--decimal", o.decimal, "Add approximate decimal renderings to text output");
  app.add_option("--cap-edges", o.caps.edges, "Edge cap for f-matching enumeration")
      ->capture_default_str();
  app.add_option("--cap-vertices", o.caps.vertices, "Vertex cap for subset scans")
      ->capture_default_str();

  auto* params = app.add_subcommand("params", "Δ*_f, w*_f, Γ*_f and their ceilings");
  params->add_option("graph", o.graph_path, "Graph file")->required();
  auto* frac = app.add_subcommand("frac-index", "Fractional f-chromatic index by exact LP");
  frac->add_option("graph", o.graph_path, "Graph file")->required();
  frac->add_option("--mode", o.mode, "LP form")
      ->check(CLI::IsMember({"equality", "cover"}))
      ->capture_default_str();
  auto* index = app.add_subcommand("index", "f-chromatic index by branch and bound");
  index->add_option("graph", o.graph_path, "Graph file")->required();
  auto* bounds = app.add_subcommand("bounds", "Index bounds and identities");
  bounds->add_option("graph", o.graph_path, "Graph file")->required();
  auto* member = app.add_subcommand("member", "Membership in the f-matching polytope");
  member->add_option("graph", o.graph_path, "Graph file")->required();
  member->add_option("point", o.point_path, "Point file")->required();
  auto* qcheck = app.add_subcommand("qcheck", "Check a point against an inequality system");
  qcheck->add_option("graph", o.graph_path, "Graph file")->required();
  qcheck->add_option("point", o.point_path, "Point file")->required();
  qcheck->add_option("--variant", o.variant, "Inequality system")
      ->check(CLI::IsMember({"q", "q-unit", "edmonds-f", "edmonds-1"}))
      ->capture_default_str();
  qcheck->add_flag("--first-only", o.first_only, "Stop at the first violation");
  auto* gallery = app.add_subcommand("gallery", "Named constructions with machine-checked claims");
  gallery->require_subcommand(1);
  auto* gallery_list = gallery->add_subcommand("list", "List gallery items");
  auto* gallery_verify = gallery->add_subcommand("verify", "Verify every claim of an item");
  gallery_verify->add_option("name", o.gallery_name, "Item name")->required();
  gallery_verify->add_option("--k", o.k, "Size parameter (odd for example2)");
  auto* sweep_cmd = app.add_subcommand("sweep", "Seeded random stress test");
  sweep_cmd->add_option("--count", o.count, "Number of random graphs")->capture_default_str();
  sweep_cmd->add_option("--seed", o.seed, "Seed")->capture_default_str();
  for (auto* sub : {params, frac, index, bounds, member, qcheck, gallery, gallery_list,
                    gallery_verify, sweep_cmd}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const Printer printer(o, out);
  try {
    if (*params) return cmd_params(o, printer);
    if (*frac) return cmd_frac_index(o, printer);
    if (*index) return cmd_index(o, printer);
    if (*bounds) return cmd_bounds(o, printer);
    if (*member) return cmd_member(o, printer, err);
    if (*qcheck) return cmd_qcheck(o, printer, err);
    if (*gallery_list) return cmd_gallery_list(printer);
    if (*gallery_verify) return cmd_gallery_verify(o, printer);
    if (*sweep_cmd) return cmd_sweep(o, printer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitClaimFailed;
  }
  err << "error: no command given\n";
  return kExitUsage;
}

}  // namespace fpoly::cli
