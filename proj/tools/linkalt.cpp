// linkalt: command-line front end.
//
// Exit codes: 0 success, 1 invalid input, 2 resource limit.

#include <linkalt/classify.hpp>
#include <linkalt/flatsurf.hpp>
#include <linkalt/obstruction.hpp>
#include <linkalt/seifert.hpp>
#include <linkalt/skein.hpp>
#include <linkalt/table.hpp>
#include <linkalt/verify.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

using namespace linkalt;
using json = nlohmann::ordered_json;

namespace {

struct Context {
  std::string table_path = default_table_path();
  std::string surface_dir = default_surface_dir();
  bool json = false;
  std::optional<std::vector<LinkTableEntry>> table;

  const std::vector<LinkTableEntry>& entries() {
    if (!table) table = load_table(table_path);
    return *table;
  }
};

std::string slurp_stdin() {
  return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

// `-` is stdin, an existing path is read, anything else is taken literally.
std::string input_text(const std::string& arg) {
  if (arg == "-") return slurp_stdin();
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

struct Resolved {
  LinkDiagram diagram;
  const LinkTableEntry* entry = nullptr;
};

Resolved resolve_diagram(Context& ctx, const std::string& arg) {
  Resolved r;
  if (arg.rfind("name:", 0) == 0) {
    r.entry = &find_entry(ctx.entries(), arg.substr(5));
    r.diagram = r.entry->diagram;
    return r;
  }
  r.diagram = parse_pd(input_text(arg));
  return r;
}

FlatSurface resolve_surface(Context& ctx, const std::string& arg) {
  if (arg.rfind("name:", 0) == 0) return parse_surface(read_file(ctx.surface_dir + "/" + arg.substr(5) + ".surf"));
  return parse_surface(input_text(arg));
}

std::string label(const Resolved& r) { return r.diagram.name; }

SkeinOptions skein_options() { return SkeinOptions{skein_budget_from_env(), true}; }

void emit(const Context& ctx, const json& j, const std::string& text) {
  if (ctx.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

json boundary_json(const FlatSurface& s) {
  auto b = boundary(s);
  json j;
  j["components"] = b.components;
  j["betti"] = b.betti;
  j["genus"] = b.genus;
  j["itineraries"] = b.itineraries;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  Context ctx;
  CLI::App app{"linkalt: alternative, homogeneous and pseudoalternating links"};
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json, "machine-readable output");
  app.add_option("--table", ctx.table_path, "link table (default: bundled)");
  app.add_option("--surfaces", ctx.surface_dir, "directory for name: surface references");

  std::string input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "PD text, a file, name:<entry>, or - for stdin")->required();
    sub->add_flag("--json", ctx.json, "machine-readable output");
  };

  auto* c_classify = app.add_subcommand("classify", "sign, alternating, alternative and homogeneous tests");
  add_input(c_classify);
  auto* c_conway = app.add_subcommand("conway", "Conway polynomial");
  add_input(c_conway);
  auto* c_homfly = app.add_subcommand("homflypt", "HOMFLYPT polynomial in v, z");
  add_input(c_homfly);

  auto* c_obstruct = app.add_subcommand("obstruct", "crossing-number obstruction to homogeneity");
  add_input(c_obstruct);
  std::optional<int> bound;
  std::string provenance = "user-asserted";
  c_obstruct->add_option("--crossing-bound", bound, "known lower bound for the crossing number");
  auto* prov_opt = c_obstruct->add_option("--provenance", provenance, "user-asserted | table | diagram-upper-bound-only");

  auto* c_graph = app.add_subcommand("graph", "Seifert graph, blocks and cut vertices");
  add_input(c_graph);
  bool dot = false;
  c_graph->add_flag("--dot", dot, "Graphviz output");

  auto* c_pretzel = app.add_subcommand("pretzel", "pretzel diagram P(a1,...,ak)");
  std::vector<int> params;
  bool pretzel_surf = false;
  c_pretzel->add_option("params", params, "twist counts")->required()->allow_extra_args();
  c_pretzel->add_flag("--surface", pretzel_surf, "print the flat surface instead of the diagram");
  c_pretzel->add_flag("--json", ctx.json, "machine-readable output");

  auto* c_surface = app.add_subcommand("surface", "generalized flat surfaces");
  c_surface->require_subcommand(1);
  auto* s_boundary = c_surface->add_subcommand("boundary", "boundary components and genus");
  add_input(s_boundary);
  auto* s_betti = c_surface->add_subcommand("betti", "first Betti number and pieces");
  add_input(s_betti);
  auto* s_emit = c_surface->add_subcommand("emit", "PD diagram of the boundary");
  add_input(s_emit);
  auto* s_decompose = c_surface->add_subcommand("decompose", "canonical surface of a homogeneous diagram");
  add_input(s_decompose);
  auto* s_dot = c_surface->add_subcommand("dot", "plumbing tree as Graphviz");
  add_input(s_dot);
  auto* s_plumb = c_surface->add_subcommand("plumb", "plumb surface B onto surface A");
  std::string surf_b, pattern, side = "under";
  int disc_a = 0, disc_b = 0;
  s_plumb->add_option("a", input, "surface A")->required();
  s_plumb->add_option("disc_a", disc_a, "gluing disc of A")->required();
  s_plumb->add_option("b", surf_b, "surface B")->required();
  s_plumb->add_option("disc_b", disc_b, "gluing disc of B")->required();
  s_plumb->add_option("--pattern", pattern, "interleave such as ABAB (default: all of A, then B)");
  s_plumb->add_option("--side", side, "over | under")->check(CLI::IsMember({"over", "under"}));
  s_plumb->add_flag("--json", ctx.json, "machine-readable output");

  auto* c_verify = app.add_subcommand("verify-paper", "run the bundled checks");
  std::optional<std::uint64_t> budget;
  c_verify->add_option("--budget", budget, "skein node budget");
  c_verify->add_flag("--json", ctx.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (c_classify->parsed()) {
      auto r = resolve_diagram(ctx, input);
      auto c = classify(r.diagram);
      json j = to_json(c);
      std::string text;
      for (auto it = j.begin(); it != j.end(); ++it) text += it.key() + ": " + it.value().dump() + "\n";
      emit(ctx, j, text);
    } else if (c_conway->parsed()) {
      auto r = resolve_diagram(ctx, input);
      auto p = conway(r.diagram, skein_options());
      emit(ctx, json{{"name", label(r)}, {"conway", p.to_string()}}, p.to_string() + "\n");
    } else if (c_homfly->parsed()) {
      auto r = resolve_diagram(ctx, input);
      auto p = homflypt(r.diagram, skein_options());
      emit(ctx, json{{"name", label(r)}, {"homflypt", p.to_string()}}, p.to_string() + "\n");
    } else if (c_obstruct->parsed()) {
      auto r = resolve_diagram(ctx, input);
      CrossingBound b;
      if (bound) {
        b.value = *bound;
        b.provenance = parse_provenance(provenance);
      } else if (r.entry && r.entry->crossing_number) {
        b = *r.entry->crossing_number;
        if (prov_opt->count()) b.provenance = parse_provenance(provenance);
      } else {
        // Only an upper bound is available; the verdict stays inconclusive.
        b.value = r.diagram.crossing_count() > 0 ? r.diagram.crossing_count() : 1;
        b.provenance = BoundProvenance::DiagramUpperBoundOnly;
      }
      auto v = cromwell_test(conway(r.diagram, skein_options()), b);
      emit(ctx, to_json(v, label(r)), report_text(v, label(r)));
    } else if (c_graph->parsed()) {
      auto r = resolve_diagram(ctx, input);
      auto g = seifert_graph(seifert_structure(r.diagram));
      if (dot && !ctx.json) {
        std::cout << seifert_graph_dot(g, r.diagram.name.empty() ? "seifert" : r.diagram.name);
      } else {
        json j;
        j["name"] = label(r);
        j["vertices"] = g.vertex_names;
        j["edges"] = json::array();
        for (const auto& e : g.edges)
          j["edges"].push_back({{"u", g.vertex_names[e.u]}, {"v", g.vertex_names[e.v]}, {"sign", e.sign},
                                {"crossing", e.crossing}});
        j["blocks"] = g.blocks;
        std::vector<std::string> cuts;
        for (int v : g.cut_vertices) cuts.push_back(g.vertex_names[v]);
        j["cut_vertices"] = cuts;
        std::string text = "vertices: " + std::to_string(g.vertex_count) + "\n";
        for (const auto& e : g.edges)
          text += "  " + g.vertex_names[e.u] + " -- " + g.vertex_names[e.v] + " " + (e.sign > 0 ? "+" : "-") +
                  " (crossing " + std::to_string(e.crossing) + ")\n";
        for (std::size_t k = 0; k < g.blocks.size(); ++k) {
          text += "block " + std::to_string(k) + ":";
          for (int e : g.blocks[k]) text += " " + std::to_string(e);
          text += "\n";
        }
        text += "cut vertices:";
        for (const auto& c : cuts) text += " " + c;
        emit(ctx, j, text + "\n");
      }
    } else if (c_pretzel->parsed()) {
      if (pretzel_surf) {
        auto s = pretzel_surface(params);
        emit(ctx, json{{"params", params}, {"surface", serialize(s)}, {"boundary", boundary_json(s)}}, serialize(s));
      } else {
        auto d = pretzel_diagram(params);
        auto pd = to_pd_string(d);
        emit(ctx, json{{"name", d.name}, {"pd", pd}}, pd + "\n");
      }
    } else if (c_surface->parsed()) {
      if (s_boundary->parsed()) {
        auto s = resolve_surface(ctx, input);
        auto j = boundary_json(s);
        std::string text = "components: " + std::to_string(j["components"].get<int>()) +
                           "\nbetti: " + std::to_string(s.betti()) + "\ngenus: " + std::to_string(j["genus"].get<int>()) + "\n";
        for (const auto& it : boundary(s).itineraries) {
          text += "  bands:";
          for (int e : it) text += " b" + std::to_string(e);
          text += "\n";
        }
        emit(ctx, j, text);
      } else if (s_betti->parsed()) {
        auto s = resolve_surface(ctx, input);
        json j;
        j["betti"] = s.betti();
        j["pieces"] = json::array();
        std::string text = "betti: " + std::to_string(s.betti()) + "\n";
        for (const auto& p : s.pieces) {
          j["pieces"].push_back({{"name", p.name}, {"betti", p.surface.betti()}});
          text += "  " + p.name + ": " + std::to_string(p.surface.betti()) + "\n";
        }
        j["nontrivial_pieces"] = s.nontrivial_pieces();
        text += "nontrivial pieces: " + std::to_string(s.nontrivial_pieces()) + "\n";
        emit(ctx, j, text);
      } else if (s_emit->parsed()) {
        auto s = resolve_surface(ctx, input);
        auto d = overturn_boundary_diagram(s);
        auto pd = to_pd_string(d);
        emit(ctx, json{{"pd", pd}, {"crossings", d.crossing_count()}, {"components", component_count(d)}}, pd + "\n");
      } else if (s_decompose->parsed()) {
        auto r = resolve_diagram(ctx, input);
        auto s = decompose_homogeneous(r.diagram);
        emit(ctx, json{{"name", label(r)}, {"pieces", s.piece_count()}, {"surface", serialize(s)}}, serialize(s));
      } else if (s_dot->parsed()) {
        auto s = resolve_surface(ctx, input);
        std::cout << plumbing_dot(s);
      } else if (s_plumb->parsed()) {
        auto A = resolve_surface(ctx, input);
        auto B = resolve_surface(ctx, surf_b);
        if (disc_a < 0 || disc_a >= A.disc_count() || disc_b < 0 || disc_b >= B.disc_count())
          throw SurfaceError("gluing disc out of range");
        std::string pat = pattern;
        if (pat.empty()) pat = std::string(A.order[disc_a].size(), 'A') + std::string(B.order[disc_b].size(), 'B');
        auto s = plumb(A, disc_a, B, disc_b, pattern_shuffle(A, disc_a, B, disc_b, pat),
                       side == "over" ? Overturn::Over : Overturn::Under);
        emit(ctx, json{{"surface", serialize(s)}, {"betti", s.betti()}, {"boundary", boundary_json(s)}}, serialize(s));
      }
    } else if (c_verify->parsed()) {
      VerifyOptions opt;
      opt.table_path = ctx.table_path;
      opt.surface_dir = ctx.surface_dir;
      if (budget) opt.skein.budget = *budget;
      auto rep = verify_all(opt);
      emit(ctx, to_json(rep), report_text(rep));
      return rep.exit_code();
    }
  } catch (const SkeinBudgetExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
