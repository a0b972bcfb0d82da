// hemi: build the icosahedral incidence graphs, compute their automorphism
// groups, run the verification suite and the small vertex-minimality search.

#include "hemi/automorphisms.hpp"
#include "hemi/constructions.hpp"
#include "hemi/dot.hpp"
#include "hemi/graph6.hpp"
#include "hemi/mu_search.hpp"
#include "hemi/polyhedron_json.hpp"
#include "hemi/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hemi;

constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Polyhedron solid_named(const std::string &name) {
  if (name == "icosahedron") return build_icosahedron();
  if (name == "dodecahedron") return build_dodecahedron();
  throw UsageError("unknown solid '" + name + "'");
}

void write_text(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

std::string read_text(const std::string &path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

int run_build(const std::string &solid, const std::string &json_path) {
  const Polyhedron p = solid_named(solid);
  std::cerr << solid << ": " << p.num_vertices() << " vertices, " << p.num_edges() << " edges, " << p.num_faces()
            << " faces\n";
  write_text(json_path, polyhedron_to_json(p).dump() + "\n");
  return 0;
}

int run_graph(const std::string &kind, const std::string &solid, int hub, const std::string &format,
              const std::string &out_path) {
  const Polyhedron p = solid_named(solid);
  Graph g;
  std::vector<std::string> labels;
  std::vector<Edge> highlighted;
  if (kind == "skeleton") {
    g = one_skeleton(p);
  } else if (kind == "gamma") {
    g = vertex_face_graph(p);
    for (int v = 0; v < g.order(); ++v)
      labels.push_back(v < static_cast<int>(p.num_vertices()) ? "v" + std::to_string(v)
                                                              : "f" + std::to_string(v - p.num_vertices()));
  } else if (kind == "pi" || kind == "xi") {
    const ProjectiveGraph proj = projective_vertex_face_graph(p);
    g = proj.graph;
    for (int c = 0; c < proj.pairing.num_vertex_classes(); ++c)
      labels.push_back("[v" + std::to_string(proj.pairing.vertex_members[c][0]) + "]");
    for (int c = 0; c < proj.pairing.num_face_classes(); ++c)
      labels.push_back("[f" + std::to_string(proj.pairing.face_members[c][0]) + "]");
    if (kind == "xi") {
      if (solid != "icosahedron") throw UsageError("xi is defined for the icosahedron only");
      const WheelLabeling w = find_wheel(one_skeleton(p), proj.pairing, hub);
      const auto extra = extra_edges(proj.pairing, w);
      g = add_extra_edges(g, extra);
      highlighted.assign(extra.begin(), extra.end());
      const char *names = "OABCDE";
      const std::array<int, 6> wheel{w.O(), w.A(), w.B(), w.C(), w.D(), w.E()};
      for (int i = 0; i < 6; ++i) labels[proj.pairing.vertex_class[wheel[i]]] = std::string("[") + names[i] + "]";
    }
  } else {
    throw UsageError("unknown graph kind '" + kind + "'");
  }
  if (format == "g6") write_text(out_path, graph6_encode(g) + "\n");
  else write_text(out_path, dot_export(g, labels, highlighted));
  return 0;
}

int run_aut(const std::string &path, bool as_json) {
  std::istringstream lines(read_text(path));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line.front() == '#') continue;
    const Graph g = graph6_decode(line);
    const AutomorphismSummary s = summarize_automorphisms(g);
    if (as_json) {
      Json j;
      j["schema"] = 1;
      j["graph6"] = graph6_encode(g);
      j["order"] = s.order.str();
      j["group"] = to_json(s.name);
      j["generators"] = to_json(s.generators);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << s.headline() << "\n";
      for (const auto &gen : s.generators) std::cout << "  " << gen.cycle_string() << "\n";
    }
    ++count;
  }
  if (count == 0) throw UsageError("no graph6 lines in " + path);
  return 0;
}

int run_verify(const std::string &which, bool as_json) {
  std::vector<VerificationReport> reports;
  if (which == "prop1" || which == "all") reports.push_back(verify_prop1());
  if (which == "prop2" || which == "all") reports.push_back(verify_prop2());
  if (which == "remarks" || which == "all") reports.push_back(verify_remarks());
  bool ok = true;
  for (const auto &r : reports) ok = ok && r.verified();
  if (as_json) {
    Json j;
    j["schema"] = 1;
    j["reports"] = Json::array();
    for (const auto &r : reports) j["reports"].push_back(r.to_json());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto &r : reports) {
      std::cout << r.claim << ": " << (r.verified() ? "verified" : "FAILED") << "\n";
      for (const auto &c : r.checks) std::cout << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.index << ". " << c.name << "\n";
    }
  }
  return ok ? 0 : kExitVerificationFailed;
}

int run_search(const std::string &group, int max_n, bool stretch, bool as_json) {
  const auto target = GroupName::parse(group);
  if (!target) throw UsageError("unknown group name '" + group + "'");
  if (max_n > kGuaranteedSearchTier && !stretch)
    throw UsageError("--max-n above " + std::to_string(kGuaranteedSearchTier) + " needs --stretch");
  SearchOptions opt;
  opt.allow_stretch = stretch;
  if (stretch) opt.progress = [](int n, std::size_t count) { std::cerr << "n = " << n << ": " << count << " classes\n"; };
  SearchReport r;
  try {
    r = mu_search(*target, max_n, opt);
  } catch (const TargetNotIdentifiable &e) {
    throw UsageError(e.what());
  }
  if (as_json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else if (r.found_n) {
    std::cout << "mu(" << r.target.to_string() << ") = " << *r.found_n << ", certificate " << r.certificate << "\n";
  } else {
    std::cout << r.target.to_string() << " not realised on at most " << r.n_max << " vertices\n";
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"hemi-icosahedron graphs and their automorphism groups"};
  app.require_subcommand(1);

  std::string solid, json_path, kind, format = "g6", out_path, file, which, group;
  int hub = 0, max_n = 0;
  bool as_json = false, stretch = false;

  auto *build = app.add_subcommand("build", "emit an exact polyhedron as JSON");
  build->add_option("solid", solid)->required()->check(CLI::IsMember({"icosahedron", "dodecahedron"}));
  build->add_option("--json", json_path, "output file (default stdout)");

  auto add_graph_options = [&](CLI::App *cmd) {
    cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"pi", "xi", "gamma", "skeleton"}));
    cmd->add_option("--solid", solid)->required()->check(CLI::IsMember({"icosahedron", "dodecahedron"}));
    cmd->add_option("--hub", hub, "wheel hub vertex for xi")->check(CLI::Range(0, 11));
    cmd->add_option("--format", format)->check(CLI::IsMember({"g6", "dot"}));
    cmd->add_option("-o,--output", out_path, "output file (default stdout)");
  };
  auto *graph = app.add_subcommand("graph", "emit one of the constructed graphs");
  add_graph_options(graph);
  auto *exp = app.add_subcommand("export", "alias of graph");
  add_graph_options(exp);

  auto *aut = app.add_subcommand("aut", "automorphism group of each graph6 line in a file ('-' for stdin)");
  aut->add_option("file", file)->required();
  aut->add_flag("--json", as_json);

  auto *verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("claim", which)->required()->check(CLI::IsMember({"prop1", "prop2", "remarks", "all"}));
  verify->add_flag("--json", as_json);

  auto *search = app.add_subcommand("search", "fewest vertices of a graph with the given automorphism group");
  search->add_option("--group", group)->required();
  search->add_option("--max-n", max_n)->required()->check(CLI::Range(1, kStretchSearchTier));
  search->add_flag("--stretch", stretch, "allow --max-n above 7");
  search->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*build) return run_build(solid, json_path);
    if (*graph || *exp) return run_graph(kind, solid, hub, format, out_path);
    if (*aut) return run_aut(file, as_json);
    if (*verify) return run_verify(which, as_json);
    if (*search) return run_search(group, max_n, stretch, as_json);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hemi::MalformedGraph6 &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
