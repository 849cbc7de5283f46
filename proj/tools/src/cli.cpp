#include "ent2/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "ent2/decider.hpp"
#include "ent2/forbidden.hpp"
#include "ent2/game.hpp"
#include "ent2/generate.hpp"
#include "ent2/graph_io.hpp"
#include "ent2/zeta2.hpp"

namespace ent2::cli {
namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;
constexpr std::size_t kOracleLimit = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const auto& ids) {
  std::string s;
  for (auto v : ids) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// The first failing condition, re-validated; nullopt if all conditions hold.
std::optional<std::string> witness_line(const Graph& g) {
  const ConditionVerdict v = check_conditions(g);
  if (!v.witness) return std::nullopt;
  return describe(*v.witness);
}

int cmd_decide(const std::string& path, const std::string& method, std::ostream& out) {
  const Graph g = read_graph_file(path);
  bool yes = false;
  std::string reason;
  if (method == "superstructure") {
    const Decision d = decide_superstructure(g, false);
    yes = d.accepted;
    reason = d.rejection;
  } else if (method == "traversal") {
    const Decision d = decide_glue_traversal(g);
    yes = d.accepted;
    reason = d.rejection;
  } else {
    yes = check_conditions(g).all_ok();
  }
  if (yes) {
    out << "YES\n";
    return kOk;
  }
  out << "NO\n";
  if (auto w = witness_line(g)) {
    out << *w << '\n';
  } else {
    out << "rejected: " << reason << '\n';
  }
  return kNo;
}

int cmd_entanglement(const std::string& path, std::optional<std::size_t> max_k, bool directed,
                     bool force, std::ostream& out) {
  const DiGraph g = directed ? read_digraph_file(path) : DiGraph::symmetrize(read_graph_file(path));
  if (g.vertex_count() > kOracleLimit && !force) {
    throw UsageError("graph has " + std::to_string(g.vertex_count()) +
                     " vertices; the game solver is limited to " + std::to_string(kOracleLimit) +
                     " without --force");
  }
  const auto k = entanglement(g, max_k);
  if (k) {
    out << *k << '\n';
  } else {
    out << '>' << *max_k << '\n';
  }
  return kOk;
}

int cmd_check(const std::string& path, std::ostream& out) {
  const Graph g = read_graph_file(path);
  bool ok = true;
  auto report = [&](const char* name, const std::optional<Witness>& w) {
    out << name << ": ";
    if (!w) {
      out << "ok\n";
      return;
    }
    if (!is_valid_witness(g, *w)) throw std::logic_error("invalid witness " + describe(*w));
    ok = false;
    out << "FAIL ";
    if (const auto* c = std::get_if<LongCycle>(&*w)) {
      out << "long-cycle " << join(c->cycle);
    } else if (const auto* t = std::get_if<Triangle3C>(&*w)) {
      out << "triangle " << join(t->triangle);
    } else {
      const auto& s = std::get<SquareAC>(*w);
      out << "square " << join(s.square) << " pair " << join(s.pair);
    }
    out << '\n';
  };
  std::optional<Witness> cs;
  if (auto c = find_long_cycle(g, 4)) cs = LongCycle{std::move(*c)};
  report("CS", cs);
  auto t = find_3c_violation(g);
  report("No-3C", t ? std::optional<Witness>(*t) : std::nullopt);
  auto s = find_ac_violation(g);
  report("No-AC", s ? std::optional<Witness>(*s) : std::nullopt);
  return ok ? kOk : kNo;
}

int cmd_decompose(const std::string& path, const std::string& out_path, std::ostream& out) {
  const Graph g = read_graph_file(path);
  const Decision d = decide_superstructure(g);
  if (!d.accepted) {
    out << "NO\n";
    if (auto w = witness_line(g)) {
      out << *w << '\n';
    } else {
      out << "rejected: " << d.rejection << '\n';
    }
    return kNo;
  }
  const Verification v = verify_certificate(*d.certificate, g);
  if (!v.ok) throw std::logic_error("extracted certificate does not verify: " + v.reason);
  const std::string text = format_certificate(*d.certificate);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file || !(file << text)) throw UsageError("cannot write " + out_path);
  }
  return kOk;
}

int cmd_superstructure(const std::string& path, std::ostream& out) {
  const Superstructure s = superstructure(read_graph_file(path));
  out << "articulation:" << (s.articulation.empty() ? "" : " ") << join(s.articulation) << '\n';
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    out << "component " << i << ": " << join(s.components[i]) << '\n';
  }
  return kOk;
}

int cmd_verify(const std::string& graph_path, const std::string& cert_path, std::ostream& out) {
  const Graph g = read_graph_file(graph_path);
  Certificate c;
  try {
    c = parse_certificate(read_text(cert_path));
  } catch (const ParseError& e) {
    throw ParseError(cert_path + ": " + e.what(), 0);
  }
  const Verification v = verify_certificate(c, g);
  if (v.ok) {
    out << "VALID\n";
    return kOk;
  }
  out << "INVALID " << v.reason << '\n';
  return kNo;
}

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  std::size_t molecules = 10;
  std::size_t max_dead = 4;
  std::size_t min_vertices = 0;
};

std::size_t count_param(const GenArgs& a, std::size_t i) {
  if (i >= a.params.size()) throw UsageError("gen " + a.family + ": missing parameter");
  const std::string& s = a.params[i];
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw UsageError("gen: '" + s + "' is not a count");
  return static_cast<std::size_t>(v);
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const std::string& f = a.family;
  Graph g;
  std::size_t expected = 0;
  if (f == "cycle") {
    g = cycle_graph(count_param(a, 0));
    expected = 1;
  } else if (f == "path") {
    g = path_graph(count_param(a, 0));
    expected = 1;
  } else if (f == "star") {
    g = star_graph(count_param(a, 0));
    expected = 1;
  } else if (f == "complete") {
    g = complete_graph(count_param(a, 0));
    expected = 1;
  } else if (f == "theta") {
    const std::size_t eps = count_param(a, 0);
    if (eps > 1) throw UsageError("gen theta: eps must be 0 or 1");
    g = theta_graph(static_cast<int>(eps), count_param(a, 1));
    expected = 2;
  } else if (f == "threec") {
    g = threec_graph();
  } else if (f == "ac") {
    g = ac_graph();
  } else if (f == "zeta2") {
    Zeta2Params p;
    p.molecules = a.molecules;
    p.max_dead = a.max_dead;
    p.min_vertices = a.min_vertices;
    if (p.molecules == 0) throw UsageError("gen zeta2: --molecules must be positive");
    g = generate_zeta2(a.seed, p).graph;
  } else if (f == "random") {
    std::mt19937_64 rng(a.seed);
    const std::size_t n = count_param(a, 0);
    if (a.params.size() < 2) throw UsageError("gen random: missing edge probability");
    double p = 0;
    try {
      p = std::stod(a.params[1]);
    } catch (const std::exception&) {
      throw UsageError("gen random: bad probability '" + a.params[1] + "'");
    }
    g = erdos_renyi(n, p, rng);
    expected = 2;
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  if (f != "zeta2" && a.params.size() > expected) {
    throw UsageError("gen " + f + ": too many parameters");
  }
  write_graph(out, g);
  return kOk;
}

int cmd_crosscheck(std::size_t max_n, std::size_t samples, std::uint64_t seed, std::ostream& out) {
  if (max_n > 12) throw UsageError("crosscheck: --max-n is limited to 12");
  std::size_t total = 0;
  auto agree = [&](const Graph& g) {
    ++total;
    const bool a = decide_superstructure(g, false).accepted;
    const bool b = decide_glue_traversal(g).accepted;
    const bool c = check_conditions(g).all_ok();
    const bool d = game_entanglement_at_most(g, 2);
    if (a == b && b == c && c == d) return true;
    out << "DISAGREEMENT superstructure=" << a << " traversal=" << b << " conditions=" << c
        << " game=" << d << '\n';
    write_graph(out, g);
    return false;
  };

  for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 6); ++n) {
    const std::uint64_t masks = std::uint64_t{1} << (n * (n - (n ? 1 : 0)) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      if (!agree(graph_from_mask(n, mask))) return kNo;
    }
  }
  if (max_n > 6) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
      if (!agree(mixed_sample(rng, 7, max_n))) return kNo;
    }
  }
  out << total << " graphs, ALL AGREE\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement <= 2 deciders, game oracle and zeta2 certificates", "ent2"};
  app.require_subcommand(1);

  std::string path, path2, method = "superstructure", out_path;
  std::optional<std::size_t> max_k;
  bool directed = false, force = false;
  GenArgs gen;
  std::size_t max_n = 6, samples = 1000;
  std::uint64_t cc_seed = 1;

  auto* decide = app.add_subcommand("decide", "Decide entanglement <= 2");
  decide->add_option("graph", path, "Graph file")->required();
  decide->add_option("--method", method, "Decider")
      ->check(CLI::IsMember({"superstructure", "traversal", "conditions"}));

  auto* ent = app.add_subcommand("entanglement", "Exact entanglement by solving the game");
  ent->add_option("graph", path, "Graph file")->required();
  ent->add_option("--max-k", max_k, "Largest cop budget to try");
  ent->add_flag("--directed", directed, "Read arcs instead of edges");
  ent->add_flag("--force", force, "Lift the vertex limit");

  auto* check = app.add_subcommand("check", "Report the CS, No-3C and No-AC conditions");
  check->add_option("graph", path, "Graph file")->required();

  auto* decompose = app.add_subcommand("decompose", "Print a zeta2 certificate");
  decompose->add_option("graph", path, "Graph file")->required();
  decompose->add_option("--out", out_path, "Write the certificate here");

  auto* sstruct = app.add_subcommand("superstructure", "Print articulation points and blocks");
  sstruct->add_option("graph", path, "Graph file")->required();

  auto* verify = app.add_subcommand("verify", "Check a certificate against a graph");
  verify->add_option("graph", path, "Graph file")->required();
  verify->add_option("certificate", path2, "Certificate file")->required();

  auto* genc = app.add_subcommand("gen", "Print a graph from a family");
  genc->add_option("family", gen.family,
                   "cycle N | path N | star N | complete N | theta EPS N | threec | ac | "
                   "zeta2 | random N P")
      ->required();
  genc->add_option("params", gen.params, "Family parameters");
  genc->add_option("--seed", gen.seed, "Random seed");
  genc->add_option("--molecules", gen.molecules, "zeta2: molecule count");
  genc->add_option("--max-dead", gen.max_dead, "zeta2: dead points per molecule");
  genc->add_option("--min-vertices", gen.min_vertices, "zeta2: minimum vertex count");

  auto* cross = app.add_subcommand("crosscheck", "Compare all deciders with the game oracle");
  cross->add_option("--max-n", max_n, "Largest vertex count");
  cross->add_option("--samples", samples, "Random graphs with 7..max-n vertices");
  cross->add_option("--seed", cc_seed, "Random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  }

  try {
    if (decide->parsed()) return cmd_decide(path, method, out);
    if (ent->parsed()) return cmd_entanglement(path, max_k, directed, force, out);
    if (check->parsed()) return cmd_check(path, out);
    if (decompose->parsed()) return cmd_decompose(path, out_path, out);
    if (sstruct->parsed()) return cmd_superstructure(path, out);
    if (verify->parsed()) return cmd_verify(path, path2, out);
    if (genc->parsed()) return cmd_gen(gen, out);
    return cmd_crosscheck(max_n, samples, cc_seed, out);
  } catch (const ParseError& e) {
    err << "ent2: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "ent2: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "ent2: " << e.what() << '\n';
  } catch (const std::filesystem::filesystem_error& e) {
    err << "ent2: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace ent2::cli
