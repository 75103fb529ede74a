// cohere: analyze permutation groups, verify and search hierarchy witnesses,
// and build the example geometries.
//
// Exit codes: 0 success/accepted/found, 1 rejected/not found, 2 bad input
// (parse error, unsupported order, unsupported request), 3 not transitive,
// 4 idempotent split failure, 5 search budget exhausted.

#include <CLI11.hpp>

#include <cohere/constructions.hpp>
#include <cohere/hierarchy.hpp>
#include <cohere/io.hpp>
#include <cohere/report.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace cohere;

namespace {

enum Exit
{
  Ok = 0,
  Rejected = 1,
  BadInput = 2,
  NotTransitiveExit = 3,
  SplitFailed = 4,
  Budget = 5
};

struct Options
{
  std::string group_file;
  std::string level = "spreading";
  std::string out;
  std::vector<std::string> vector_files;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t budget_nodes = 1000000;
  double budget_secs = 60.0;
  std::size_t enum_cap = default_enum_cap;
  bool timings = false;
  long sum = 0;
  bool probe = false;
  std::string construction;
  int q = 5;
  std::size_t n = 7;
};

void write_file(const fs::path &path, const std::string &text)
{
  if (path.has_parent_path())
    fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw Error("cannot write " + path.string());
  f << text;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

/// Writes to DIR/name when --out is given; always echoes to stdout.
void emit(const Options &o, const std::string &name, const std::string &text)
{
  std::cout << text;
  if (!o.out.empty())
    write_file(fs::path(o.out) / name, text);
}

std::string set_notation(const std::vector<std::size_t> &points)
{
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i)
    s += (i ? "," : "") + std::to_string(points[i] + 1);
  return s + "}\n";
}

CentralIdempotentSet rational_split(const CoherentConfiguration &cc, std::uint64_t seed)
{
  IdempotentOptions opt;
  opt.seed = seed;
  return rational_central_idempotents(cc, opt);
}

bool looks_like_witness(const std::string &text)
{
  const auto t = io::detail::trim(text);
  return t.size() > 1 && t.front() == '[' && t.find('[', 1) != std::string::npos;
}

int cmd_analyze(const Options &o)
{
  AnalysisOptions opt;
  opt.seed = o.seed;
  opt.timings = o.timings;
  const auto report = analysis_report(io::detail::read_file(o.group_file), opt);
  emit(o, "analysis.json", dump(report));
  return Ok;
}

int cmd_verify(const Options &o)
{
  const Level level = parse_level(o.level);
  const auto g = io::read_group(o.group_file);
  const auto cc = CoherentConfiguration::of_group(g);
  const std::size_t n = cc.n();
  std::vector<RationalVector> vecs;
  for (const auto &path : o.vector_files) {
    const auto text = io::detail::read_file(path);
    if (looks_like_witness(text)) {
      const auto lists = io::parse_witness(text);
      vecs.push_back(io::labels_to_vector(lists.set, n));
      vecs.push_back(io::labels_to_vector(lists.multiset, n));
    } else {
      vecs.push_back(io::parse_vector(text, n));
    }
  }
  if (vecs.size() < 2)
    throw ParseError("verify needs a witness file or at least two vector files");
  if (level != Level::NonSynchronising && vecs.size() != 2)
    throw ParseError("this level takes exactly two vectors");
  const auto ids = rational_split(cc, o.seed);

  Verdict verdict;
  switch (level) {
  case Level::NonQI:
    verdict = verify_nonqi(cc, ids, vecs[0], vecs[1]);
    break;
  case Level::NonSpreading:
    verdict = verify_nonspreading(cc, ids, vecs[0], vecs[1]);
    break;
  case Level::NonSeparating:
    verdict = verify_nonseparating(cc, ids, vecs[0], vecs[1]);
    break;
  case Level::NonSynchronising:
    verdict = verify_nonsynchronising(cc, ids, {vecs.begin() + 1, vecs.end()}, vecs[0]);
    break;
  }
  if (!verdict.accepted()) {
    emit(o, "certificate.json", dump(rejection_json(level, verdict)));
    std::cerr << "rejected: " << reason_name(verdict.reason) << ": " << verdict.detail << "\n";
    return Rejected;
  }
  auto &w = *verdict.witness;
  if (auto oracle = oracle_confirms(g, w, o.enum_cap)) {
    if (!*oracle) {
      std::cerr << "rejected: enumeration oracle disagrees with the identity\n";
      return Rejected;
    }
    w.certificate.oracle_checked = true;
  }
  auto cert = certificate_json(w);
  cert["accepted"] = true;
  emit(o, "certificate.json", dump(cert));
  return Ok;
}

int cmd_probe(const Options &o, const CoherentConfiguration &cc, const CentralIdempotentSet &ids,
              const SearchConfig &cfg)
{
  const auto r = critically_nonspreading_probe(cc, ids, cfg);
  Json j;
  j["degree"] = cc.n();
  j["critical"] = criticality_name(r.critical);
  j["complete"] = r.complete;
  Json entries = Json::array();
  for (const auto &e : r.proper_divisors) {
    const char *status = e.status == LpStatus::Feasible ? "feasible"
                         : e.status == LpStatus::Infeasible ? "infeasible"
                                                             : "budget_exhausted";
    entries.push_back({{"sum", e.sum}, {"status", status}});
  }
  j["proper_divisors"] = std::move(entries);
  j["full_sum_feasible"] = r.full_sum_witness.has_value();
  j["full_sum_exhausted"] = r.full_sum_exhausted;
  emit(o, "probe.json", dump(j));
  return r.critical == Criticality::Unknown ? Budget : Ok;
}

int cmd_search(const Options &o)
{
  const Level level = parse_level(o.level);
  if (level == Level::NonSynchronising) {
    std::cerr << "search at the synchronising level is not supported; use construct and verify\n";
    return BadInput;
  }
  const auto g = io::read_group(o.group_file);
  const auto cc = CoherentConfiguration::of_group(g);
  const auto ids = rational_split(cc, o.seed);
  SearchConfig cfg;
  cfg.budget_nodes = o.budget_nodes;
  cfg.budget_secs = o.budget_secs;
  cfg.seed = o.seed;
  cfg.enum_cap = o.enum_cap;
  cfg.threads = std::max(1u, o.threads);
  if (o.sum > 0)
    cfg.target_sum = o.sum;
  if (o.probe)
    return cmd_probe(o, cc, ids, cfg);

  auto r = level == Level::NonSeparating ? search_nonseparating(cc, ids, cfg) : search_nonspreading(cc, ids, cfg);
  if (!r.witness) {
    std::cerr << status_name(r.status) << "\n";
    return r.status == SearchStatus::BudgetExhausted ? Budget : Rejected;
  }
  auto &w = *r.witness;
  w.level = level;
  w.certificate.oracle_checked = oracle_confirms(g, w, o.enum_cap).value_or(false);
  const std::string stem = level == Level::NonSeparating ? "NonSeparatingWitness_"
                           : level == Level::NonQI      ? "NonQIWitness_"
                                                        : "NonSpreadingWitness_";
  const std::string name = stem + std::to_string(cc.n()) + "_1";
  const auto text = io::format_witness({io::vector_to_labels(w.u), io::vector_to_labels(w.others.front())});
  const fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
  write_file(dir / (name + ".txt"), text);
  write_file(dir / (name + ".json"), dump(certificate_json(w)));
  std::cout << text;
  return Ok;
}

Json points_json(const std::vector<ProjectivePoint> &pts)
{
  Json a = Json::array();
  for (const auto &p : pts)
    a.push_back({p[0], p[1], p[2]});
  return a;
}

int construct_conic(const Options &o, const fs::path &dir)
{
  const auto c = conic_external_action(o.q);
  const std::string tag = "conic_external_" + std::to_string(o.q);
  const std::size_t n = c.points.size();
  write_file(dir / (tag + ".group"),
             io::format_group(c.generators, "PGL(2," + std::to_string(o.q) + ") on external points of a conic"));
  write_file(dir / (tag + "_clique.txt"), set_notation(c.clique));
  write_file(dir / (tag + "_coclique.txt"), set_notation(c.coclique));
  Json j;
  j["q"] = o.q;
  j["points"] = n;
  j["conic_size"] = c.conic_size;
  j["degree"] = c.lambda.regular_degree() ? Json(*c.lambda.regular_degree()) : Json(nullptr);
  j["external_on_tangent"] = c.external_on_tangent;
  j["external_on_secant"] = c.external_on_secant;
  j["external_on_passant"] = c.external_on_passant;
  j["clique"] = detail::int_array(io::vector_to_labels(indicator(n, c.clique)));
  j["coclique"] = detail::int_array(io::vector_to_labels(indicator(n, c.coclique)));
  // exhaustive clique/coclique numbers and partitions stay cheap for q <= 7
  if (o.q <= 7) {
    j["clique_number"] = maximum_clique(c.lambda).size();
    j["coclique_number"] = maximum_coclique(c.lambda).size();
    if (const auto parts = coclique_partition(c.lambda, c.coclique.size())) {
      j["coclique_partition"] = parts->size();
      for (std::size_t i = 0; i < parts->size(); ++i)
        write_file(dir / (tag + "_part_" + std::to_string(i + 1) + ".txt"), set_notation((*parts)[i]));
    } else {
      j["coclique_partition"] = nullptr;
    }
  }
  j["coordinates"] = points_json(c.points);
  const auto text = dump(j);
  write_file(dir / (tag + ".json"), text);
  std::cout << text;
  return Ok;
}

int construct_hermitian(const fs::path &dir)
{
  const auto h = hermitian_points(2);
  write_file(dir / "hermitian_gq.group", io::format_group(h.generators, "unitary group on the points of H(4,4)"));
  Json j;
  j["points"] = h.points.size();
  j["projective_points"] = h.projective_points;
  j["generators"] = h.generators.generators().size();
  const auto text = dump(j);
  write_file(dir / "hermitian_gq.json", text);
  std::cout << text;
  return Ok;
}

int construct_two_subsets(const Options &o, const fs::path &dir)
{
  const auto g = two_subsets(o.n);
  const std::string name = "two_subsets_" + std::to_string(o.n) + ".group";
  const auto text = io::format_group(g, "S" + std::to_string(o.n) + " on 2-subsets");
  write_file(dir / name, text);
  std::cout << text;
  return Ok;
}

int construct_agl15(const fs::path &dir)
{
  const auto fx = agl15_fixture(); // validates on load
  write_file(dir / "agl15_pairs.group", io::format_group(fx.group, "AGL(1,5) on 2-subsets"));
  write_file(dir / "agl15_u.txt", io::format_vector(fx.u));
  write_file(dir / "agl15_v.txt", io::format_vector(fx.v));
  write_file(dir / "agl15_w.txt", io::format_vector(fx.w));
  Json j;
  j["ordering"] = fx.ordering_name;
  j["ordering_positions"] = detail::int_array(fx.ordering);
  auto basis = [](const std::vector<QVector> &es) {
    Json a = Json::array();
    for (const auto &e : es) {
      Json row = Json::array();
      for (const auto &x : e)
        row.push_back(x.str());
      a.push_back(std::move(row));
    }
    return a;
  };
  j["E"] = basis(fx.e);
  j["E_tilde"] = basis(fx.e_tilde);
  j["validated"] = true;
  const auto text = dump(j);
  write_file(dir / "agl15_fixture.json", text);
  std::cout << text;
  return Ok;
}

int cmd_construct(const Options &o)
{
  const fs::path dir = o.out.empty() ? fs::path(".") : fs::path(o.out);
  if (o.construction == "conic-external")
    return construct_conic(o, dir);
  if (o.construction == "hermitian-gq")
    return construct_hermitian(dir);
  if (o.construction == "two-subsets")
    return construct_two_subsets(o, dir);
  if (o.construction == "agl15-fixture")
    return construct_agl15(dir);
  std::cerr << "unknown construction '" << o.construction << "'\n";
  return BadInput;
}

template <class F>
int guarded(F &&body)
{
  try {
    return body();
  } catch (const ParseError &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return BadInput;
  } catch (const NotTransitive &e) {
    std::cerr << "not transitive: " << e.what() << "\n";
    return NotTransitiveExit;
  } catch (const SplitFailure &e) {
    std::cerr << "split failure: " << e.what() << "\n";
    return SplitFailed;
  } catch (const NonIntegerTrace &e) {
    std::cerr << "split failure: " << e.what() << "\n";
    return SplitFailed;
  } catch (const UnsupportedOrder &e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return BadInput;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadInput;
  }
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Coherent configurations and the synchronisation hierarchy"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--out", o.out, "Output directory");
    sub->add_option("--seed", o.seed, "Seed for the idempotent split")->capture_default_str();
  };
  auto search_flags = [&](CLI::App *sub) {
    sub->add_option("--enum-cap", o.enum_cap, "Largest group enumerated by the oracle")->capture_default_str();
  };
  const auto levels = CLI::IsMember({"qi", "spreading", "separating", "synchronising", "synchronizing"});

  auto *analyze = app.add_subcommand("analyze", "Report the coherent configuration and its algebra");
  analyze->add_option("group", o.group_file, "Group file")->required();
  common(analyze);
  analyze->add_flag("--timings", o.timings, "Include elapsed times");

  auto *verify = app.add_subcommand("verify", "Verify a witness at a hierarchy level");
  verify->add_option("group", o.group_file, "Group file")->required();
  verify->add_option("vectors", o.vector_files,
                     "Witness file, or vector files (synchronising: clique first, then the parts)")
      ->required();
  verify->add_option("--level", o.level, "Hierarchy level")->check(levels)->capture_default_str();
  common(verify);
  search_flags(verify);

  auto *search = app.add_subcommand("search", "Search for a witness");
  search->add_option("group", o.group_file, "Group file")->required();
  search->add_option("--level", o.level, "Hierarchy level")->check(levels)->capture_default_str();
  common(search);
  search_flags(search);
  search->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  search->add_option("--budget-nodes", o.budget_nodes, "Branch-and-bound nodes per subproblem")
      ->capture_default_str();
  search->add_option("--budget-secs", o.budget_secs, "Seconds per bipartition")->capture_default_str();
  search->add_option("--sum", o.sum, "Only try w.1 equal to this value");
  search->add_flag("--probe", o.probe, "Run the critically-nonspreading divisor probe");

  auto *construct = app.add_subcommand("construct", "Build an example group");
  construct->add_option("name", o.construction, "conic-external | hermitian-gq | two-subsets | agl15-fixture")
      ->required()
      ->check(CLI::IsMember({"conic-external", "hermitian-gq", "two-subsets", "agl15-fixture"}));
  construct->add_option("--q", o.q, "Field order for conic-external")->capture_default_str();
  construct->add_option("--n", o.n, "Point count for two-subsets")->capture_default_str();
  construct->add_option("--out", o.out, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : BadInput;
  }

  if (*analyze)
    return guarded([&] { return cmd_analyze(o); });
  if (*verify)
    return guarded([&] { return cmd_verify(o); });
  if (*search)
    return guarded([&] { return cmd_search(o); });
  return guarded([&] { return cmd_construct(o); });
}
