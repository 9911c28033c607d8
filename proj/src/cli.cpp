#include "minisphere/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "minisphere/bench.hpp"
#include "minisphere/datagen.hpp"
#include "minisphere/error.hpp"
#include "minisphere/io.hpp"
#include "minisphere/projection.hpp"
#include "minisphere/report.hpp"

namespace minisphere::cli {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t at = text.find(sep, pos);
    out.push_back(text.substr(pos, at == std::string_view::npos ? at : at - pos));
    if (at == std::string_view::npos) return out;
    pos = at + 1;
  }
}

[[noreturn]] void bad_list(std::string_view what, std::string_view item) {
  throw Error(ErrorCode::InvalidParams,
              std::string(what) + ": malformed entry '" + std::string(item) + "'");
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) bad_list(what, s);
  return v;
}

// Accepts plain integers and integral scientific notation such as 3e5.
std::size_t parse_count(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !(v >= 1.0) ||
      v != std::floor(v) || v > 1e15)
    bad_list(what, s);
  return static_cast<std::size_t>(v);
}

KSelection parse_k(const std::string& text, std::size_t n, double c1, double c2) {
  if (text == "auto") return select_k(n, KMode::General, c1, c2);
  if (text == "symmetric" || text == "symmetric-6")
    return select_k(n, KMode::Symmetric6, c1, c2);
  const std::uint64_t k = parse_u64(text, "--k");
  if (k == 0) throw Error(ErrorCode::InvalidK, "--k must be at least 1");
  KSelection sel = KSelection::fixed(k);
  sel.c1 = c1;
  sel.c2 = c2;
  return sel;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MINISPHERE_SEED"))
    return parse_u64(env, "MINISPHERE_SEED");
  return 0;
}

void emit(const report::Json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::InvalidParams, "cannot write '" + path + "'");
  file << doc.dump(2) << '\n';
}

struct SolveArgs {
  std::string input;
  std::string format;
  std::string strategy = "auto";
  std::string k = "auto";
  double c1 = 2.0;
  double c2 = 1.0;
  std::optional<std::uint64_t> seed;
  double tol = 1e-9;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const auto format = a.format.empty() ? std::nullopt
                                       : std::optional(io::parse_format(a.format));
  const auto points = io::read_points_file(a.input, format);
  if (points.empty()) {
    err << "error: no points in '" << a.input << "'\n";
    return kEmpty;
  }
  if (!(a.tol > 0.0)) throw Error(ErrorCode::InvalidParams, "--tol must be positive");
  const Tolerance tol = Tolerance::for_points(points, a.tol);
  const RngSeed seed{resolve_seed(a.seed)};
  const KSelection sel = parse_k(a.k, points.size(), a.c1, a.c2);

  SolveReport rep;
  if (a.strategy == "welzl") {
    rep = solve_full(points, seed, tol);
  } else if (a.strategy == "projection") {
    rep = solve(points, sel, seed, tol);
  } else {
    // auto: reduction cannot shrink a cloud that already fits in 4k slots.
    rep = points.size() <= 4 * sel.k ? solve_full(points, seed, tol)
                                     : solve(points, sel, seed, tol);
  }
  out << report::to_json(rep, a.strategy).dump(2) << '\n';
  return kOk;
}

struct GenArgs {
  std::string kind;
  std::string n;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format;
  GenParams params;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  const CloudKind kind = parse_kind(a.kind);
  const std::size_t n = parse_count(a.n, "n");
  const auto points = generate(kind, n, RngSeed{resolve_seed(a.seed)}, a.params);
  io::PointFormat format = io::PointFormat::Csv;
  if (!a.format.empty())
    format = io::parse_format(a.format);
  else if (!a.out_path.empty())
    format = io::format_from_path(a.out_path).value_or(io::PointFormat::Csv);
  if (a.out_path.empty()) {
    io::write_points(out, points, format);
    return kOk;
  }
  std::ofstream file(a.out_path);
  if (!file) throw Error(ErrorCode::InvalidParams, "cannot write '" + a.out_path + "'");
  io::write_points(file, points, format);
  return kOk;
}

struct ScalingArgs {
  std::string sizes = "1e4,3e4,1e5,3e5,1e6";
  std::string seeds = "1,2,3";
  std::string k = "24";
  double c1 = 2.0;
  double c2 = 1.0;
  std::string strategy = "projection";
  std::string kind = "uniform-ball";
  std::string out_path;
};

int cmd_scaling(const ScalingArgs& a, std::ostream& out) {
  ScalingOptions opts;
  opts.sizes = parse_sizes(a.sizes);
  if (opts.sizes.size() < 2)
    throw Error(ErrorCode::InsufficientSamples, "--sizes needs at least 2 sizes");
  opts.seeds = parse_seeds(a.seeds);
  opts.kind = parse_kind(a.kind);
  if (a.strategy != "projection" && a.strategy != "welzl")
    throw Error(ErrorCode::InvalidParams, "--strategy must be projection or welzl");
  opts.strategy = a.strategy == "welzl" ? Strategy::Welzl : Strategy::Projection;
  opts.k = parse_k(a.k, opts.sizes.front(), a.c1, a.c2);
  emit(report::to_json(run_scaling(opts)), a.out_path, out);
  return kOk;
}

struct ConvergenceArgs {
  std::size_t n = 30;
  std::string ks = "6,12,24,48,96";
  std::string seeds = "1..20";
  std::string kind = "uniform-ball";
  bool parallel = false;
  std::string out_path;
};

int cmd_convergence(const ConvergenceArgs& a, std::ostream& out) {
  ConvergenceOptions opts;
  opts.n = a.n;
  for (std::string_view item : split(a.ks, ','))
    opts.ks.push_back(parse_u64(item, "ks"));
  opts.seeds = parse_seeds(a.seeds);
  opts.kind = parse_kind(a.kind);
  opts.parallel = a.parallel;
  emit(report::to_json(run_convergence(opts)), a.out_path, out);
  return kOk;
}

}  // namespace

std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> out;
  for (std::string_view item : split(text, ',')) out.push_back(parse_count(item, "sizes"));
  return out;
}

std::vector<std::uint64_t> parse_seeds(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (std::string_view item : split(text, ',')) {
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_u64(item, "seeds"));
      continue;
    }
    const std::uint64_t lo = parse_u64(item.substr(0, dots), "seeds");
    const std::uint64_t hi = parse_u64(item.substr(dots + 2), "seeds");
    if (hi < lo || hi - lo > 1000000) bad_list("seeds", item);
    for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
  }
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smallest enclosing sphere via projection reduction", "minisphere"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the smallest enclosing sphere of a point file");
  solve_cmd->add_option("input", solve_args.input, "Point file (csv, xyz, json)")->required();
  solve_cmd->add_option("--format", solve_args.format, "Input format; default by extension")
      ->check(CLI::IsMember({"csv", "xyz", "json"}));
  solve_cmd->add_option("--strategy", solve_args.strategy, "projection | welzl | auto")
      ->check(CLI::IsMember({"projection", "welzl", "auto"}));
  solve_cmd->add_option("--k", solve_args.k, "Projection count: integer, auto, or symmetric");
  solve_cmd->add_option("--c1", solve_args.c1, "Lower-bound constant for --k auto");
  solve_cmd->add_option("--c2", solve_args.c2, "Upper-bound constant for --k auto");
  solve_cmd->add_option("--seed", solve_args.seed, "Shuffle seed (default $MINISPHERE_SEED or 0)");
  solve_cmd->add_option("--tol", solve_args.tol, "Relative tolerance eps_rel");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded point cloud");
  gen_cmd->add_option("kind", gen_args.kind,
                      "uniform-ball | uniform-cube | collinear | coplanar-disk | "
                      "co-spherical | clustered | near-degenerate")
      ->required();
  gen_cmd->add_option("n", gen_args.n, "Point count")->required();
  gen_cmd->add_option("--seed", gen_args.seed, "Generator seed");
  gen_cmd->add_option("-o,--out", gen_args.out_path, "Output file; stdout when omitted");
  gen_cmd->add_option("--format", gen_args.format, "Output format; default by extension")
      ->check(CLI::IsMember({"csv", "xyz", "json"}));
  gen_cmd->add_option("--radius", gen_args.params.radius, "Ball/cube/disk/shell size");
  gen_cmd->add_option("--length", gen_args.params.length, "Collinear parameter range");
  gen_cmd->add_option("--plane-offset", gen_args.params.plane_offset, "Disk plane z value");
  gen_cmd->add_option("--sigma", gen_args.params.sigma, "Near-degenerate jitter");
  gen_cmd->add_option("--clusters", gen_args.params.clusters, "Cluster count");
  gen_cmd->add_option("--spread", gen_args.params.spread, "Cluster spread (relative)");

  auto* bench_cmd = app.add_subcommand("bench", "Scaling and convergence studies");
  bench_cmd->require_subcommand(1);

  ScalingArgs scaling_args;
  auto* scaling_cmd = bench_cmd->add_subcommand("scaling", "Log-log time scaling fit");
  scaling_cmd->add_option("--sizes", scaling_args.sizes, "Comma list, e.g. 1e4,1e5,1e6");
  scaling_cmd->add_option("--seeds", scaling_args.seeds, "Comma list or a..b range");
  scaling_cmd->add_option("--k", scaling_args.k, "Integer, auto, or symmetric");
  scaling_cmd->add_option("--c1", scaling_args.c1, "Lower-bound constant for --k auto");
  scaling_cmd->add_option("--c2", scaling_args.c2, "Upper-bound constant for --k auto");
  scaling_cmd->add_option("--strategy", scaling_args.strategy, "projection | welzl");
  scaling_cmd->add_option("--kind", scaling_args.kind, "Cloud kind");
  scaling_cmd->add_option("--out", scaling_args.out_path, "Report file; stdout when omitted");

  ConvergenceArgs conv_args;
  auto* conv_cmd = bench_cmd->add_subcommand("convergence", "Hull coverage versus k");
  conv_cmd->add_option("--n", conv_args.n, "Cloud size (<= 400)");
  conv_cmd->add_option("--ks", conv_args.ks, "Comma list of k");
  conv_cmd->add_option("--seeds", conv_args.seeds, "Comma list or a..b range");
  conv_cmd->add_option("--kind", conv_args.kind, "Cloud kind");
  conv_cmd->add_flag("--parallel", conv_args.parallel, "Spread seeds over threads");
  conv_cmd->add_option("--out", conv_args.out_path, "Report file; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, out, err);
    if (*gen_cmd) return cmd_gen(gen_args, out);
    if (*scaling_cmd) return cmd_scaling(scaling_args, out);
    if (*conv_cmd) return cmd_convergence(conv_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    const bool geometry =
        e.code() == ErrorCode::EmptyInput || e.code() == ErrorCode::NonFinite;
    return geometry ? kEmpty : kUsage;
  }
  return kUsage;
}

}  // namespace minisphere::cli
