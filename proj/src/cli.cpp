#include "onion/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "onion/generators.hpp"
#include "onion/io.hpp"
#include "onion/layers.hpp"
#include "onion/oracle.hpp"
#include "onion/scaling.hpp"
#include "onion/svg.hpp"

namespace onion {

namespace {

// "fixture" names the builtin ten-point set unless a file of that name exists.
std::vector<Point> loadInput(const std::string& path, int scale) {
  if (path == "fixture" && !std::filesystem::exists(path))
    return counterexampleFixture();
  return io::readPointsFile(path, scale);
}

bool sameLayers(const std::vector<std::vector<Point>>& a,
                const std::vector<std::vector<Point>>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j].x != b[i][j].x || a[i][j].y != b[i][j].y ||
          a[i][j].id != b[i][j].id)
        return false;
  }
  return true;
}

// ---------------------------------------------------------------- compute

int runCompute(const std::string& input, MergeMode mode,
               const std::string& format, int maxLayers, int scale,
               std::ostream& out) {
  auto pts = loadInput(input, scale);
  LayerOptions opt;
  opt.mode = mode;
  opt.maxLayers = maxLayers;
  auto ls = peelLayers(pts, opt);
  if (format == "csv") {
    out << "layer,idx,x,y\n";
    for (size_t L = 0; L < ls.layers.size(); ++L)
      for (size_t i = 0; i < ls.layers[L].size(); ++i)
        out << L + 1 << ',' << i << ',' << ls.layers[L][i].x << ','
            << ls.layers[L][i].y << '\n';
  } else {
    nlohmann::ordered_json j;
    j["n"] = pts.size();
    j["k"] = ls.layers.size();
    auto layers = nlohmann::ordered_json::array();
    for (const auto& layer : ls.layers) {
      auto one = nlohmann::ordered_json::array();
      for (const auto& p : layer) one.push_back({p.x, p.y});
      layers.push_back(std::move(one));
    }
    j["layers"] = std::move(layers);
    out << j.dump(2) << '\n';
  }
  return 0;
}

// ----------------------------------------------------------------- verify

// Prints one line per point whose depth disagrees with the reference peel;
// falls back to the first positional difference when the partitions agree but
// the cyclic orders do not.
void printDisagreements(std::ostream& out, const std::vector<Point>& pts,
                        MergeMode mode) {
  auto got = peelLayers(pts, mode);
  auto want = oracle::peel(pts);
  std::map<int32_t, int64_t> ref;
  for (size_t L = 0; L < want.size(); ++L)
    for (const auto& p : want[L]) ref[p.id] = static_cast<int64_t>(L) + 1;
  bool any = false;
  for (const auto& p : pts)
    if (got.depth(p.id) != ref[p.id]) {
      out << "  (" << p.x << ',' << p.y << ") id=" << p.id << ": depth "
          << got.depth(p.id) << ", reference " << ref[p.id] << '\n';
      any = true;
    }
  if (any) return;
  size_t k = std::max(got.layers.size(), want.size());
  for (size_t L = 0; L < k; ++L) {
    const auto* a = L < got.layers.size() ? &got.layers[L] : nullptr;
    const auto* b = L < want.size() ? &want[L] : nullptr;
    if (!a || !b) {
      out << "  layer " << L + 1 << " only present on the "
          << (a ? "computed" : "reference") << " side\n";
      return;
    }
    for (size_t i = 0; i < std::max(a->size(), b->size()); ++i) {
      auto fmt = [](const std::vector<Point>& v, size_t j) {
        if (j >= v.size()) return std::string("<end>");
        return "(" + std::to_string(v[j].x) + "," + std::to_string(v[j].y) +
               ")#" + std::to_string(v[j].id);
      };
      if (i >= a->size() || i >= b->size() || (*a)[i].id != (*b)[i].id ||
          (*a)[i].x != (*b)[i].x || (*a)[i].y != (*b)[i].y) {
        out << "  layer " << L + 1 << " position " << i << ": computed "
            << fmt(*a, i) << ", reference " << fmt(*b, i) << '\n';
        return;
      }
    }
  }
}

bool disagrees(const std::vector<Point>& pts, MergeMode mode) {
  if (pts.empty()) return false;
  try {
    return !sameLayers(peelLayers(pts, mode).layers, oracle::peel(pts));
  } catch (const std::exception&) {
    return true;  // an invariant trip reproduces the defect as well
  }
}

// Greedy single-point removals until no removal preserves the disagreement.
// Ids are kept from the original instance so flags stay traceable.
std::vector<Point> shrinkInstance(std::vector<Point> pts, MergeMode mode) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (size_t i = 0; i < pts.size(); ++i) {
      std::vector<Point> next = pts;
      next.erase(next.begin() + static_cast<ptrdiff_t>(i));
      if (disagrees(next, mode)) {
        pts = std::move(next);
        shrunk = true;
        break;
      }
    }
  }
  return pts;
}

int reportMismatch(std::ostream& out, const std::vector<Point>& pts,
                   MergeMode mode, const std::string& what) {
  out << "verify FAILED (" << what << "): " << mergeModeName(mode)
      << " layers differ from the reference peel\n";
  out << "disagreements on the input (" << pts.size() << " points):\n";
  try {
    printDisagreements(out, pts, mode);
  } catch (const std::exception& e) {
    out << "  (peel raises: " << e.what() << ")\n";
  }
  auto small = shrinkInstance(pts, mode);
  out << "minimized instance (" << small.size() << " points):\n";
  io::writePoints(out, small);
  out << "disagreements on the minimized instance:\n";
  try {
    printDisagreements(out, small, mode);
  } catch (const std::exception& e) {
    out << "  (peel raises: " << e.what() << ")\n";
  }
  return 1;
}

int runVerify(const std::string& input, const std::string& gen, int64_t n,
              uint64_t seed, int trials, MergeMode mode, int scale,
              std::ostream& out) {
  if (input.empty() == gen.empty())
    throw std::invalid_argument(
        "verify wants exactly one of --input and --gen");
  if (!input.empty()) {
    auto pts = loadInput(input, scale);
    if (disagrees(pts, mode)) return reportMismatch(out, pts, mode, input);
    out << "verify OK: " << input << ", n=" << pts.size() << ", "
        << mergeModeName(mode) << " layers match the reference peel\n";
    return 0;
  }
  auto kind = parseGenKind(gen);
  if (!kind) throw std::invalid_argument("unknown generator '" + gen + "'");
  if (trials < 1) throw std::invalid_argument("--trials must be positive");
  for (int t = 0; t < trials; ++t) {
    auto pts = generate(*kind, n, seed + static_cast<uint64_t>(t));
    if (disagrees(pts, mode))
      return reportMismatch(out, pts, mode,
                            gen + " n=" + std::to_string(n) + " seed=" +
                                std::to_string(seed + t));
  }
  out << "verify OK: " << trials << " trial(s) of " << gen << " n=" << n
      << ", " << mergeModeName(mode) << " layers match the reference peel\n";
  return 0;
}

// ------------------------------------------------------------------ bench

int64_t parseSizeTerm(const std::string& t) {
  try {
    if (auto caret = t.find('^'); caret != std::string::npos) {
      size_t ub = 0, ue = 0;
      long base = std::stol(t.substr(0, caret), &ub);
      long exp = std::stol(t.substr(caret + 1), &ue);
      if (ub != caret || ue != t.size() - caret - 1 || base != 2 || exp < 0 ||
          exp > 40)
        throw std::invalid_argument(t);
      return int64_t{1} << exp;
    }
    size_t used = 0;
    long long v = std::stoll(t, &used);
    if (used != t.size() || v <= 0) throw std::invalid_argument(t);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad size term '" + t +
                                "' (want e.g. 4096 or 2^12)");
  }
}

// Comma-separated terms; "a..b" expands to the doubling ladder a,2a,... <= b.
std::vector<int64_t> parseSizes(const std::string& spec) {
  std::vector<int64_t> sizes;
  size_t pos = 0;
  while (pos <= spec.size()) {
    auto comma = spec.find(',', pos);
    auto end = comma == std::string::npos ? spec.size() : comma;
    std::string term = spec.substr(pos, end - pos);
    if (auto dots = term.find(".."); dots != std::string::npos) {
      int64_t a = parseSizeTerm(term.substr(0, dots));
      int64_t b = parseSizeTerm(term.substr(dots + 2));
      if (b < a) throw std::invalid_argument("bad size range '" + term + "'");
      for (int64_t v = a; v <= b; v *= 2) sizes.push_back(v);
    } else if (!term.empty()) {
      sizes.push_back(parseSizeTerm(term));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (sizes.empty()) throw std::invalid_argument("--sizes is empty");
  return sizes;
}

int runBench(const std::string& gen, const std::string& sizesSpec,
             uint64_t seed, const std::string& algo, std::ostream& out,
             std::ostream& err) {
  auto kind = parseGenKind(gen);
  if (!kind) throw std::invalid_argument("unknown generator '" + gen + "'");
  auto sizes = parseSizes(sizesSpec);
  bool brute = algo == "bruteforce";
  CounterReport rep;
  rep.label = algo + " " + gen + " seed=" + std::to_string(seed);
  for (int64_t n : sizes) {
    auto pts = generate(*kind, n, seed);
    ScalingRow row;
    row.n = n;
    auto t0 = std::chrono::steady_clock::now();
    if (brute) {
      auto layers = oracle::peel(pts);
      row.layers = static_cast<int64_t>(layers.size());
      row.peakNodes = n;
    } else {
      LayerOptions opt;
      opt.censusEvery = 1 << 30;  // one sample, right after the builds
      PeelStats stats;
      peelLayers(pts, opt, &stats);
      row.counters = stats.counters;
      row.layers = stats.layerCount;
      for (const auto& c : stats.census)
        row.peakNodes = std::max(row.peakNodes, c.chainNodes);
    }
    row.wallMs = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    rep.rows.push_back(row);
    err << "# n=" << n << " done in " << row.wallMs << " ms\n";
  }
  out << rep.table();
  if (brute)
    out << "scaling fit: not applicable to the bruteforce reference\n";
  else if (rep.rows.size() < 4)
    out << "scaling fit: needs at least four sizes\n";
  else
    out << fitScaling(rep).text << '\n';
  return 0;
}

// ------------------------------------------------------------- gen / plot

int runGen(const std::string& kindName, int64_t n, uint64_t seed,
           const std::string& outPath, std::ostream& out) {
  auto kind = parseGenKind(kindName);
  if (!kind) throw std::invalid_argument("unknown generator '" + kindName + "'");
  if (n == 0 && *kind == GenKind::Fixture) n = 10;
  auto pts = generate(*kind, n, seed);
  if (outPath == "-")
    io::writePoints(out, pts);
  else
    io::writePointsFile(outPath, pts);
  return 0;
}

int runPlot(const std::string& input, const std::string& outPath,
            MergeMode mode, int scale) {
  auto pts = loadInput(input, scale);
  auto ls = peelLayers(pts, mode);
  writeLayersSvgFile(outPath, ls);
  return 0;
}

}  // namespace

int runCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"convex layers via four monotone-chain hull trees"};
  app.require_subcommand(1);
  int rc = 0;

  struct {
    std::string input, mode = "purge", format = "json";
    int maxLayers = 0, scale = 0;
  } comp;
  auto* compute = app.add_subcommand("compute", "peel a point file into layers");
  compute->add_option("--input", comp.input,
                      "point file, or 'fixture' for the builtin ten-point set")
      ->required();
  compute->add_option("--mode", comp.mode, "merge mode")
      ->check(CLI::IsMember({"purge", "literal"}));
  compute->add_option("--format", comp.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("--max-layers", comp.maxLayers, "stop after L layers");
  compute->add_option("--scale", comp.scale,
                      "decimal digits folded into the integer grid");
  compute->callback([&] {
    rc = runCompute(comp.input, parseMergeMode(comp.mode), comp.format,
                    comp.maxLayers, comp.scale, out);
  });

  struct {
    std::string input, gen, mode = "purge";
    int64_t n = 0;
    uint64_t seed = 1;
    int trials = 1, scale = 0;
  } ver;
  auto* verify = app.add_subcommand(
      "verify", "compare the hull-tree peel against the bruteforce reference");
  verify->add_option("--input", ver.input, "point file, or 'fixture'");
  verify->add_option("--gen", ver.gen, "generator kind")
      ->check(CLI::IsMember(genKindNames()));
  verify->add_option("--n", ver.n, "points per generated instance");
  verify->add_option("--seed", ver.seed, "seed of the first trial");
  verify->add_option("--trials", ver.trials, "generated instances to check");
  verify->add_option("--mode", ver.mode, "merge mode under test")
      ->check(CLI::IsMember({"purge", "literal"}));
  verify->add_option("--scale", ver.scale,
                     "decimal digits folded into the integer grid");
  verify->callback([&] {
    rc = runVerify(ver.input, ver.gen, ver.n, ver.seed, ver.trials,
                   parseMergeMode(ver.mode), ver.scale, out);
  });

  struct {
    std::string gen = "uniform-square", sizes = "2^10..2^17",
                algo = "hulltree";
    uint64_t seed = 1;
  } ben;
  auto* bench = app.add_subcommand("bench", "doubling-ladder measurements");
  bench->add_option("--gen", ben.gen, "generator kind")
      ->check(CLI::IsMember(genKindNames()));
  bench->add_option("--sizes", ben.sizes,
                    "comma list of sizes; a..b doubles from a up to b");
  bench->add_option("--seed", ben.seed, "instance seed");
  bench->add_option("--algo", ben.algo, "implementation to time")
      ->check(CLI::IsMember({"hulltree", "bruteforce"}));
  bench->callback(
      [&] { rc = runBench(ben.gen, ben.sizes, ben.seed, ben.algo, out, err); });

  struct {
    std::string kind, out = "-";
    int64_t n = 0;
    uint64_t seed = 1;
  } gen;
  auto* genCmd = app.add_subcommand("gen", "write a generated point file");
  genCmd->add_option("--kind", gen.kind, "generator kind")
      ->required()
      ->check(CLI::IsMember(genKindNames()));
  genCmd->add_option("--n", gen.n, "number of points");
  genCmd->add_option("--seed", gen.seed, "seed");
  genCmd->add_option("--out", gen.out, "output file, '-' for stdout");
  genCmd->callback([&] { rc = runGen(gen.kind, gen.n, gen.seed, gen.out, out); });

  struct {
    std::string input, out, mode = "purge";
    int scale = 0;
  } plot;
  auto* plotCmd = app.add_subcommand("plot", "render the layers as SVG");
  plotCmd->add_option("--input", plot.input, "point file, or 'fixture'")
      ->required();
  plotCmd->add_option("--out", plot.out, "SVG output file")->required();
  plotCmd->add_option("--mode", plot.mode, "merge mode")
      ->check(CLI::IsMember({"purge", "literal"}));
  plotCmd->add_option("--scale", plot.scale,
                      "decimal digits folded into the integer grid");
  plotCmd->callback([&] {
    rc = runPlot(plot.input, plot.out, parseMergeMode(plot.mode), plot.scale);
  });

  try {
    app.parse(argc, argv);
    return rc;
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const io::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace onion
