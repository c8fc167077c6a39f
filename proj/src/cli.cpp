#include "ribbonlab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbonlab/bounds.hpp"
#include "ribbonlab/enumerate.hpp"
#include "ribbonlab/errors.hpp"
#include "ribbonlab/oracle.hpp"
#include "ribbonlab/region.hpp"
#include "ribbonlab/render.hpp"
#include "ribbonlab/tiling.hpp"

namespace ribbonlab::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct CliFailure {
  int code;
  std::string error;
  std::string detail;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliFailure{kFormat, "io", "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Region load_region(const std::string& path) {
  try {
    return parse_region(read_file(path));
  } catch (const FormatError& e) {
    throw CliFailure{kFormat, "format", path + ": " + e.what()};
  }
}

std::size_t memo_cap_from_env() {
  DpOptions defaults;
  const char* env = std::getenv("RIBBONLAB_MEMO_CAP");
  if (env == nullptr || *env == '\0') return defaults.memo_cap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') throw CliFailure{kUsage, "usage", "RIBBONLAB_MEMO_CAP must be a non-negative integer"};
  return static_cast<std::size_t>(v);
}

json entropy_json(const BigInt& count, int area, int n) {
  if (count == 0 || area % n != 0) return nullptr;
  return per_tile_entropy(count, area, n);
}

CountResult count_with(const std::string& engine, const Region& r, int n, unsigned threads) {
  if (engine == "dfs") return count_dfs(r, n, threads);
  if (engine == "oracle") return oracle_count(r, n);
  return count_frontier_dp(r, n, DpOptions{memo_cap_from_env()});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration and entropy bounds for n-ribbon tilings", "ribbonlab"};
  app.require_subcommand(1);

  std::string file;
  int n = 0;
  unsigned threads = 1;

  auto* count = app.add_subcommand("count", "Count tilings; JSON to stdout");
  std::string engine = "dp";
  count->add_option("file", file, "Region file")->required();
  count->add_option("--n", n, "Ribbon length")->required();
  count->add_option("--engine", engine, "dfs | dp | oracle")->check(CLI::IsMember({"dfs", "dp", "oracle"}));
  count->add_option("--threads", threads, "Worker threads (dfs)");

  auto* enumerate = app.add_subcommand("enumerate", "List tilings in lexicographic root-set order");
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  bool roots_only = false;
  enumerate->add_option("file", file, "Region file")->required();
  enumerate->add_option("--n", n, "Ribbon length")->required();
  enumerate->add_option("--limit", limit, "Stop after this many tilings");
  enumerate->add_flag("--roots-only", roots_only, "Print root sets instead of tilings");

  auto* check = app.add_subcommand("check", "Decide tileability");
  check->add_option("file", file, "Region file")->required();
  check->add_option("--n", n, "Ribbon length")->required();

  auto* bounds = app.add_subcommand("bounds", "Bound report as JSON");
  int count_cap = 64;
  bounds->add_option("file", file, "Region file")->required();
  bounds->add_option("--n", n, "Ribbon length")->required();
  bounds->add_option("--count-area-cap", count_cap, "Include the exact count when area <= this");

  auto* gen = app.add_subcommand("gen", "Write a generated region file to stdout");
  gen->require_subcommand(1);
  auto* gen_rect = gen->add_subcommand("rect", "w x h rectangle");
  int width = 0, height = 0;
  gen_rect->add_option("--width", width, "Width")->required();
  gen_rect->add_option("--height", height, "Height")->required();
  auto* gen_az = gen->add_subcommand("aztec", "Aztec diamond");
  int order = 0;
  gen_az->add_option("--k", order, "Order")->required();
  auto* gen_rand = gen->add_subcommand("random", "Random tileable region");
  int gen_n = 0, tiles = 0;
  std::uint64_t seed = 0;
  gen_rand->add_option("--n", gen_n, "Ribbon length")->required();
  gen_rand->add_option("--t", tiles, "Tile count")->required();
  gen_rand->add_option("--seed", seed, "RNG seed")->required();

  auto* verify = app.add_subcommand("verify", "Cross-check dfs, dp and oracle counts");
  verify->add_option("file", file, "Region file")->required();
  verify->add_option("--n", n, "Ribbon length")->required();
  verify->add_option("--threads", threads, "Worker threads (dfs)");

  auto* render = app.add_subcommand("render", "SVG picture to stdout");
  std::string tiling_file;
  bool rotated = false;
  render->add_option("file", file, "Region file")->required();
  render->add_option("--tiling", tiling_file, "Tiling file ('x y WORD' lines)");
  render->add_flag("--rotated", rotated, "Rotate 45 degrees so levels are horizontal");

  auto* report = app.add_subcommand("report", "Entropy report over a directory of .rgn files");
  std::string corpus;
  report->add_option("--corpus", corpus, "Directory")->required();
  report->add_option("--n", n, "Ribbon length")->required();
  report->add_option("--threads", threads, "Worker threads");

  auto fail = [&err](const std::string& error, const std::string& detail, int code) {
    err << json{{"error", error}, {"detail", detail}}.dump() << "\n";
    return code;
  };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), kUsage);
  }

  try {
    if ((count->parsed() || enumerate->parsed() || check->parsed() || bounds->parsed() ||
         verify->parsed() || report->parsed()) && n < 2)
      throw CliFailure{kUsage, "usage", "--n must be >= 2"};
    if (threads < 1) threads = 1;

    if (count->parsed()) {
      const Region r = load_region(file);
      const CountResult res = count_with(engine, r, n, threads);
      json j{{"region", file}, {"n", n}, {"area", r.area()}, {"tiles", r.area() / n},
             {"count", res.count.str()}, {"entropy", entropy_json(res.count, r.area(), n)},
             {"engine", engine}, {"nodes", res.nodes_explored}};
      if (engine == "dp") j["peak_states"] = res.peak_states;
      out << j.dump() << "\n";
    } else if (enumerate->parsed()) {
      const Region r = load_region(file);
      std::size_t index = 0;
      if (limit > 0) {
        for_each_root_set(r, n, [&](const RootSet& rs) {
          ++index;
          out << "% " << (roots_only ? "roots " : "tiling ") << index << "\n";
          if (roots_only) {
            out << serialize_roots(rs);
          } else {
            out << serialize_tiling(std::get<Tiling>(decode_roots(rs)));
          }
          return index < limit;
        });
      }
    } else if (check->parsed()) {
      const Region r = load_region(file);
      const Tileability t = check_tileable(r, n);
      out << json{{"tileable", t.tileable}, {"reason", std::string(to_string(t.reason))}}.dump() << "\n";
    } else if (bounds->parsed()) {
      const Region r = load_region(file);
      if (r.area() % n != 0)
        throw CliFailure{kUsage, "usage", "area " + std::to_string(r.area()) + " is not divisible by " + std::to_string(n)};
      std::optional<BigInt> c;
      if (r.area() <= count_cap) c = count_frontier_dp(r, n, DpOptions{memo_cap_from_env()}).count;
      out << to_json(make_bound_report(file, r, n, c)).dump() << "\n";
    } else if (gen->parsed()) {
      Region r = gen_rect->parsed()  ? gen_rectangle(width, height)
                 : gen_az->parsed() ? gen_aztec(order)
                                    : gen_random_tileable(gen_n, tiles, seed);
      out << serialize_region(r) << "\n";
    } else if (verify->parsed()) {
      const Region r = load_region(file);
      const BigInt dfs = count_dfs(r, n, threads).count;
      const BigInt dp = count_frontier_dp(r, n, DpOptions{memo_cap_from_env()}).count;
      const BigInt oracle = oracle_count(r, n).count;
      const bool agree = dfs == dp && dp == oracle;
      out << json{{"region", file}, {"n", n}, {"dfs", dfs.str()}, {"dp", dp.str()},
                  {"oracle", oracle.str()}, {"agree", agree}}.dump() << "\n";
      if (!agree) return fail("verification", "engines disagree", kVerificationFailed);
    } else if (render->parsed()) {
      const Region r = load_region(file);
      std::optional<Tiling> t;
      if (!tiling_file.empty()) {
        try {
          t = parse_tiling(read_file(tiling_file), r);
        } catch (const FormatError& e) {
          throw CliFailure{kFormat, "format", tiling_file + ": " + e.what()};
        }
        if (t->ribbons().empty() || !validate_tiling(*t, t->ribbons().front().length()))
          throw CliFailure{kFormat, "format", tiling_file + ": not a ribbon tiling of the region"};
      }
      out << render_svg(r, t, rotated);
    } else if (report->parsed()) {
      if (!fs::is_directory(corpus)) throw CliFailure{kFormat, "io", "'" + corpus + "' is not a directory"};
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(corpus))
        if (entry.is_regular_file() && entry.path().extension() == ".rgn") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      std::vector<std::pair<std::string, Region>> regions;
      for (const auto& f : files) regions.emplace_back(f.filename().string(), load_region(f.string()));
      for (const auto& [id, region] : regions)
        if (region.area() % n != 0)
          throw CliFailure{kFormat, "untileable-region", id + ": area not divisible by " + std::to_string(n)};
      try {
        out << to_json(corpus_entropy_report(regions, n, threads)).dump() << "\n";
      } catch (const std::invalid_argument& e) {
        throw CliFailure{kFormat, "untileable-region", e.what()};
      }
    }
  } catch (const CliFailure& f) {
    return fail(f.error, f.detail, f.code);
  } catch (const ResourceError& e) {
    return fail("resource", e.what(), kResource);
  } catch (const FormatError& e) {
    return fail("format", e.what(), kFormat);
  } catch (const std::invalid_argument& e) {
    return fail("usage", e.what(), kUsage);
  }
  return kOk;
}

}  // namespace ribbonlab::cli
