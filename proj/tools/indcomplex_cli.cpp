// Copyright 2026 The indcomplex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end; talks to the library through the C API only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "indcomplex/indcomplex.h"
#include "json.hpp"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitError = 3;

struct Common {
  std::uint64_t cap_faces = 0;  // 0: library default (or INDCOMPLEX_CAP_FACES)
  std::uint64_t max_columns = 0;
  unsigned workers = 1;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string format;
  std::string out;
  bool progress = false;
};

struct ApiError {
  ic_status status;
  std::string message;
};

void check(ic_status s) {
  if (s != IC_OK) throw ApiError{s, ic_last_error()};
}

// Owns a string returned by the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  ic_string_free(s);
  return out;
}

struct GraphHandle {
  ic_graph* g = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { ic_graph_free(g); }
};

void show_progress(uint64_t done, uint64_t total, void*) {
  std::fprintf(stderr, "\r%llu/%llu", static_cast<unsigned long long>(done),
               static_cast<unsigned long long>(total));
  if (done >= total) std::fputc('\n', stderr);
}

ic_options options(const Common& c) {
  ic_options o;
  ic_options_init(&o);
  if (c.cap_faces) o.cap_faces = c.cap_faces;
  if (c.max_columns) o.max_columns = c.max_columns;
  o.workers = c.workers ? c.workers : 1;
  if (c.seed_set) o.seed = c.seed;
  if (c.progress) o.progress = show_progress;
  return o;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw ApiError{IC_ERR_IO, "cannot write " + c.out};
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ApiError{IC_ERR_IO, "cannot open " + path};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<int32_t> parse_ids(const std::string& list) {
  std::vector<int32_t> ids;
  std::string tok;
  std::istringstream in(list);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    try {
      ids.push_back(static_cast<int32_t>(std::stol(tok)));
    } catch (const std::exception&) {
      throw ApiError{IC_ERR_PARSE, "bad vertex id '" + tok + "'"};
    }
  }
  return ids;
}

// "delta" with --d picks delta3/delta4.
std::string resolve_kind(const std::string& kind, int d) {
  if (kind == "delta") {
    if (d != 3 && d != 4) throw ApiError{IC_ERR_INVALID_INPUT, "delta needs --d 3 or --d 4"};
    return "delta" + std::to_string(d);
  }
  return kind;
}

// Missing --n/--m on a lattice kind: the smallest tileable quotient.
void resolve_size(const std::string& kind, int& n, int& m) {
  if (kind == "cycle" || (n > 0 && m > 0)) return;
  int sn = 0, sm = 0;
  check(ic_smallest_tileable(kind.c_str(), &sn, &sm));
  if (n <= 0) n = sn;
  if (m <= 0) m = sm;
}

std::string bounds_text(const std::string& json) {
  const auto j = nlohmann::json::parse(json);
  std::ostringstream os;
  std::string lower, upper, descriptor;
  for (const auto& r : j["reports"]) {
    const std::string kind = r["kind"];
    os << kind << " bound  " << r["descriptor"].get<std::string>() << "  v=" << r["vertices"]
       << "  raw " << r["raw"].get<std::string>() << " = " << r["raw_value"].get<std::string>()
       << "  rate " << r["rate_6dp"].get<std::string>() << "\n";
    (kind == "lower" ? lower : upper) = r["rate_6dp"];
    descriptor = r["descriptor"];
  }
  if (!lower.empty() && !upper.empty()) {
    os << lower << "^v <= total Betti <= " << upper << "^v\n";
    if (descriptor.rfind("kagome", 0) == 0)
      os << "context (literature, not computed): experimental growth rate 1.25 +- 0.1 for the Kagome lattice\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence complexes of lattice graphs: homology and Betti bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ic_version()));
  Common c;
  auto add_common = [&](CLI::App* sub, const std::string& default_format,
                        std::vector<std::string> formats) {
    sub->add_option("--cap-faces", c.cap_faces, "Independent-set enumeration cap")
        ->envname("INDCOMPLEX_CAP_FACES")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-columns", c.max_columns, "Largest boundary matrix")->check(CLI::PositiveNumber);
    sub->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "Seed for randomized suites (default 1)")
        ->each([&](const std::string&) { c.seed_set = true; });
    c.format = default_format;
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", c.out, "Write output to a file");
    sub->add_flag("--progress", c.progress, "Progress on stderr");
  };

  std::string kind;
  int n = 0, m = 0, d = 0;
  bool tiled = false;

  auto* gen = app.add_subcommand("gen", "Write a lattice quotient or cycle as an edge list");
  gen->add_option("kind", kind, "kagome, triangular, delta, delta3, delta4 or cycle")->required();
  gen->add_option("--n", n, "First period");
  gen->add_option("--m", m, "Second period");
  gen->add_option("--d", d, "Line spacing for delta");
  gen->add_flag("--tiled", tiled, "Require a tileable quotient");
  add_common(gen, "text", {"text"});

  std::string input;
  auto* betti = app.add_subcommand("betti", "Reduced Betti numbers of I(G)");
  betti->add_option("input", input, "Edge-list file")->required();
  add_common(betti, "json", {"json", "text"});

  std::string mode = "both", separator;
  auto* bounds = app.add_subcommand("bounds", "Lower and upper bounds on total Betti number");
  bounds->add_option("kind", kind, "Lattice kind (omit with --in)");
  bounds->add_option("--in", input, "Edge-list file instead of a lattice");
  bounds->add_option("--n", n, "First period");
  bounds->add_option("--m", m, "Second period");
  bounds->add_option("--d", d, "Line spacing for delta");
  bounds->add_option("--mode", mode, "lower, upper or both")->check(CLI::IsMember({"lower", "upper", "both"}));
  bounds->add_option("--u", separator, "Separator vertices for --in, comma separated");
  add_common(bounds, "json", {"json", "text"});

  bool templates = false, family = false;
  auto* tiles = app.add_subcommand("tiles", "Tile decomposition, templates, residual class table");
  tiles->add_option("kind", kind, "Lattice kind")->required();
  tiles->add_option("--n", n, "First period");
  tiles->add_option("--m", m, "Second period");
  tiles->add_option("--d", d, "Line spacing for delta");
  tiles->add_flag("--templates", templates, "Search tile templates");
  tiles->add_flag("--family", family, "Print the template family (one pair per line)");
  add_common(tiles, "json", {"json", "csv"});

  std::string target;
  auto* repro = app.add_subcommand("reproduce", "Regenerate the reference numbers");
  repro->add_option("target", target, std::string("One of: ") + ic_reproduce_targets() + ", all")->required();
  add_common(repro, "text", {"text", "json"});

  std::string family_file;
  std::size_t max_pairs = 2;
  bool no_reorder = false;
  auto* split = app.add_subcommand("splitting", "Peel cross-cycle spheres through cofibre graphs");
  split->add_option("input", input, "Edge-list file")->required();
  split->add_option("--family", family_file, "Pairs file (one pair per line, transversal vertex first)");
  split->add_option("--max-pairs", max_pairs, "Pairs to search for without --family")->check(CLI::PositiveNumber);
  split->add_flag("--no-reorder", no_reorder, "Do not try other orders when the star condition fails");
  add_common(split, "json", {"json"});

  CLI11_PARSE(app, argc, argv);

  try {
    const ic_options opts = options(c);
    if (gen->parsed()) {
      kind = resolve_kind(kind, d);
      if (kind != "cycle" && (n <= 0 || m <= 0) && !tiled)
        throw ApiError{IC_ERR_INVALID_INPUT, "--n and --m are required"};
      if (tiled) resolve_size(kind, n, m);
      GraphHandle g;
      check(ic_gen(kind.c_str(), n, m, tiled ? 1 : 0, &g.g));
      char* text = nullptr;
      check(ic_graph_to_text(g.g, &text));
      emit(c, take(text));
    } else if (betti->parsed()) {
      GraphHandle g;
      check(ic_graph_read(input.c_str(), &g.g));
      char* out = nullptr;
      check(ic_betti_json(g.g, &opts, &out));
      std::string json = take(out);
      if (c.format == "text") {
        const auto j = nlohmann::json::parse(json);
        std::ostringstream os;
        os << "n=" << j["graph"]["n"] << " m=" << j["graph"]["m"] << "\n";
        for (auto& [deg, val] : j["betti"].items()) os << "betti_" << deg << " = " << val << "\n";
        os << "total " << j["total"] << "  witten index " << j["witten_index"] << "  f " << j["f"].dump() << "\n";
        json = os.str();
      }
      emit(c, json);
    } else if (bounds->parsed()) {
      char* out = nullptr;
      if (!input.empty()) {
        if (!kind.empty()) throw ApiError{IC_ERR_INVALID_INPUT, "give either a lattice kind or --in"};
        GraphHandle g;
        check(ic_graph_read(input.c_str(), &g.g));
        const auto u = parse_ids(separator);
        check(ic_graph_bounds_json(g.g, u.data(), u.size(), mode.c_str(), &opts, &out));
      } else {
        if (kind.empty()) throw ApiError{IC_ERR_INVALID_INPUT, "lattice kind or --in required"};
        kind = resolve_kind(kind, d);
        resolve_size(kind, n, m);
        check(ic_lattice_bounds_json(kind.c_str(), n, m, mode.c_str(), &opts, &out));
      }
      std::string json = take(out);
      emit(c, c.format == "text" ? bounds_text(json) : json);
    } else if (tiles->parsed()) {
      kind = resolve_kind(kind, d);
      resolve_size(kind, n, m);
      char* out = nullptr;
      if (family) {
        check(ic_lattice_family(kind.c_str(), n, m, &out));
      } else if (c.format == "csv") {
        check(ic_residual_csv(kind.c_str(), n, m, &opts, &out));
      } else {
        check(ic_tiles_json(kind.c_str(), n, m, templates ? 1 : 0, &out));
      }
      emit(c, take(out));
    } else if (repro->parsed()) {
      std::vector<std::string> targets;
      if (target == "all") {
        std::istringstream in(ic_reproduce_targets());
        for (std::string t; in >> t;) targets.push_back(t);
      } else {
        targets.push_back(target);
      }
      bool all_ok = true;
      std::string text;
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : targets) {
        char* out = nullptr;
        int passed = 0;
        check(ic_reproduce(t.c_str(), c.format.c_str(), &opts, &out, &passed));
        all_ok &= passed == 1;
        const std::string s = take(out);
        if (c.format == "json") arr.push_back(nlohmann::json::parse(s));
        else text += s + "\n";
      }
      if (c.format == "json")
        emit(c, targets.size() == 1 ? arr[0].dump(2) : nlohmann::json{{"schema", 1}, {"results", arr}}.dump(2));
      else
        emit(c, text + (all_ok ? "ALL PASS\n" : "SOME CHECKS FAILED\n"));
      return all_ok ? 0 : kExitChecksFailed;
    } else if (split->parsed()) {
      GraphHandle g;
      check(ic_graph_read(input.c_str(), &g.g));
      std::string fam;
      if (!family_file.empty()) fam = read_file(family_file);
      char* out = nullptr;
      check(ic_splitting_json(g.g, family_file.empty() ? nullptr : fam.c_str(), max_pairs,
                              no_reorder ? 0 : 1, &opts, &out));
      emit(c, take(out));
    }
  } catch (const ApiError& e) {
    std::cerr << "error (" << ic_status_name(e.status) << "): " << e.message << "\n";
    return kExitError;
  }
  return 0;
}
