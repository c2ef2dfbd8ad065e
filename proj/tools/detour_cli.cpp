// Command-line front end over the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "detour/detour_c.h"

using nlohmann::json;

namespace {

enum Exit { kOk = 0, kRefuted = 1, kUsage = 2 };

struct Failure {
  int code;
  std::string message;
};

std::string read_input(const std::string& path) {
  std::stringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Failure{kUsage, "cannot read " + path};
    ss << in.rdbuf();
  }
  return ss.str();
}

void check(dt_status s) {
  if (s == DT_OK) return;
  const int code = (s == DT_ERR_REFUTED || s == DT_ERR_NOT_HYPOHAMILTONIAN) ? kRefuted : kUsage;
  throw Failure{code, dt_last_error()};
}

// Owns a string returned by the C interface.
struct Owned {
  char* p = nullptr;
  ~Owned() { dt_string_free(p); }
  json parse() const { return json::parse(p); }
};

struct GraphHandle {
  dt_graph* g = nullptr;
  ~GraphHandle() { dt_graph_free(g); }
};

void load_graph(const std::string& path, GraphHandle& h) { check(dt_graph_parse(read_input(path).c_str(), &h.g)); }

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Failure{kUsage, "bad integer '" + tok + "'"};
    }
  }
  return out;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Failure{kUsage, "cannot write " + out_path};
  out << text;
}

int run_analyze(const std::string& file, const std::string& mode, bool as_json) {
  GraphHandle h;
  load_graph(file, h);
  Owned o;
  check(dt_analyze_json(h.g, mode == "witnessed" ? DT_MODE_WITNESSED : DT_MODE_CERTIFIED, &o.p));
  const json j = o.parse();
  if (as_json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "order " << j["order"] << ", size " << j["size"] << '\n'
              << "tau " << j["tau"] << ", deficiency " << j["deficiency"] << '\n'
              << "sequence " << j["sequence_text"].get<std::string>() << '\n'
              << "constant " << j["constant"] << ", full " << j["full"] << ", cnd " << j["cnd"] << '\n';
    for (const auto& w : j["warnings"]) std::cout << "warning: " << w.get<std::string>() << '\n';
  }
  return kOk;
}

int run_construct(const std::string& recipe, bool certify, bool as_json, const std::string& out_path) {
  const std::string text = read_input(recipe);
  const std::string dir =
      recipe == "-" ? std::string(".") : std::filesystem::path(recipe).parent_path().string();
  Owned o;
  GraphHandle h;
  const dt_status s = dt_construct_json(text.c_str(), dir.c_str(), certify ? 1 : 0, &o.p, &h.g);
  if (!o.p) check(s);
  const json j = o.parse();
  if (!out_path.empty()) write_output(j["graph6"].get<std::string>() + "\n", out_path);
  if (as_json) {
    std::cout << j.dump() << '\n';
  } else {
    const auto& p = j["predicted"];
    std::cout << "variant " << j["variant"].get<std::string>() << ": order " << j["order"] << ", size "
              << j["size"] << '\n'
              << "predicted tau " << p["tau"] << ", deficiency " << p["deficiency"] << '\n'
              << "verification " << j["verification"].get<std::string>() << ", confirmed " << j["confirmed"]
              << '\n';
    if (j.contains("tau")) std::cout << "exact tau " << j["tau"] << ", sequence " << j["sequence_text"].get<std::string>() << '\n';
    if (out_path.empty()) std::cout << j["graph6"].get<std::string>() << '\n';
  }
  check(s);
  return kOk;
}

int run_verify_block(const std::string& kind, const std::string& file, const std::string& dist, bool as_json) {
  GraphHandle h;
  load_graph(file, h);
  const auto d = parse_ints(dist);
  Owned o;
  const dt_status s = dt_verify_block_json(h.g, kind.c_str(), d.data(), static_cast<int>(d.size()), &o.p);
  if (!o.p) check(s);
  const json j = o.parse();
  if (as_json) {
    std::cout << j.dump() << '\n';
  } else if (j["verified"].get<bool>()) {
    std::cout << "verified " << j["kind"].get<std::string>();
    if (j["block"].contains("drop")) std::cout << " (drop " << j["block"]["drop"] << ")";
    std::cout << '\n';
  } else {
    std::cout << "refuted: condition " << j["refutation"]["condition"].get<std::string>();
    if (j["refutation"]["vertex"].get<int>() >= 0) std::cout << " at vertex " << j["refutation"]["vertex"];
    std::cout << '\n';
  }
  return s == DT_ERR_REFUTED ? kRefuted : (check(s), kOk);
}

int run_catalog(const std::string& name, const std::vector<int>& params, const std::string& out_path, bool as_json,
                bool list) {
  Owned o;
  if (list) {
    check(dt_catalog_list_json(&o.p));
    const json j = o.parse();
    if (as_json) {
      std::cout << j.dump() << '\n';
    } else {
      for (const auto& e : j) {
        std::cout << e["name"].get<std::string>();
        if (!e["params"].get<std::string>().empty()) std::cout << '(' << e["params"].get<std::string>() << ')';
        std::cout << "  " << e["summary"].get<std::string>() << '\n';
      }
    }
    return kOk;
  }
  if (name.empty()) throw Failure{kUsage, "catalog needs a name (or --list)"};
  check(dt_catalog_json(name.c_str(), params.data(), static_cast<int>(params.size()), &o.p));
  const json j = o.parse();
  if (as_json) {
    write_output(j.dump() + "\n", out_path);
  } else if (j.contains("graph6")) {
    write_output(j["graph6"].get<std::string>() + "\n", out_path);
  } else {
    write_output(j["multigraph"].get<std::string>(), out_path);
  }
  return kOk;
}

int run_colour(int n, const std::string& file, bool exact, bool as_json) {
  GraphHandle h;
  load_graph(file, h);
  Owned o;
  check(dt_colour_json(h.g, n, exact ? 1 : 0, &o.p));
  const json j = o.parse();
  if (as_json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (exact ? "chi_" : "greedy colours for n=") << (exact ? std::to_string(n) + " = " : std::to_string(n) + ": ")
              << j["colours"] << " (tau " << j["tau"] << ")\n";
    for (const auto& c : j["classes"]) std::cout << "  " << c.dump() << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Detour orders, CND constructions and block verification"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string file, mode = "certified";
  auto* analyze = app.add_subcommand("analyze", "Detour profile and sequence report of a graph");
  analyze->add_option("file", file, "graph6 or multigraph file, - for stdin")->default_val("-");
  analyze->add_option("--mode", mode, "certified|witnessed")->check(CLI::IsMember({"certified", "witnessed"}));
  analyze->add_flag("--json", as_json, "Print JSON");

  std::string recipe, out_path;
  bool certify = false;
  auto* construct = app.add_subcommand("construct", "Build a construction from a recipe file");
  construct->add_option("--recipe", recipe, "recipe file")->required();
  construct->add_flag("--certify", certify, "Exhaustive verification above the certified limit");
  construct->add_option("--out", out_path, "Write the graph6 of the result here");
  construct->add_flag("--json", as_json, "Print JSON");

  std::string kind, dist;
  auto* verify = app.add_subcommand("verify-block", "Check the conditions of a block kind");
  verify->add_option("--kind", kind, "itype|rtype|utype|hctv|inflator")->required();
  verify->add_option("--graph", file, "graph file")->required();
  verify->add_option("--distinguished", dist, "comma-separated vertices")->default_val("");
  verify->add_flag("--json", as_json, "Print JSON");

  std::string name;
  std::vector<int> params;
  bool list = false;
  auto* catalog = app.add_subcommand("catalog", "Emit a named graph");
  catalog->add_option("name", name, "entry name");
  catalog->add_option("params", params, "integer parameters");
  catalog->add_option("--out", out_path, "output file");
  catalog->add_flag("--list", list, "List entries");
  catalog->add_flag("--json", as_json, "Print JSON");

  auto* search = app.add_subcommand("search", "Exhaustive searches");
  search->require_subcommand(1);
  int min_order = 1, max_order = 8, drop = -1, girth_min = 0;
  bool bip = false, no_prune = false, override_limit = false;
  auto* sblock = search->add_subcommand("block", "Search for blocks of a kind");
  sblock->add_option("--kind", kind, "block kind")->required();
  sblock->add_option("--min-order", min_order, "smallest order")->default_val(1);
  sblock->add_option("--max-order", max_order, "largest order")->default_val(8);
  sblock->add_option("--drop", drop, "inflator drop");
  sblock->add_flag("--bipartite", bip, "bipartite blocks only");
  sblock->add_option("--girth", girth_min, "minimum girth");
  int cnd_max = 7;
  auto* scnd = search->add_subcommand("cnd", "Search all small graphs for CND graphs");
  scnd->add_option("--max-order", cnd_max, "largest order")->default_val(7);
  scnd->add_flag("--no-prune", no_prune, "Disable necessary-condition pruning");
  scnd->add_flag("--override", override_limit, "Allow orders above the default limit");

  int n = 2;
  bool exact = false;
  auto* colour = app.add_subcommand("color", "Detour colouring (no monochromatic path of order > n)");
  colour->add_option("-n", n, "path order bound")->required();
  colour->add_option("file", file, "graph file")->default_val("-");
  colour->add_flag("--exact", exact, "Exact minimum (order <= 12)");
  colour->add_flag("--json", as_json, "Print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return run_analyze(file, mode, as_json);
    if (*construct) return run_construct(recipe, certify, as_json, out_path);
    if (*verify) return run_verify_block(kind, file, dist, as_json);
    if (*catalog) return run_catalog(name, params, out_path, as_json, list);
    if (*colour) return run_colour(n, file, exact, as_json);
    Owned o;
    if (*sblock) {
      check(dt_search_block_json(kind.c_str(), min_order, max_order, drop, bip ? 1 : 0, girth_min, &o.p));
    } else {
      check(dt_search_cnd_json(cnd_max, no_prune ? 0 : 1, override_limit ? 1 : 0, &o.p));
    }
    const json j = o.parse();
    if (as_json || *scnd) {
      std::cout << j.dump() << '\n';
    } else {
      std::cout << j["count"] << " block(s)\n";
      for (const auto& b : j["blocks"])
        std::cout << "  " << b["graph6"].get<std::string>() << " order " << b["order"] << " size " << b["size"]
                  << " D=" << b["distinguished"].dump() << '\n';
    }
    return kOk;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed library output: " << e.what() << '\n';
    return kUsage;
  }
}
