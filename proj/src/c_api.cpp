#include "detour/detour_c.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "detour/catalog.hpp"
#include "detour/colouring.hpp"

using nlohmann::json;
using namespace detour;

struct dt_graph {
  SimpleGraph g;
};

namespace {

thread_local std::string last_error;

dt_status fail(dt_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

template <class F>
dt_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return fail(static_cast<dt_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DT_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

dt_status emit(const json& j, char** out) {
  if (!out) return fail(DT_ERR_BAD_PARAMS, "null output pointer");
  *out = dup(j.dump());
  return DT_OK;
}

SearchMode search_mode(dt_mode m) { return m == DT_MODE_WITNESSED ? SearchMode::witnessed() : SearchMode::certified(); }

std::vector<int> to_vector(const int* p, int count) {
  if (count < 0 || (count > 0 && !p)) throw Error(ErrorCode::BadParams, "bad parameter array");
  return std::vector<int>(p, p + count);
}

bool looks_like_multigraph(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  while (in >> first) {
    if (first[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return first == "multigraph";
  }
  return false;
}

SimpleGraph parse_graph_text(const std::string& text) {
  if (looks_like_multigraph(text)) return to_simple(parse_multigraph_text(text));
  std::string t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  std::size_t start = 0;
  while (start < t.size() && std::isspace(static_cast<unsigned char>(t[start]))) ++start;
  return from_graph6(std::string_view(t).substr(start));
}

json path_json(const PathWitness& w) { return w.vertices; }

json profile_json(const SimpleGraph& g, const DetourProfile& p, dt_mode mode) {
  json j;
  j["order"] = g.order();
  j["size"] = g.size();
  j["mode"] = mode == DT_MODE_WITNESSED ? "witnessed" : "certified";
  j["exact"] = p.exact;
  j["tau"] = p.tau;
  j["deficiency"] = p.deficiency;
  j["per_vertex"] = p.per_vertex;
  j["sequence"] = p.sequence.terms();
  j["sequence_text"] = p.sequence.to_string();
  j["constant"] = !p.sequence.empty() && p.sequence.constant();
  j["full"] = !p.sequence.empty() && p.sequence.full();
  j["disconnected"] = p.disconnected;
  j["traceable"] = p.tau == g.order();
  j["cnd"] = !p.disconnected && p.tau < g.order() && !p.sequence.empty() && p.sequence.constant();
  json warnings = json::array();
  if (p.disconnected) warnings.push_back("graph is disconnected; detour orders are per component");
  if (!p.exact) warnings.push_back("search budget exhausted; orders are lower bounds");
  j["warnings"] = warnings;
  if (!p.sequence.empty() && !p.disconnected) {
    const auto r = analyze_sequence(p.sequence, g.order(), p.tau);
    j["bounds"] = {{"gap", r.gap_bound},
                   {"distinct", r.distinct_bound},
                   {"repetition", r.repetition_bound},
                   {"min_term", r.min_term_bound}};
  }
  return j;
}

json block_json(const Block& b) {
  const char* evidence = "unverified";
  switch (b.evidence) {
    case BlockEvidence::Exhaustive: evidence = "exhaustive"; break;
    case BlockEvidence::Hypohamiltonian: evidence = "hypohamiltonian"; break;
    case BlockEvidence::Declared: evidence = "declared"; break;
    case BlockEvidence::Unverified: break;
  }
  json j{{"name", b.name},
         {"kind", block_kind_name(b.kind)},
         {"graph6", to_graph6(b.graph)},
         {"order", b.order()},
         {"size", b.graph.size()},
         {"distinguished", b.distinguished},
         {"evidence", evidence}};
  if (b.kind == BlockKind::Inflator) j["drop"] = b.drop;
  return j;
}

MultiGraph load_base(const std::string& arg, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::path p(arg);
  if (p.is_relative() && !dir.empty()) p = fs::path(dir) / p;
  if (fs::exists(p)) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    if (looks_like_multigraph(text)) return parse_multigraph_text(text);
    return to_multigraph(parse_graph_text(text));
  }
  auto [name, params] = parse_block_ref(arg);
  auto item = named_graph(name, params);
  if (item.multigraph) return *item.multigraph;
  if (item.graph) return to_multigraph(*item.graph);
  throw Error(ErrorCode::NotInCatalog, "base '" + arg + "' is neither a file nor a catalog multigraph");
}

}  // namespace

extern "C" {

const char* dt_last_error(void) { return last_error.c_str(); }

const char* dt_status_name(dt_status status) {
  if (status == DT_OK) return "Ok";
  if (status == DT_ERR_IO) return "Io";
  if (status == DT_ERR_INTERNAL) return "Internal";
  if (status >= DT_ERR_REJECTED_LOOP && status <= DT_ERR_BAD_FORMAT) return error_name(static_cast<ErrorCode>(status));
  return "Unknown";
}

void dt_string_free(char* s) { std::free(s); }

dt_status dt_graph_from_edges(int n, const int* endpoints, int edge_count, dt_graph** out) {
  return guarded([&] {
    if (!out) return fail(DT_ERR_BAD_PARAMS, "null output pointer");
    const auto flat = to_vector(endpoints, 2 * edge_count);
    std::vector<Edge> es;
    for (int i = 0; i < edge_count; ++i) es.push_back({flat[2 * i], flat[2 * i + 1]});
    *out = new dt_graph{build_simple(n, es)};
    return DT_OK;
  });
}

dt_status dt_graph_from_graph6(const char* text, dt_graph** out) {
  return guarded([&] {
    if (!out || !text) return fail(DT_ERR_BAD_PARAMS, "null argument");
    *out = new dt_graph{from_graph6(text)};
    return DT_OK;
  });
}

dt_status dt_graph_parse(const char* text, dt_graph** out) {
  return guarded([&] {
    if (!out || !text) return fail(DT_ERR_BAD_PARAMS, "null argument");
    *out = new dt_graph{parse_graph_text(text)};
    return DT_OK;
  });
}

dt_status dt_graph_from_catalog(const char* name, const int* params, int param_count, dt_graph** out) {
  return guarded([&] {
    if (!out || !name) return fail(DT_ERR_BAD_PARAMS, "null argument");
    auto item = named_graph(name, to_vector(params, param_count));
    if (!item.graph) return fail(DT_ERR_BAD_PARAMS, item.name + " is a multigraph; use dt_catalog_json");
    *out = new dt_graph{*item.graph};
    return DT_OK;
  });
}

void dt_graph_free(dt_graph* g) { delete g; }

int dt_graph_order(const dt_graph* g) { return g ? g->g.order() : 0; }

int dt_graph_size(const dt_graph* g) { return g ? g->g.size() : 0; }

dt_status dt_graph_to_graph6(const dt_graph* g, char** out) {
  return guarded([&] {
    if (!g || !out) return fail(DT_ERR_BAD_PARAMS, "null argument");
    *out = dup(to_graph6(g->g));
    return DT_OK;
  });
}

dt_status dt_detour_order(const dt_graph* g, dt_mode mode, int* tau, int* per_vertex) {
  return guarded([&] {
    if (!g || !tau) return fail(DT_ERR_BAD_PARAMS, "null argument");
    const auto p = detour_profile(g->g, search_mode(mode));
    *tau = p.tau;
    if (per_vertex) std::copy(p.per_vertex.begin(), p.per_vertex.end(), per_vertex);
    return DT_OK;
  });
}

dt_status dt_is_cnd(const dt_graph* g, int* out) {
  return guarded([&] {
    if (!g || !out) return fail(DT_ERR_BAD_PARAMS, "null argument");
    *out = is_cnd(g->g).cnd ? 1 : 0;
    return DT_OK;
  });
}

dt_status dt_analyze_json(const dt_graph* g, dt_mode mode, char** out) {
  return guarded([&] {
    if (!g) return fail(DT_ERR_BAD_PARAMS, "null graph");
    const auto p = detour_profile(g->g, search_mode(mode));
    return emit(profile_json(g->g, p, mode), out);
  });
}

dt_status dt_verify_block_json(const dt_graph* g, const char* kind, const int* distinguished, int count,
                               char** out) {
  return guarded([&] {
    if (!g || !kind) return fail(DT_ERR_BAD_PARAMS, "null argument");
    const BlockKind k = parse_block_kind(kind);
    const auto verdict = verify_block(g->g, to_vector(distinguished, count), k);
    json j{{"kind", block_kind_name(k)}, {"verified", verdict.ok()}};
    if (verdict.ok()) {
      j["block"] = block_json(*verdict.block);
    } else {
      j["refutation"] = {{"condition", verdict.refutation->condition}, {"vertex", verdict.refutation->vertex}};
    }
    json ws = json::array();
    for (const auto& w : verdict.witnesses) ws.push_back({{"condition", w.condition}, {"vertex", w.vertex}, {"paths", w.paths}});
    j["witnesses"] = ws;
    const dt_status s = emit(j, out);
    if (s != DT_OK) return s;
    if (!verdict.ok())
      return fail(DT_ERR_REFUTED, "condition " + verdict.refutation->condition + " fails");
    return DT_OK;
  });
}

dt_status dt_construct_json(const char* recipe_text, const char* base_dir, int certify, char** out,
                            dt_graph** out_graph) {
  return guarded([&] {
    if (!recipe_text) return fail(DT_ERR_BAD_PARAMS, "null recipe");
    const std::string dir = base_dir ? base_dir : "";
    const Recipe r = parse_recipe(recipe_text, [&](const std::string& a) { return load_base(a, dir); });
    ConstructOptions opts;
    opts.certify = certify != 0;
    const auto rep = construct(r, opts);
    json j{{"variant", variant_name(r.variant)},
           {"graph6", to_graph6(rep.graph)},
           {"order", rep.graph.order()},
           {"size", rep.graph.size()},
           {"predicted",
            {{"order", rep.predicted.order},
             {"size", rep.predicted.size},
             {"tau", rep.predicted.tau},
             {"deficiency", rep.predicted.deficiency}}},
           {"verification", rep.verification == Verification::Certified ? "certified" : "witnessed"},
           {"confirmed", rep.confirmed}};
    if (r.variant == Variant::Two || r.variant == Variant::Three) j["base_longest_trail"] = rep.base_trail;
    if (rep.profile) {
      j["tau"] = rep.profile->tau;
      j["sequence_text"] = rep.profile->sequence.to_string();
    }
    if (!rep.witnesses.empty()) {
      json ws = json::array();
      for (const auto& w : rep.witnesses) ws.push_back(path_json(w));
      j["witnesses"] = ws;
      j["missing"] = rep.missing;
    }
    if (out_graph) *out_graph = new dt_graph{rep.graph};
    const dt_status s = emit(j, out);
    if (s != DT_OK) return s;
    if (!rep.confirmed) return fail(DT_ERR_REFUTED, "verification did not confirm the predicted detour order");
    return DT_OK;
  });
}

dt_status dt_catalog_json(const char* name, const int* params, int param_count, char** out) {
  return guarded([&] {
    if (!name) return fail(DT_ERR_BAD_PARAMS, "null name");
    const auto item = named_graph(name, to_vector(params, param_count));
    json j{{"name", item.name}};
    if (item.graph) {
      j["graph6"] = to_graph6(*item.graph);
      j["order"] = item.graph->order();
      j["size"] = item.graph->size();
    }
    if (item.multigraph) j["multigraph"] = to_multigraph_text(*item.multigraph);
    if (item.block) j["block"] = block_json(*item.block);
    return emit(j, out);
  });
}

dt_status dt_catalog_list_json(char** out) {
  return guarded([&] {
    json j = json::array();
    for (const auto& e : catalog_entries()) j.push_back({{"name", e.name}, {"params", e.params}, {"summary", e.summary}});
    return emit(j, out);
  });
}

dt_status dt_search_block_json(const char* kind, int min_order, int max_order, int drop, int bipartite,
                               int girth_min, char** out) {
  return guarded([&] {
    if (!kind) return fail(DT_ERR_BAD_PARAMS, "null kind");
    BlockSearch q;
    q.kind = parse_block_kind(kind);
    q.min_order = min_order;
    q.max_order = max_order;
    if (drop >= 0) q.drop = drop;
    q.bipartite = bipartite != 0;
    q.girth_min = girth_min > 0 ? girth_min : 0;
    json blocks = json::array();
    for (const auto& b : search_block(q)) blocks.push_back(block_json(b));
    return emit(json{{"kind", block_kind_name(q.kind)}, {"count", blocks.size()}, {"blocks", blocks}}, out);
  });
}

dt_status dt_search_cnd_json(int max_order, int prune, int override_limit, char** out) {
  return guarded([&] {
    CndSearch q;
    q.max_order = max_order;
    q.prune = prune != 0;
    q.override_limit = override_limit != 0;
    const auto r = search_small_cnd(q);
    json found = json::array();
    for (const auto& g : r.found) found.push_back(to_graph6(g));
    return emit(json{{"max_order", max_order},
                     {"labelled_graphs", r.labelled_graphs},
                     {"tested", r.tested},
                     {"found", found}},
                out);
  });
}

dt_status dt_colour_json(const dt_graph* g, int n, int exact, char** out) {
  return guarded([&] {
    if (!g) return fail(DT_ERR_BAD_PARAMS, "null graph");
    const Colouring c = exact ? exact_detour_colouring(g->g, n) : greedy_detour_colouring(g->g, n);
    json j{{"n", n}, {"exact", exact != 0}, {"colours", c.colour_count}, {"colouring", c.colour},
           {"classes", c.classes()}, {"valid", is_valid_detour_colouring(g->g, c)}};
    const auto p = detour_profile(g->g);
    j["tau"] = p.tau;
    if (n >= 2) j["improved_bound"] = improved_colour_bound(p.tau, n);
    if (n >= 2 && n <= p.tau - 1) j["halving_bound"] = halving_colour_bound(p.tau, n);
    return emit(j, out);
  });
}

}  // extern "C"
