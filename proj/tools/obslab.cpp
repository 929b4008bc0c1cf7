// obslab: decides which independent-edge-pair crossing parity sets are
// realisable by plane drawings, via the quotient deleted product over
// GF(2). Subcommands cover complex construction, the realisability
// coset and its weight spectrum, parity-constraint characterisation,
// orbit bookkeeping, and exact drawing verification.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "obslab/deleted_product.hpp"
#include "obslab/drawing.hpp"
#include "obslab/json_io.hpp"
#include "obslab/realisability.hpp"
#include "obslab/symmetry.hpp"

namespace {

using obslab::io::json;

constexpr const char* kToolName = "obslab";
constexpr const char* kToolVersion = "0.1.0";

// Exit codes: 2 unknown graph name, 3 malformed input file, 4 cap
// exceeded, 5 drawing validation failure, 6 other precondition or
// usage errors.
struct CliError : std::runtime_error {
  int exit_code;
  CliError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Named families: K<n>, K<a>,<b>, C<n>, P<n>, M<k>.
obslab::Graph named_graph(const std::string& name) {
  const auto parse_int = [&](const std::string& s) -> std::optional<int> {
    if (s.empty() || s.size() > 6) return std::nullopt;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return std::stoi(s);
  };

  try {
    if (name.size() >= 2 && name[0] == 'K') {
      const auto comma = name.find(',');
      if (comma == std::string::npos) {
        if (const auto n = parse_int(name.substr(1))) return obslab::complete_graph(*n);
      } else {
        const auto a = parse_int(name.substr(1, comma - 1));
        const auto b = parse_int(name.substr(comma + 1));
        if (a && b) return obslab::complete_bipartite_graph(*a, *b);
      }
    } else if (name.size() >= 2 && name[0] == 'C') {
      if (const auto n = parse_int(name.substr(1))) return obslab::cycle_graph(*n);
    } else if (name.size() >= 2 && name[0] == 'P') {
      if (const auto n = parse_int(name.substr(1))) return obslab::path_graph(*n);
    } else if (name.size() >= 2 && name[0] == 'M') {
      if (const auto k = parse_int(name.substr(1))) return obslab::matching_graph(*k);
    }
  } catch (const std::invalid_argument& e) {
    throw CliError(2, "bad graph parameters for \"" + name + "\": " + e.what());
  }
  throw CliError(2, "unknown graph name \"" + name +
                        "\" (expected K<n>, K<a>,<b>, C<n>, P<n> or M<k>)");
}

json load_json_file(const std::string& path) {
  std::string text;
  try {
    text = obslab::io::read_text_file(path);
  } catch (const std::invalid_argument& e) {
    throw CliError(3, e.what());  // message already names the path
  }
  try {
    return obslab::io::parse_json_text(text);
  } catch (const std::invalid_argument& e) {
    throw CliError(3, std::string(e.what()) + " in " + path);
  }
}

obslab::Graph load_graph_file(const std::string& path) {
  try {
    return obslab::io::graph_from_json(load_json_file(path));
  } catch (const std::invalid_argument& e) {
    throw CliError(3, "malformed graph file " + path + ": " + e.what());
  }
}

struct GraphArgs {
  std::string name;
  std::string file;

  obslab::Graph resolve() const {
    if (name.empty() == file.empty())
      throw CliError(6, "exactly one of --graph or --file is required");
    return name.empty() ? load_graph_file(file) : named_graph(name);
  }
};

struct OutputArgs {
  std::string out_path;
  std::string format = "json";
};

// Plain-text rendering: scalar fields as "dotted.path value" lines,
// arrays inline as compact JSON.
void flatten_text(const std::string& prefix, const json& j, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_text(prefix.empty() ? key : prefix + "." + key, value, out);
  } else {
    out += prefix;
    out += ' ';
    out += j.dump();
    out += '\n';
  }
}

std::string render(const json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  std::string out;
  flatten_text("", j, out);
  return out;
}

void emit(const std::string& bytes, const OutputArgs& output) {
  if (output.out_path.empty()) {
    std::cout << bytes;
    return;
  }
  std::ofstream f(output.out_path, std::ios::binary);
  if (!f) throw CliError(6, "cannot write " + output.out_path);
  f << bytes;
}

std::filesystem::path cache_dir() {
  if (const char* dir = std::getenv("OBSLAB_CACHE_DIR")) return dir;
  if (const char* home = std::getenv("HOME"))
    return std::filesystem::path(home) / ".cache" / kToolName;
  return ".obslab-cache";
}

// ---------------------------------------------------------------- commands

json run_graph_info(const obslab::Graph& g) {
  const obslab::PairIndex idx = obslab::independent_pairs(g);
  json j;
  j["n"] = g.vertex_count;
  j["edges"] = g.edge_count();
  j["independent_pairs"] = idx.size();
  j["edge_list"] = obslab::io::graph_to_json(g)["edges"];
  return j;
}

json run_complex(const obslab::Graph& g) {
  const obslab::OrderedComplex ordered = obslab::build_deleted_product(g);
  const obslab::SymmetricComplex quotient = obslab::symmetric_quotient(ordered);

  json j;
  j["cells"] = {{"vertices", quotient.vertex_count()},
                {"edges", quotient.edge_count()},
                {"faces", quotient.face_count()}};
  j["ordered_cells"] = {{"vertices", ordered.cells0.size()},
                        {"edges", ordered.cells1.size()},
                        {"faces", ordered.cells2.size()}};
  if (quotient.face_count() == 0) {
    j["closed_surface"] = false;
    j["reason"] = "no independent edge pairs, hence no 2-cells";
  } else {
    j["closed_surface"] = obslab::is_closed_surface(quotient);
  }
  j["euler"] = obslab::euler_characteristic(quotient);
  j["ordered_euler"] = obslab::euler_characteristic(ordered);

  json violations = json::array();
  for (const obslab::StarViolation& v : obslab::star_condition_violations(g)) {
    json entry;
    entry["edge"] = {g.edges[v.edge].first, g.edges[v.edge].second};
    entry["vertex"] = v.vertex;
    entry["count"] = v.count;
    violations.push_back(std::move(entry));
  }
  j["violations"] = std::move(violations);
  return j;
}

json run_surface_scan(int max_n) {
  std::vector<obslab::Graph> graphs;
  try {
    graphs = obslab::find_surface_graphs(max_n);
  } catch (const std::domain_error& e) {
    throw CliError(4, e.what());
  }
  json out = json::array();
  for (const obslab::Graph& g : graphs) out.push_back(obslab::io::graph_to_json(g));
  json j;
  j["max_n"] = max_n;
  j["graphs"] = std::move(out);
  return j;
}

std::string run_spectrum(const obslab::Graph& g, int workers, bool no_cache,
                         const std::string& format) {
  const std::string graph_dump = obslab::io::graph_to_json(g).dump();
  const std::string key =
      hex64(fnv1a(std::string(kToolVersion) + "\x1f" + "spectrum" + "\x1f" + format + "\x1f" +
                  graph_dump));
  const std::filesystem::path entry = cache_dir() / (key + ".out");

  if (!no_cache && std::filesystem::exists(entry))
    return obslab::io::read_text_file(entry.string());

  const obslab::ObstructionModel model = obslab::obstruction_model(g);
  obslab::gf2::WeightHistogram hist;
  try {
    hist = obslab::realisable_spectrum(model, workers);
  } catch (const std::domain_error& e) {
    throw CliError(4, e.what());
  }

  json j = obslab::io::histogram_to_json(hist);
  json manifest;
  manifest["tool"] = kToolName;
  manifest["version"] = kToolVersion;
  manifest["command"] = "spectrum";
  manifest["input_hash"] = key;
  manifest["workers"] = workers;
  manifest["elapsed_ms"] = hist.elapsed_ms;
  j["manifest"] = std::move(manifest);

  const std::string bytes = render(j, format);
  if (!no_cache) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    std::ofstream f(entry, std::ios::binary);
    if (f) f << bytes;
  }
  return bytes;
}

json run_check(const obslab::Graph& g, const std::string& set_arg) {
  const obslab::ObstructionModel model = obslab::obstruction_model(g);
  obslab::CrossingSet a(model.pairs.size());
  if (set_arg != "empty") {
    try {
      a = obslab::io::crossing_set_from_json(load_json_file(set_arg), g, model.pairs);
    } catch (const std::invalid_argument& e) {
      throw CliError(3, "malformed crossing set " + set_arg + ": " + e.what());
    }
  }

  json j;
  j["cardinality"] = a.popcount();
  const auto witness = obslab::realisability_witness(model, a);
  j["realisable"] = witness.has_value();
  if (witness) {
    json w = json::array();
    for (int row : *witness) {
      const auto [v, e] = model.one_cells[row];
      json cell;
      cell["vertex"] = v;
      cell["edge"] = {g.edges[e].first, g.edges[e].second};
      w.push_back(std::move(cell));
    }
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json run_characterise(const obslab::Graph& g) {
  const obslab::ObstructionModel model = obslab::obstruction_model(g);
  const obslab::ConstraintSystem sys = obslab::parity_constraint_system(g, model.pairs);
  json j = obslab::io::characterisation_to_json(
      obslab::verify_condition_characterisation(model, sys));

  int cliques = 0, bipartitions = 0, cycle_pairs = 0;
  for (const obslab::ConstraintKind kind : sys.provenance) {
    if (kind == obslab::ConstraintKind::kClique) ++cliques;
    if (kind == obslab::ConstraintKind::kBipartition) ++bipartitions;
    if (kind == obslab::ConstraintKind::kDisjointCycles) ++cycle_pairs;
  }
  j["constraints"] = {{"clique", cliques},
                      {"bipartition", bipartitions},
                      {"disjoint_cycles", cycle_pairs},
                      {"total", sys.row_count()}};
  return j;
}

json run_orbits(const obslab::Graph& g, int card) {
  if (g.vertex_count > 10) throw CliError(4, "automorphism search limited to 10 vertices");
  std::vector<obslab::Orbit> orbits;
  try {
    orbits = obslab::orbit_representatives(g, card);
  } catch (const std::domain_error& e) {
    throw CliError(4, e.what());
  }
  const obslab::PermGroup group = obslab::automorphism_group(g);
  const obslab::PairIndex idx = obslab::independent_pairs(g);

  json j;
  j["card"] = card;
  j["pair_count"] = idx.size();
  j["group_order"] = group.order();

  json orbit_list = json::array();
  std::uint64_t covered = 0;
  for (const obslab::Orbit& orbit : orbits) {
    json entry;
    entry["representative"] = obslab::io::crossing_set_to_json(orbit.representative, g, idx);
    entry["size"] = orbit.size;
    covered += orbit.size;
    orbit_list.push_back(std::move(entry));
  }
  j["orbit_count"] = orbits.size();
  j["subsets_covered"] = covered;
  j["orbits"] = std::move(orbit_list);

  // Burnside audit: one row per conjugacy class with its fixed-subset
  // count; the weighted total over the group divided by the order must
  // reproduce the orbit count.
  json classes = json::array();
  std::uint64_t total_fixed = 0;
  for (const std::vector<int>& cls : obslab::conjugacy_classes(group)) {
    const std::uint64_t fixed =
        obslab::fixed_ksubset_count(group.elements[cls.front()], g, idx, card);
    total_fixed += fixed * cls.size();
    json row;
    row["class_size"] = cls.size();
    row["fixed_subsets"] = fixed;
    classes.push_back(std::move(row));
  }
  j["burnside"] = {{"classes", std::move(classes)},
                   {"total_fixed", total_fixed},
                   {"orbit_count", total_fixed / group.order()}};
  return j;
}

json run_bound(int n) {
  if (n < 6) throw CliError(6, "bound requires n >= 6");
  json j;
  j["n"] = n;
  j["bound"] = obslab::max_realisable_bound(n);
  return j;
}

json run_verify_drawing(const std::string& path) {
  obslab::Drawing d;
  try {
    d = obslab::io::drawing_from_json(load_json_file(path));
  } catch (const std::invalid_argument& e) {
    throw CliError(3, "malformed drawing file " + path + ": " + e.what());
  }
  const obslab::CrossingReport report = obslab::crossing_report(d);
  json j = obslab::io::crossing_report_to_json(report, d.graph);
  const obslab::ObstructionModel model = obslab::obstruction_model(d.graph);
  j["realisable"] = obslab::is_two_realisable(model, report.realized_set);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossing-parity realisability via the deleted product over GF(2)"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  GraphArgs graph_args;
  OutputArgs output;
  int workers = 1, card = 2, max_n = 7, bound_n = 0;
  bool no_cache = false;
  std::string set_arg, drawing_file;

  const auto add_common = [&](CLI::App* cmd, bool with_graph = true) {
    if (with_graph) {
      cmd->add_option("--graph", graph_args.name, "named graph: K<n>, K<a>,<b>, C<n>, P<n>, M<k>");
      cmd->add_option("--file", graph_args.file, "graph JSON file");
    }
    cmd->add_option("--out", output.out_path, "write the report here instead of stdout");
    cmd->add_option("--format", output.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* info = app.add_subcommand("graph-info", "vertex, edge and independent-pair counts");
  add_common(info);

  CLI::App* complex = app.add_subcommand("complex", "deleted product cell counts and surface test");
  add_common(complex);

  CLI::App* scan = app.add_subcommand("surface-scan",
                                      "graphs up to max-n whose quotient is a closed surface");
  scan->add_option("--max-n", max_n, "vertex bound (at most 7)");
  add_common(scan, false);

  CLI::App* spectrum = app.add_subcommand("spectrum", "weight histogram of the realisability coset");
  spectrum->add_option("--workers", workers, "parallel sweep tasks")->check(CLI::PositiveNumber);
  spectrum->add_flag("--no-cache", no_cache, "recompute even when a cached result exists");
  add_common(spectrum);

  CLI::App* check = app.add_subcommand("check", "decide 2-realisability of a crossing set");
  check->add_option("--set", set_arg, "crossing set JSON file, or \"empty\"")->required();
  add_common(check);

  CLI::App* characterise =
      app.add_subcommand("characterise", "verify the parity-constraint characterisation");
  add_common(characterise);

  CLI::App* orbits = app.add_subcommand("orbits", "orbit representatives and Burnside audit");
  orbits->add_option("--card", card, "subset cardinality")->required();
  add_common(orbits);

  CLI::App* bound = app.add_subcommand("bound", "upper bound on realisable cardinalities");
  bound->add_option("--n", bound_n, "complete graph order (n >= 6)")->required();
  add_common(bound, false);

  CLI::App* verify = app.add_subcommand("verify-drawing", "exact crossing report for a drawing");
  verify->add_option("file", drawing_file, "drawing JSON file")->required();
  add_common(verify, false);

  try {
    app.parse(argc, argv);

    std::string bytes;
    if (app.got_subcommand(info)) {
      bytes = render(run_graph_info(graph_args.resolve()), output.format);
    } else if (app.got_subcommand(complex)) {
      bytes = render(run_complex(graph_args.resolve()), output.format);
    } else if (app.got_subcommand(scan)) {
      bytes = render(run_surface_scan(max_n), output.format);
    } else if (app.got_subcommand(spectrum)) {
      bytes = run_spectrum(graph_args.resolve(), workers, no_cache, output.format);
    } else if (app.got_subcommand(check)) {
      bytes = render(run_check(graph_args.resolve(), set_arg), output.format);
    } else if (app.got_subcommand(characterise)) {
      bytes = render(run_characterise(graph_args.resolve()), output.format);
    } else if (app.got_subcommand(orbits)) {
      bytes = render(run_orbits(graph_args.resolve(), card), output.format);
    } else if (app.got_subcommand(bound)) {
      bytes = render(run_bound(bound_n), output.format);
    } else if (app.got_subcommand(verify)) {
      bytes = render(run_verify_drawing(drawing_file), output.format);
    }
    emit(bytes, output);
    return 0;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const CliError& e) {
    std::cerr << kToolName << ": " << e.what() << "\n";
    return e.exit_code;
  } catch (const obslab::DrawingError& e) {
    std::cerr << kToolName << ": invalid drawing: " << e.what() << "\n";
    return 5;
  } catch (const std::domain_error& e) {
    std::cerr << kToolName << ": " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << kToolName << ": " << e.what() << "\n";
    return 6;
  }
}
