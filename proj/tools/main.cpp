#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lagrangian/biflats.hpp"
#include "lagrangian/collapse.hpp"
#include "lagrangian/homology.hpp"
#include "lagrangian/matroid.hpp"
#include "lagrangian/shelling.hpp"
#include "lagrangian/simplicial_complex.hpp"

namespace {

using namespace lagrangian;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write '" + path + "'");
  out << text;
}

simplicial_complex build_kind(const matroid& m, const std::string& kind) {
  if (kind == "biflats") return biflats_complex(m);
  if (kind == "conormal") return conormal_complex(m);
  if (kind == "unmixed") return unmixed_complex(m);
  if (kind == "bergman") return bergman_complex(m);
  if (kind == "bergman-dual") return bergman_complex(m.dual());
  if (kind == "join") return unmixed_join_isomorphism(m).join_complex;
  throw error("unknown complex kind '" + kind + "'");
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("LAGRANGIAN_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw error("LAGRANGIAN_BUDGET must be a positive integer");
  }
  return 200000;
}

int cmd_info(const std::string& input) {
  matroid m = parse_matroid_or_graph(read_file(input));
  matroid md = m.dual();
  std::cout << "ground-set size: " << m.ground_size() << "\n";
  std::cout << "rank: " << m.rank() << "   dual rank: " << md.rank() << "\n";
  std::cout << "flats: " << m.flats().size() << "   dual flats: " << md.flats().size()
            << "\n";
  std::cout << "flats by rank:\n";
  for (int r = 0; r <= m.rank(); ++r) {
    std::cout << "  " << r << ":";
    for (eset f : m.flats())
      if (m.rank(f) == r) std::cout << " {" << f.label() << "}";
    std::cout << "\n";
  }
  auto bf = enumerate_biflats(m);
  std::size_t mixed = 0;
  for (const biflat& b : bf)
    if (is_mixed(b, m.ground())) ++mixed;
  std::cout << "biflats: " << bf.size() << " (" << mixed << " mixed, "
            << bf.size() - mixed << " unmixed)\n";
  std::cout << "uniform: " << (is_uniform(m) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_dual(const std::string& input, const std::string& output) {
  matroid m = parse_matroid_or_graph(read_file(input));
  write_output(output, to_matroid_file(m.dual()));
  return 0;
}

int cmd_biflats(const std::string& input, bool hasse) {
  matroid m = parse_matroid_or_graph(read_file(input));
  if (hasse) {
    biflat_poset bp(m, false);
    for (auto [lo, hi] : bp.cover_pairs())
      std::cout << biflat_label(bp.elements()[lo]) << " < "
                << biflat_label(bp.elements()[hi]) << "\n";
    return 0;
  }
  for (const biflat& b : enumerate_biflats(m)) std::cout << biflat_label(b) << "\n";
  return 0;
}

int cmd_complex(const std::string& input, const std::string& kind,
                const std::string& output) {
  matroid m = parse_matroid_or_graph(read_file(input));
  write_output(output, export_complex(build_kind(m, kind)));
  return 0;
}

int cmd_collapse(const std::string& input, int theorem, bool verify,
                 const std::string& output) {
  matroid m = parse_matroid_or_graph(read_file(input));

  // Pairs are streamed to '<output>.partial' while the synthesis runs, so an
  // aborted run leaves a replayable prefix; the final file carries the header.
  std::ofstream partial;
  if (!output.empty()) {
    partial.open(output + ".partial", std::ios::binary);
    if (!partial) throw error("cannot write '" + output + ".partial'");
  }
  pair_sink sink;
  if (partial.is_open())
    sink = [&partial](const collapse_pair& p) {
      std::string tau, sigma;
      for (const auto& l : p.tau) tau += (tau.empty() ? "" : " + ") + l;
      for (const auto& l : p.sigma) sigma += (sigma.empty() ? "" : " + ") + l;
      partial << tau << " -> " << sigma << "\n" << std::flush;
    };

  collapse_sequence seq =
      theorem == 1 ? theorem1_sequence(m, sink) : theorem2_sequence(m, sink);
  std::string text = to_sequence_file(seq);
  if (partial.is_open()) {
    partial.close();
    std::remove((output + ".partial").c_str());
  }
  write_output(output, text);

  if (verify) {
    collapse_sequence replay = parse_sequence_file(text);
    simplicial_complex start = biflats_complex(m);
    simplicial_complex end = apply_sequence(start, replay);
    simplicial_complex target = theorem == 1 ? unmixed_complex(m) : conormal_complex(m);
    if (!(end == target)) {
      std::cerr << "verification failed: end state is not the " << replay.target
                << " complex\n";
      return 1;
    }
    std::cerr << "verified: " << replay.pairs.size() << " collapses, end state equals the "
              << replay.target << " complex\n";
  }
  return 0;
}

int cmd_homology(const std::string& input, const std::string& kind) {
  matroid m = parse_matroid_or_graph(read_file(input));
  simplicial_complex c = build_kind(m, kind);
  auto betti = betti_gf2(c);
  for (std::size_t i = 0; i < betti.size(); ++i)
    std::cout << "b~" << i << " = " << betti[i] << "\n";
  std::cout << "chi~ = " << reduced_euler(c) << "\n";
  return 0;
}

int cmd_check(const std::string& input, const std::string& kind, std::uint64_t budget) {
  matroid m = parse_matroid_or_graph(read_file(input));
  shelling_certificate cert = is_shellable(build_kind(m, kind), budget);
  if (cert.status == shelling_status::unknown)
    std::cout << "UNKNOWN(" << cert.budget << ")\n";
  else
    std::cout << to_string(cert.status) << "\n";
  return 0;
}

int cmd_report(const std::string& input, std::uint64_t budget) {
  matroid m = parse_matroid_or_graph(read_file(input));
  std::printf("%-10s %-8s %-5s %-5s %-18s %s\n", "complex", "max-card", "pure", "flag",
              "shellable", "betti");
  for (const std::string kind : {"biflats", "conormal", "unmixed"}) {
    simplicial_complex c = build_kind(m, kind);
    shelling_certificate cert = is_shellable(c, budget);
    std::string shell = cert.status == shelling_status::unknown
                            ? "UNKNOWN(" + std::to_string(cert.budget) + ")"
                            : to_string(cert.status);
    std::string betti;
    for (std::size_t b : betti_gf2(c)) betti += (betti.empty() ? "" : ",") + std::to_string(b);
    std::printf("%-10s %-8d %-5s %-5s %-18s %s\n", kind.c_str(),
                c.max_facet_cardinality(), c.is_pure() ? "yes" : "no",
                c.is_flag() ? "yes" : "no", shell.c_str(), betti.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"biflats, conormal and unmixed complexes of a matroid, with "
               "certified elementary-collapse sequences"};
  app.require_subcommand(1);

  std::string input, output, kind = "biflats";
  int theorem = 1;
  bool verify = false, hasse = false, shellable = false, deterministic = false;
  std::uint64_t budget = 0;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "matroid or graph file")->required();
  };

  auto* info = app.add_subcommand("info", "summarize a matroid");
  add_input(info);

  auto* dual = app.add_subcommand("dual", "write the dual matroid");
  add_input(dual);
  dual->add_option("-o,--output", output, "output file (default stdout)");

  auto* biflats_cmd = app.add_subcommand("biflats", "list the biflats");
  add_input(biflats_cmd);
  biflats_cmd->add_flag("--hasse", hasse, "print cover relations instead");

  auto* complex_cmd = app.add_subcommand("complex", "export a complex");
  add_input(complex_cmd);
  complex_cmd->add_option("--kind", kind,
                          "biflats|conormal|unmixed|bergman|bergman-dual|join");
  complex_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* collapse_cmd = app.add_subcommand("collapse", "synthesize a collapse sequence");
  add_input(collapse_cmd);
  collapse_cmd->add_option("--theorem", theorem, "1: onto unmixed, 2: onto conormal")
      ->check(CLI::Range(1, 2));
  collapse_cmd->add_flag("--verify", verify, "replay the sequence and check the end state");
  collapse_cmd->add_option("-o,--output", output, "output file (default stdout)");

  auto* homology_cmd = app.add_subcommand("homology", "reduced GF(2) Betti numbers");
  add_input(homology_cmd);
  homology_cmd->add_option("--kind", kind,
                           "biflats|conormal|unmixed|bergman|bergman-dual|join");

  auto* check_cmd = app.add_subcommand("check", "decision procedures");
  add_input(check_cmd);
  check_cmd->add_flag("--shellable", shellable, "test non-pure shellability");
  check_cmd->add_option("--kind", kind,
                        "biflats|conormal|unmixed|bergman|bergman-dual|join");
  check_cmd->add_option("--budget", budget, "search-node budget")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--deterministic", deterministic,
                      "single-threaded lexicographic tie-breaking (always on)");

  auto* report_cmd = app.add_subcommand("report", "property table for the three complexes");
  add_input(report_cmd);
  report_cmd->add_option("--budget", budget, "search-node budget")->check(CLI::PositiveNumber);
  report_cmd->add_flag("--deterministic", deterministic,
                       "single-threaded lexicographic tie-breaking (always on)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (budget == 0) budget = default_budget();
    if (*info) return cmd_info(input);
    if (*dual) return cmd_dual(input, output);
    if (*biflats_cmd) return cmd_biflats(input, hasse);
    if (*complex_cmd) return cmd_complex(input, kind, output);
    if (*collapse_cmd) return cmd_collapse(input, theorem, verify, output);
    if (*homology_cmd) return cmd_homology(input, kind);
    if (*check_cmd) {
      if (!shellable) throw lagrangian::error("check requires --shellable");
      return cmd_check(input, kind, budget);
    }
    if (*report_cmd) return cmd_report(input, budget);
  } catch (const lagrangian::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
