#include "census/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "census/catalog.hpp"
#include "census/count.hpp"
#include "census/detect.hpp"
#include "census/pairstats.hpp"
#include "census/reductions.hpp"

namespace census {

namespace {

using ojson = nlohmann::ordered_json;

ojson json_count(int128 v) {
  if (v >= 0 && v <= int128(std::uint64_t(1) << 62)) return std::uint64_t(v);
  return to_string(v);  // decimal string beyond safe integer range
}

ojson counts_json(const CountVector& cv) {
  ojson j = ojson::object();
  auto pats = patterns_for(cv.k);
  for (std::size_t i = 0; i < pats.size(); ++i)
    j[std::string(pattern_name(pats[i]))] = json_count(cv.counts[i]);
  return j;
}

Tournament load_tournament(const std::string& path, CliStreams io) {
  if (path == "-") return Tournament::from_text(*io.in);
  std::ifstream f(path);
  if (!f) throw SyntaxError("cannot open file: " + path);
  return Tournament::from_text(f);
}

UndirectedGraph load_graph(const std::string& path, CliStreams io) {
  if (path == "-") return UndirectedGraph::from_text(*io.in);
  std::ifstream f(path);
  if (!f) throw SyntaxError("cannot open file: " + path);
  return UndirectedGraph::from_text(f);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void enforce_census_cap(const Tournament& g) {
  if (g.size() > kMaxCensusVertices)
    throw TooLarge("census inputs are capped at n = " + std::to_string(kMaxCensusVertices));
}

int cmd_count(const Tournament& g, int k, bool oracle, bool verify, bool report,
              const std::string& input_desc, CliStreams io) {
  enforce_census_cap(g);
  if (verify) {
    CountVector engine = count_k(g, k);
    CountVector orc = oracle_count(g, k);
    ojson j;
    j["engine"] = counts_json(engine);
    j["oracle"] = counts_json(orc);
    bool match = engine == orc;
    j["match"] = match;
    *io.out << j.dump() << "\n";
    if (!match) throw InternalInconsistency("count/oracle mismatch");
    return 0;
  }
  auto t0 = std::chrono::steady_clock::now();
  double rhs_ms = 0.0;
  if (report && k >= 4) {
    build_census_system(g, k);
    rhs_ms = ms_since(t0);
  }
  auto t1 = std::chrono::steady_clock::now();
  CountVector cv = oracle ? oracle_count(g, k) : count_k(g, k);
  double solve_ms = ms_since(t1);
  *io.out << counts_json(cv).dump() << "\n";
  if (report) {
    if (cv.total() != binom(g.size(), k))
      throw InternalInconsistency("report: counts do not satisfy the C(n,k) identity");
    ojson rep;
    rep["input"] = input_desc;
    rep["n"] = g.size();
    rep["k"] = k;
    rep["counts"] = counts_json(cv);
    rep["timings_ms"] = {{"rhs", rhs_ms}, {"solve", solve_ms}};
    rep["engine_version"] = kEngineVersion;
    rep["oracle"] = oracle;
    *io.err << rep.dump() << "\n";
  }
  return 0;
}

int cmd_detect(const Tournament& g, const std::string& pattern, bool witness, bool paranoid,
               CliStreams io) {
  auto p = pattern_from_name(pattern);
  if (!p || pattern_order(*p) != 4)
    throw Error("pattern must be one of T4, X4, D, DT");
  auto w = detect_pattern(g, *p);
  if (paranoid) {
    if (w && Catalog::instance().classify(g.induced(w->vertices)) != *p)
      throw InternalInconsistency("witness does not induce the pattern");
    if (g.size() <= 64) {
      bool oracle_positive = oracle_count(g, 4)[*p] > 0;
      if (oracle_positive != w.has_value())
        throw InternalInconsistency("detection disagrees with the oracle");
    }
  }
  ojson j;
  j["pattern"] = pattern;
  j["found"] = w.has_value();
  if (w && witness) j["witness"] = w->vertices;
  *io.out << j.dump() << "\n";
  return w ? 0 : 1;
}

int cmd_stats(const Tournament& g, CliStreams io) {
  enforce_census_cap(g);
  int n = g.size();
  int128 sdp = 0, sdm = 0, spf = 0, spb = 0;
  bool identity = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int u = i, v = j;
      if (!g.edge(u, v)) std::swap(u, v);
      int dp = bits::popcount_and(g.out_row(u), g.out_row(v));
      int dm = bits::popcount_and(g.in_row(u), g.in_row(v));
      int pf = bits::popcount_and(g.out_row(u), g.in_row(v));
      int pb = bits::popcount_and(g.out_row(v), g.in_row(u));
      sdp += dp;
      sdm += dm;
      spf += pf;
      spb += pb;
      if (dp + dm + pf + pb != n - 2) identity = false;
    }
  auto c3 = count_3(g);
  ojson j;
  j["n"] = n;
  j["edges"] = (long long)n * (n - 1) / 2;
  j["sum_dplus"] = json_count(sdp);
  j["sum_dminus"] = json_count(sdm);
  j["sum_puv"] = json_count(spf);
  j["sum_pvu"] = json_count(spb);
  j["T3"] = json_count(c3[Pattern::T3]);
  j["C3"] = json_count(c3[Pattern::C3]);
  j["pair_identity_ok"] = identity;
  j["sum_identities_ok"] =
      sdp == c3[Pattern::T3] && spf == c3[Pattern::T3] && spb == 3 * c3[Pattern::C3];
  *io.out << j.dump() << "\n";
  if (!identity) throw InternalInconsistency("pair partition identity violated");
  return 0;
}

int cmd_calibrate(const std::string& emit, CliStreams io) {
  Catalog cat = Catalog::calibrate();
  const Catalog& frozen = Catalog::instance();
  bool matches = true;
  for (const auto& e : cat.entries()) {
    const auto& f = frozen.entry(e.pattern);
    if (f.code != e.code || f.aut_order != e.aut_order || f.signature != e.signature ||
        f.out_degrees != e.out_degrees)
      matches = false;
  }
  if (!emit.empty()) {
    if (emit == "-") {
      *io.out << cat.to_json();
    } else {
      std::ofstream f(emit);
      if (!f) throw Error("cannot write " + emit);
      f << cat.to_json();
    }
  }
  ojson j;
  j["classes"] = (int)cat.entries().size();
  j["calibration"] = "ok";
  j["matches_frozen"] = matches;
  if (!emit.empty()) j["written"] = emit;
  *io.out << j.dump() << "\n";
  if (!matches) throw InternalInconsistency("frozen catalog differs from recalibration");
  return 0;
}

int cmd_gen(int n, std::uint64_t seed, const std::string& format, CliStreams io) {
  Tournament g = Tournament::random(n, seed);
  if (format == "matrix")
    *io.out << g.to_matrix_text();
  else if (format == "edges")
    *io.out << g.to_edge_text();
  else
    throw Error("format must be 'matrix' or 'edges'");
  return 0;
}

int cmd_detect_cc(const std::string& pattern_file, const Tournament& g, double delta,
                  std::uint64_t seed, CliStreams io) {
  std::ifstream f(pattern_file);
  if (!f) throw SyntaxError("cannot open pattern file: " + pattern_file);
  Tournament t = Tournament::from_text(f);
  auto w = color_coding_detect(g, t, delta, seed);
  ojson j;
  j["pattern"] = std::string(pattern_name(Catalog::instance().classify(t)));
  j["found"] = w.has_value();
  if (w) j["witness"] = w->vertices;
  *io.out << j.dump() << "\n";
  return w ? 0 : 1;
}

int cmd_clique(const UndirectedGraph& g, int m, double delta, std::uint64_t seed,
               CliStreams io) {
  auto choice = find_clique_pattern(m);
  if (!choice)
    throw Error("no catalog pattern with |V(T)| - sig(T) = " + std::to_string(m) +
                " exists for patterns on at most 5 vertices");
  Tournament t = Catalog::instance().representative(choice->pattern);
  bool found = clique_detect_via_count(g, m, t, choice->signature, seed, delta);
  ojson j;
  j["m"] = m;
  j["pattern"] = std::string(pattern_name(choice->pattern));
  j["signature"] = choice->signature;
  j["found"] = found;
  *io.out << j.dump() << "\n";
  return found ? 0 : 1;
}

int cmd_bench(const std::vector<int>& sizes, std::uint64_t seed, CliStreams io) {
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] < sizes[i - 1]) throw Error("bench sizes must be sorted ascending");
  *io.out << "n,phase,millis\n";
  for (int n : sizes) {
    Tournament g = Tournament::random(n, seed);
    auto run = [&](const char* phase, auto&& fn) {
      auto t0 = std::chrono::steady_clock::now();
      fn();
      *io.out << n << "," << phase << "," << ms_since(t0) << "\n";
    };
    run("count_4", [&] { count_4(g); });
    run("count_5", [&] { count_5(g); });
    run("detect_D", [&] { detect_D(g); });
    run("detect_X4", [&] { detect_X4(g); });
  }
  return 0;
}

int cmd_verify(const std::vector<std::string>& files, CliStreams io) {
  bool all_ok = true;
  for (const auto& path : files) {
    Tournament g = load_tournament(path, io);
    ojson checks = ojson::object();
    bool ok = true;
    auto record = [&](const std::string& name, bool pass) {
      checks[name] = pass ? "ok" : "MISMATCH";
      ok = ok && pass;
    };
    int n = g.size();
    if (n <= 1024) record("count_3", count_3(g) == oracle_count(g, 3));
    if (n <= 256) record("count_4", count_4(g) == oracle_count(g, 4));
    if (n <= 64 && n >= 5) record("count_5", count_5(g) == oracle_count(g, 5));
    if (n <= 256) {
      auto oc = oracle_count(g, 4);
      for (Pattern p : patterns_for(4)) {
        auto w = detect_pattern(g, p);
        bool agree = w.has_value() == (oc[p] > 0);
        if (w && Catalog::instance().classify(g.induced(w->vertices)) != p) agree = false;
        record(std::string("detect_") + std::string(pattern_name(p)), agree);
      }
    }
    ojson j;
    j["file"] = path;
    j["n"] = n;
    j["ok"] = ok;
    j["checks"] = checks;
    *io.out << j.dump() << "\n";
    all_ok = all_ok && ok;
  }
  if (!all_ok) throw InternalInconsistency("verification found engine/oracle mismatches");
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, CliStreams io) {
  CLI::App app{"census: exact counting and detection of 4- and 5-vertex sub-tournaments"};
  app.require_subcommand(1);

  // count
  auto* count = app.add_subcommand("count", "exact census of k-vertex sub-tournaments");
  int count_k_arg = 4;
  bool count_oracle = false, count_verify = false, count_report = false;
  std::string count_file;
  count->add_option("--k", count_k_arg, "pattern order")->check(CLI::IsMember({3, 4, 5}))->required();
  count->add_flag("--oracle", count_oracle, "force brute-force enumeration");
  count->add_flag("--verify", count_verify, "run engine and oracle, diff them");
  count->add_flag("--report", count_report, "emit a full report (with timings) on stderr");
  count->add_option("file", count_file, "tournament file or '-'")->required();

  // detect
  auto* detect = app.add_subcommand("detect", "O(n^2) detection of a 4-vertex pattern");
  std::string det_pattern, det_file;
  bool det_witness = false, det_paranoid = false;
  detect->add_option("--pattern", det_pattern, "T4, X4, D or DT")->required();
  detect->add_flag("--witness", det_witness, "include the witness vertices in the output");
  detect->add_flag("--paranoid", det_paranoid, "cross-check against the brute-force oracle");
  detect->add_option("file", det_file, "tournament file or '-'")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "aggregate pair statistics and 3-vertex counts");
  std::string stats_file;
  stats->add_option("file", stats_file, "tournament file or '-'")->required();

  // calibrate
  auto* calibrate = app.add_subcommand("calibrate", "recompute the catalog and verify the frozen table");
  std::string cal_emit;
  calibrate->add_option("--emit", cal_emit, "write the name->code table as JSON ('-' for stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded random tournament");
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_format = "matrix";
  gen->add_option("--n", gen_n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed, "PRNG seed")->required();
  gen->add_option("--format", gen_format, "matrix (default) or edges");

  // detect-cc
  auto* cc = app.add_subcommand("detect-cc", "randomized color-coding detection of a pattern file");
  std::string cc_pattern_file, cc_file;
  double cc_delta = 1e-3;
  std::uint64_t cc_seed = 0;
  cc->add_option("--pattern-file", cc_pattern_file, "pattern tournament (3-5 vertices)")->required();
  cc->add_option("--delta", cc_delta, "failure probability bound (default 1e-3)");
  cc->add_option("--seed", cc_seed, "PRNG seed")->required();
  cc->add_option("file", cc_file, "tournament file or '-'")->required();

  // clique
  auto* clique = app.add_subcommand("clique", "K_m detection in an undirected graph via tournament counting");
  int clique_m = 3;
  double clique_delta = 1e-3;
  std::uint64_t clique_seed = 0;
  std::string clique_file;
  clique->add_option("--m", clique_m, "clique size")->required();
  clique->add_option("--delta", clique_delta, "failure probability bound (default 1e-3)");
  clique->add_option("--seed", clique_seed, "PRNG seed")->required();
  clique->add_option("file", clique_file, "undirected graph file or '-'")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "time the counting and detection phases, CSV output");
  std::string bench_sizes = "256,512,1024";
  std::uint64_t bench_seed = 1;
  bench->add_option("--sizes", bench_sizes, "comma-separated ascending sizes (default 256,512,1024)");
  bench->add_option("--seed", bench_seed, "PRNG seed (default 1)");

  // verify
  auto* verify = app.add_subcommand("verify", "diff engine counts and detections against the oracle");
  std::vector<std::string> verify_files;
  verify->add_option("files", verify_files, "tournament files")->required();

  // threads
  int threads = 0;
  app.add_option("--threads", threads, "worker threads for the heavy loops (0 = library default)");

  try {
    // CLI11's vector overload takes the arguments reversed, without argv[0].
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, *io.out, *io.err);
    return code == 0 ? 0 : 2;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (count->parsed())
      return cmd_count(load_tournament(count_file, io), count_k_arg, count_oracle, count_verify,
                       count_report, count_file, io);
    if (detect->parsed())
      return cmd_detect(load_tournament(det_file, io), det_pattern, det_witness, det_paranoid, io);
    if (stats->parsed()) return cmd_stats(load_tournament(stats_file, io), io);
    if (calibrate->parsed()) return cmd_calibrate(cal_emit, io);
    if (gen->parsed()) return cmd_gen(gen_n, gen_seed, gen_format, io);
    if (cc->parsed())
      return cmd_detect_cc(cc_pattern_file, load_tournament(cc_file, io), cc_delta, cc_seed, io);
    if (clique->parsed()) return cmd_clique(load_graph(clique_file, io), clique_m, clique_delta, clique_seed, io);
    if (bench->parsed()) {
      std::vector<int> sizes;
      std::stringstream ss(bench_sizes);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) sizes.push_back(std::stoi(tok));
      return cmd_bench(sizes, bench_seed, io);
    }
    if (verify->parsed()) return cmd_verify(verify_files, io);
    throw Error("no subcommand given");
  } catch (const InternalInconsistency& e) {
    *io.err << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    *io.err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    *io.err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace census
