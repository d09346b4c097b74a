#include "akh/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "akh/checks.hpp"
#include "akh/invariants.hpp"
#include "akh/pd_format.hpp"
#include "akh/polynomial.hpp"
#include "akh/report.hpp"

namespace akh::cli {

namespace {

using nlohmann::json;

const char* mode_name(Mode m) { return m == Mode::skein ? "skein" : "khovanov"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

AnnularDiagram load_input(const RunConfig& cfg) {
  if (cfg.braid) return parse_braid_word(*cfg.braid);
  return parse_annular_pd(read_file(*cfg.pd_path), cfg.cap);
}

std::string input_text(const RunConfig& cfg) {
  return cfg.braid ? "braid \"" + *cfg.braid + "\"" : "pd " + *cfg.pd_path;
}

SkeinOptions options_of(const RunConfig& cfg) {
  SkeinOptions o;
  o.reduced = cfg.reduced;
  o.meridians = cfg.meridians;
  o.mirror = cfg.mirror;
  o.shifted = !cfg.unshifted;
  o.mode = cfg.mode;
  o.cap = cfg.cap;
  return o;
}

std::string shift_text(const Shift& s) {
  return "[" + std::to_string(s.i) + "]{(" + std::to_string(s.j) + "," + std::to_string(s.k) + ")}";
}

std::string header(const RunConfig& cfg, const AnnularDiagram& d, const Shift& shift) {
  std::ostringstream s;
  s << input_text(cfg) << ": " << d.crossing_count() << (d.crossing_count() == 1 ? " crossing" : " crossings")
    << ", n+ = " << d.n_plus() << ", n- = " << d.n_minus()
    << ", " << (cfg.reduced ? "reduced" : "unreduced");
  if (cfg.meridians) s << ", meridians";
  if (cfg.mirror) s << ", mirrored";
  s << ", shift " << (cfg.unshifted ? std::string("none") : shift_text(shift)) << "\n";
  return s.str();
}

void print_checks(std::ostream& out, const std::vector<Check>& checks, const std::string& prefix = "") {
  for (const Check& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << prefix << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
}

json checks_json(const std::vector<Check>& checks) {
  json a = json::array();
  for (const Check& c : checks) a.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return a;
}

json ranks_json(const f2::RankTable& t) {
  json a = json::array();
  for (const auto& [k, r] : t)
    if (r) a.push_back({{"i", k[0]}, {"j", k[1]}, {"k", k[2]}, {"rank", r}});
  return a;
}

f2::RankTable from_bigraded(const Bigraded& b) {
  f2::RankTable t;
  for (const auto& [k, r] : b)
    if (r) t[{k.first, k.second, 0}] = r;
  return t;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out) {
  const AnnularDiagram d = load_input(cfg);
  const SkeinOptions o = options_of(cfg);
  const SkeinComplex c = build(d, o);
  RankDocument doc;
  doc.mode = mode_name(cfg.mode);
  doc.shifts = c.applied_shift();
  std::string body;
  if (cfg.mode == Mode::skein) {
    doc.ranks = skein_homology(d, o).ranks;
    const Laurent sum = euler_statesum(d, o).at_t_minus_one();
    const Laurent hom = euler_from_homology(doc.ranks);
    doc.checks.push_back({"euler coherence", sum == hom, hom.to_string()});
    body = render_grid(doc.ranks);
  } else {
    const KhovanovResult kr = khovanov_homology(d, o);
    doc.ranks = from_bigraded(kr.ranks);
    doc.checks.push_back({"E2 = E-infinity = Khovanov", kr.consistent(), ""});
    body = render_bigraded(kr.ranks);
  }
  if (cfg.format == "json") {
    out << render_json(doc) << "\n";
  } else {
    out << header(cfg, prepared_diagram(d, o), c.final_shift()) << body;
    out << "total rank " << f2::total_rank(doc.ranks) << "\n";
    print_checks(out, doc.checks);
  }
  return all_pass(doc.checks) ? ok : check_failed;
}

int cmd_pages(const RunConfig& cfg, std::ostream& out) {
  const AnnularDiagram d = load_input(cfg);
  SkeinOptions o = options_of(cfg);
  o.mode = Mode::khovanov;
  const KhovanovResult kr = khovanov_homology(d, o);
  const f2::SpectralSequence ss = f2::spectral_pages(build(d, o).complex(), cfg.r_max, f2::Axis::f, 2);
  std::vector<Check> checks = {{"collapse at E2", kr.collapse, "degenerates at r = " + std::to_string(ss.degeneration)},
                               {"E2 = Khovanov homology", kr.e2 == kr.ranks, ""}};
  if (cfg.format == "json") {
    json pages = json::array();
    for (const auto& p : ss.pages)
      pages.push_back({{"r", p.r}, {"total", f2::total_rank(p.ranks)}, {"ranks", ranks_json(p.ranks)}});
    json doc = {{"mode", "pages"},
                {"pages", pages},
                {"infinity", ranks_json(ss.infinity)},
                {"degeneration", ss.degeneration},
                {"khovanov", ranks_json(from_bigraded(kr.ranks))},
                {"checks", checks_json(checks)}};
    out << doc.dump(2) << "\n";
  } else {
    out << header(cfg, prepared_diagram(d, o), build(d, o).final_shift());
    for (const auto& p : ss.pages) {
      out << "E" << p.r << ": total rank " << f2::total_rank(p.ranks) << "\n";
      if (p.r >= 1) out << render_grid(p.ranks);
    }
    out << "E-infinity: total rank " << f2::total_rank(ss.infinity) << "\n";
    out << "Khovanov homology:\n" << render_bigraded(kr.ranks);
    print_checks(out, checks);
  }
  return all_pass(checks) ? ok : check_failed;
}

int cmd_psi(const RunConfig& cfg, std::ostream& out) {
  const PlamenevskayaReport rep = plamenevskaya(load_input(cfg));
  if (cfg.format == "json") {
    json doc = {{"mode", "psi"},
                {"strands", rep.strands},
                {"state", {{"resolution", rep.state.resolution}, {"minus", rep.state.minus}, {"index", rep.index}}},
                {"grading", {{"i", rep.grading.degree}, {"j", rep.grading.q}, {"k", rep.grading.f}}},
                {"checks", checks_json(rep.checks)}};
    out << doc.dump(2) << "\n";
  } else {
    out << input_text(cfg) << " with meridians: braid closure on b = " << rep.strands << " strands\n";
    out << "psi: resolution " << rep.state.resolution << ", minus labels " << rep.state.minus << ", generator "
        << rep.index << "\n";
    out << "grading (i;j,k) = (" << rep.grading.degree << ";" << rep.grading.q << "," << rep.grading.f
        << "), Psi = " << rep.grading.f << " = 1 - b\n";
    print_checks(out, rep.checks);
  }
  return all_pass(rep.checks) ? ok : check_failed;
}

int cmd_euler(const RunConfig& cfg, std::ostream& out) {
  const AnnularDiagram d = load_input(cfg);
  const SkeinOptions o = options_of(cfg);
  const Laurent v = euler_statesum(d, o);
  const Laurent chi = euler_from_homology(skein_homology(d, o).ranks);
  std::vector<Check> checks = {{"statesum at t = -1 equals homology Euler characteristic", v.at_t_minus_one() == chi,
                                chi.to_string()}};
  std::optional<Laurent> normalized;
  if (cfg.meridians) {
    normalized = v.divided_by(circle_class());
    checks.push_back({"divisible by qx + 1/qx", normalized.has_value(), ""});
  }
  if (cfg.format == "json") {
    json doc = {{"mode", "euler"}, {"statesum", v.to_string()}, {"chi", chi.to_string()}, {"checks", checks_json(checks)}};
    if (normalized) doc["normalized"] = normalized->to_string();
    out << doc.dump(2) << "\n";
  } else {
    out << "V(t,q,x) = " << v.to_string() << "\n";
    out << "chi(H)   = " << chi.to_string() << "\n";
    if (normalized) out << "V/(qx + 1/qx) = " << normalized->to_string() << "\n";
    print_checks(out, checks);
  }
  return all_pass(checks) ? ok : check_failed;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  if (!checks::is_suite(cfg.suite)) throw ParseError("unknown suite: " + cfg.suite);
  gen::Rng rng(cfg.seed.value_or(0));
  std::size_t total = 0, failed = 0;
  auto tally = [&](const std::vector<Check>& cs, const std::string& prefix) {
    print_checks(out, cs, prefix);
    total += cs.size();
    for (const Check& c : cs) failed += !c.pass;
  };
  if (cfg.random) {
    for (int n = 0; n < *cfg.random; ++n)
      tally(checks::on_random(cfg.suite, rng, cfg.max_crossings, cfg.cap), "[" + std::to_string(n) + "] ");
  } else {
    const AnnularDiagram d = load_input(cfg);
    tally(checks::on_diagram(cfg.suite, cfg.mirror ? mirror(d) : d, rng, cfg.cap), "");
  }
  out << "suite " << cfg.suite << ": " << total << " checks, " << failed << " failed\n";
  return failed ? check_failed : ok;
}

int cmd_dump(const RunConfig& cfg, std::ostream& out) {
  out << f2::dump_complex(build(load_input(cfg), options_of(cfg)).complex()) << "\n";
  return ok;
}

void add_common(CLI::App* sub, RunConfig& cfg, std::string& mode, bool randomized) {
  sub->add_option("--braid", cfg.braid, "braid word \"n: w1 w2 ...\"");
  sub->add_option("--pd", cfg.pd_path, "annular PD document (JSON)");
  sub->add_flag("--reduced", cfg.reduced, "reduced theory");
  sub->add_flag("--meridians", cfg.meridians, "add two split meridians (implies the meridian shift)");
  sub->add_flag("--mirror", cfg.mirror, "use the mirror image");
  sub->add_flag("--unshifted", cfg.unshifted, "omit the final grading shift");
  sub->add_option("--mode", mode, "skein or khovanov")->check(CLI::IsMember({"skein", "khovanov"}));
  sub->add_option("--rmax", cfg.r_max, "last spectral page to print");
  sub->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  sub->add_option("--cap", cfg.cap, "largest crossing count accepted");
  if (randomized) {
    sub->add_option("--random", cfg.random, "number of random instances");
    sub->add_option("--max-crossings", cfg.max_crossings, "crossing bound for random instances");
    sub->add_option("--seed", cfg.seed, "random seed (required with --random)");
  }
}

}  // namespace

void validate(const RunConfig& cfg) {
  const int sources = (cfg.braid ? 1 : 0) + (cfg.pd_path ? 1 : 0) + (cfg.random ? 1 : 0);
  if (sources != 1) throw ParseError("give exactly one input: --braid, --pd" +
                                     std::string(cfg.subcommand == "check" ? " or --random" : ""));
  if (cfg.random && !cfg.seed) throw ParseError("--random needs --seed");
  if (cfg.random && *cfg.random < 0) throw ParseError("--random must be nonnegative");
  if (cfg.r_max < 1) throw ParseError("--rmax must be at least 1");
  if (cfg.cap < 0 || cfg.cap > kHardCap) throw ParseError("cap must lie in 0.." + std::to_string(kHardCap));
  if (cfg.max_crossings < 0) throw ParseError("--max-crossings must be nonnegative");
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    if (cfg.subcommand == "homology") return cmd_homology(cfg, out);
    if (cfg.subcommand == "pages") return cmd_pages(cfg, out);
    if (cfg.subcommand == "psi") return cmd_psi(cfg, out);
    if (cfg.subcommand == "euler") return cmd_euler(cfg, out);
    if (cfg.subcommand == "check") return cmd_check(cfg, out);
    if (cfg.subcommand == "dump") return cmd_dump(cfg, out);
    throw ParseError("unknown command: " + cfg.subcommand);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return parse_error;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return capacity_error;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return invariant_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return invariant_error;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("AKH_CAP")) {
    try {
      std::size_t used = 0;
      cfg.cap = std::stoi(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: AKH_CAP is not an integer\n";
      return parse_error;
    }
  }
  CLI::App app{"Annular Khovanov skein homology over F2"};
  app.require_subcommand(1);
  std::string mode = "skein";
  struct Sub {
    const char* name;
    const char* help;
    bool randomized;
  };
  const Sub subs[] = {{"homology", "trigraded skein homology, or Khovanov homology with --mode khovanov", false},
                      {"pages", "pages of the annular spectral sequence", false},
                      {"psi", "the Plamenevskaya element of a braid closure", false},
                      {"euler", "graded Euler characteristic, two ways", false},
                      {"check", "run a property suite", true},
                      {"dump", "print the chain complex", false}};
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, cfg, mode, s.randomized);
    if (std::string(s.name) == "check")
      sub->add_option("suite", cfg.suite, "d2, mirror, reidemeister, euler, alternating, tensor, tduality, spanning, cone")
          ->required();
    sub->callback([&cfg, name = std::string(s.name)] { cfg.subcommand = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? ok : parse_error;
  }
  cfg.mode = mode == "khovanov" ? Mode::khovanov : Mode::skein;
  return execute(cfg, out, err);
}

}  // namespace akh::cli
