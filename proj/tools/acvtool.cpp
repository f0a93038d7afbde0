// Command-line front end: parses polynomial input, dispatches to the
// library, and reports results as text or a stable JSON schema.
#include <CLI11.hpp>
#include <json.hpp>

#include <acv/apps.hpp>
#include <acv/hilbert.hpp>
#include <acv/parser.hpp>

#include <chrono>
#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace acv;
using json = nlohmann::ordered_json;

namespace {

constexpr const char *SCHEMA = "acvtool/1";

// all numeric payloads are decimal strings: coefficients are arbitrary
// precision and mixing representations would churn the schema
std::string str_of(const Rat &x) {
  std::ostringstream os;
  os << x;
  return os.str();
}
std::string str_of(const Int &x) { return x.get_str(); }
template <class T, std::enable_if_t<std::is_integral_v<T>, int> = 0>
std::string str_of(T x) { return std::to_string(x); }

Ring c_ring(std::size_t p) {
  Ring r;
  if (p == 1) {
    r.names = {"c"};
  } else {
    for (std::size_t i = 1; i <= p; ++i) r.names.push_back("c" + std::to_string(i));
  }
  return r;
}

json poly_json(const Poly<Rat> &f, const Ring &ring) {
  json terms = json::array();
  for (const auto &t : f.terms) {
    json e = json::array();
    for (auto x : t.m.e) e.push_back(str_of(static_cast<std::uint64_t>(x)));
    terms.push_back(json{{"coeff", str_of(t.c)}, {"exponents", e}});
  }
  return json{{"string", render(f, ring)}, {"terms", terms}};
}

json randomness_json(const Randomness &rnd) {
  json A = json::array(), r = json::array(), a = json::array();
  for (const auto &row : rnd.A) {
    json jr = json::array();
    for (long v : row) jr.push_back(str_of(v));
    A.push_back(jr);
  }
  for (const auto &row : rnd.r) {
    json jr = json::array();
    for (long v : row) jr.push_back(str_of(v));
    r.push_back(jr);
  }
  for (long v : rnd.a) a.push_back(str_of(v));
  return json{{"seed", str_of(rnd.seed)},
              {"bound", str_of(rnd.bound)},
              {"A", A},
              {"r", r},
              {"a", a}};
}

json interval_json(const Rat &lo, const Rat &hi) {
  return json{{"lo", str_of(lo)}, {"hi", str_of(hi)}};
}

struct Job {
  std::string expr;
  std::string file;
  std::vector<std::string> vars;
  std::uint64_t seed = 0;
  bool as_json = false;
  long timeout = 172800; // two-day ceiling
};

std::vector<Poly<Rat>> read_polys(const Job &job, Ring &ring) {
  if (job.vars.empty()) throw DomainError("--vars is required");
  ring.names = job.vars;
  std::vector<std::string> lines;
  if (!job.file.empty()) {
    std::ifstream in(job.file);
    if (!in) throw DomainError("cannot open " + job.file);
    std::string line;
    while (std::getline(in, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        lines.push_back(line);
  } else {
    lines.push_back(job.expr);
  }
  if (lines.empty()) throw DomainError("no input polynomials");
  std::vector<Poly<Rat>> out;
  for (const auto &line : lines) out.push_back(parse_polynomial(line, ring));
  return out;
}

void arm_timeout(long seconds) {
  if (seconds <= 0) return;
  std::signal(SIGALRM, [](int) {
    const char msg[] = "acvtool: timeout\n";
    ssize_t n = write(2, msg, sizeof msg - 1);
    (void)n;
    _exit(2);
  });
  alarm(static_cast<unsigned>(seconds));
}

long long wall_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(const json &report, bool as_json, const std::string &text) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << text;
}

// ---------------------------------------------------------------- acv ----

int cmd_acv(const Job &job, const std::string &algo, const std::string &sat,
            const std::string &mode, std::size_t primes, std::size_t budget) {
  auto t0 = std::chrono::steady_clock::now();
  Ring ring;
  std::vector<Poly<Rat>> polys = read_polys(job, ring);
  DominantMap f = DominantMap::of(polys);

  Variant variant = algo == "acv1" ? Variant::acv1
                    : algo == "kos" ? Variant::kos
                                    : Variant::acv2;
  AcvOptions opts;
  opts.gb.max_pairs = budget;
  if (sat == "rabinowitsch") opts.saturation = SatStrategy::rabinowitsch;
  if (sat == "bayer") opts.saturation = SatStrategy::bayer;

  Randomness rnd = draw_randomness(f.n, f.p, job.seed);
  AcvResult<Rat> res;
  if (mode == "rational") {
    QField q;
    res = acv_run(q, f, variant, rnd, opts);
  } else {
    ModularOptions mo;
    mo.primes = primes;
    mo.acv = opts;
    res = acv_run_modular(f, variant, rnd, mo);
  }

  Ring cr = c_ring(f.p);
  json gens = json::array();
  for (const auto &g : res.generators) gens.push_back(poly_json(g, cr));
  json pr = json::array();
  for (auto p : res.primes) pr.push_back(str_of(static_cast<std::uint64_t>(p)));

  json report{{"schema", SCHEMA},  {"command", "acv"},
              {"variant", variant_name(variant)},
              {"mode", mode},      {"randomness", randomness_json(res.randomness)},
              {"primes", pr},      {"generators", gens}};
  if (f.p == 1) {
    json roots = json::array();
    for (const auto &iv :
         isolate_real_roots(squarefree_part(to_unipoly(res.generators[0]))))
      roots.push_back(interval_json(iv.lo, iv.hi));
    report["roots"] = roots;
  }
  report["wall_ms"] = str_of(static_cast<std::uint64_t>(wall_ms(t0)));

  std::ostringstream text;
  text << "variant: " << variant_name(variant) << "\n";
  for (const auto &g : res.generators) text << render(g, cr) << "\n";
  emit(report, job.as_json, text.str());
  return 0;
}

// ---------------------------------------------------------------- gcv ----

const char *tag_name(RootTag t) {
  return t == RootTag::critical ? "critical"
         : t == RootTag::asymptotic ? "asymptotic"
                                    : "both";
}

json roots_json(const std::vector<AlgebraicNumber> &roots,
                const std::vector<RootTag> *tags) {
  json out = json::array();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    json r = interval_json(roots[i].interval.lo, roots[i].interval.hi);
    if (tags) r["tag"] = tag_name((*tags)[i]);
    out.push_back(r);
  }
  return out;
}

int cmd_gcv(const Job &job) {
  auto t0 = std::chrono::steady_clock::now();
  Ring ring;
  std::vector<Poly<Rat>> polys = read_polys(job, ring);
  if (polys.size() != 1) throw DomainError("gcv expects a single polynomial");
  AppOptions opts;
  opts.seed = job.seed;
  GcvReport rep = gcv(polys[0], opts);

  Ring cr = c_ring(1);
  json report{{"schema", SCHEMA},
              {"command", "gcv"},
              {"randomness", randomness_json(draw_randomness(ring.names.size(), 1, job.seed))},
              {"primes", json::array()},
              {"k0", poly_json(from_unipoly(rep.k0_poly), cr)},
              {"kinf", poly_json(from_unipoly(rep.kinf_poly), cr)},
              {"roots", roots_json(rep.union_roots, &rep.tags)}};
  report["wall_ms"] = str_of(static_cast<std::uint64_t>(wall_ms(t0)));

  std::ostringstream text;
  text << "k0:   " << render(from_unipoly(rep.k0_poly), cr) << "\n";
  text << "kinf: " << render(from_unipoly(rep.kinf_poly), cr) << "\n";
  for (std::size_t i = 0; i < rep.union_roots.size(); ++i)
    text << "root in [" << rep.union_roots[i].interval.lo << ", "
         << rep.union_roots[i].interval.hi << "] (" << tag_name(rep.tags[i])
         << ")\n";
  emit(report, job.as_json, text.str());
  return 0;
}

// ------------------------------------------------------------ infimum ----

int cmd_infimum(const Job &job) {
  auto t0 = std::chrono::steady_clock::now();
  Ring ring;
  std::vector<Poly<Rat>> polys = read_polys(job, ring);
  if (polys.size() != 1) throw DomainError("infimum expects a single polynomial");
  AppOptions opts;
  opts.seed = job.seed;
  InfimumVerdict v = infimum(polys[0], opts);

  const char *kind = v.kind == InfimumKind::MinimumAttained ? "MinimumAttained"
                     : v.kind == InfimumKind::InfimumAtInfinity
                         ? "InfimumAtInfinity"
                         : "UnboundedBelow";
  json tp = json::array(), fe = json::array();
  for (const auto &r : v.test_points) tp.push_back(str_of(r));
  for (bool b : v.fiber_nonempty) fe.push_back(b);
  json report{{"schema", SCHEMA},
              {"command", "infimum"},
              {"randomness", randomness_json(draw_randomness(ring.names.size(), 1, job.seed))},
              {"primes", json::array()},
              {"kind", kind},
              {"test_points", tp},
              {"fiber_nonempty", fe}};
  if (v.value) {
    report["value"] = interval_json(v.value->interval.lo, v.value->interval.hi);
    report["value_poly"] = poly_json(from_unipoly(v.value->minimalish), c_ring(1));
  }
  report["wall_ms"] = str_of(static_cast<std::uint64_t>(wall_ms(t0)));

  std::ostringstream text;
  text << kind << "\n";
  if (v.value)
    text << "value in [" << v.value->interval.lo << ", " << v.value->interval.hi
         << "]\n";
  emit(report, job.as_json, text.str());
  return 0;
}

// ------------------------------------------------------------- sample ----

int cmd_sample(const Job &job) {
  auto t0 = std::chrono::steady_clock::now();
  Ring ring;
  std::vector<Poly<Rat>> polys = read_polys(job, ring);
  if (polys.size() != 1) throw DomainError("sample expects a single polynomial");
  AppOptions opts;
  opts.seed = job.seed;
  SampleReport rep = sample_positive(polys[0], opts);

  json pts = json::array();
  for (const auto &box : rep.points) {
    json b = json::array();
    for (const auto &iv : box) b.push_back(interval_json(iv.lo, iv.hi));
    pts.push_back(b);
  }
  json report{{"schema", SCHEMA},
              {"command", "sample"},
              {"randomness", randomness_json(draw_randomness(ring.names.size(), 1, job.seed))},
              {"primes", json::array()},
              {"empty", rep.empty},
              {"level", str_of(rep.e)},
              {"points", pts}};
  report["wall_ms"] = str_of(static_cast<std::uint64_t>(wall_ms(t0)));

  std::ostringstream text;
  text << (rep.empty ? "empty" : "nonempty") << " (level " << rep.e << ")\n";
  for (const auto &box : rep.points) {
    text << "point:";
    for (const auto &iv : box) text << " [" << iv.lo << ", " << iv.hi << "]";
    text << "\n";
  }
  emit(report, job.as_json, text.str());
  return 0;
}

// -------------------------------------------------------------- bench ----

struct BenchInput {
  std::string tag;
  DominantMap map;
};

BenchInput bench_input(const std::string &tag, std::uint64_t seed) {
  if (tag.size() >= 2 && (tag[0] == 'f' || tag[0] == 'g' || tag[0] == 'm') &&
      std::isdigit(static_cast<unsigned char>(tag[1]))) {
    std::size_t n = std::stoul(tag.substr(1));
    return {tag, make_family(tag.substr(0, 1), n)};
  }
  if (tag.size() >= 4 && tag[0] == 'd') {
    std::size_t npos = tag.find('n');
    if (npos != std::string::npos) {
      std::uint32_t d = static_cast<std::uint32_t>(std::stoul(tag.substr(1, npos - 1)));
      std::size_t n = std::stoul(tag.substr(npos + 1));
      return {tag, make_family("dense", n, d, seed)};
    }
  }
  throw DomainError("unknown benchmark tag: " + tag +
                    " (expected f<n>, g<n>, m<n> or d<d>n<n>)");
}

// one row in a forked child so a per-row deadline can kill it cleanly
json bench_row(const BenchInput &in, const std::string &algo,
               std::uint64_t seed, long row_timeout) {
  json row{{"tag", in.tag},
           {"n", str_of(in.map.n)},
           {"d", str_of(static_cast<std::uint64_t>(in.map.d))},
           {"bound", str_of(degree_bound(in.map.n, in.map.p, in.map.d))}};

  int fds[2];
  if (pipe(fds) != 0) throw std::runtime_error("pipe failed");
  pid_t pid = fork();
  if (pid == 0) {
    close(fds[0]);
    arm_timeout(row_timeout);
    auto t0 = std::chrono::steady_clock::now();
    Variant variant = algo == "acv1" ? Variant::acv1
                      : algo == "kos" ? Variant::kos
                                      : Variant::acv2;
    QField q;
    Randomness rnd = draw_randomness(in.map.n, in.map.p, seed);
    AcvSystem<Rat> sys = build_system(q, in.map, 1, rnd, variant);
    Int gdeg = ideal_degree(q, sys.G);
    AcvResult<Rat> res = acv_run_modular(in.map, variant, rnd);
    std::uint32_t odeg = 0;
    for (const auto &g : res.generators)
      for (const auto &t : g.terms) odeg = std::max(odeg, t.m.degree());
    json out{{"g_degree", gdeg.get_str()},
             {"output_degree", str_of(static_cast<std::uint64_t>(odeg))},
             {"time_ms", str_of(static_cast<std::uint64_t>(wall_ms(t0)))}};
    std::string s = out.dump();
    ssize_t n = write(fds[1], s.data(), s.size());
    (void)n;
    close(fds[1]);
    _exit(0);
  }
  close(fds[1]);
  std::string buf;
  char chunk[4096];
  ssize_t n;
  while ((n = read(fds[0], chunk, sizeof chunk)) > 0) buf.append(chunk, n);
  close(fds[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  if (WIFEXITED(status) && WEXITSTATUS(status) == 0 && !buf.empty()) {
    json out = json::parse(buf);
    row.update(out);
  } else {
    row["g_degree"] = "timeout";
    row["output_degree"] = "timeout";
    row["time_ms"] = "timeout";
  }
  return row;
}

int cmd_bench(const std::vector<std::string> &tags, const std::string &algo,
              std::uint64_t seed, long row_timeout, bool as_json) {
  json rows = json::array();
  std::ostringstream text;
  text << "tag\ttime_ms\tout_deg\tG_deg\tbound\n";
  for (const auto &tag : tags) {
    BenchInput in = bench_input(tag, seed);
    json row = bench_row(in, algo, seed, row_timeout);
    text << tag << "\t" << row["time_ms"].get<std::string>() << "\t"
         << row["output_degree"].get<std::string>() << "\t"
         << row["g_degree"].get<std::string>() << "\t"
         << row["bound"].get<std::string>() << "\n";
    rows.push_back(std::move(row));
  }
  json report{{"schema", SCHEMA}, {"command", "bench"}, {"seed", str_of(seed)},
              {"algo", algo},     {"rows", rows}};
  emit(report, as_json, text.str());
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"asymptotic critical values and exact polynomial optimization"};
  app.require_subcommand(1);

  Job job;
  std::string algo = "acv2", sat = "auto", mode = "modular";
  std::size_t primes = 2, budget = 1000000;
  std::vector<std::string> bench_tags;
  std::size_t db_n = 0, db_p = 1;
  std::uint32_t db_d = 1;

  auto add_common = [&](CLI::App *cmd, bool with_expr) {
    if (with_expr) {
      cmd->add_option("expr", job.expr, "polynomial expression");
      cmd->add_option("--file", job.file, "file with one polynomial per line");
      cmd->add_option("--vars", job.vars, "variable names in order")->delimiter(',');
    }
    cmd->add_option("--seed", job.seed, "randomness seed");
    cmd->add_flag("--json", job.as_json, "machine-readable output");
    cmd->add_option("--timeout", job.timeout, "wall-clock limit in seconds");
  };

  CLI::App *acv = app.add_subcommand("acv", "asymptotic critical values");
  add_common(acv, true);
  acv->add_option("--algo", algo)->check(CLI::IsMember({"acv1", "acv2", "kos"}));
  acv->add_option("--sat", sat)->check(CLI::IsMember({"auto", "rabinowitsch", "bayer"}));
  acv->add_option("--mode", mode)->check(CLI::IsMember({"modular", "rational"}));
  acv->add_option("--primes", primes, "primes combined before reconstruction");
  acv->add_option("--budget-pairs", budget, "critical-pair budget");

  CLI::App *gcvc = app.add_subcommand("gcv", "generalized critical values");
  add_common(gcvc, true);
  CLI::App *inf = app.add_subcommand("infimum", "global infimum classification");
  add_common(inf, true);
  CLI::App *smp = app.add_subcommand("sample", "sample points of {f > 0}");
  add_common(smp, true);

  CLI::App *bench = app.add_subcommand("bench", "benchmark family rows");
  bench->add_option("tags", bench_tags, "rows: f<n>, g<n>, m<n>, d<d>n<n>")
      ->required();
  bench->add_option("--algo", algo)->check(CLI::IsMember({"acv1", "acv2", "kos"}));
  add_common(bench, false);

  CLI::App *db = app.add_subcommand("degree-bound", "output degree bound");
  db->add_option("-n", db_n, "variables")->required();
  db->add_option("-p", db_p, "components");
  db->add_option("-d", db_d, "max degree")->required();
  db->add_flag("--json", job.as_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!bench->parsed()) arm_timeout(job.timeout);
    if (acv->parsed()) return cmd_acv(job, algo, sat, mode, primes, budget);
    if (gcvc->parsed()) return cmd_gcv(job);
    if (inf->parsed()) return cmd_infimum(job);
    if (smp->parsed()) return cmd_sample(job);
    if (bench->parsed())
      return cmd_bench(bench_tags, algo, job.seed, job.timeout, job.as_json);
    if (db->parsed()) {
      Int b = degree_bound(db_n, db_p, db_d);
      if (job.as_json)
        std::cout << json{{"schema", SCHEMA},
                          {"command", "degree-bound"},
                          {"bound", b.get_str()}}
                         .dump(2)
                  << "\n";
      else
        std::cout << b.get_str() << "\n";
      return 0;
    }
  } catch (const ResourceLimitError &e) {
    std::cerr << "acvtool: resource limit: " << e.what() << "\n";
    return 2;
  } catch (const ShapeError &e) {
    std::cerr << "acvtool: inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const PipelineError &e) {
    std::cerr << "acvtool: inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const ParseError &e) {
    std::cerr << "acvtool: parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "acvtool: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
