#include "strathom/cli/commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "strathom/algebra/smith.hpp"
#include "strathom/cli/report.hpp"
#include "strathom/topology/intersection_chains.hpp"

namespace strathom::cli {

namespace {

struct Options {
  std::string file;
  std::string perversity;
  std::string ring;
  std::string engine;
  std::string output;
  bool json = false;
  bool strict = false;
  std::vector<std::string> matrices;
  std::vector<double> random;
  unsigned long seed = 1;
  bool verify = true;
};

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw ValidationError("cannot write " + o.output);
  f << text;
}

std::vector<std::vector<int>> assignments(const PerversitySpec& spec, const std::vector<int>& codims) {
  if (spec.all) return all_assignments(codims);
  if (spec.values.size() == 1) return {std::vector<int>(codims.size(), spec.values.front())};
  if (spec.values.size() != codims.size())
    throw ValidationError("perversity lists " + std::to_string(spec.values.size()) + " values for " +
                          std::to_string(codims.size()) + " singular strata");
  return {spec.values};
}

std::vector<int> dual_of(const std::vector<int>& values, const std::vector<int>& codims) {
  std::vector<int> d;
  for (std::size_t i = 0; i < values.size(); ++i) d.push_back(codims[i] - 2 - values[i]);
  return d;
}

DualityReport symbolic_report(const InputFile& in, const std::vector<int>& values) {
  const SpaceExpr& e = *in.space;
  IntersectionProfile p = evaluate(in, e, listed_values(values));
  std::optional<IntersectionProfile> dual;
  if (p.compact && p.oriented) {
    try {
      dual = evaluate(in, e, listed_values(dual_of(values, stratum_codimensions(in, e))));
    } catch (const ValidationError& err) {
      p.notes.push_back(std::string("no profile at the dual perversity: ") + err.what());
    }
  }
  return analyze(p, dual ? &*dual : nullptr);
}

CheckResult agreement(const IntersectionProfile& s, const IntersectionProfile& c) {
  std::ostringstream d;
  const int n = c.dimension;
  for (int k = 0; k <= n + 1; ++k) {
    if (!(s.ih_p[k] == c.ih_p[k])) d << " IH_p^" << k;
    if (!(s.ih_dp[k] == c.ih_dp[k])) d << " IH_Dp^" << k;
    if (!(s.gh_dp[k] == c.gh_dp[k])) d << " IH^Dp_" << k;
    if (!(s.blowup[k] == c.blowup[k])) d << " H_p^" << k;
  }
  return {"symbolic and simplicial groups agree", d.str().empty() ? "pass" : "fail",
          d.str().empty() ? "" : "differ at" + d.str()};
}

int cmd_profile(const Options& o, std::ostream& out) {
  InputFile in = read_input(o.file);
  const std::string ring_name = !o.ring.empty() ? o.ring : in.ring.value_or("Z");
  const Coefficients ring = Coefficients::parse(ring_name);
  const SpaceExpr& e = *in.space;
  std::string why;
  const bool symbolic = has_symbolic(in, e, &why);
  const auto obstruction = simplicial_obstruction(in, e);
  std::string engine = o.engine.empty() ? (symbolic ? "symbolic" : "simplicial") : o.engine;
  if (engine != "symbolic" && engine != "simplicial" && engine != "both")
    throw ValidationError("engine must be symbolic, simplicial or both");
  if (engine != "simplicial" && !symbolic) throw ValidationError("no symbolic evaluation: " + why);
  if (engine != "symbolic" && obstruction) throw ValidationError("no simplicial realization: " + *obstruction);
  if (engine != "simplicial" && ring_name != "Z")
    throw ValidationError("the symbolic engine works over Z; use --engine simplicial for " + ring_name);

  const PerversitySpec spec = parse_perversity(!o.perversity.empty() ? o.perversity : in.perversity.value_or("all"));
  std::vector<DualityReport> reports;

  std::optional<FilteredComplex> x;
  std::vector<int> simplicial_codims;
  if (engine != "symbolic") {
    x = realize(in, e);
    for (int s : x->singular_strata()) simplicial_codims.push_back(x->strata()[static_cast<std::size_t>(s)].codim);
  }
  auto simplicial_report = [&](const std::vector<int>& values) {
    const Perversity p = from_singular_values(*x, values.empty() ? std::vector<int>{0} : values);
    IntersectionProfile prof = simplicial_profile(*x, p, ring);
    prof.space = e.to_string();
    std::optional<IntersectionProfile> dual;
    if (prof.compact && prof.oriented) dual = simplicial_profile(*x, complementary(*x, p), ring);
    DualityReport r = analyze(prof, dual ? &*dual : nullptr);
    r.engine = "simplicial";
    return r;
  };

  if (engine == "symbolic" || engine == "both") {
    for (const auto& v : assignments(spec, stratum_codimensions(in, e))) {
      reports.push_back(symbolic_report(in, v));
      if (engine == "both") {
        if (!spec.all && spec.values.size() > 1)
          throw ValidationError("--engine both takes a uniform perversity or all");
        // Strata are listed in a different order by the two engines; only
        // uniform assignments are compared.
        if (std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) != v.end()) continue;
        DualityReport c = simplicial_report(std::vector<int>(simplicial_codims.size(), v.empty() ? 0 : v.front()));
        c.checks.push_back(agreement(reports.back().profile, c.profile));
        reports.push_back(c);
      }
    }
  } else {
    for (const auto& v : assignments(spec, simplicial_codims)) reports.push_back(simplicial_report(v));
  }

  bool failed = false;
  for (const auto& r : reports) failed = failed || !r.all_checks_pass();
  if (o.json) {
    ordered_json j;
    j["tool"] = "strathom";
    j["version"] = kVersion;
    j["input_digest"] = "sha256:" + in.digest;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(report_json(r, ring.name(), in.digest));
    emit(o, out, j.dump(2) + "\n");
  } else {
    std::string text;
    for (std::size_t i = 0; i < reports.size(); ++i) text += (i ? "\n" : "") + report_text(reports[i], ring.name());
    emit(o, out, text);
  }
  return failed && o.strict ? kCheckFailure : kOk;
}

int cmd_crosscheck(const Options& o, std::ostream& out) {
  InputFile in = read_input(o.file);
  std::vector<CrossRow> rows = crosscheck(in, *in.space);
  bool failed = std::any_of(rows.begin(), rows.end(), [](const CrossRow& r) { return r.status == "fail"; });
  emit(o, out, o.json ? crosscheck_json(rows, in.digest).dump(2) + "\n" : crosscheck_text(rows));
  return failed && o.strict ? kCheckFailure : kOk;
}

// Triplet file: "rows cols" then one "i j value" line per entry, 0-based.
std::optional<Matrix> read_triplets(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot read " + path);
  std::string first;
  std::streampos start = f.tellg();
  if (!(f >> first) || first.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  f.seekg(start);
  std::size_t r = 0, c = 0;
  f >> r >> c;
  Matrix m(r, c);
  std::size_t i = 0, j = 0;
  std::string v;
  std::size_t line = 1;
  while (f >> i >> j >> v) {
    ++line;
    if (i >= r || j >= c) throw ValidationError(path + ": entry " + std::to_string(line) + " is out of range");
    try {
      m(i, j) = Integer(v);
    } catch (const std::invalid_argument&) {
      throw ValidationError(path + ": entry " + std::to_string(line) + " is not an integer");
    }
  }
  if (!f.eof()) throw ValidationError(path + ": malformed entry after line " + std::to_string(line));
  return m;
}

ordered_json bench_one(const std::string& name, const Matrix& a, bool verify) {
  auto t0 = std::chrono::steady_clock::now();
  SmithDecomposition d = smith(a, Coefficients::integers(), verify);
  auto t1 = std::chrono::steady_clock::now();
  bool chain = true;
  for (std::size_t i = 0; i + 1 < d.diagonal.size(); ++i)
    chain = chain && mpz_divisible_p(d.diagonal[i + 1].get_mpz_t(), d.diagonal[i].get_mpz_t());
  ordered_json factors = ordered_json::array();
  for (std::size_t i = 0; i < d.diagonal.size();) {
    std::size_t k = i;
    while (k < d.diagonal.size() && d.diagonal[k] == d.diagonal[i]) ++k;
    factors.push_back({d.diagonal[i].get_str(), k - i});
    i = k;
  }
  ordered_json j{{"name", name},
                 {"rows", a.rows()},
                 {"cols", a.cols()},
                 {"nonzeros", a.nonzeros()},
                 {"seconds", std::chrono::duration<double>(t1 - t0).count()},
                 {"rank", d.rank()},
                 {"factors", factors},
                 {"max_bits", d.max_bits},
                 {"divisibility", chain}};
  if (verify) j["transforms_verified"] = d.U * a * d.V == d.diagonal_matrix();
  return j;
}

int cmd_bench(const Options& o, std::ostream& out) {
  std::vector<ordered_json> rows;
  for (const auto& path : o.matrices) {
    if (auto m = read_triplets(path)) {
      rows.push_back(bench_one(path, *m, o.verify));
      continue;
    }
    InputFile in = read_input(path);
    FilteredComplex x = realize(in, *in.space);
    ChainComplex c = simplicial_chain_complex(x);
    for (int k = 1; k <= x.dimension(); ++k)
      rows.push_back(bench_one(in.space->to_string() + " d" + std::to_string(k), c.differential(k), o.verify));
  }
  if (!o.random.empty()) {
    if (o.random.size() != 3 || o.random[0] < 0 || o.random[1] < 0 || o.random[2] < 0 || o.random[2] > 1)
      throw ValidationError("--random takes rows cols density with 0 <= density <= 1");
    std::mt19937_64 rng(o.seed);
    std::bernoulli_distribution hit(o.random[2]), sign(0.5);
    Matrix m(static_cast<std::size_t>(o.random[0]), static_cast<std::size_t>(o.random[1]));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (hit(rng)) m(i, j) = sign(rng) ? 1 : -1;
    std::ostringstream name;
    name << "random " << m.rows() << "x" << m.cols() << " density " << o.random[2] << " seed " << o.seed;
    rows.push_back(bench_one(name.str(), m, o.verify));
  }
  if (rows.empty()) throw ValidationError("bench-snf needs matrix files or --random");

  bool ok = true;
  for (const auto& r : rows) ok = ok && r["divisibility"].get<bool>() && r.value("transforms_verified", true);
  if (o.json) {
    ordered_json j{{"tool", "strathom"}, {"version", kVersion}, {"results", rows}};
    emit(o, out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& r : rows) {
      os << r["name"].get<std::string>() << ": " << r["rows"] << "x" << r["cols"] << ", " << r["nonzeros"]
         << " nonzeros, " << std::fixed << std::setprecision(4) << r["seconds"].get<double>() << " s, rank "
         << r["rank"] << ", max bits " << r["max_bits"] << ", factors";
      for (const auto& f : r["factors"]) os << " " << f[0].get<std::string>() << "^" << f[1];
      os << ", divisibility " << (r["divisibility"].get<bool>() ? "ok" : "FAILED");
      if (r.contains("transforms_verified"))
        os << ", U A V = D " << (r["transforms_verified"].get<bool>() ? "ok" : "FAILED");
      os << "\n";
    }
    emit(o, out, os.str());
  }
  return ok ? kOk : kCheckFailure;
}

int cmd_validate(const Options& o, std::ostream& out) {
  InputFile in = read_input(o.file);
  const SpaceExpr& e = *in.space;
  ordered_json j{{"tool", "strathom"}, {"version", kVersion}, {"input_digest", "sha256:" + in.digest},
                 {"space", e.to_string()}};
  std::string why;
  if (has_symbolic(in, e, &why)) {
    j["symbolic"] = {{"strata_codimensions", stratum_codimensions(in, e)}};
  } else {
    j["symbolic"] = nullptr;
    j["symbolic_unavailable"] = why;
  }
  if (auto obstruction = simplicial_obstruction(in, e)) {
    j["simplicial"] = nullptr;
    j["simplicial_unavailable"] = *obstruction;
  } else {
    FilteredComplex x = realize(in, e);
    ordered_json strata = ordered_json::array();
    for (const auto& s : x.strata())
      strata.push_back({{"name", s.name}, {"codimension", s.codim}, {"regular", s.regular}});
    ordered_json counts = ordered_json::array();
    for (int k = 0; k <= x.dimension(); ++k) counts.push_back(x.simplices(k).size());
    j["simplicial"] = {{"dimension", x.dimension()},
                       {"vertices", x.vertex_count()},
                       {"simplices", counts},
                       {"strata", strata},
                       {"closed_oriented", closed_oriented(x)}};
  }
  if (o.json) {
    emit(o, out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "valid: " << e.to_string() << "\n";
    if (!j["symbolic"].is_null())
      os << "  symbolic: singular strata of codimension " << j["symbolic"]["strata_codimensions"].dump() << "\n";
    else
      os << "  symbolic: unavailable (" << why << ")\n";
    if (!j["simplicial"].is_null()) {
      const auto& s = j["simplicial"];
      os << "  simplicial: dimension " << s["dimension"] << ", " << s["vertices"] << " vertices, simplices per degree "
         << s["simplices"].dump() << ", closed and oriented " << (s["closed_oriented"].get<bool>() ? "yes" : "no")
         << "\n";
      for (const auto& st : s["strata"])
        os << "    stratum " << st["name"].get<std::string>() << " codimension " << st["codimension"]
           << (st["regular"].get<bool>() ? " (regular)" : "") << "\n";
    } else {
      os << "  simplicial: unavailable (" << j["simplicial_unavailable"].get<std::string>() << ")\n";
    }
    emit(o, out, os.str());
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intersection and blown-up cohomology of stratified spaces"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto* profile = app.add_subcommand("profile", "groups, peripheral complex, verdicts and checks");
  profile->add_option("file", o.file, "input file: JSON or a space expression")->required();
  profile->add_option("--perversity,-p", o.perversity, "all | k | k1,k2,... (one per singular stratum)");
  profile->add_option("--ring,-r", o.ring, "Z, Q or Fp (e.g. F2)");
  profile->add_option("--engine,-e", o.engine, "symbolic, simplicial or both");
  profile->add_flag("--json", o.json, "JSON output");
  profile->add_flag("--strict", o.strict, "exit 3 when a check fails");
  profile->add_option("--output,-o", o.output, "write to a file");

  auto* cross = app.add_subcommand("crosscheck", "compare the symbolic and simplicial engines");
  cross->add_option("file", o.file, "input file: JSON or a space expression")->required();
  cross->add_flag("--json", o.json, "JSON output");
  cross->add_flag("--strict", o.strict, "exit 3 when a comparison fails");
  cross->add_option("--output,-o", o.output, "write to a file");

  auto* bench = app.add_subcommand("bench-snf", "time the Smith normal form");
  bench->add_option("files", o.matrices, "triplet matrix files or space inputs (boundary matrices)");
  bench->add_option("--random", o.random, "rows cols density")->expected(3);
  bench->add_option("--seed", o.seed, "seed for --random");
  bench->add_flag("!--no-verify", o.verify, "skip the U A V = D check");
  bench->add_flag("--json", o.json, "JSON output");
  bench->add_option("--output,-o", o.output, "write to a file");

  auto* val = app.add_subcommand("validate", "parse and validate an input");
  val->add_option("file", o.file, "input file: JSON or a space expression")->required();
  val->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*profile) return cmd_profile(o, out);
    if (*cross) return cmd_crosscheck(o, out);
    if (*bench) return cmd_bench(o, out);
    if (*val) return cmd_validate(o, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  return kUsage;
}

}  // namespace strathom::cli
