#include "compdnf/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <iomanip>
#include <optional>

#include "compdnf/bounds.hpp"
#include "compdnf/chains.hpp"
#include "compdnf/complete.hpp"
#include "compdnf/io.hpp"
#include "compdnf/oracle.hpp"
#include "compdnf/skeleton.hpp"
#include "compdnf/transform.hpp"

namespace compdnf::cli {

namespace {

struct Options {
  std::size_t k = 0;
  std::size_t n = 0;
  std::string variant = "F";
  std::string input;
  std::string dnf;
  std::string out;
  std::string report;
  std::string map;
  std::string lambda = "auto";
  std::string measure = "rank";
  double alpha = 0.5;
  bool blake = false;
  bool full = false;
  std::optional<std::size_t> lo;
  std::optional<std::size_t> hi;
  std::size_t chi_named = 0;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::string population = "proper";
  bool json = false;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text(path, text);
  }
}

int cmd_complete(const Options& o, std::ostream& out) {
  const auto m = make_complete(o.variant == "G" ? CompleteKind::G : CompleteKind::F, o.k);
  emit(o.out, format_matrix(m), out);
  return kOk;
}

int cmd_synth(const Options& o, std::ostream& out, std::ostream& err) {
  const auto m = parse_matrix(read_text(o.input));
  std::optional<std::size_t> lambda;
  if (o.lambda != "auto") {
    std::size_t v = 0;
    const auto* end = o.lambda.data() + o.lambda.size();
    auto [ptr, ec] = std::from_chars(o.lambda.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
      err << "--lambda expects 'auto' or a positive integer\n";
      return kArgumentError;
    }
    lambda = v;
  }
  const auto result = synthesize(m, lambda);
  const auto check = verify_realizes(result.dnf, m);
  if (!check.realizes) {
    err << "synthesized DNF does not realize the input (" << check.covered_zeros.size()
        << " covered zeros, " << check.missing_points.size() << " uncovered ones)\n";
    return kDomainError;
  }
  const auto& st = result.stats;
  const auto bounds = conformance(result.dnf, m, st.lambda, st.chains);
  if (!o.out.empty()) write_text(o.out, format_dnf(result.dnf));
  if (!o.report.empty()) {
    nlohmann::json report = {{"format_version", kReportFormatVersion},
                             {"synthesis", to_json(st)},
                             {"bounds", to_json(bounds)}};
    write_text(o.report, report.dump(2) + "\n");
  }
  out << "k=" << st.k << " n=" << st.n << " lambda=" << st.lambda << " test=" << st.test_size
      << " chains=" << st.chains << " rank=" << st.rank << " length=" << st.length
      << " oversize=" << st.terminal_edge_oversize_count << " realizes=yes"
      << " conforms=" << (bounds.conforms() ? "yes" : "no") << "\n";
  if (o.out.empty()) out << format_dnf(result.dnf);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto m = parse_matrix(read_text(o.input));
  auto d = parse_dnf(read_text(o.dnf));
  if (o.chi_named != 0) d = normalize_chi_named(d, o.chi_named);
  const auto r = verify_realizes(d, m);
  out << "realizes=" << (r.realizes ? "yes" : "no") << " rank=" << d.rank()
      << " length=" << d.length() << " covered_zeros=" << r.covered_zeros.size()
      << " missing_points=" << r.missing_points.size()
      << (r.overflow ? "+" : "") << "\n";
  for (const auto& [term, row] : r.covered_zeros) {
    out << "  term " << term + 1 << " (" << term_to_string(d[term]) << ") covers zero row "
        << row + 1 << "\n";
  }
  for (const auto& p : r.missing_points) out << "  uncovered one " << p.to_string() << "\n";
  return r.realizes ? kOk : kDomainError;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto m = parse_matrix(read_text(o.input));
  Dnf d;
  if (o.blake) {
    d = blake_dnf(m);
  } else {
    const auto measure = o.measure == "length" ? Measure::length
                         : o.measure == "conv" ? Measure::conv
                                               : Measure::rank;
    d = minimal_dnf(m, measure, o.alpha);
  }
  const auto ms = measures(d, o.alpha, 1.0 - o.alpha);
  out << (o.blake ? "primes" : o.measure) << ": rank=" << ms.rank << " length=" << ms.length
      << " conv=" << ms.conv << "\n";
  emit(o.out, format_dnf(d), out);
  return kOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const auto m = parse_matrix(read_text(o.input));
  const auto [reduced, map] = reduce(m);
  out << "k=" << reduced.k() << " n=" << m.n() << " reduced_n=" << reduced.n()
      << " complete=" << (is_complete(reduced) ? "yes" : "no") << "\n";
  const auto j = to_json(map);
  out << "groups:";
  for (const auto& g : j["groups"]) {
    out << " {";
    bool first = true;
    for (const auto& v : g) {
      out << (first ? "" : ",") << v.get<std::uint32_t>();
      first = false;
    }
    out << "}";
  }
  out << "\n";
  if (!o.map.empty()) write_text(o.map, j.dump(2) + "\n");
  emit(o.out, format_matrix(reduced), out);
  return kOk;
}

int cmd_chains(const Options& o, std::ostream& out, std::ostream& err) {
  const auto lo = o.lo.value_or(0);
  const auto hi = o.hi.value_or(o.k);
  if (lo > hi || hi > o.k) {
    err << "band must satisfy 0 <= lo <= hi <= k\n";
    return kArgumentError;
  }
  const auto chains = band_chains(o.k, lo, hi);
  out << "k=" << o.k << " band=[" << lo << "," << hi << "] chains=" << chains.size() << "\n";
  for (const auto& [len, count] : chain_census(chains)) {
    out << "length " << len << ": " << count << "\n";
  }
  if (o.full) {
    for (const auto& c : chains) {
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c.point(i).to_string();
      out << "\n";
    }
  }
  return kOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
  const auto population = o.population == "all" ? Population::all : Population::proper;
  const auto r = reduction_experiment(o.k, o.n, o.trials, o.seed, population);
  if (o.json) {
    nlohmann::json j = {{"format_version", kReportFormatVersion},
                        {"k", o.k},
                        {"n", o.n},
                        {"trials", r.trials},
                        {"seed", o.seed},
                        {"population", o.population},
                        {"proper", r.proper},
                        {"complete", r.complete},
                        {"rate", r.rate()}};
    out << j.dump(2) << "\n";
  } else {
    out << "k=" << o.k << " n=" << o.n << " trials=" << r.trials << " seed=" << o.seed
        << " population=" << o.population << " proper=" << r.proper
        << " complete=" << r.complete << " rate=" << std::setprecision(6) << r.rate() << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"DNF synthesis for Boolean functions with few zeros", "compdnf"};
  app.require_subcommand(1);
  Options o;

  auto* complete = app.add_subcommand("complete", "write the zero matrix of F_k or G_k");
  complete->add_option("--k", o.k, "number of zeros")->required()->check(CLI::Range(2, 24));
  complete->add_option("--variant", o.variant, "F or G")->check(CLI::IsMember({"F", "G"}));
  complete->add_option("--out", o.out, "output file (default stdout)");

  auto* synth = app.add_subcommand("synth", "synthesize and verify a DNF");
  synth->add_option("--input", o.input, "matrix file")->required();
  synth->add_option("--lambda", o.lambda, "auto or an integer");
  synth->add_option("--out", o.out, "DNF output file");
  synth->add_option("--report", o.report, "JSON report file");

  auto* verify = app.add_subcommand("verify", "check that a DNF realizes a matrix");
  verify->add_option("--matrix", o.input, "matrix file")->required();
  verify->add_option("--dnf", o.dnf, "DNF file")->required();
  verify->add_option("--chi-named", o.chi_named,
                     "literals are chi numbers of vectors in B^K; rename to F_K variables");

  auto* oracle = app.add_subcommand("oracle", "exact minimal DNF (n <= 14)");
  oracle->add_option("--matrix", o.input, "matrix file")->required();
  oracle->add_option("--measure", o.measure, "rank, length or conv")
      ->check(CLI::IsMember({"rank", "length", "conv"}));
  oracle->add_option("--alpha", o.alpha, "conv weight of rank")->check(CLI::Range(0.0, 1.0));
  oracle->add_flag("--blake", o.blake, "print all prime implicants instead");
  oracle->add_option("--out", o.out, "DNF output file");

  auto* red = app.add_subcommand("reduce", "reduce a matrix to distinct columns");
  red->add_option("--matrix", o.input, "matrix file")->required();
  red->add_option("--out", o.out, "reduced matrix file");
  red->add_option("--map", o.map, "reduction map JSON file");

  auto* chains = app.add_subcommand("chains", "symmetric chain decomposition census");
  chains->add_option("--k", o.k, "dimension")->required()->check(CLI::Range(1, 20));
  chains->add_option("--lo", o.lo, "lowest ones-count kept");
  chains->add_option("--hi", o.hi, "highest ones-count kept");
  chains->add_flag("--full", o.full, "print every chain");

  auto* sample = app.add_subcommand("sample", "reduction-rate experiment");
  sample->add_option("--k", o.k, "zeros")->required()->check(CLI::Range(2, 63));
  sample->add_option("--n", o.n, "variables")->required()->check(CLI::PositiveNumber);
  sample->add_option("--trials", o.trials, "samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", o.seed, "seed");
  sample->add_option("--population", o.population, "proper or all")
      ->check(CLI::IsMember({"proper", "all"}));
  sample->add_flag("--json", o.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kArgumentError;
  }

  try {
    if (complete->parsed()) return cmd_complete(o, out);
    if (synth->parsed()) return cmd_synth(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (red->parsed()) return cmd_reduce(o, out);
    if (chains->parsed()) return cmd_chains(o, out, err);
    if (sample->parsed()) return cmd_sample(o, out);
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::parse_error ? kParseError : kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kArgumentError;
}

}  // namespace compdnf::cli
