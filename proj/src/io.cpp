#include "compdnf/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace compdnf {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Calls fn(line_number, content) for each non-comment, non-blank line.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t lineno = 0;
  while (!text.empty()) {
    ++lineno;
    const auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    fn(lineno, line);
  }
}

[[noreturn]] void parse_fail(std::size_t lineno, const std::string& what) {
  throw Error(ErrorKind::parse_error, "line " + std::to_string(lineno) + ": " + what);
}

std::vector<std::int64_t> parse_ints(std::size_t lineno, std::string_view line) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    std::int64_t v = 0;
    const auto* first = line.data() + i;
    const auto* last = line.data() + line.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || (ptr != last && *ptr != ' ' && *ptr != '\t')) {
      parse_fail(lineno, "expected an integer in '" + std::string(line) + "'");
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

ZeroMatrix parse_matrix(std::string_view text) {
  std::size_t k = 0, n = 0;
  bool header = false;
  std::vector<BitVec> rows;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    if (!header) {
      const auto dims = parse_ints(lineno, line);
      if (dims.size() != 2 || dims[0] < 1 || dims[1] < 1) {
        parse_fail(lineno, "header must be 'k n' with k, n >= 1");
      }
      k = static_cast<std::size_t>(dims[0]);
      n = static_cast<std::size_t>(dims[1]);
      header = true;
      return;
    }
    if (line.size() != n) {
      parse_fail(lineno, "row has " + std::to_string(line.size()) + " characters, expected " +
                             std::to_string(n));
    }
    if (rows.size() == k) parse_fail(lineno, "more than " + std::to_string(k) + " rows");
    try {
      rows.push_back(BitVec::from_string(line));
    } catch (const Error& e) {
      parse_fail(lineno, e.what());
    }
  });
  if (!header) throw Error(ErrorKind::parse_error, "missing 'k n' header");
  if (rows.size() != k) {
    throw Error(ErrorKind::parse_error, "expected " + std::to_string(k) + " rows, got " +
                                            std::to_string(rows.size()));
  }
  try {
    return ZeroMatrix(std::move(rows));
  } catch (const Error& e) {
    throw Error(ErrorKind::parse_error, e.what());
  }
}

std::string format_matrix(const ZeroMatrix& m) {
  std::string out = std::to_string(m.k()) + " " + std::to_string(m.n()) + "\n";
  out.reserve(out.size() + m.k() * (m.n() + 1));
  for (const auto& r : m.rows()) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

Dnf parse_dnf(std::string_view text) {
  Dnf d;
  std::vector<Literal> lits;
  for_each_line(text, [&](std::size_t lineno, std::string_view line) {
    lits.clear();
    for (auto v : parse_ints(lineno, line)) {
      if (v == 0 || v > UINT32_MAX || v < -static_cast<std::int64_t>(UINT32_MAX)) {
        parse_fail(lineno, "literal index out of range: " + std::to_string(v));
      }
      lits.push_back({static_cast<std::uint32_t>(v > 0 ? v : -v), v > 0});
    }
    try {
      d.add(Term(lits));
    } catch (const Error& e) {
      parse_fail(lineno, e.what());
    }
  });
  return d;
}

std::string format_dnf(const Dnf& d) {
  std::string out;
  for (auto term : d) {
    out += term_to_string(term);
    out += '\n';
  }
  return out;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot write " + path.string());
  out << text;
}

Dnf normalize_chi_named(const Dnf& raw, std::size_t k) {
  if (k < 2 || k > 32) throw Error(ErrorKind::invalid_argument, "chi naming needs 2 <= k <= 32");
  const std::uint64_t half = std::uint64_t{1} << (k - 1);
  const std::uint64_t top = (std::uint64_t{1} << k) - 1;
  Dnf out;
  std::vector<Literal> lits;
  for (auto term : raw) {
    lits.clear();
    for (const auto& l : term) {
      if (l.var >= top) {
        throw Error(ErrorKind::invalid_argument,
                    "chi name " + std::to_string(l.var) + " is not a non-constant vector");
      }
      if (l.var < half) {
        lits.push_back(l);
      } else {
        lits.push_back({static_cast<std::uint32_t>(top - l.var), !l.positive});
      }
    }
    out.add(Term(lits));
  }
  return out;
}

nlohmann::json to_json(const SPTransform& t) {
  std::vector<std::uint32_t> inverted;
  for (std::uint32_t j = 1; j <= t.n(); ++j) {
    if (t.invert[j - 1]) inverted.push_back(j);
  }
  return {{"perm", t.perm}, {"invert", inverted}};
}

nlohmann::json to_json(const ReductionMap& map) {
  auto j = to_json(map.sp);
  j["format_version"] = kReportFormatVersion;
  // Groups and representatives in original variable indices.
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : map.groups) {
    std::vector<std::uint32_t> orig;
    for (auto p : g) orig.push_back(map.sp.perm[p - 1]);
    groups.push_back(orig);
  }
  std::vector<std::uint32_t> reps;
  for (auto p : map.representatives) reps.push_back(map.sp.perm[p - 1]);
  j["groups"] = groups;
  j["representatives"] = reps;
  j["proper_groups"] = map.groups;
  return j;
}

ReductionMap reduction_map_from_json(const nlohmann::json& j) {
  try {
    ReductionMap map;
    map.sp.perm = j.at("perm").get<std::vector<std::uint32_t>>();
    map.sp.invert.assign(map.sp.perm.size(), false);
    for (auto v : j.at("invert").get<std::vector<std::uint32_t>>()) {
      if (v == 0 || v > map.sp.perm.size()) {
        throw Error(ErrorKind::parse_error, "invert index out of range");
      }
      map.sp.invert[v - 1] = true;
    }
    map.sp.validate();
    map.groups = j.at("proper_groups").get<std::vector<std::vector<std::uint32_t>>>();
    for (const auto& g : map.groups) {
      if (g.empty()) throw Error(ErrorKind::parse_error, "empty group");
      map.representatives.push_back(g.front());
    }
    return map;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("reduction map: ") + e.what());
  }
}

nlohmann::json to_json(const SynthesisStats& s) {
  nlohmann::json census = nlohmann::json::object();
  for (const auto& [len, count] : s.chain_census) census[std::to_string(len)] = count;
  return {{"format_version", kReportFormatVersion},
          {"k", s.k},
          {"n", s.n},
          {"lambda", s.lambda},
          {"test_size", s.test_size},
          {"chain_census", census},
          {"chains", s.chains},
          {"rank", s.rank},
          {"length", s.length},
          {"terminal_edge_oversize_count", s.terminal_edge_oversize_count},
          {"closure_terms", s.closure_terms}};
}

nlohmann::json to_json(const BoundReport& r) {
  auto flag = [](const std::optional<bool>& f) -> nlohmann::json {
    return f ? nlohmann::json(*f) : nlohmann::json(nullptr);
  };
  return {{"format_version", kReportFormatVersion},
          {"n", r.n},
          {"k", r.k},
          {"lambda", r.lambda},
          {"rank", r.rank},
          {"length", r.length},
          {"chains", r.chains},
          {"lower_rank", r.lower_rank},
          {"upper_rank", r.upper_rank},
          {"lower_length", r.lower_length},
          {"formula5_rank", r.formula5_rank ? nlohmann::json(*r.formula5_rank)
                                            : nlohmann::json(nullptr)},
          {"dyakonov_length", r.dyakonov_length},
          {"complete", r.complete},
          {"conforms",
           {{"rank_above_lower", flag(r.rank_above_lower)},
            {"rank_below_upper", flag(r.rank_below_upper)},
            {"length_above_lower", flag(r.length_above_lower)},
            {"rank_below_formula5", flag(r.rank_below_formula5)},
            {"all", r.conforms()}}}};
}

}  // namespace compdnf
