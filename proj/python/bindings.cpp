#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "compdnf/bounds.hpp"
#include "compdnf/chains.hpp"
#include "compdnf/complete.hpp"
#include "compdnf/error.hpp"
#include "compdnf/io.hpp"
#include "compdnf/oracle.hpp"
#include "compdnf/skeleton.hpp"
#include "compdnf/transform.hpp"

namespace py = pybind11;
using namespace compdnf;

namespace {

using Terms = std::vector<std::vector<std::int64_t>>;

Dnf dnf_from_terms(const Terms& terms) {
  Dnf d;
  for (const auto& t : terms) {
    std::vector<Literal> lits;
    for (auto s : t) {
      if (s == 0) throw Error(ErrorKind::parse_error, "literal 0 is not a variable");
      lits.push_back(s > 0 ? pos(static_cast<std::uint32_t>(s))
                           : neg(static_cast<std::uint32_t>(-s)));
    }
    d.add(Term(std::move(lits)));
  }
  return d;
}

Terms terms_of(const Dnf& d) {
  Terms out;
  for (auto term : d) {
    auto& t = out.emplace_back();
    for (const auto& l : term) t.push_back(l.signed_index());
  }
  return out;
}

std::vector<std::string> rows_of(const ZeroMatrix& m) {
  std::vector<std::string> out;
  for (const auto& r : m.rows()) out.push_back(r.to_string());
  return out;
}

ZeroMatrix matrix_from_rows(const std::vector<std::string>& rows) {
  std::vector<BitVec> bits;
  for (const auto& r : rows) bits.push_back(BitVec::from_string(r));
  return ZeroMatrix(std::move(bits));
}

CompleteKind kind_of(const std::string& s) {
  if (s == "F") return CompleteKind::F;
  if (s == "G") return CompleteKind::G;
  throw Error(ErrorKind::invalid_argument, "variant must be F or G");
}

Measure measure_of(const std::string& s) {
  if (s == "rank") return Measure::rank;
  if (s == "length") return Measure::length;
  if (s == "conv") return Measure::conv;
  throw Error(ErrorKind::invalid_argument, "measure must be rank, length or conv");
}

}  // namespace

PYBIND11_MODULE(_compdnf, mod) {
  mod.doc() = "DNF synthesis for complete Boolean functions";

  py::register_exception<Error>(mod, "CompdnfError");

  mod.def("make_complete", [](const std::string& kind, std::size_t k) {
    return rows_of(make_complete(kind_of(kind), k));
  }, py::arg("kind"), py::arg("k"));
  mod.def("is_complete", [](const std::vector<std::string>& rows) {
    return is_complete(matrix_from_rows(rows));
  });
  mod.def("eval", [](const std::vector<std::string>& rows, const std::string& point) {
    return eval(matrix_from_rows(rows), BitVec::from_string(point));
  });
  mod.def("eval_dnf", [](const Terms& terms, const std::string& point) {
    return eval_dnf(dnf_from_terms(terms), BitVec::from_string(point));
  });
  mod.def("parse_matrix", [](const std::string& text) { return rows_of(parse_matrix(text)); });
  mod.def("format_dnf", [](const Terms& terms) { return format_dnf(dnf_from_terms(terms)); });
  mod.def("parse_dnf", [](const std::string& text) { return terms_of(parse_dnf(text)); });

  mod.def("reduce", [](const std::vector<std::string>& rows) {
    auto [r, map] = reduce(matrix_from_rows(rows));
    return py::make_tuple(rows_of(r), to_json(map).dump());
  });
  mod.def("assemble", [](const Terms& reduced, const std::string& map_json) {
    return terms_of(assemble(dnf_from_terms(reduced),
                             reduction_map_from_json(nlohmann::json::parse(map_json))));
  });

  mod.def("synthesize", [](const std::vector<std::string>& rows,
                           std::optional<std::size_t> lambda) {
    auto s = synthesize(matrix_from_rows(rows), lambda);
    return py::make_tuple(terms_of(s.dnf), to_json(s.stats).dump());
  }, py::arg("rows"), py::arg("lambda_") = py::none());

  mod.def("verify", [](const Terms& terms, const std::vector<std::string>& rows) {
    const auto r = verify_realizes(dnf_from_terms(terms), matrix_from_rows(rows));
    py::dict out;
    out["realizes"] = r.realizes;
    std::vector<std::string> missing;
    for (const auto& p : r.missing_points) missing.push_back(p.to_string());
    out["missing_points"] = missing;
    out["covered_zeros"] = r.covered_zeros;
    out["overflow"] = r.overflow;
    return out;
  });
  mod.def("zero_set", [](const Terms& terms, std::size_t n, std::size_t limit) {
    const auto scan = scan_zero_set(dnf_from_terms(terms), n, limit);
    std::vector<std::string> pts;
    for (const auto& p : scan.points) pts.push_back(p.to_string());
    return py::make_tuple(pts, scan.overflow);
  });
  mod.def("blake_dnf", [](const std::vector<std::string>& rows) {
    return terms_of(blake_dnf(matrix_from_rows(rows)));
  });
  mod.def("minimal_dnf", [](const std::vector<std::string>& rows, const std::string& measure,
                            double alpha) {
    return terms_of(minimal_dnf(matrix_from_rows(rows), measure_of(measure), alpha));
  }, py::arg("rows"), py::arg("measure") = "rank", py::arg("alpha") = 0.5);

  mod.def("hansel", [](std::size_t k) {
    std::vector<std::vector<std::uint64_t>> out;
    for (auto& c : hansel(k)) out.push_back(std::move(c.points));
    return out;
  });
  mod.def("band_chains", [](std::size_t k, std::size_t lo, std::size_t hi) {
    std::vector<std::vector<std::uint64_t>> out;
    for (auto& c : band_chains(k, lo, hi)) out.push_back(std::move(c.points));
    return out;
  });

  mod.def("lower_rank", &lower_rank);
  mod.def("upper_rank", &upper_rank);
  mod.def("formula5_rank", &formula5_rank);
  mod.def("binomial", &binomial);
  mod.def("conformance", [](const Terms& terms, const std::vector<std::string>& rows,
                            std::size_t lambda, std::size_t chains) {
    return to_json(conformance(dnf_from_terms(terms), matrix_from_rows(rows), lambda, chains))
        .dump();
  }, py::arg("terms"), py::arg("rows"), py::arg("lambda_"), py::arg("chains") = 0);

  mod.def("sample_P", [](std::size_t k, std::size_t n, std::uint64_t seed, std::uint64_t trial) {
    return rows_of(sample_P(k, n, seed, trial));
  }, py::arg("k"), py::arg("n"), py::arg("seed"), py::arg("trial") = 0);
  mod.def("reduction_experiment", [](std::size_t k, std::size_t n, std::size_t trials,
                                     std::uint64_t seed, bool proper) {
    const auto r = reduction_experiment(k, n, trials, seed,
                                        proper ? Population::proper : Population::all);
    py::dict out;
    out["trials"] = r.trials;
    out["proper"] = r.proper;
    out["complete"] = r.complete;
    out["rate"] = r.rate();
    return out;
  }, py::arg("k"), py::arg("n"), py::arg("trials"), py::arg("seed"), py::arg("proper") = true);
}
