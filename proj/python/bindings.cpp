// Thin pybind11 surface. Structured results cross the boundary as JSON text,
// so Python sees the same documents as the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "seqrecon/claims.hpp"
#include "seqrecon/closed_forms.hpp"
#include "seqrecon/deletion_balls.hpp"
#include "seqrecon/error.hpp"
#include "seqrecon/extremal.hpp"
#include "seqrecon/reconstruct.hpp"
#include "seqrecon/search.hpp"
#include "seqrecon/serialize.hpp"

namespace py = pybind11;
using namespace seqrecon;

namespace {

std::vector<std::string> strings_of(const WordSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const Word& w : s) out.push_back(w.str());
  return out;
}

FormulaId formula_id(const std::string& name) {
  const auto id = formula_from_string(name);
  if (!id) throw Error(ErrorCode::kParse, "unknown formula id '" + name + "'");
  return *id;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Deletion balls, extremal intersections and sequence reconstruction";

  static py::exception<Error> error_type(m, "Error", PyExc_ValueError);
  static py::exception<BudgetExceeded> budget_type(m, "BudgetExceeded", error_type.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const BudgetExceeded& e) {
      PyErr_SetObject(budget_type.ptr(),
                      py::make_tuple(std::string(to_string(e.code())), e.what(),
                                     e.estimate(), e.budget())
                          .ptr());
    } catch (const Error& e) {
      PyErr_SetObject(error_type.ptr(),
                      py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
    }
  });

  m.def("ball", [](const std::string& x, int q, int t) {
    return strings_of(enumerate_ball(parse_word(x, q), t));
  }, py::arg("x"), py::arg("q"), py::arg("t"));

  m.def("ball_size", [](const std::string& x, int q, int t) {
    return ball_size(parse_word(x, q), t);
  }, py::arg("x"), py::arg("q"), py::arg("t"));

  m.def("intersect", [](const std::string& x, const std::string& y, int q, int tx, int ty) {
    return strings_of(intersect_balls(parse_word(x, q), tx, parse_word(y, q), ty));
  }, py::arg("x"), py::arg("y"), py::arg("q"), py::arg("tx"), py::arg("ty"));

  m.def("deletion_distance", [](const std::string& x, const std::string& y, int q) {
    return deletion_distance(parse_word(x, q), parse_word(y, q));
  }, py::arg("x"), py::arg("y"), py::arg("q"));

  m.def("dq", &dq, py::arg("q"), py::arg("n"), py::arg("t"));

  m.def("formula", [](const std::string& id, int n, int t, int q, int d) {
    const FormulaPoint pt{q, n, t, d};
    return json(evaluate(formula_id(id), pt)).dump();
  }, py::arg("id"), py::arg("n"), py::arg("t"), py::arg("q") = 3, py::arg("d") = 0);

  m.def("formula_table", [](const std::string& id, int n_lo, int n_hi, int t_lo, int t_hi,
                            int q, int d) {
    return formula_table_json(
               formula_table(formula_id(id), {n_lo, n_hi}, {t_lo, t_hi}, q, d))
        .dump();
  }, py::arg("id"), py::arg("n_lo"), py::arg("n_hi"), py::arg("t_lo"), py::arg("t_hi"),
     py::arg("q") = 3, py::arg("d") = 0);

  m.def("search", [](int q, int n, int t, int k, int d, bool symmetry, int witness_cap,
                     int workers, double budget) {
    SearchSpec s;
    s.q = q;
    s.n = n;
    s.t = t;
    s.k = k;
    s.d = d;
    s.symmetry_reduction = symmetry;
    s.witness_cap = witness_cap;
    s.workers = workers;
    s.budget = budget;
    SearchReport r;
    {
      py::gil_scoped_release release;
      r = max_intersection(s);
    }
    return json(r).dump();
  }, py::arg("q"), py::arg("n"), py::arg("t"), py::arg("k") = 0, py::arg("d") = 0,
     py::arg("symmetry") = true, py::arg("witness_cap") = kDefaultWitnessCap,
     py::arg("workers") = 0, py::arg("budget") = kDefaultSearchBudget);

  m.def("pair", [](const std::string& family, int n, int q) {
    ExtremalPair p = family == "m1"           ? pair_m1(n)
                     : family == "m0"         ? pair_m0(n)
                     : family == "thm1"       ? pair_thm1(q, n)
                     : family == "conjecture" ? pair_conjecture(q, n)
                                              : throw Error(ErrorCode::kParse,
                                                            "unknown pair family '" + family + "'");
    return json(p).dump();
  }, py::arg("family"), py::arg("n"), py::arg("q") = 3);

  m.def("verify", [](const std::string& claim, int n, int t, int q, int d, double budget) {
    ClaimOptions opts;
    opts.budget = budget;
    VerificationRecord r;
    {
      py::gil_scoped_release release;
      r = verify_claim(claim, ClaimParams{q, n, t, d}, opts);
    }
    return json(r).dump();
  }, py::arg("claim"), py::arg("n"), py::arg("t"), py::arg("q") = 3, py::arg("d") = 2,
     py::arg("budget") = kDefaultSearchBudget);

  m.def("claim_ids", [] { return claim_ids(); });

  m.def("build_code", [](int q, int n, int d_min) {
    return json(build_code(q, n, d_min)).dump();
  }, py::arg("q"), py::arg("n"), py::arg("d_min"));

  m.def("required_channels", [](int q, int n, int t, int d_min, double budget) {
    RequirementOptions opts;
    opts.budget = budget;
    return json(required_channels(q, n, t, d_min, opts)).dump();
  }, py::arg("q"), py::arg("n"), py::arg("t"), py::arg("d_min"),
     py::arg("budget") = kDefaultSearchBudget);

  m.def("decode", [](const std::vector<std::string>& outputs, int q, int n, int t, int d_min) {
    const Code code = build_code(q, n, d_min);
    std::vector<Word> words;
    words.reserve(outputs.size());
    for (const auto& o : outputs) words.push_back(parse_word(o, q));
    return json(decode(code, words, t)).dump();
  }, py::arg("outputs"), py::arg("q"), py::arg("n"), py::arg("t"), py::arg("d_min"));

  m.def("simulate", [](int q, int n, int t, int d_min, std::uint64_t trials,
                       std::uint64_t seed, std::optional<std::int64_t> channels) {
    SimulationOptions opts;
    opts.channels = channels;
    SimulationReport r;
    {
      py::gil_scoped_release release;
      r = simulate(q, n, t, d_min, trials, seed, opts);
    }
    return json(r).dump();
  }, py::arg("q"), py::arg("n"), py::arg("t"), py::arg("d_min"), py::arg("trials") = 100,
     py::arg("seed") = 0, py::arg("channels") = std::nullopt);
}
