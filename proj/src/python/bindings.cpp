#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fthresh/report.hpp"

namespace py = pybind11;
using namespace fthresh;

namespace {

RingFile makeRingFile(std::uint32_t p, const std::vector<std::string>& vars,
                      const std::vector<std::string>& gens,
                      const std::string& name) {
  CtxPtr ctx = makeRing(p, vars);
  std::vector<Polynomial> parsed;
  for (const auto& g : gens) parsed.push_back(parsePolynomial(ctx, g));
  return RingFile{name, ctx, Ideal(ctx, std::move(parsed))};
}

ReportOptions makeOptions(int emax, std::uint64_t seed, std::int64_t budget,
                          const std::vector<std::string>& with) {
  ReportOptions opt;
  opt.maxE = emax;
  opt.seed = seed;
  opt.budgetCells = budget;
  opt.withGens = with;
  return opt;
}

std::string runJson(const std::string& cmd, std::uint32_t p,
                    const std::vector<std::string>& vars,
                    const std::vector<std::string>& gens, int emax,
                    std::uint64_t seed, std::int64_t budget,
                    const std::vector<std::string>& with) {
  RingFile ring = makeRingFile(p, vars, gens, "");
  CommandResult result =
      runCommand(cmd, ring, makeOptions(emax, seed, budget, with));
  Json out = result.report;
  out["exitCode"] = result.exitCode;
  out["summary"] = result.summary;
  return out.dump();
}

std::string runFileJson(const std::string& cmd, const std::string& path,
                        int emax, std::uint64_t seed, std::int64_t budget,
                        const std::vector<std::string>& with) {
  RingFile ring = loadRingFile(path);
  CommandResult result =
      runCommand(cmd, ring, makeOptions(emax, seed, budget, with));
  Json out = result.report;
  out["exitCode"] = result.exitCode;
  out["summary"] = result.summary;
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_fthresh, m) {
  m.doc() = "Frobenius invariants of standard graded rings over prime fields";

  py::register_exception<ParseError>(m, "FthreshParseError");
  py::register_exception<BudgetError>(m, "FthreshBudgetError");
  py::register_exception<InvariantViolation>(m, "FthreshInvariantViolation");
  py::register_exception<Error>(m, "FthreshError");

  m.def("run_json", &runJson, py::arg("cmd"), py::arg("p"), py::arg("vars"),
        py::arg("gens"), py::arg("emax") = 2, py::arg("seed") = 0,
        py::arg("budget") = 10000000, py::arg("with_gens") = std::vector<std::string>{},
        "Run one CLI command on a ring given inline; returns the JSON report "
        "as a string.");
  m.def("run_file_json", &runFileJson, py::arg("cmd"), py::arg("path"),
        py::arg("emax") = 2, py::arg("seed") = 0, py::arg("budget") = 10000000,
        py::arg("with_gens") = std::vector<std::string>{},
        "Run one CLI command on a ring definition file.");

  m.def(
      "is_f_pure",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens) {
        RingFile ring = makeRingFile(p, vars, gens, "");
        FrobeniusContext fc(ring.ctx, ring.ideal);
        FPurity purity = isFPure(fc);
        return py::make_tuple(purity.pure,
                              purity.witness ? toString(*purity.witness)
                                             : std::string());
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"),
      "Fedder's criterion; returns (pure, witness).");

  m.def(
      "b_invariant",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, int e) {
        RingFile ring = makeRingFile(p, vars, gens, "");
        FrobeniusContext fc(ring.ctx, ring.ideal);
        return bInvariant(fc, e);
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"), py::arg("e") = 1);

  m.def(
      "nu_invariant",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens, int e) {
        RingFile ring = makeRingFile(p, vars, gens, "");
        FrobeniusContext fc(ring.ctx, ring.ideal);
        return nuInvariant(fc, e);
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"), py::arg("e") = 1);

  m.def(
      "gorenstein_fpt",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens) {
        RingFile ring = makeRingFile(p, vars, gens, "");
        FrobeniusContext fc(ring.ctx, ring.ideal);
        GorensteinFptCertificate cert = gorensteinFpt(fc);
        py::dict d;
        d["f"] = toString(cert.f);
        d["degF"] = cert.degF;
        d["fptNum"] = cert.fptExact.num;
        d["fptDen"] = cert.fptExact.den;
        d["principal"] = cert.principalityVerified;
        return d;
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"));

  m.def(
      "a_invariants",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens) {
        RingFile ring = makeRingFile(p, vars, gens, "");
        AInvariants a = aInvariants(ring.ideal);
        py::dict d;
        d["dim"] = a.dim;
        py::dict vals;
        for (const auto& [i, v] : a.values) {
          vals[py::int_(i)] = v;
        }
        d["values"] = vals;
        return d;
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"));

  m.def(
      "groebner_basis",
      [](std::uint32_t p, const std::vector<std::string>& vars,
         const std::vector<std::string>& gens) {
        RingFile ring = makeRingFile(p, vars, gens, "");
        std::vector<std::string> out;
        for (const auto& g : ring.ideal.groebnerBasis()) {
          out.push_back(toString(g));
        }
        return out;
      },
      py::arg("p"), py::arg("vars"), py::arg("gens"),
      "Reduced Groebner basis in grevlex, as strings.");
}
