#include "fthresh/report.hpp"

#include <sstream>

namespace fthresh {

Json rationalJson(const Rational& r) {
  return Json{{"num", r.num}, {"den", r.den}, {"approx", r.approx()}};
}

namespace {

Json ringJson(const RingFile& ring) {
  Json j;
  if (!ring.name.empty()) j["name"] = ring.name;
  j["p"] = ring.ctx->p;
  j["vars"] = ring.ctx->varNames;
  Json gens = Json::array();
  for (const auto& g : ring.ideal.generators()) gens.push_back(toString(g));
  j["gens"] = gens;
  j["order"] = "grevlex";
  return j;
}

Json fpurityJson(const FPurity& purity) {
  Json j;
  j["pure"] = purity.pure;
  if (purity.witness) j["witness"] = toString(*purity.witness);
  return j;
}

Json fptJson(const FThresholdReport& rep) {
  Json j;
  j["eLevels"] = rep.eLevels;
  j["b"] = rep.bValues;
  j["nu"] = rep.nuValues;
  Json lower = Json::array();
  for (const auto& r : rep.fptLower) lower.push_back(rationalJson(r));
  j["fptLower"] = lower;
  Json cE = Json::array();
  for (const auto& r : rep.cEstimates) cE.push_back(rationalJson(r));
  j["cEstimates"] = cE;
  if (rep.fptUpperFromA) j["fptUpperFromA"] = rationalJson(*rep.fptUpperFromA);
  if (rep.gorensteinExact) {
    j["gorensteinExact"] = rationalJson(*rep.gorensteinExact);
  }
  j["partial"] = rep.partial;
  return j;
}

Json aInvJson(const AInvariants& a) {
  Json j;
  j["dim"] = a.dim;
  Json values = Json::array();
  for (const auto& [i, v] : a.values) {
    values.push_back(Json{{"i", i}, {"a", v}});
  }
  j["values"] = values;
  return j;
}

Json bettiJson(const BettiTable& B, const Classification& cls) {
  Json j;
  j["pd"] = B.pd;
  j["reg"] = B.reg;
  Json entries = Json::array();
  for (const auto& [key, beta] : B.entries) {
    entries.push_back(Json{{"i", key.first}, {"j", key.second}, {"beta", beta}});
  }
  j["entries"] = entries;
  j["classify"] = Json{{"isCM", cls.isCM},
                       {"isGorenstein", cls.isGorenstein},
                       {"dim", cls.dim},
                       {"depth", cls.depth},
                       {"type", cls.type},
                       {"pd", cls.pd}};
  return j;
}

Json idealGensJson(const Ideal& I) {
  Json arr = Json::array();
  for (const auto& g : I.groebnerBasis()) arr.push_back(toString(g));
  return arr;
}

Json splittingJson(const SplittingData& sd) {
  Json j;
  Json levels = Json::array();
  for (const auto& [e, ideal] : sd.levels) {
    levels.push_back(Json{{"e", e}, {"gb", idealGensJson(ideal)}});
  }
  j["levels"] = levels;
  j["stabilized"] = sd.stabilizedPrime.has_value();
  if (sd.stabilizedPrime) {
    j["prime"] = idealGensJson(*sd.stabilizedPrime);
    j["sdim"] = *sd.sdim;
  }
  if (!sd.candidateCompatible.empty()) {
    j["candidateCompatible"] = sd.candidateCompatible;
  }
  if (!sd.note.empty()) j["note"] = sd.note;
  return j;
}

Json sequenceJson(const FPureSequence& seq, const RingFile& ring) {
  Json j;
  Json forms = Json::array();
  for (const auto& f : seq.forms) forms.push_back(toString(f));
  j["forms"] = forms;
  j["length"] = seq.forms.size();
  Json steps = Json::array();
  for (const auto& s : seq.steps) {
    steps.push_back(Json{{"ell", toString(s.ell)},
                         {"witnessMonomial", toString(*ring.ctx, s.witnessMonomial)},
                         {"primeTestHeuristic", s.primeTestHeuristic},
                         {"quotientFPure", s.quotientFPure},
                         {"quotientTopA", s.quotientTopA},
                         {"quotientFpt", rationalJson(s.quotientFpt)}});
  }
  j["steps"] = steps;
  return j;
}

struct VerifyCheck {
  std::string id;
  std::string description;
  bool pass;
  std::string detail;
};

Json verifyJson(const std::vector<VerifyCheck>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    arr.push_back(Json{{"id", c.id},
                       {"description", c.description},
                       {"pass", c.pass},
                       {"detail", c.detail}});
  }
  return arr;
}

std::vector<VerifyCheck> verifySuite(const RingFile& ring,
                                     const ReportOptions& opt, Json& sections) {
  const CtxPtr& ctx = ring.ctx;
  std::int64_t p = ctx->p;
  int n = ctx->nvars();
  FrobeniusContext fc(ctx, ring.ideal);
  fc.budget.cells = opt.budgetCells;

  FPurity purity = isFPure(fc);
  if (!purity.pure) {
    throw PreconditionError("verify requires an F-pure ring");
  }
  sections["fpurity"] = fpurityJson(purity);

  std::vector<std::int64_t> b, nu, qs;
  for (int e = 1; e <= opt.maxE; ++e) {
    std::int64_t q = fc.q(e);
    try {
      b.push_back(bInvariant(fc, e));
    } catch (const NotSplitError&) {
      throw InvariantViolation(
          "F-pure ring reported unsplit at level " + std::to_string(e));
    }
    nu.push_back(nuInvariant(fc, e));
    qs.push_back(q);
  }
  AInvariants aInv = aInvariants(ring.ideal);
  sections["aInvariants"] = aInvJson(aInv);
  GorensteinFptCertificate cert = gorensteinFpt(fc);
  Classification cls = classify(ring.ideal);
  GradedComplex complex = freeResolution(ring.ideal);
  BettiTable betti = bettiTable(complex);
  sections["betti"] = bettiJson(betti, cls);
  FThresholdReport rep = fptReport(fc, opt.maxE, &aInv);
  sections["fpt"] = fptJson(rep);
  SplittingData sd = splittingPrimeEstimate(fc, opt.maxE);
  sections["splitting"] = splittingJson(sd);

  std::vector<VerifyCheck> checks;
  auto record = [&](const std::string& id, const std::string& desc, bool pass,
                    const std::string& detail) {
    checks.push_back({id, desc, pass, detail});
  };

  // V1: Fedder criterion and level consistency.
  {
    std::ostringstream d;
    d << "witness " << toString(*purity.witness);
    record("V1", "F-purity via Fedder with computable b at level 1", true,
           d.str());
  }
  // V2: b-sequence growth and bounds.
  {
    bool pass = true;
    std::ostringstream d;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (!(0 <= b[k] && b[k] <= nu[k] && nu[k] <= n * (qs[k] - 1))) {
        pass = false;
        d << "bounds fail at e=" << k + 1 << "; ";
      }
      if (k + 1 < b.size() && p * b[k] > b[k + 1]) {
        pass = false;
        d << "p*b(p^e) <= b(p^{e+1}) fails at e=" << k + 1 << "; ";
      }
    }
    if (cert.principalityVerified && !b.empty()) {
      Rational lower(b.back(), qs.back());
      Rational gap = cert.fptExact - lower;
      if (gap < Rational(0) || gap > Rational(n, qs.back())) {
        pass = false;
        d << "Gorenstein sanity band violated; ";
      }
    }
    d << "b = [";
    for (auto v : b) d << v << " ";
    d << "], nu = [";
    for (auto v : nu) d << v << " ";
    d << "]";
    record("V2", "p*b(p^e) <= b(p^{e+1}), 0 <= b <= nu <= n(q-1)", pass,
           d.str());
  }
  // V3: a-invariant inequalities.
  {
    bool pass = true;
    std::ostringstream d;
    for (const auto& [i, a] : aInv.values) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        if (Rational(b[k], qs[k]) > Rational(-a)) {
          pass = false;
          d << "b/q > -a_" << i << " at e=" << k + 1 << "; ";
        }
        if ((1 - qs[k]) * a > nu[k]) {
          pass = false;
          d << "(1-q)a_" << i << " > nu at e=" << k + 1 << "; ";
        }
      }
      if (cert.principalityVerified && cert.fptExact > Rational(-a)) {
        pass = false;
        d << "fpt > -a_" << i << "; ";
      }
    }
    if (d.str().empty()) d << "all finite a_i respected the bounds";
    record("V3", "fptLower(e) <= -a_i and (1-p^e) a_i <= nu(p^e)", pass,
           d.str());
  }
  // V4: exact Gorenstein fpt.
  {
    if (cls.isGorenstein) {
      std::int64_t ad = *aInv.top();
      bool pass = cert.principalityVerified &&
                  cert.fptExact == Rational(-ad) &&
                  cert.degF == (p - 1) * (n + ad);
      std::ostringstream d;
      d << "fptExact = " << cert.fptExact.str() << ", -a_d = " << -ad
        << ", deg f = " << cert.degF << ", (p-1)(n+a_d) = "
        << (p - 1) * (n + ad);
      record("V4", "Gorenstein: fpt = -a_d and deg f = (p-1)(n+a)", pass,
             d.str());
    } else {
      record("V4", "Gorenstein: fpt = -a_d and deg f = (p-1)(n+a)", true,
             "not Gorenstein; skipped");
    }
  }
  // V5: projective dimension and regularity bounds.
  {
    std::optional<Rational> fptForBound;
    std::string fptKind;
    if (cert.principalityVerified) {
      fptForBound = cert.fptExact;
      fptKind = "exact";
    } else if (!b.empty()) {
      fptForBound = Rational(b.back(), qs.back());
      fptKind = "lower bound (weaker check)";
    }
    HomologicalBoundsReport hb = homologicalBounds(ring.ideal, fptForBound);
    bool pass = hb.pdBoundHolds && (!fptForBound || hb.regBoundHolds);
    std::ostringstream d;
    d << "pd = " << hb.pd << " <= mu = " << hb.mu << "; reg = " << hb.reg
      << " <= dim - fpt = " << hb.dim << " - " << (fptForBound ? fptForBound->str() : "?")
      << " (fpt " << fptKind << ")";
    bool corOk = true;
    for (const auto& [i, a] : aInv.values) {
      (void)i;
      if (a == 0) {
        if (sd.stabilizedPrime) {
          if (*sd.sdim != 0) corOk = false;
        } else {
          d << "; a_i = 0 but chain unstabilized, sdim unchecked";
        }
      }
    }
    pass = pass && corOk;
    record("V5", "pd <= mu(I), reg <= dim - fpt, and a_i = 0 forces sdim = 0",
           pass, d.str());
  }
  // V6: splitting chain and compatible-quotient comparison.
  {
    bool pass = true;
    std::ostringstream d;
    if (sd.stabilizedPrime) {
      QuotientFptComparison cmp =
          fptOfQuotientCheck(fc, *sd.stabilizedPrime, opt.maxE);
      pass = cmp.holds;
      d << "b_R <= b_{R/P} per level; sdim = " << *sd.sdim;
      if (!b.empty() && Rational(b.back(), qs.back()) > Rational(*sd.sdim)) {
        pass = false;
        d << "; fptLower exceeds sdim";
      }
      sections["quotientComparison"] =
          Json{{"bR", cmp.bR}, {"bQuotient", cmp.bQuotient},
               {"quotientDim", cmp.quotientDim}, {"holds", cmp.holds}};
    } else {
      d << "chain not stabilized within maxE; level checks only";
    }
    record("V6", "splitting chain, compatibility, fpt(R) <= fpt(R/P) <= sdim",
           pass, d.str());
  }
  return checks;
}

}  // namespace

CommandResult runCommand(const std::string& cmd, const RingFile& ring,
                         const ReportOptions& opt) {
  CommandResult result;
  Json& j = result.report;
  j["schemaVersion"] = kReportSchemaVersion;
  j["command"] = cmd;
  j["ring"] = ringJson(ring);
  std::ostringstream out;

  const CtxPtr& ctx = ring.ctx;
  auto makeContext = [&]() {
    FrobeniusContext fc(ctx, ring.ideal);
    fc.budget.cells = opt.budgetCells;
    return fc;
  };

  if (cmd == "check") {
    FrobeniusContext fc = makeContext();
    FPurity purity = isFPure(fc);
    j["fpurity"] = fpurityJson(purity);
    if (purity.pure) {
      out << "F-pure: yes (witness " << toString(*purity.witness) << ")";
    } else {
      out << "not F-pure";
      result.exitCode = 3;
    }
  } else if (cmd == "fpt") {
    FrobeniusContext fc = makeContext();
    AInvariants aInv = aInvariants(ring.ideal);
    FThresholdReport rep = fptReport(fc, opt.maxE, &aInv);
    j["fpurity"] = fpurityJson(isFPure(fc));
    j["fpt"] = fptJson(rep);
    j["aInvariants"] = aInvJson(aInv);
    out << "fpt lower bounds:";
    for (std::size_t k = 0; k < rep.fptLower.size(); ++k) {
      out << " " << rep.fptLower[k].str();
    }
    if (rep.fptUpperFromA) out << "; upper " << rep.fptUpperFromA->str();
    if (rep.gorensteinExact) {
      out << "; exact " << rep.gorensteinExact->str();
    }
    if (rep.partial) out << " (partial: budget)";
  } else if (cmd == "nu") {
    FrobeniusContext fc = makeContext();
    Json nuJ;
    nuJ["eLevels"] = Json::array();
    nuJ["nu"] = Json::array();
    nuJ["cEstimates"] = Json::array();
    out << "nu:";
    for (int e = 1; e <= opt.maxE; ++e) {
      std::int64_t nu = nuInvariant(fc, e);
      nuJ["eLevels"].push_back(e);
      nuJ["nu"].push_back(nu);
      nuJ["cEstimates"].push_back(rationalJson(Rational(nu, fc.q(e))));
      out << " nu(" << fc.q(e) << ")=" << nu;
    }
    j["nu"] = nuJ;
  } else if (cmd == "ainv") {
    AInvariants aInv = aInvariants(ring.ideal);
    j["aInvariants"] = aInvJson(aInv);
    out << "a-invariants (dim " << aInv.dim << "):";
    for (const auto& [i, a] : aInv.values) out << " a_" << i << "=" << a;
  } else if (cmd == "betti") {
    GradedComplex C = freeResolution(ring.ideal);
    BettiTable B = bettiTable(C);
    Classification cls = classify(ring.ideal);
    j["betti"] = bettiJson(B, cls);
    FrobeniusContext fc = makeContext();
    FPurity purity = isFPure(fc);
    j["fpurity"] = fpurityJson(purity);
    std::optional<Rational> fpt;
    if (purity.pure) {
      GorensteinFptCertificate cert = gorensteinFpt(fc);
      if (cert.principalityVerified) fpt = cert.fptExact;
    }
    HomologicalBoundsReport hb = homologicalBounds(ring.ideal, fpt);
    j["bounds"] = Json{{"pd", hb.pd},        {"mu", hb.mu},
                       {"reg", hb.reg},      {"dim", hb.dim},
                       {"pdBoundHolds", hb.pdBoundHolds},
                       {"regBoundHolds", hb.regBoundHolds},
                       {"asserted", hb.asserted}};
    out << "pd=" << B.pd << " reg=" << B.reg << " dim=" << cls.dim
        << (cls.isGorenstein ? " Gorenstein" : cls.isCM ? " CM" : " not CM");
  } else if (cmd == "splitting") {
    FrobeniusContext fc = makeContext();
    SplittingData sd = splittingPrimeEstimate(fc, opt.maxE);
    j["splitting"] = splittingJson(sd);
    if (sd.stabilizedPrime) {
      out << "splitting prime candidate stabilized; sdim = " << *sd.sdim;
    } else {
      out << "no stabilization within maxE (" << sd.note << ")";
    }
  } else if (cmd == "compatible") {
    FrobeniusContext fc = makeContext();
    std::vector<Polynomial> extra = ring.ideal.generators();
    for (const auto& s : opt.withGens) {
      extra.push_back(parsePolynomial(ctx, s));
    }
    Ideal Jt(ctx, std::move(extra));
    std::vector<bool> levels = isCompatible(fc, Jt, opt.maxE);
    j["compatible"] = Json{{"levels", levels}};
    bool all = true;
    for (bool v : levels) all = all && v;
    out << (all ? "compatible up to maxE" : "not compatible");
    if (all && !Jt.isUnit()) {
      QuotientFptComparison cmp = fptOfQuotientCheck(fc, Jt, opt.maxE);
      j["quotientComparison"] =
          Json{{"bR", cmp.bR}, {"bQuotient", cmp.bQuotient},
               {"quotientDim", cmp.quotientDim}, {"holds", cmp.holds}};
      out << "; b_R <= b_{R/J} holds, dim R/J = " << cmp.quotientDim;
    }
  } else if (cmd == "sequence") {
    FrobeniusContext fc = makeContext();
    try {
      FPureSequence seq = fpureSequence(fc, opt.seed, opt.maxE);
      j["sequence"] = sequenceJson(seq, ring);
      out << "F-pure regular sequence of length " << seq.forms.size() << ":";
      for (const auto& f : seq.forms) out << " " << toString(f);
    } catch (const FieldTooSmallWithPartial& e) {
      Json partial = Json::array();
      for (const auto& f : e.partialForms) partial.push_back(toString(f));
      j["sequence"] = Json{{"error", e.what()}, {"partialForms", partial}};
      out << "field too small; partial length " << e.partialForms.size();
      result.exitCode = 3;
    }
  } else if (cmd == "verify") {
    std::vector<VerifyCheck> checks = verifySuite(ring, opt, j);
    j["verification"] = verifyJson(checks);
    bool all = true;
    for (const auto& c : checks) {
      out << c.id << " " << (c.pass ? "PASS" : "FAIL") << "  "
          << c.description << " (" << c.detail << ")\n";
      all = all && c.pass;
    }
    if (!all) result.exitCode = 1;
  } else {
    throw ArgumentError("unknown command '" + cmd + "'");
  }
  result.summary = out.str();
  return result;
}

const std::vector<CorpusEntry>& builtinCorpus() {
  static const std::vector<CorpusEntry> corpus = {
      {"squarefree3_p2", 2, {"x", "y", "z"}, {"x*y", "x*z", "y*z"}},
      {"squarefree3_p3", 3, {"x", "y", "z"}, {"x*y", "x*z", "y*z"}},
      {"squarefree3_p5", 5, {"x", "y", "z"}, {"x*y", "x*z", "y*z"}},
      {"squarefree3_p7", 7, {"x", "y", "z"}, {"x*y", "x*z", "y*z"}},
      {"xy_p2", 2, {"x", "y"}, {"x*y"}},
      {"xy_p5", 5, {"x", "y"}, {"x*y"}},
      {"quadric_p3", 3, {"x", "y", "z"}, {"x^2 + y*z"}},
      {"quadric_p5", 5, {"x", "y", "z"}, {"x^2 + y*z"}},
      {"quadric_p7", 7, {"x", "y", "z"}, {"x^2 + y*z"}},
      {"fermat_p7", 7, {"x", "y", "z"}, {"x^3 + y^3 + z^3"}},
      {"fermat_p13", 13, {"x", "y", "z"}, {"x^3 + y^3 + z^3"}},
      {"polyring2_p5", 5, {"x", "y"}, {}},
      {"noncm4_p3", 3, {"x", "y", "z", "w"},
       {"x*z", "x*w", "y*z", "y*w"}},
  };
  return corpus;
}

RingFile corpusRing(const CorpusEntry& entry) {
  CtxPtr ctx = makeRing(entry.p, entry.vars);
  std::vector<Polynomial> gens;
  for (const auto& s : entry.gens) gens.push_back(parsePolynomial(ctx, s));
  return RingFile{entry.name, ctx, Ideal(ctx, std::move(gens))};
}

}  // namespace fthresh
