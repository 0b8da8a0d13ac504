#include "dmod/report.hpp"

#include "dmod/ext.hpp"
#include "dmod/hilbert.hpp"
#include "dmod/indecomp.hpp"
#include "dmod/parse.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace dmod {

using Json = nlohmann::ordered_json;

namespace {

Json header(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(toString(q));
  return out;
}

Json polynomialJson(const Polynomial& p) { return rationals(p.coefficients()); }

Json pairs(const std::set<std::pair<int, int>>& s) {
  Json out = Json::array();
  for (const auto& [a, b] : s) out.push_back({a, b});
  return out;
}

Json windowJson(const Window& w) { return {w.lo, w.hi}; }

template <typename T>
std::string joined(const std::vector<T>& v, const std::string& sep = " ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

std::string pairText(const std::set<std::pair<int, int>>& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, b] : s) {
    out << (first ? "" : " ") << "(" << a << "," << b << ")";
    first = false;
  }
  return out.str();
}

std::string dimsText(const std::vector<int>& dims) {
  std::ostringstream out;
  for (int d : dims) out << d;
  return out.str();
}

}  // namespace

Window parseWindow(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("window must look like lo..hi (got '" + text + "')");
  Window w;
  std::size_t used = 0;
  const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
  try {
    w.lo = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument("");
    w.hi = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("window must look like lo..hi (got '" + text + "')");
  }
  if (w.lo > w.hi) throw std::invalid_argument("window is empty: " + text);
  return w;
}

Report semigroupReport(const ReportConfig& config) {
  const NumericalSemigroup gamma(config.generators);
  Report r;
  r.json = header("semigroup");
  const int f = gamma.frobenius();
  const int reach = std::max(f, 0) + gamma.multiplicity();
  r.json["label"] = gamma.label();
  r.json["generators"] = gamma.generators();
  r.json["gaps"] = gamma.gaps();
  r.json["frobenius"] = f;
  r.json["genus"] = gamma.gaps().size();
  r.json["multiplicity"] = gamma.multiplicity();
  Json sigma = Json::array();
  std::vector<std::string> sigmaText;
  for (int w = -reach; w <= reach; ++w) {
    sigma.push_back({{"w", w}, {"sigma", gamma.sigma(w)}, {"omega", gamma.omega(w)}});
    sigmaText.push_back(std::to_string(gamma.sigma(w)));
  }
  r.json["sigma"] = sigma;
  std::ostringstream t;
  t << "semigroup " << gamma.label() << "\n"
    << "  minimal generators: " << joined(gamma.generators()) << "\n"
    << "  gaps: " << (gamma.gaps().empty() ? "none" : joined(gamma.gaps())) << "\n"
    << "  Frobenius number " << f << ", genus " << gamma.gaps().size() << ", multiplicity " << gamma.multiplicity()
    << "\n"
    << "  sigma(w) for w = " << -reach << ".." << reach << ": " << joined(sigmaText) << "\n";
  const auto gp = gammaPrime(gamma, gammaPrimeRequiredBound(gamma), !gamma.isNaturals());
  Json g;
  g["s"] = gp.s;
  g["gapPoints"] = pairs(gp.gapPoints);
  if (!gamma.isNaturals()) g["minimalGenerators"] = pairs(gp.minimalGenerators);
  g["bernsteinOnset"] = bernsteinOnset(gamma);
  r.json["gammaPrime"] = g;
  t << "  Gamma': s = " << gp.s << ", gap points " << (gp.gapPoints.empty() ? "none" : pairText(gp.gapPoints)) << "\n";
  if (!gamma.isNaturals()) t << "  Hilbert basis of Gamma': " << pairText(gp.minimalGenerators) << "\n";
  t << "  dim B^n = (n+1)(n+2)/2 - " << gp.s << " for n >= " << bernsteinOnset(gamma) << "\n";
  r.text = t.str();
  return r;
}

Report operatorsReport(const ReportConfig& config, const std::optional<std::string>& op) {
  const NumericalSemigroup gamma(config.generators);
  Report r;
  r.json = header("operators");
  r.json["label"] = gamma.label();
  std::ostringstream t;
  t << "generators of D for " << gamma.label() << "\n";
  Json gens = Json::array();
  for (const auto& c : generatorComponentsOfD(gamma)) {
    const auto sym = symbol(c.toOperator());
    gens.push_back({{"degree", c.degree},
                    {"order", c.order()},
                    {"euler", polynomialJson(c.euler)},
                    {"operator", toString(c.toOperator())},
                    {"symbol", {sym[0].tExp, sym[0].xiExp}}});
    t << "  degree " << std::setw(3) << c.degree << "  order " << c.order() << "  " << toString(c) << "  =  "
      << toString(c.toOperator()) << "\n";
  }
  r.json["generators"] = gens;
  if (op) {
    const auto p = parseOperator(*op, &gamma);
    Json j;
    j["input"] = *op;
    j["normalForm"] = toString(p);
    j["inD"] = isMember(p, gamma);
    Json parts = Json::array();
    for (const auto& c : decompose(p)) parts.push_back({{"degree", c.degree}, {"euler", polynomialJson(c.euler)}});
    j["components"] = parts;
    if (!p.isZero()) j["bernsteinDegree"] = p.bernsteinDegree();
    r.json["operator"] = j;
    t << "operator " << *op << "\n  normal form: " << toString(p) << "\n  in D: " << (isMember(p, gamma) ? "yes" : "no")
      << "\n";
    for (const auto& c : decompose(p)) t << "  component " << toString(c) << "\n";
    if (!p.isZero()) t << "  Bernstein degree: " << p.bernsteinDegree() << "\n";
  }
  r.text = t.str();
  return r;
}

Report grdReport(const ReportConfig& config) {
  const NumericalSemigroup gamma(config.generators);
  const auto check = checkGrGenerators(gamma);
  Report r;
  r.json = header("grd");
  r.json["label"] = gamma.label();
  r.json["equal"] = check.equal;
  r.json["fromSymbols"] = pairs(check.fromSymbols);
  r.json["fromGammaPrime"] = pairs(check.fromGammaPrime);
  r.json["pruned"] = check.prunedCount;
  std::ostringstream t;
  t << "gr D for " << gamma.label() << "\n"
    << "  symbols of the generators of D: " << pairText(check.fromSymbols) << " (" << check.prunedCount
    << " redundant dropped)\n"
    << "  Hilbert basis of Gamma':        " << pairText(check.fromGammaPrime) << "\n"
    << "  equal: " << (check.equal ? "yes" : "no") << "\n";
  r.text = t.str();
  r.exitCode = check.equal ? 0 : 1;
  return r;
}

Report hilbertReport(const ReportConfig& config, const std::string& ideal) {
  const NumericalSemigroup gamma(config.generators);
  LeftIdealPresentation presentation(gamma, parseOperatorList(ideal, &gamma));
  const auto dm = dimensionMultiplicity(presentation, config.nMax);
  Report r;
  r.json = header("hilbert");
  r.json["label"] = gamma.label();
  Json gens = Json::array();
  for (const auto& g : presentation.generators()) gens.push_back(toString(g));
  r.json["ideal"] = gens;
  r.json["nMax"] = static_cast<int>(dm.profile.dims.size()) - 1;
  r.json["profile"] = dm.profile.dims;
  r.json["exact"] = dm.profile.exact;
  r.json["stabilized"] = dm.profile.stabilized;
  r.json["d"] = dm.d;
  r.json["e"] = dm.e;
  r.json["m"] = dm.fit.period;
  r.json["onset"] = dm.fit.onset;
  r.json["zeroModule"] = dm.fit.zeroModule;
  Json polys = Json::array();
  for (const auto& p : dm.fit.polys) polys.push_back(polynomialJson(p));
  r.json["polynomials"] = polys;
  r.json["numerator"] = polynomialJson(dm.fit.numerator);
  r.json["holonomic"] = dm.fit.zeroModule || dm.d == 1;
  std::ostringstream t;
  t << "D/I over " << gamma.label() << ", I generated by " << (gens.empty() ? "nothing (I = 0)" : ideal) << "\n"
    << "  dim M_n, n = 0.." << dm.profile.dims.size() - 1 << ": " << joined(dm.profile.dims) << "\n"
    << "  " << (dm.profile.exact ? "exact (no saturation)" : "saturated") << (dm.profile.stabilized ? "" : ", NOT stabilized")
    << "\n"
    << "  d = " << dm.d << ", e = " << dm.e << ", period m = " << dm.fit.period << ", valid from n = " << dm.fit.onset
    << "\n";
  for (std::size_t i = 0; i < dm.fit.polys.size(); ++i)
    t << "  P_" << i << "(n) = " << toString(dm.fit.polys[i], "n") << "\n";
  t << "  holonomic: " << (dm.fit.zeroModule || dm.d == 1 ? "yes" : "no") << "\n";
  r.text = t.str();
  return r;
}

Report simplesReport(const ReportConfig& config) {
  const NumericalSemigroup gamma(config.generators);
  const Window window = config.window;
  Report r;
  r.json = header("simples");
  r.json["label"] = gamma.label();
  r.json["window"] = windowJson(window);
  r.json["inner"] = windowJson(window.inner());
  std::ostringstream t;
  t << "graded simple modules over D(" << gamma.label() << "), window " << window.lo << ".." << window.hi
    << ", certified on " << window.inner().lo << ".." << window.inner().hi << "\n";

  std::vector<std::pair<std::string, ModulePtr>> models;
  std::vector<Rational> alphas{Rational(0)};
  for (const auto& a : config.alphas)
    if (a != 0) alphas.push_back(a);
  for (const auto& a : alphas) models.emplace_back("M_" + toString(a), buildMalpha(gamma, a));
  models.emplace_back("M_inf", buildMinfty(gamma));
  models.emplace_back("T/A", buildTmodA(gamma));
  Json mods = Json::array();
  for (const auto& [name, m] : models) {
    const auto cert = isSimpleCertified(*m, window);
    const auto dims = pieceDimensions(*m, window);
    Json ranks = Json::array();
    for (const auto& [d, k] : cert.closureRanks) ranks.push_back({d, k});
    mods.push_back({{"name", name},
                    {"dims", dims},
                    {"simple", toString(cert.verdict)},
                    {"reason", cert.reason},
                    {"closureRanks", ranks},
                    {"torsion", isZeroOn(*torsionSubmodule(m, window), window) ? "free" : "torsion"}});
    t << "  " << std::left << std::setw(8) << name << dimsText(dims) << "  simple: " << toString(cert.verdict) << "\n";
  }
  r.json["modules"] = mods;

  Json locs = Json::array();
  for (const auto& a : alphas) {
    const auto loc = checkLocalization(gamma, a, window);
    locs.push_back({{"alpha", toString(a)},
                    {"isomorphicToN", loc.isomorphic},
                    {"torsionFree", loc.torsionFree},
                    {"dims", loc.localizedDims}});
    t << "  S^-1 M_" << toString(a) << " = N_" << toString(a) << ": " << (loc.isomorphic ? "yes" : "no") << "\n";
  }
  r.json["localization"] = locs;
  const bool minftyVanishes = isZeroOn(*localize(buildMinfty(gamma)), window);
  r.json["localizedMinftyVanishes"] = minftyVanishes;
  t << "  S^-1 M_inf = 0: " << (minftyVanishes ? "yes" : "no") << "\n";
  const bool minftyIsTwist = isomorphicOnWindow(*buildMinfty(gamma), *twist(buildTmodA(gamma), -1), window);
  r.json["minftyIsomorphicToTmodAShift"] = minftyIsTwist;
  t << "  M_inf = (T/A)[-1]: " << (minftyIsTwist ? "yes" : "no") << "\n";
  r.text = t.str();
  return r;
}

Report extTableReport(const ReportConfig& config) {
  const NumericalSemigroup gamma(config.generators);
  const auto entries = extTable(gamma, config.alphas, config.window);
  Report r;
  r.json = header("ext-table");
  r.json["label"] = gamma.label();
  r.json["window"] = windowJson(config.window);
  Json list = Json::array();
  bool allMatch = true;
  for (const auto& e : entries) {
    Json j{{"source", e.source.name()},
           {"target", e.target.name()},
           {"hom", e.homDim},
           {"ext1", e.ext1Dim},
           {"expected", e.expected},
           {"matches", e.ext1Dim == e.expected},
           {"windowStable", e.windowStable}};
    j["degree"] = e.gradedDegree ? Json(*e.gradedDegree) : Json(nullptr);
    if (e.generalExt1) {
      j["generalHom"] = *e.generalHom;
      j["generalExt1"] = *e.generalExt1;
    }
    allMatch = allMatch && e.ext1Dim == e.expected && e.windowStable && e.agrees();
    list.push_back(j);
  }
  r.json["entries"] = list;
  r.json["allMatch"] = allMatch;

  std::ostringstream t;
  t << "dim Ext^1(M_a, M_b) in degree 0 over the Weyl algebra; rows a, columns b\n";
  std::vector<SimpleLabel> cols;
  for (const auto& e : entries)
    if (std::find(cols.begin(), cols.end(), e.target) == cols.end()) cols.push_back(e.target);
  t << "  " << std::setw(6) << "";
  for (const auto& c : cols) t << std::setw(6) << c.name();
  t << "\n";
  for (std::size_t i = 0; i < entries.size(); i += cols.size()) {
    t << "  " << std::setw(6) << entries[i].source.name();
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto& e = entries[i + k];
      t << std::setw(6) << (std::to_string(e.ext1Dim) + (e.ext1Dim == e.expected && e.agrees() ? "" : "!"));
    }
    t << "\n";
  }
  std::size_t direct = 0;
  for (const auto& e : entries) direct += e.generalExt1.has_value();
  if (direct > 0)
    t << "  " << direct << " cells with source M_a recomputed over " << gamma.label() << "\n";
  t << "  nonzero exactly at (0,inf), (inf,0) and a = b in (0,1): " << (allMatch ? "yes" : "no") << "\n";
  r.text = t.str();
  r.exitCode = allMatch ? 0 : 1;
  return r;
}

Report indecompReport(const ReportConfig& config, const IndecompRequest& request) {
  std::optional<Indecomposable> m;
  if (request.kind == "word")
    m = buildIndecomposable(word(parseBeta(request.beta), request.n), config.nMax);
  else if (request.kind == "power")
    m = buildPowerIndecomposable(request.alpha, request.n, config.nMax);
  else
    throw std::invalid_argument("--kind must be word or power");
  const auto up = compositionSeries(m->model, config.window, SearchOrder::Ascending);
  const auto down = compositionSeries(m->model, config.window, SearchOrder::Descending);
  const auto cert = isIndecomposableCertified(m->model, config.window);

  Report r;
  r.json = header("indecomp");
  r.json["label"] = m->label;
  r.json["generator"] = toString(m->generator.toOperator());
  r.json["window"] = windowJson(config.window);
  r.json["d"] = m->hilbert.d;
  r.json["e"] = m->hilbert.e;
  r.json["dims"] = pieceDimensions(*m->model, config.window);
  Json factors = Json::array();
  for (const auto& f : up.factors)
    factors.push_back({{"simple", f.label.name()}, {"twist", f.twist}, {"identified", f.identified}});
  r.json["compositionSeries"] = factors;
  r.json["complete"] = up.complete;
  r.json["jordanHolderAgrees"] = up.multiset() == down.multiset();
  r.json["indecomposable"] = toString(cert.verdict);
  r.json["endDim"] = cert.endDim;
  r.json["endModRadDim"] = cert.semisimpleDim;
  r.json["reason"] = cert.reason;

  std::ostringstream t;
  t << m->label << " = D/D(" << toString(m->generator.toOperator()) << ") over the Weyl algebra\n"
    << "  d = " << m->hilbert.d << ", e = " << m->hilbert.e << "\n"
    << "  piece dims on " << config.window.lo << ".." << config.window.hi << ": "
    << dimsText(pieceDimensions(*m->model, config.window)) << "\n"
    << "  composition series (socle first):";
  for (const auto& f : up.factors) t << " " << f.name();
  t << (up.complete ? "" : "  [incomplete: " + up.note + "]") << "\n"
    << "  same factors in the other search order: " << (up.multiset() == down.multiset() ? "yes" : "no") << "\n"
    << "  indecomposable: " << toString(cert.verdict) << " (" << cert.reason << "; dim End_0 = " << cert.endDim
    << ")\n";
  r.text = t.str();
  return r;
}

Report verifyReport(const ReportConfig& config, const std::vector<int>& only) {
  VerifyConfig vc;
  vc.generators = config.generators;
  vc.window = config.window;
  vc.nMax = config.nMax;
  vc.alphas = config.alphas;
  vc.seed = config.seed;
  std::vector<CriterionResult> results;
  if (only.empty())
    results = runCriteria(vc);
  else
    for (int id : only) results.push_back(runCriterion(id, vc));

  Report r;
  r.json = header("verify");
  r.json["label"] = NumericalSemigroup(config.generators).label();
  r.json["seed"] = config.seed;
  Json list = Json::array(), failures = Json::array();
  std::ostringstream t;
  int passed = 0;
  double total = 0;
  for (const auto& c : results) {
    total += c.seconds;
    passed += c.passed ? 1 : 0;
    list.push_back({{"id", c.id},
                    {"title", c.title},
                    {"passed", c.passed},
                    {"budgetSeconds", c.budgetSeconds},
                    {"detail", c.detail}});
    if (config.timings) list.back()["seconds"] = std::round(c.seconds * 1000) / 1000;
    for (const auto& f : c.failures) failures.push_back({{"id", c.id}, {"message", f}});
    t << (c.passed ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << c.detail;
    if (config.timings) t << ", " << std::fixed << std::setprecision(2) << c.seconds << " s";
    t << ")\n";
    for (const auto& f : c.failures) t << "      " << f << "\n";
  }
  r.json["criteria"] = list;
  r.json["failures"] = failures;
  r.json["passed"] = passed == static_cast<int>(results.size());
  t << passed << "/" << results.size() << " criteria passed";
  if (config.timings) t << " in " << std::fixed << std::setprecision(2) << total << " s";
  t << "\n";
  r.text = t.str();
  r.exitCode = passed == static_cast<int>(results.size()) ? 0 : 1;
  return r;
}

}  // namespace dmod
