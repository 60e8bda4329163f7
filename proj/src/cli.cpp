#include "apw/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "apw/errors.hpp"

namespace apw {

using json = nlohmann::ordered_json;

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const input_error*>(&error)) return kExitInputError;
  if (dynamic_cast<const undetermined_error*>(&error)) return kExitUndetermined;
  return kExitInternal;  // structural_error, internal_error, anything else
}

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("APW_LOG");
    if (!env) return LogLevel::Quiet;
    const std::string v(env);
    if (v == "debug") return LogLevel::Debug;
    if (v == "info") return LogLevel::Info;
    return LogLevel::Quiet;
  }();
  return level;
}

void log_info(const std::string& message) {
  if (log_level() >= LogLevel::Info) std::cerr << "[apw] " << message << "\n";
}

void log_debug(const std::string& message) {
  if (log_level() >= LogLevel::Debug) std::cerr << "[apw] " << message << "\n";
}

namespace {

Poly parse_point_form(const std::string& text) {
  Poly f = parse_poly(text);
  if (f.side() != RingSide::Point)
    throw input_error("expected a form in the x-variables");
  if (!f.is_homogeneous() || f.is_zero())
    throw input_error("expected a nonzero homogeneous form");
  return f;
}

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << " ";
    os << v[i];
  }
  return os.str();
}

LinearFormPoint parse_point(const std::string& text) {
  std::vector<Rational> coords;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      coords.push_back(parse_rational(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) coords.push_back(parse_rational(cur));
  if (coords.empty()) throw input_error("empty point");
  return LinearFormPoint(std::move(coords));
}

json verdict_json(const FermatVerdict& v) {
  json out;
  out["tag"] = to_string(v.tag);
  if (v.tag == FermatVerdict::Tag::CertifiedNot)
    out["witness"] = to_string(v.witness);
  if (v.tag == FermatVerdict::Tag::Undetermined) out["reason"] = v.reason;
  if (!v.points.empty()) {
    json pts = json::array();
    for (const auto& p : v.points) {
      json c = json::array();
      for (const auto& x : p.coords) c.push_back(x.get_str());
      pts.push_back(c);
    }
    out["points"] = pts;
    json ls = json::array();
    for (const auto& l : v.lambdas) ls.push_back(l.get_str());
    out["lambdas"] = ls;
  }
  if (v.irrational) out["irrational"] = true;
  return out;
}

void print_verdict_text(const FermatVerdict& v, std::ostream& out) {
  out << "verdict: " << to_string(v.tag) << "\n";
  if (v.tag == FermatVerdict::Tag::CertifiedNot)
    out << "witness: " << to_string(v.witness) << "\n";
  if (v.tag == FermatVerdict::Tag::Undetermined)
    out << "reason: " << v.reason << "\n";
  if (!v.points.empty()) {
    out << "decomposition:\n";
    for (std::size_t i = 0; i < v.points.size(); ++i)
      out << "  lambda = " << v.lambdas[i].get_str() << "  at "
          << to_string(v.points[i]) << "\n";
  }
  if (v.irrational)
    out << "decomposition exists over the algebraic closure "
           "(squarefree minimal polynomial certificate)\n";
}

int verdict_exit(const FermatVerdict& v) {
  switch (v.tag) {
    case FermatVerdict::Tag::CertifiedFermat: return kExitOk;
    case FermatVerdict::Tag::CertifiedNot: return kExitCertifiedNegative;
    case FermatVerdict::Tag::Undetermined: return kExitUndetermined;
  }
  return kExitInternal;
}

}  // namespace

int cmd_perp(const std::string& poly_text, const RunConfig& config,
             std::ostream& out) {
  const Poly f = parse_point_form(poly_text);
  const ApolarIdeal ideal = perp(f);
  const std::vector<int> hf = hilbert_function(ideal);
  const auto gens = minimal_generators(ideal);
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["form"] = to_string(f);
    doc["num_vars"] = f.num_vars();
    doc["degree"] = f.degree();
    doc["hilbert_function"] = hf;
    json dims = json::array();
    for (int e = 1; e <= ideal.socle_degree; ++e)
      dims.push_back(ideal.dim(e));
    doc["perp_dims"] = dims;
    json g;
    for (const auto& [deg, basis] : gens) {
      json list = json::array();
      for (const Poly& p : basis) list.push_back(to_string(p));
      g[std::to_string(deg)] = list;
    }
    doc["minimal_generators"] = g;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "form: " << to_string(f) << "  (degree " << f.degree() << ", "
      << f.num_vars() << " variables)\n";
  out << "hilbert_function: " << join_ints(hf) << "\n";
  out << "perp dimensions:";
  for (int e = 1; e <= ideal.socle_degree; ++e)
    out << "  [" << e << "] " << ideal.dim(e);
  out << "\n";
  out << "minimal generators:\n";
  for (const auto& [deg, basis] : gens) {
    out << "  degree " << deg << " (" << basis.size() << "):";
    for (const Poly& p : basis) out << "  " << to_string(p);
    out << "\n";
  }
  return kExitOk;
}

int cmd_hf(const std::string& poly_text, const RunConfig& config,
           std::ostream& out) {
  const Poly f = parse_point_form(poly_text);
  const std::vector<int> hf = hilbert_function(f);
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["form"] = to_string(f);
    doc["hilbert_function"] = hf;
    out << doc.dump(2) << "\n";
  } else {
    out << join_ints(hf) << "\n";
  }
  return kExitOk;
}

int cmd_dual(const std::vector<std::string>& generator_texts, int socle_degree,
             const RunConfig& config, std::ostream& out) {
  if (socle_degree < 1) throw input_error("requires --socle-degree >= 1");
  if (generator_texts.empty()) throw input_error("no generators given");
  std::vector<Poly> gens;
  int num_vars = 0;
  for (const auto& text : generator_texts) {
    Poly g = parse_poly(text);
    if (g.side() != RingSide::Operator)
      throw input_error("generators must be in the d-variables");
    num_vars = std::max(num_vars, g.num_vars());
    gens.push_back(std::move(g));
  }
  for (Poly& g : gens)
    if (g.num_vars() < num_vars) g = parse_poly(to_string(g), num_vars);
  ArtinianGorenstein algebra;
  try {
    algebra = ArtinianGorenstein::from_ideal(
        num_vars, socle_degree, expand_ideal(gens, num_vars, socle_degree));
  } catch (const structural_error& err) {
    throw input_error(std::string("not an Artinian Gorenstein presentation: ") +
                      err.what());
  }
  const Poly f = dual_socle_generator(algebra);
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["socle_degree"] = socle_degree;
    doc["hilbert_function"] = algebra.hilbert;
    doc["dual_form"] = to_string(f);
    out << doc.dump(2) << "\n";
  } else {
    out << "hilbert_function: " << join_ints(algebra.hilbert) << "\n";
    out << "dual socle generator: " << to_string(f) << "\n";
  }
  return kExitOk;
}

int cmd_fermat(const std::string& poly_text, const RunConfig& config,
               std::ostream& out) {
  const Poly f = parse_point_form(poly_text);
  const FermatVerdict v = detect_fermat(f, config.seed, config.max_attempts);
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["form"] = to_string(f);
    doc["fermat_verdict"] = verdict_json(v);
    out << doc.dump(2) << "\n";
  } else {
    print_verdict_text(v, out);
  }
  return verdict_exit(v);
}

int cmd_apolar(const std::vector<std::string>& point_texts,
               const std::string& poly_text, const RunConfig& config,
               std::ostream& out) {
  if (point_texts.empty()) throw input_error("no points given (--point)");
  const Poly f = parse_point_form(poly_text);
  std::vector<LinearFormPoint> points;
  for (const auto& text : point_texts) {
    LinearFormPoint p = parse_point(text);
    if (p.num_vars() != f.num_vars())
      throw input_error("point dimension differs from the form's variables");
    points.push_back(std::move(p));
  }
  const ApolarCertificate cert = is_apolar_scheme(points, f);
  const auto lambdas = waring_from_points(points, f);
  check_internal(cert.apolar == lambdas.has_value(),
                 "apolarity and Waring solvability disagree");
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["form"] = to_string(f);
    doc["apolar"] = cert.apolar;
    if (!cert.apolar) doc["first_failure_degree"] = cert.first_failure_degree;
    if (lambdas) {
      json ls = json::array();
      for (const auto& l : *lambdas) ls.push_back(l.get_str());
      doc["lambdas"] = ls;
    }
    out << doc.dump(2) << "\n";
  } else {
    out << "apolar: " << (cert.apolar ? "yes" : "no") << "\n";
    if (!cert.apolar)
      out << "first failure in degree " << cert.first_failure_degree << "\n";
    if (lambdas) {
      out << "waring coefficients:";
      for (const auto& l : *lambdas) out << " " << l.get_str();
      out << "\n";
    }
  }
  return cert.apolar ? kExitOk : kExitCertifiedNegative;
}

int cmd_scroll(int a1, int a2, const RunConfig& config, std::ostream& out) {
  const SurfaceEmbedding s = build_scroll(a1, a2);
  const auto quadrics = surface_ideal_piece(s, 2);
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["a1"] = a1;
    doc["a2"] = a2;
    doc["ambient_dim"] = s.N;
    doc["degree"] = s.surface_degree();
    json monos = json::array();
    for (const auto& m : s.basis.monomials)
      monos.push_back(cox_to_string(Poly::term(RingSide::Cox, m, 1),
                                    SurfaceKind::Hirzebruch));
    doc["parametrisation"] = monos;
    json qs = json::array();
    for (const Poly& q : quadrics) qs.push_back(to_string(q));
    doc["quadrics"] = qs;
    out << doc.dump(2) << "\n";
  } else {
    out << "scroll S(" << a1 << "," << a2 << ") in P^" << s.N << ", degree "
        << s.surface_degree() << "\n";
    out << "coordinates:";
    for (const auto& m : s.basis.monomials)
      out << " "
          << cox_to_string(Poly::term(RingSide::Cox, m, 1),
                           SurfaceKind::Hirzebruch);
    out << "\n";
    out << "quadrics (" << quadrics.size() << "):\n";
    for (const Poly& q : quadrics) out << "  " << to_string(q) << "\n";
  }
  return kExitOk;
}

int cmd_invariants(int s, int a1, int a2, const RunConfig& config,
                   std::ostream& out) {
  const CurveInvariants ci = curve_invariants(s, a1, a2);
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["s"] = s;
    doc["a1"] = a1;
    doc["a2"] = a2;
    doc["class"] = {{"C0", ci.cls.a}, {"f", ci.cls.b}, {"e", ci.cls.e}};
    doc["genus"] = ci.genus;
    doc["degree"] = ci.degree;
    doc["ambient_dim"] = ci.ambient_dim;
    doc["smooth"] = ci.smooth_ok;
    doc["very_ample"] = ci.very_ample_ok;
    doc["gonality_pencil_degree"] = ci.gonality_pencil_degree;
    out << doc.dump(2) << "\n";
  } else {
    out << "class: " << ci.cls.a << "C0 + " << ci.cls.b << "f on F_" << ci.cls.e
        << "\n";
    out << "genus: " << ci.genus << "\n";
    out << "degree: " << ci.degree << "\n";
    out << "ambient: P^" << ci.ambient_dim << "\n";
    out << "smooth: " << (ci.smooth_ok ? "yes" : "no") << "\n";
    out << "very ample: " << (ci.very_ample_ok ? "yes" : "no") << "\n";
    out << "gonality pencil degree: " << ci.gonality_pencil_degree << "\n";
  }
  return kExitOk;
}

int cmd_cut(const std::string& surface, int a1, int a2, int m,
            const RunConfig& config, std::ostream& out) {
  SurfaceEmbedding s;
  if (surface == "scroll")
    s = build_scroll(a1, a2);
  else if (surface == "veronese")
    s = build_veronese(m);
  else
    throw input_error("surface must be 'scroll' or 'veronese'");
  const RationalCut cut = rational_cut(s, config.seed, config.max_attempts);
  const int cap = config.degree_cap > 0 ? config.degree_cap : 4;
  const GammaReport gamma = gamma_cut(s, cut.eta1, cut.eta2, cap);
  if (config.format == OutputFormat::Json) {
    json doc;
    doc["surface"] = surface;
    doc["eta1"] = to_string(cut.eta1);
    doc["eta2"] = to_string(cut.eta2);
    json pts = json::array();
    for (const auto& p : cut.points) {
      json c = json::array();
      for (const auto& x : p.coords) c.push_back(x.get_str());
      pts.push_back(c);
    }
    doc["points"] = pts;
    doc["gamma_length"] = gamma.length;
    out << doc.dump(2) << "\n";
  } else {
    out << "eta1: " << to_string(cut.eta1) << "\n";
    out << "eta2: " << to_string(cut.eta2) << "\n";
    out << "points:\n";
    for (const auto& p : cut.points) out << "  " << to_string(p) << "\n";
    out << "gamma length: " << gamma.length << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& kind, int s, int a1, int a2, int m,
               const std::string& regime, const RunConfig& config,
               std::ostream& out) {
  VerifyParams params;
  if (kind == "scroll-fermat")
    params.kind = VerifyKind::ScrollFermat;
  else if (kind == "plane-waring")
    params.kind = VerifyKind::PlaneWaring;
  else
    throw input_error("kind must be 'scroll-fermat' or 'plane-waring'");
  params.s = s;
  params.a1 = a1;
  params.a2 = a2;
  params.m = m;
  params.trials = config.trials;
  params.seed = config.seed;
  params.degree_cap = config.degree_cap;
  params.max_attempts = config.max_attempts;
  if (regime == "rational")
    params.regimes = {EtaRegime::Rational};
  else if (regime == "generic")
    params.regimes = {EtaRegime::Generic};
  else if (regime == "both")
    params.regimes = {EtaRegime::Rational, EtaRegime::Generic};
  else
    throw input_error("regime must be 'rational', 'generic' or 'both'");

  const auto reports = verify_theorem(params);
  int ok_count = 0, undetermined_count = 0;
  for (const auto& r : reports) {
    if (r.ok) ++ok_count;
    else if (r.verdict.tag == FermatVerdict::Tag::Undetermined)
      ++undetermined_count;
    log_info("trial " + std::to_string(r.trial) + " [" + to_string(r.regime) +
             "] " + (r.ok ? "ok" : "FAILED"));
  }

  if (config.format == OutputFormat::Json) {
    json doc;
    json list = json::array();
    for (const auto& r : reports) list.push_back(json::parse(report_to_json(r)));
    doc["reports"] = list;
    json summary;
    summary["reports"] = reports.size();
    summary["ok"] = ok_count;
    summary["undetermined"] = undetermined_count;
    doc["summary"] = summary;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << "trial " << r.trial << " [" << to_string(r.regime) << "]";
      if (!r.error.empty()) {
        out << "  ERROR: " << r.error << "\n";
        continue;
      }
      out << "  HF " << join_ints(r.hilbert);
      out << "  F = " << r.dual_form;
      out << "  " << to_string(r.verdict.tag);
      if (r.verdict.tag == FermatVerdict::Tag::CertifiedNot)
        out << " (" << to_string(r.verdict.witness) << ")";
      out << "  gamma " << r.gamma_length
          << (r.gamma_apolar ? " apolar" : " NOT APOLAR");
      out << "  (" << r.timings.total_ms << " ms)\n";
    }
    out << "summary: " << ok_count << "/" << reports.size() << " ok\n";
  }
  if (ok_count == static_cast<int>(reports.size())) return kExitOk;
  return undetermined_count > 0 &&
                 ok_count + undetermined_count == static_cast<int>(reports.size())
             ? kExitUndetermined
             : kExitCertifiedNegative;
}

}  // namespace apw
