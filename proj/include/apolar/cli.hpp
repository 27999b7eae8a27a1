#ifndef APOLAR_CLI_HPP
#define APOLAR_CLI_HPP

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "apolar/constructions.hpp"
#include "apolar/pencil.hpp"

namespace apolar {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "apolar-report/1";

/// The cubic on which the analysis is also confirmed over Q by default.
inline constexpr const char* kReferenceCubic = "x0*x1*x3 - x0^2*x4 + x1*x2^2 + x2*x4*x5 + x3*x5^2";

struct RunConfig {
  std::string field = "fp";  // "q" or "fp"
  int primes = 3;
  std::uint64_t seed = 0;
  int vars = 6;
  bool timings = false;
};

struct CommandResult {
  Json report;
  int exit_code = 0;
  std::string text;  // extra plain output (construct)
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::vector<std::uint64_t> config_primes(const RunConfig& cfg) {
  if (cfg.field == "q") return {};
  if (cfg.field != "fp") throw UsageError("--field must be q or fp");
  if (cfg.primes < 1) throw UsageError("--primes must be positive");
  CounterRng rng = CounterRng(cfg.seed).split(0x70726d73);
  return random_primes(rng, static_cast<std::size_t>(cfg.primes));
}

namespace detail {

/// Calls fn(field) for Q or for each configured prime, in order.
template <class Fn>
void for_each_field(const RunConfig& cfg, Fn&& fn) {
  const auto primes = config_primes(cfg);
  if (primes.empty()) {
    fn(RationalField{});
    return;
  }
  for (auto p : primes) fn(PrimeField(p));
}

inline Json field_json(const RunConfig& cfg) { return cfg.field == "q" ? "Q" : "F_p"; }

inline Json primes_json(const RunConfig& cfg) {
  Json a = Json::array();
  for (auto p : config_primes(cfg)) a.push_back(p);
  return a;
}

inline Poly<RationalField> parse_input(const std::string& text, int n) {
  return parse_poly(text, RationalField{}, Ring::PolynomialP, n);
}

template <ExactField K>
Json univariate_json(const Univariate<K>& u) {
  Json c = Json::array();
  for (const auto& x : u.coefficients()) c.push_back(u.field().to_string(x));
  return {{"degree", u.degree()}, {"coefficients", c}, {"text", u.to_string()}};
}

/// Over Q, the primitive integer multiple; a form is only defined up to scalars.
template <ExactField K>
Poly<K> primitive(const Poly<K>& f) {
  if constexpr (is_rational_field_v<K>) {
    if (f.is_zero()) return f;
    mpz_class l = 1, g = 0;
    for (const auto& [m, c] : f.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& [m, c] : f.terms()) {
      const mpz_class v = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class scale(l, g);
    scale.canonicalize();
    if (f.terms().rbegin()->second < 0) scale = -scale;
    return f.scaled(scale);
  } else {
    return f;
  }
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

inline Json analysis_json(const AnalysisReport& r) {
  Json perp = Json::object();
  for (const auto& [d, v] : r.perp_dims) perp[std::to_string(d)] = v;
  Json j;
  j["hf"] = r.hf.values;
  j["dim_I2"] = r.dim_I2 ? Json(*r.dim_I2) : Json(nullptr);
  j["perp_dims"] = perp;
  j["tangent_dim"] = r.tangent_dim ? Json(*r.tangent_dim) : Json(nullptr);
  j["on_E"] = r.on_E;
  j["verdict"] = verdict_name(r.verdict);
  return j;
}

inline int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::NonSmoothableCertified: return 0;
    case Verdict::SmoothableBoundary: return 2;
    case Verdict::Degenerate: return 3;
  }
  return 1;
}

template <ExactField K>
AnalysisReport analyze_form(const Poly<K>& f) {
  if (f.is_zero()) return AnalysisReport{};
  if (!f.is_homogeneous()) throw UsageError("input is not a homogeneous form");
  return certify_nonsmoothable(Form<K>(f, f.degree()));
}

inline CommandResult cmd_analyze(const std::string& cubic, const RunConfig& cfg) {
  const auto f = detail::parse_input(cubic, cfg.vars);
  std::vector<AnalysisReport> reports;
  Json timings = Json::object();
  detail::for_each_field(cfg, [&](const auto& k) {
    detail::Stopwatch sw;
    reports.push_back(analyze_form(convert(f, k)));
    timings[k.spec().name()] = sw.ms();
  });
  // Ranks modulo p never exceed ranks over Q; the smallest tangent dimension
  // comes from the most generic reduction.
  std::size_t best = 0;
  bool consistent = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    consistent = consistent && reports[i] == reports.front();
    if (reports[i].tangent_dim && (!reports[best].tangent_dim || *reports[i].tangent_dim < *reports[best].tangent_dim))
      best = i;
  }
  const auto& r = reports[best];

  Json j;
  j["schema"] = kSchema;
  j["command"] = "analyze";
  j["input"] = format_poly(f);
  j["field"] = detail::field_json(cfg);
  const Json body = analysis_json(r);
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  j["primes_used"] = detail::primes_json(cfg);
  j["consistent"] = consistent;
  if (cfg.field == "fp" && f == detail::parse_input(kReferenceCubic, cfg.vars)) {
    const auto rq = analyze_form(f);
    j["rational_confirmation"] = analysis_json(rq);
  }
  j["timings_ms"] = cfg.timings ? timings : Json::object();
  return {j, verdict_exit_code(r.verdict), ""};
}

template <ExactField K>
Json pencil_json(const PencilProfile<K>& p) {
  Json roots = Json::array(), factors = Json::array(), charts = Json::array();
  for (const auto& f : p.factors) {
    if (f.degree == 1)
      roots.push_back({{"at", f.root}, {"mult", f.multiplicity}});
    else
      factors.push_back({{"degree", f.degree}, {"mult", f.multiplicity}});
  }
  for (const auto& c : p.charts)
    charts.push_back({{"chart", c.chart},
                      {"raw", detail::univariate_json(c.raw)},
                      {"unit", detail::univariate_json(c.unit)},
                      {"normalized", detail::univariate_json(c.normalized)}});
  Json j;
  j["field"] = p.field.name();
  j["family"] = p.family_supplied ? "supplied" : "computed";
  if (p.family_supplied) j["family_in_annihilator"] = p.family_in_annihilator;
  if (!p.family_supplied) j["saturation"] = p.saturation;
  j["degree_bound"] = p.degree_bound;
  j["total_degree"] = p.total_degree;
  j["samples"] = p.samples;
  j["identically_zero"] = p.identically_zero;
  j["roots"] = roots;
  j["factors"] = factors;
  j["distinct_roots"] = p.distinct_roots;
  j["multiplicity_at_zero"] = p.multiplicity_at_zero;
  j["charts_agree"] = p.charts_agree;
  j["charts"] = charts;
  return j;
}

inline std::vector<std::string> read_family_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read family file " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    lines.push_back(line.substr(start));
  }
  return lines;
}

inline CommandResult cmd_pencil(const std::string& cubic1, const std::string& cubic2,
                                const std::optional<std::string>& family_path, const RunConfig& cfg) {
  if (cfg.vars != 6) throw UsageError("pencil requires --vars 6");
  const auto f1 = detail::parse_input(cubic1, cfg.vars), f2 = detail::parse_input(cubic2, cfg.vars);
  for (const auto* f : {&f1, &f2})
    if (f->is_zero() || !f->is_homogeneous() || f->degree() != 3) throw UsageError("pencil endpoints must be cubic forms");
  std::optional<QuadricFamily<RationalField>> family;
  if (family_path) family = parse_quadric_family(read_family_file(*family_path), RationalField{}, cfg.vars);

  Json per = Json::array();
  Json timings = Json::object();
  std::optional<std::vector<std::pair<int, int>>> pattern;
  bool agree = true;
  detail::for_each_field(cfg, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    detail::Stopwatch sw;
    std::optional<QuadricFamily<K>> fam;
    if (family) fam = convert(*family, k);
    PencilOptions opts;
    opts.seed = cfg.seed;
    const auto prof = pencil_profile(Form<K>(convert(f1, k), 3), Form<K>(convert(f2, k), 3), fam, opts);
    const auto pat = factor_pattern(prof);
    if (pattern) agree = agree && *pattern == pat;
    else pattern = pat;
    per.push_back(pencil_json(prof));
    timings[k.spec().name()] = sw.ms();
  });

  Json j;
  j["schema"] = kSchema;
  j["command"] = "pencil";
  j["input"] = {{"cubic1", format_poly(f1)}, {"cubic2", format_poly(f2)},
                {"family", family_path ? Json(*family_path) : Json(nullptr)}};
  j["field"] = detail::field_json(cfg);
  j["primes_used"] = detail::primes_json(cfg);
  const auto& first = per.front();
  j["total_degree"] = first["total_degree"];
  j["roots"] = first["roots"];
  j["factors"] = first["factors"];
  j["distinct_roots"] = first["distinct_roots"];
  j["identically_zero"] = first["identically_zero"];
  j["pattern_agreement"] = agree;
  j["per_field"] = per;
  j["timings_ms"] = cfg.timings ? timings : Json::object();
  return {j, 0, ""};
}

inline CommandResult cmd_construct(const std::string& kind, const RunConfig& cfg,
                                   const std::optional<std::string>& sextic = std::nullopt) {
  if (cfg.vars != 6) throw UsageError("construct requires --vars 6");
  Json j;
  j["schema"] = kSchema;
  j["command"] = "construct";
  j["input"] = sextic ? Json(kind + " " + *sextic) : Json(kind);
  j["kind"] = kind;
  j["seed"] = cfg.seed;
  std::string text;
  auto run = [&](const auto& k) {
    j["field"] = k.spec().name();
    if (kind == "gr26") {
      const auto s = gr26_section_cubic(k, cfg.seed);
      text = format_poly(detail::primitive(s.cubic.poly()));
      Json qs = Json::array();
      for (const auto& q : s.quadrics) qs.push_back(format_poly(detail::primitive(q.poly())));
      j["attempts"] = s.attempts;
      j["quadrics"] = qs;
    } else if (kind.rfind("waring:", 0) == 0) {
      int count = 0;
      try {
        count = std::stoi(kind.substr(7));
      } catch (const std::exception&) {
        throw UsageError("waring:k needs an integer k");
      }
      if (count < 1 || count > 14) throw UsageError("waring:k needs 1 <= k <= 14");
      const auto pts = random_points(k, cfg.seed, static_cast<std::size_t>(count));
      Json jp = Json::array();
      for (const auto& v : pts) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(k.to_string(x));
        jp.push_back(row);
      }
      text = format_poly(waring_sum(k, pts).poly());
      j["points"] = jp;
    } else if (kind == "dvap") {
      using K = std::decay_t<decltype(k)>;
      std::optional<Form<K>> g, f;
      if (sextic) {
        auto p = convert(parse_poly(*sextic, RationalField{}, Ring::PolynomialP, 3), k);
        if (p.is_zero() || !p.is_homogeneous() || p.degree() != 6) throw UsageError("dvap needs a sextic form in x0, x1, x2");
        g.emplace(std::move(p), 6);
        f.emplace(dvap_cubic(*g));
      } else {
        auto [gg, ff] = random_dvap_cubic(k, cfg.seed);
        g.emplace(std::move(gg));
        f.emplace(std::move(ff));
      }
      Json ident = Json::array();
      const auto& quad = monomial_basis(3, 2);
      for (std::size_t i = 0; i < quad.size(); ++i) {
        std::string w = detail::monomial_text(quad[i], Ring::PolynomialP);
        for (auto& ch : w)
          if (ch == 'x') ch = 'w';
        ident.push_back("x" + std::to_string(i) + " = " + w);
      }
      j["identification"] = ident;
      j["sextic"] = format_poly(g->poly());
      text = format_poly(f->poly());
    } else if (kind == "random") {
      text = format_poly(random_cubic(k, cfg.seed).poly());
    } else {
      throw UsageError("unknown construction '" + kind + "' (gr26, waring:k, dvap, random)");
    }
  };
  if (cfg.field == "q") run(RationalField{});
  else run(PrimeField(config_primes(cfg).front()));
  j["polynomial"] = text;
  j["primes_used"] = cfg.field == "q" ? Json::array() : Json::array({config_primes(cfg).front()});
  j["timings_ms"] = Json::object();
  return {j, 0, text};
}

inline CommandResult cmd_family(const std::string& family, const std::vector<std::string>& samples, const RunConfig& cfg) {
  if (samples.empty()) throw UsageError("family needs at least one sample");
  const auto fam_q = parse_parametric(family, RationalField{}, Ring::PolynomialP, cfg.vars, 't');
  Json per = Json::array();
  std::optional<std::vector<std::size_t>> lengths;
  bool consistent = true;
  Json timings = Json::object();
  detail::for_each_field(cfg, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    detail::Stopwatch sw;
    std::vector<Poly<K>> coeffs;
    for (const auto& c : fam_q.coefficients()) coeffs.push_back(convert(c, k));
    ParametricPoly<K> fam(k, Ring::PolynomialP, cfg.vars, coeffs);
    std::vector<typename K::value_type> ts;
    for (const auto& s : samples) {
      mpq_class q;
      try {
        q = mpq_class(s);
        q.canonicalize();
      } catch (const std::exception&) {
        throw UsageError("bad sample value '" + s + "'");
      }
      ts.push_back(k.from_rational(q));
    }
    const auto prof = family_length_profile(fam, ts);
    std::vector<std::size_t> ls;
    for (const auto& [t, len] : prof.lengths) ls.push_back(len);
    if (lengths) consistent = consistent && *lengths == ls;
    else lengths = ls;
    per.push_back({{"field", k.spec().name()}, {"lengths", ls}, {"flag", family_flag_name(prof.flag)}});
    timings[k.spec().name()] = sw.ms();
  });

  Json rows = Json::array();
  for (std::size_t i = 0; i < samples.size(); ++i) rows.push_back({{"t", samples[i]}, {"length", (*lengths)[i]}});
  Json j;
  j["schema"] = kSchema;
  j["command"] = "family";
  j["input"] = family;
  j["field"] = detail::field_json(cfg);
  j["primes_used"] = detail::primes_json(cfg);
  j["lengths"] = rows;
  j["flag"] = per.front()["flag"];
  j["consistent"] = consistent;
  j["per_field"] = per;
  j["timings_ms"] = cfg.timings ? timings : Json::object();
  return {j, 0, ""};
}

}  // namespace apolar

#endif  // APOLAR_CLI_HPP
