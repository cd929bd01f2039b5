#include "commands.hpp"

#include <chrono>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordcone/completion.hpp"
#include "ordcone/hereditary.hpp"
#include "ordcone/json_io.hpp"
#include "ordcone/norms.hpp"
#include "ordcone/piecewise.hpp"
#include "ordcone/polynomial.hpp"
#include "ordcone/representation.hpp"
#include "ordcone/soc.hpp"

namespace ordcone::cli {

using nlohmann::json;

namespace {

struct Result {
  json report;
  int code = kOk;
};

std::vector<Rational> entries_of(const QVector& v) { return {v.begin(), v.end()}; }

PolyhedralCone load_cone(const std::string& path) { return parse_cone_spec(read_file(path)).cone; }

Result analyze(const std::string& path) {
  const auto spec = parse_cone_spec(read_file(path));
  const auto r = semisimplicity_report(spec.cone);
  json out{{"command", "analyze"},
           {"input", path},
           {"cone", to_json(spec)},
           {"semisimple", r.semisimple()},
           {"regular", r.regular()},
           {"proper", is_proper(spec.cone)},
           {"criteria",
            {{"separates_points", r.separates_points},
             {"weak_closure_proper", r.weak_closure_proper},
             {"hyperplane_intersection_trivial", r.hyperplane_intersection_trivial}}},
           {"radical_basis", to_json(r.radical_basis)},
           {"lineality_basis", to_json(lineality_space(spec.cone))},
           {"separating_set", to_json(r.separating_set)},
           {"supporting_hyperplanes", to_json(supporting_hyperplanes(spec.cone))}};
  return {out, r.semisimple() ? kOk : kNegative};
}

Result dual(const std::string& path) {
  const auto c = load_cone(path);
  return {json{{"command", "dual"}, {"input", path}, {"cone", cone_to_json(c)}, {"dual", cone_to_json(dual_cone(c))}}};
}

Result represent(const std::string& path, const std::string& mode) {
  const auto c = load_cone(path);
  const SynthesisResult s = mode == "positive" ? synthesize_positive(c) : synthesize_bipositive(c);
  json out{{"command", "represent"}, {"input", path},           {"mode", mode},
           {"cone", cone_to_json(c)}, {"feasible", s.feasible}, {"certificate", to_json(s.certificate)}};
  if (s.representation) {
    const auto v = verify(*s.representation, c);
    out["representation"] = to_json(*s.representation);
    out["verdict"] = {{"injective", v.injective}, {"positive", v.positive}, {"bipositive", v.bipositive}};
  } else {
    out["representation"] = nullptr;
  }
  return {out, s.feasible ? kOk : kNegative};
}

Result norm(const std::string& path, const std::string& kind, const std::string& point) {
  const auto c = load_cone(path);
  const QVector x = parse_vector_text(point);
  if (x.dim() != c.dim()) throw InputError("point " + to_string(x) + " does not match cone dimension " + std::to_string(c.dim()));
  const PolyhedralNorm n = kind == "ell1" ? PolyhedralNorm::ell1() : PolyhedralNorm::ellinf();
  const Rational plus = distance_to_cone(x, c, n), minus = distance_to_cone(-x, c, n);
  return {json{{"command", "norm"},
               {"input", path},
               {"norm", kind},
               {"point", to_json(x)},
               {"base_norm", to_json(n(x))},
               {"distance_to_cone", to_json(plus)},
               {"distance_of_negative_to_cone", to_json(minus)},
               {"value", to_json(std::max(plus, minus))},
               {"definite", is_proper(c)}}};
}

Result quotient(const std::string& path, const std::string& kernel) {
  const auto c = load_cone(path);
  const QuotientMap q(c.dim(), parse_vector_list_text(kernel, c.dim()));
  const auto push = pushforward_cone(q, c);
  const auto v = quotient_semisimple(q, c);
  json out{{"command", "quotient"},
           {"input", path},
           {"kernel_basis", to_json(q.kernel_basis())},
           {"projection", to_json(q.projection_matrix())},
           {"pushforward", cone_to_json(push)},
           {"proper", is_proper(push)},
           {"semisimple", v.semisimple},
           {"perp_positive", to_json(v.perp_positive)},
           {"missing_direction", v.missing_direction ? to_json(*v.missing_direction) : json(nullptr)}};
  return {out, v.semisimple ? kOk : kNegative};
}

json preimage_json(const SocPoint& ray, const QVector& v) {
  const auto pre = pushforward_preimage(ray, v);
  return json{{"point", to_json(v)}, {"member", pre.has_value()}, {"preimage", pre ? to_json(pre->vector()) : json(nullptr)}};
}

Result soc(const std::string& ray_text, bool allow_interior, const std::string& point) {
  const QVector rv = parse_vector_text(ray_text);
  if (rv.dim() != 3) throw InputError("--ray needs three coordinates");
  const SocPoint ray = SocPoint::from(rv);
  const auto cls = quotient_by_ray(ray, allow_interior);
  const auto qm = soc_quotient_map(ray);
  json out{{"command", "soc"},
           {"ray", to_json(rv)},
           {"extremal", is_extremal_ray(ray)},
           {"proper", cls.is_proper},
           {"closed", cls.is_closed},
           {"semisimple", cls.is_semisimple},
           {"perp_positive_dim", cls.perp_positive_dim},
           {"perp_positive_generators", to_json(cls.perp_positive_generators)},
           {"projection", to_json(qm.projection)},
           {"closure", cone_to_json(pushforward_closure(ray))}};
  out["witness_line"] = cls.witness_line ? to_json(*cls.witness_line) : json(nullptr);
  out["open_side"] = cls.open_side ? to_json(*cls.open_side) : json(nullptr);
  if (cls.witness_line) {
    out["witness_membership"] = preimage_json(ray, *cls.witness_line);
    out["interior_membership"] = preimage_json(ray, *cls.open_side);
    json seq = json::array();
    for (const auto& v : non_closedness_sequence(ray, 4)) seq.push_back(preimage_json(ray, v));
    out["approximating_sequence"] = seq;
  }
  if (!point.empty()) {
    const QVector v = parse_vector_text(point);
    if (v.dim() != 2) throw InputError("--point needs two quotient coordinates");
    out["query"] = preimage_json(ray, v);
  }
  return {out, cls.is_semisimple ? kOk : kNegative};
}

Result lab_density(const std::string& g_text, const std::string& a, const std::string& b, const std::string& eps) {
  const QPolynomial g(entries_of(parse_vector_text(g_text)));
  const auto w = density_witness(g, parse_rational(a), parse_rational(b), parse_rational(eps));
  return {json{{"command", "lab density"},
               {"g", to_json(QVector(g.coefficients()))},
               {"a", a},
               {"b", b},
               {"eps", eps},
               {"bound", to_json(w.bound)},
               {"n", w.n},
               {"p", to_json(QVector(w.p.coefficients()))},
               {"p_text", to_string(w.p)},
               {"coefficient_distance", to_json(coefficient_sup(w.p - g))}}};
}

Result lab_completion(int n_max, std::size_t grid) {
  const auto r = completion_cauchy_demo(n_max, grid);
  json pairs = json::array(), terms = json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"n", p.n},
                     {"m", p.m},
                     {"sup_difference", p.sup_difference},
                     {"derivative_difference", p.derivative_difference},
                     {"norm", p.norm},
                     {"bound", p.bound},
                     {"within_bound", p.within_bound}});
  for (const auto& t : r.terms) terms.push_back({{"n", t.n}, {"norm", t.norm}, {"bounded_below", t.bounded_below}});
  return {json{{"command", "lab completion"},
               {"approximate", true},
               {"n_max", r.n_max},
               {"grid_points", r.grid_points},
               {"tolerance", r.tolerance},
               {"certified", r.certified},
               {"terms", terms},
               {"pairs", pairs}},
          r.certified ? kOk : kNegative};
}

Result lab_envelope(const std::string& window_text, const std::string& alphas_text) {
  const Rational window = parse_rational(window_text);
  std::vector<Rational> f;
  for (long k = 0; Rational(k) <= window; ++k) f.push_back(k);
  std::optional<std::vector<Rational>> alphas;
  if (!alphas_text.empty()) alphas = entries_of(parse_vector_text(alphas_text));
  const auto r = envelope_demo(alphas, f, window);
  json terms = json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"n", t.n},
                     {"alpha", to_json(t.alpha)},
                     {"rho_gn", to_json(t.rho_gn)},
                     {"rho_scaled", to_json(t.rho_scaled)},
                     {"dominated", t.dominated},
                     {"rho_bounded", t.rho_bounded}});
  return {json{{"command", "lab envelope"},
               {"window", to_json(window)},
               {"f_values", to_json(QVector(r.f_values))},
               {"terms", terms},
               {"envelope",
                {{"breakpoints", to_json(QVector(r.envelope.breakpoints))},
                 {"values", to_json(QVector(r.envelope.values))}}},
               {"rho_envelope", to_json(r.rho_envelope)},
               {"certified", r.certified}},
          r.certified ? kOk : kNegative};
}

void render_text(const json& j, std::ostream& out, const std::string& indent) {
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto is_vector = [](const json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
  };
  auto vector_text = [&](const json& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar(v[i]);
    return s + ")";
  };
  for (const auto& [key, v] : j.items()) {
    if (v.is_primitive()) {
      out << indent << key << ": " << scalar(v) << "\n";
    } else if (v.is_array() && v.empty()) {
      out << indent << key << ": none\n";
    } else if (is_vector(v)) {
      out << indent << key << ": " << vector_text(v) << "\n";
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_vector)) {
      out << indent << key << ":\n";
      for (const auto& row : v) out << indent << "  " << vector_text(row) << "\n";
    } else if (v.is_array()) {
      out << indent << key << ":\n";
      for (const auto& item : v) {
        out << indent << "  -\n";
        render_text(item, out, indent + "    ");
      }
    } else {
      out << indent << key << ":\n";
      render_text(v, out, indent + "  ");
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of ordered vector spaces with polyhedral cones", "ordcone"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool timing = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", timing, "Append wall-clock timing to the report");

  std::function<Result()> action;
  std::string path, mode = "positive", norm_kind = "ellinf", point, kernel, ray, g = "0", a = "1", b = "2",
                    eps = "1", window = "12", alphas;
  bool allow_interior = false;
  int n_max = 20;
  std::size_t grid = 100001;

  auto* analyze_cmd = app.add_subcommand("analyze", "Semisimplicity report of a cone");
  analyze_cmd->add_option("cone", path, "Cone file")->required();
  analyze_cmd->callback([&] { action = [&] { return analyze(path); }; });

  auto* dual_cmd = app.add_subcommand("dual", "Dual cone");
  dual_cmd->add_option("cone", path, "Cone file")->required();
  dual_cmd->callback([&] { action = [&] { return dual(path); }; });

  auto* represent_cmd = app.add_subcommand("represent", "Synthesise a representation");
  represent_cmd->add_option("cone", path, "Cone file")->required();
  represent_cmd->add_option("--mode", mode, "positive or bipositive")->check(CLI::IsMember({"positive", "bipositive"}));
  represent_cmd->callback([&] { action = [&] { return represent(path, mode); }; });

  auto* norm_cmd = app.add_subcommand("norm", "Monotone seminorm max(d(x, C), d(-x, C))");
  norm_cmd->add_option("--cone", path, "Cone file")->required();
  norm_cmd->add_option("--norm", norm_kind, "Base norm")->check(CLI::IsMember({"ell1", "ellinf"}));
  norm_cmd->add_option("--point", point, "Point, e.g. \"-1,0\"")->required();
  norm_cmd->callback([&] { action = [&] { return norm(path, norm_kind, point); }; });

  auto* quotient_cmd = app.add_subcommand("quotient", "Pushforward of a cone along a quotient");
  quotient_cmd->add_option("--cone", path, "Cone file")->required();
  quotient_cmd->add_option("--kernel", kernel, "Kernel vectors, e.g. \"1,0;0,1\"")->required();
  quotient_cmd->callback([&] { action = [&] { return quotient(path, kernel); }; });

  auto* soc_cmd = app.add_subcommand("soc", "Quotient of the second-order cone by a ray");
  soc_cmd->add_option("--ray", ray, "Ray, e.g. \"1,0,1\"")->required();
  soc_cmd->add_flag("--allow-interior", allow_interior, "Accept a ray through the interior");
  soc_cmd->add_option("--point", point, "Quotient point to test for membership");
  soc_cmd->callback([&] { action = [&] { return soc(ray, allow_interior, point); }; });

  auto* lab = app.add_subcommand("lab", "Constructions: density, completion, envelope");
  lab->require_subcommand(1);
  auto* density_cmd = lab->add_subcommand("density", "Nonnegative polynomial near g on [a, b]");
  density_cmd->add_option("--g", g, "Coefficients of g, ascending, e.g. \"0,-1\"");
  density_cmd->add_option("--a", a, "Left end, >= 1");
  density_cmd->add_option("--b", b, "Right end");
  density_cmd->add_option("--eps", eps, "Distance");
  density_cmd->callback([&] { action = [&] { return lab_density(g, a, b, eps); }; });
  auto* completion_cmd = lab->add_subcommand("completion", "Cauchy sequence in C^1 (floating point)");
  completion_cmd->add_option("--n-max", n_max, "Largest index");
  completion_cmd->add_option("--grid", grid, "Grid points on [0,1]");
  completion_cmd->callback([&] { action = [&] { return lab_completion(n_max, grid); }; });
  auto* envelope_cmd = lab->add_subcommand("envelope", "Upper envelope of alpha_n g_n with f(k) = k");
  envelope_cmd->add_option("--window", window, "Window [0, M]");
  envelope_cmd->add_option("--alphas", alphas, "alpha_1,alpha_2,... (default n / rho(g_n o f))");
  envelope_cmd->callback([&] { action = [&] { return lab_envelope(window, alphas); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Result r = action();
    if (timing)
      r.report["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (format == "json")
      out << r.report.dump(2) << "\n";
    else
      render_text(r.report, out, "");
    return r.code;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace ordcone::cli
