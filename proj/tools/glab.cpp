// glab: command-line front end for the equivalence toolkit.
//
// Exit codes: 0 success, 1 scenario expectation failed, 2 usage error,
// 3 internal invariant violation.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <glab/elliptic.hpp>
#include <glab/error.hpp>
#include <glab/ffext.hpp>
#include <glab/fq.hpp>
#include <glab/numutil.hpp>
#include <glab/parse.hpp>
#include <glab/poly.hpp>
#include <glab/rational.hpp>
#include <glab/scenario.hpp>

namespace {

using glab::FqElem;
using glab::FqFieldPtr;
using glab::Poly;
using Json = nlohmann::ordered_json;

/// Bad flags, unreadable files, malformed expressions: the user's fault.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A scenario ran to completion and an expectation failed (exit 1).
struct ScenarioFail {};

/// Library error codes reachable only through bad command-line input.
/// Anything else escaping the library is an invariant violation (exit 3).
bool user_fault(glab::errc c) {
  switch (c) {
    case glab::errc::syntax_error:
    case glab::errc::unknown_generator:
    case glab::errc::unknown_scenario:
    case glab::errc::bad_prime:
    case glab::errc::singular_curve:
    case glab::errc::mixed_fields:
    case glab::errc::not_irreducible:
    case glab::errc::not_squarefree:
    case glab::errc::zero_polynomial:
    case glab::errc::enumeration_bound_exceeded:
    case glab::errc::order_bound_exceeded:
    case glab::errc::even_or_equal_two:
    case glab::errc::ramified_place:
    case glab::errc::infinite_place_unsupported:
    case glab::errc::not_found:
      return true;
    default:
      return false;
  }
}

struct Options {
  bool json = false;
  int bound = -1;  // negative = use the verb's default
  uint64_t seed = 0;

  int bound_or(int dflt) const { return bound < 0 ? dflt : bound; }

  void emit(std::string text, const Json& j) const {
    while (!text.empty() && text.back() == '\n') text.pop_back();
    if (json)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text << "\n";
  }
};

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <class Seq>
std::string join(const Seq& v, const char* sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : v) {
    if (!first) os << sep;
    first = false;
    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, glab::BigInt>)
      os << x.str();
    else
      os << x;
  }
  return os.str();
}

FqFieldPtr field_from_q(uint64_t q) {
  if (q < 2) throw UsageFailure("q must be a prime power, got " + std::to_string(q));
  auto fac = glab::factorize(q);
  if (fac.size() != 1)
    throw UsageFailure("q must be a prime power, got " + std::to_string(q));
  return glab::FqField::make(static_cast<int64_t>(fac[0].first), fac[0].second);
}

/// # starts a comment; lines are concatenated (the grammar ignores space).
std::string read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageFailure("cannot open " + path);
  std::string out, line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    out += line;
    out += ' ';
  }
  if (trimmed(out).empty()) throw UsageFailure(path + " contains no polynomial");
  return out;
}

struct CurveSpec {
  FqFieldPtr field;
  Poly<FqElem> a, b;
  bool constant() const { return a.degree() < 1 && b.degree() < 1; }
};

/// Either "a,b" over F_q from --q, or "E/F_q: a=..., b=..." naming its own
/// field; coefficients are polynomials in t (constants included) both ways.
CurveSpec parse_curve(const std::string& text, uint64_t q_flag, const std::string& gen) {
  std::string s = trimmed(text);
  uint64_t q = q_flag;
  if (s.rfind("E/F_", 0) == 0) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
      throw UsageFailure("expected ':' after the field in '" + text + "'");
    std::string qs = trimmed(s.substr(4, colon - 4));
    uint64_t qv = 0;
    try {
      std::size_t used = 0;
      qv = std::stoull(qs, &used);
      if (used != qs.size()) throw std::invalid_argument(qs);
    } catch (const std::exception&) {
      throw UsageFailure("bad field size '" + qs + "' in '" + text + "'");
    }
    if (q != 0 && q != qv) throw UsageFailure("--q disagrees with the curve's declared field");
    q = qv;
    s = s.substr(colon + 1);
  }
  if (q == 0) q = 7;  // the working field of most of the catalog
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw UsageFailure("curve format is 'a,b' or 'E/F_q: a=..., b=...'");
  auto strip_name = [&](std::string part, const char* name) {
    part = trimmed(part);
    auto eq = part.find('=');
    if (eq == std::string::npos) return part;
    if (trimmed(part.substr(0, eq)) != name)
      throw UsageFailure(std::string("expected '") + name + "=' in '" + text + "'");
    return trimmed(part.substr(eq + 1));
  };
  CurveSpec out;
  out.field = field_from_q(q);
  glab::ParseContext ctx{out.field, "t", "", gen};
  out.a = glab::parse_univariate(strip_name(s.substr(0, comma), "a"), ctx);
  out.b = glab::parse_univariate(strip_name(s.substr(comma + 1), "b"), ctx);
  return out;
}

glab::EllipticCurve as_elliptic(const CurveSpec& c) {
  if (!c.constant())
    throw UsageFailure("this verb needs a curve with constant coefficients");
  return glab::make_elliptic(c.a.coeff_or(0, c.field->zero()),
                             c.b.coeff_or(0, c.field->zero()));
}

glab::FqtCurve as_fqt(const CurveSpec& c) {
  return glab::make_fqt_curve(c.field, c.a, c.b);
}

void cmd_split(const Options& opt, const std::string& file, const std::string& place,
               uint64_t q, const std::string& gen) {
  FqFieldPtr field = field_from_q(q ? q : 7);
  glab::ParseContext ctx{field, "x", "y", gen};
  Poly<Poly<FqElem>> f = glab::parse_bivariate(read_poly_file(file), ctx);
  if (!place.empty()) {
    glab::Place p =
        place == "inf"
            ? glab::infinite_place(field)
            : glab::make_place(glab::parse_univariate(place, glab::ParseContext{field, "x", "", gen}));
    glab::SplittingPattern pat = glab::splitting_pattern(f, p, opt.seed);
    Json j;
    j["place"] = pat.place.str();
    j["ramified"] = pat.ramified;
    j["degrees"] = join(pat.degrees);
    opt.emit(pat.str(), j);
    return;
  }
  // no --place: report every finite place through the bound
  std::ostringstream os;
  Json j;
  bool first = true;
  for (const glab::Place& p : glab::places_up_to(field, opt.bound_or(1))) {
    if (p.infinite) continue;
    glab::SplittingPattern pat = glab::splitting_pattern(f, p, opt.seed);
    if (!first) os << "\n";
    first = false;
    os << pat.str();
    j[pat.place.str()] = pat.ramified ? std::string("ramified") : join(pat.degrees);
  }
  opt.emit(os.str(), j);
}

void cmd_split_equiv(const Options& opt, const std::string& file_f, const std::string& file_g,
                     uint64_t q, const std::string& gen) {
  FqFieldPtr field = field_from_q(q ? q : 7);
  glab::ParseContext ctx{field, "x", "y", gen};
  Poly<Poly<FqElem>> f = glab::parse_bivariate(read_poly_file(file_f), ctx);
  Poly<Poly<FqElem>> g = glab::parse_bivariate(read_poly_file(file_g), ctx);
  glab::SplittingComparison r = glab::splitting_equivalent(f, g, opt.bound_or(1), opt.seed);
  Json j;
  j["equivalent"] = r.equivalent;
  j["compared"] = r.places_compared;
  if (r.witness) {
    j["witness"] = r.witness->str();
    j["degrees_f"] = join(r.witness_degrees_f);
    j["degrees_g"] = join(r.witness_degrees_g);
  }
  std::vector<std::string> rams;
  rams.reserve(r.ramified.size());
  for (const glab::Place& p : r.ramified) rams.push_back(p.str());
  j["ramified"] = join(rams, ", ");
  opt.emit(r.text(), j);
}

void cmd_zeta(const Options& opt, const std::string& curve, uint64_t q, const std::string& gen) {
  glab::EllipticCurve e = as_elliptic(parse_curve(curve, q, gen));
  uint64_t n1 = glab::point_count(e);
  glab::ZetaData z = glab::zeta_from_counts({n1}, e.field->q(), 1, opt.bound_or(3));
  Json j;
  j["q"] = z.q;
  j["genus"] = z.genus;
  j["numerator"] = glab::poly_str_signed(z.numerator, "T");
  j["class_number"] = z.class_number.str();
  j["b"] = join(z.place_counts, ", ");
  opt.emit(z.text(), j);
}

void cmd_lfun(const Options& opt, const std::string& quad, uint64_t q, const std::string& gen) {
  FqFieldPtr field = field_from_q(q ? q : 7);
  glab::ParseContext ctx{field, "x", "", gen};
  Poly<FqElem> f = glab::parse_univariate(quad, ctx);
  Poly<glab::BigInt> lp = glab::quad_lfun(f, opt.bound_or(0));
  Json j;
  j["q"] = field->q();
  j["f"] = glab::poly_str(f, ctx);
  j["L"] = glab::poly_str_signed(lp, "T");
  opt.emit("L = " + glab::poly_str_signed(lp, "T"), j);
}

void cmd_count(const Options& opt, const std::string& curve, uint64_t q, int i,
               const std::string& gen) {
  if (i < 1) throw UsageFailure("--i must be at least 1");
  glab::EllipticCurve e = as_elliptic(parse_curve(curve, q, gen));
  uint64_t n = glab::point_count(e, i);
  uint64_t qi = glab::checked_pow(e.field->q(), static_cast<unsigned>(i));
  Json j;
  j["q"] = e.field->q();
  j["i"] = i;
  j["count"] = n;
  opt.emit("#E(F_" + std::to_string(qi) + ") = " + std::to_string(n), j);
}

void cmd_clgroup(const Options& opt, const std::string& curve, uint64_t q,
                 const std::string& gen) {
  glab::EllipticCurve e = as_elliptic(parse_curve(curve, q, gen));
  glab::AbelianGroupShape shape = glab::group_structure(e);
  Json j;
  j["q"] = e.field->q();
  j["group"] = shape.str();
  j["d1"] = shape.d1;
  j["d2"] = shape.d2;
  j["order"] = shape.order();
  opt.emit("E(F_" + std::to_string(e.field->q()) + ") = " + shape.str() + ", order " +
               std::to_string(shape.order()),
           j);
}

void cmd_j(const Options& opt, const std::string& curve, uint64_t q, const std::string& gen) {
  glab::EllipticCurve e = as_elliptic(parse_curve(curve, q, gen));
  FqElem v = glab::j_invariant(e);
  Json j;
  j["q"] = e.field->q();
  j["j"] = v.str();
  opt.emit("j = " + v.str(), j);
}

void cmd_divpoly(const Options& opt, const std::string& curve, uint64_t q, int l,
                 const std::string& gen) {
  CurveSpec c = parse_curve(curve, q, gen);
  std::string psi_str;
  int degree = 0;
  if (c.constant()) {
    Poly<FqElem> psi = glab::division_poly(as_elliptic(c), l);
    degree = psi.degree();
    psi_str = glab::poly_str(psi, glab::ParseContext{c.field, "x", "", gen});
  } else {
    Poly<Poly<FqElem>> psi = glab::division_poly(as_fqt(c), l);
    degree = psi.degree();
    psi_str = glab::poly_str(psi, glab::ParseContext{c.field, "t", "x", gen});
  }
  Json j;
  j["q"] = c.field->q();
  j["l"] = l;
  j["degree"] = degree;
  j["psi"] = psi_str;
  opt.emit("l=" + std::to_string(l) + " degree=" + std::to_string(degree) + "\npsi = " + psi_str,
           j);
}

void cmd_torsion(const Options& opt, const std::string& curve, uint64_t q, int l,
                 const std::string& gen) {
  glab::FqtCurve e = as_fqt(parse_curve(curve, q, gen));
  glab::TorsionResultant tr = glab::torsion_field_resultant(e, l);
  Json j;
  j["q"] = e.field->q();
  j["l"] = l;
  j["degree_y"] = tr.degree_y;
  j["separable"] = tr.separable;
  if (tr.witness_t) j["witness_t"] = tr.witness_t->str();
  opt.emit(tr.text(), j);
}

void cmd_igusa(const Options& opt, uint64_t q, uint64_t l) {
  glab::IgusaReport r = glab::igusa_criterion(q, l);
  Json j;
  j["q"] = r.q;
  j["l"] = r.l;
  j["subgroup"] = join(r.subgroup, ", ");
  j["trivial"] = r.trivial;
  opt.emit(r.text(), j);
}

void cmd_cft_params(const Options& opt, uint64_t p, uint64_t q, uint64_t order, uint64_t h) {
  glab::ParameterChoice pc = glab::choose_parameters(p, q, order, h);
  Json j;
  j["ell"] = pc.ell;
  j["t_degree_multiple"] = pc.t_degree_multiple;
  opt.emit(pc.text(), j);
}

void cmd_cft_ray(const Options& opt, uint64_t h, uint64_t q, uint64_t t_degree, uint64_t ell) {
  if (t_degree < 1 || t_degree > 10000)
    throw UsageFailure("--T must be between 1 and 10000");
  glab::RayClassOrder r = glab::ray_class_order(h, q, static_cast<unsigned>(t_degree), ell);
  Json j;
  j["order"] = r.order.str();
  j["modulus_degree"] = r.modulus_degree;
  if (r.ell) {
    j["ell"] = r.ell;
    j["divisible"] = r.divisible;
  }
  opt.emit(r.text(), j);
}

void cmd_scenario_run(const Options& opt, const std::string& id) {
  glab::ScenarioResult r;
  try {
    r = glab::run_scenario(id);
  } catch (const glab::error& e) {
    if (e.code() == glab::errc::unknown_scenario) throw UsageFailure(e.what());
    throw;
  }
  Json j;
  j["id"] = r.id;
  j["title"] = r.title;
  j["pass"] = r.pass;
  j["report"] = r.text();
  opt.emit(r.text(), j);
  if (!r.pass) throw ScenarioFail{};
}

void cmd_scenario_list(const Options& opt) {
  std::ostringstream os;
  Json j;
  bool first = true;
  for (const glab::ScenarioInfo& s : glab::list_scenarios()) {
    if (!first) os << "\n";
    first = false;
    os << s.id << ": " << s.title;
    j[s.id] = s.title;
  }
  opt.emit(os.str(), j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic-equivalence toolkit for global function fields"};
  app.name("glab");
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "flat key-value JSON output");
  app.add_option("--bound", opt.bound, "degree bound for place scans and Euler checks");
  app.add_option("--seed", opt.seed, "deterministic seed for randomized internals");

  // split FILE [--place P] [--q Q]
  auto* split = app.add_subcommand("split", "splitting pattern of f(x,y) at places of F_q(x)");
  split->fallthrough();
  auto split_file = std::make_shared<std::string>();
  auto split_place = std::make_shared<std::string>();
  auto split_q = std::make_shared<uint64_t>(0);
  auto split_gen = std::make_shared<std::string>();
  split->add_option("file", *split_file, "file with a defining polynomial, monic in y")
      ->required();
  split->add_option("--place", *split_place, "finite place as a polynomial in x, or 'inf'");
  split->add_option("--q", *split_q, "field size (prime power, default 7)");
  split->add_option("--gen", *split_gen, "name of a declared generator of F_q*");
  split->callback([&opt, split_file, split_place, split_q, split_gen] {
    cmd_split(opt, *split_file, *split_place, *split_q, *split_gen);
  });

  // split-equiv FILE1 FILE2 [--bound B]
  auto* seq = app.add_subcommand("split-equiv",
                                 "compare splitting behavior of two extensions place by place");
  seq->fallthrough();
  auto seq_f = std::make_shared<std::string>();
  auto seq_g = std::make_shared<std::string>();
  auto seq_q = std::make_shared<uint64_t>(0);
  auto seq_gen = std::make_shared<std::string>();
  seq->add_option("file_f", *seq_f, "first defining polynomial file")->required();
  seq->add_option("file_g", *seq_g, "second defining polynomial file")->required();
  seq->add_option("--q", *seq_q, "field size (prime power, default 7)");
  seq->add_option("--gen", *seq_gen, "name of a declared generator of F_q*");
  seq->callback([&opt, seq_f, seq_g, seq_q, seq_gen] {
    cmd_split_equiv(opt, *seq_f, *seq_g, *seq_q, *seq_gen);
  });

  auto add_curve_options = [](CLI::App* sub, std::shared_ptr<std::string> curve,
                              std::shared_ptr<uint64_t> q, std::shared_ptr<std::string> gen) {
    sub->fallthrough();
    sub->add_option("--curve", *curve, "curve as 'a,b' or 'E/F_q: a=..., b=...'")->required();
    sub->add_option("--q", *q, "field size when the curve text does not name one (default 7)");
    sub->add_option("--gen", *gen, "name of a declared generator of F_q*");
  };

  // zeta --curve "a,b" --q 7
  auto* zeta = app.add_subcommand("zeta", "zeta numerator and class number of a curve over F_q");
  auto zeta_curve = std::make_shared<std::string>();
  auto zeta_q = std::make_shared<uint64_t>(0);
  auto zeta_gen = std::make_shared<std::string>();
  add_curve_options(zeta, zeta_curve, zeta_q, zeta_gen);
  zeta->callback([&opt, zeta_curve, zeta_q, zeta_gen] {
    cmd_zeta(opt, *zeta_curve, *zeta_q, *zeta_gen);
  });

  // lfun --quad "x^3+1" --q 7
  auto* lfun = app.add_subcommand("lfun", "L-polynomial of the quadratic character of y^2 = f(x)");
  lfun->fallthrough();
  auto lfun_f = std::make_shared<std::string>();
  auto lfun_q = std::make_shared<uint64_t>(0);
  auto lfun_gen = std::make_shared<std::string>();
  lfun->add_option("--quad", *lfun_f, "squarefree f(x) defining y^2 = f(x)")->required();
  lfun->add_option("--q", *lfun_q, "field size (odd prime power, default 7)");
  lfun->add_option("--gen", *lfun_gen, "name of a declared generator of F_q*");
  lfun->callback(
      [&opt, lfun_f, lfun_q, lfun_gen] { cmd_lfun(opt, *lfun_f, *lfun_q, *lfun_gen); });

  // count --curve C [--i I]
  auto* count = app.add_subcommand("count", "#E(F_{q^i}) by exact enumeration");
  auto count_curve = std::make_shared<std::string>();
  auto count_q = std::make_shared<uint64_t>(0);
  auto count_gen = std::make_shared<std::string>();
  auto count_i = std::make_shared<int>(1);
  add_curve_options(count, count_curve, count_q, count_gen);
  count->add_option("--i", *count_i, "extension degree (default 1)");
  count->callback([&opt, count_curve, count_q, count_i, count_gen] {
    cmd_count(opt, *count_curve, *count_q, *count_i, *count_gen);
  });

  // clgroup --curve C
  auto* clg = app.add_subcommand("clgroup", "invariant factors of E(F_q)");
  auto clg_curve = std::make_shared<std::string>();
  auto clg_q = std::make_shared<uint64_t>(0);
  auto clg_gen = std::make_shared<std::string>();
  add_curve_options(clg, clg_curve, clg_q, clg_gen);
  clg->callback(
      [&opt, clg_curve, clg_q, clg_gen] { cmd_clgroup(opt, *clg_curve, *clg_q, *clg_gen); });

  // j --curve C
  auto* jinv = app.add_subcommand("j", "j-invariant of a curve over F_q");
  auto jinv_curve = std::make_shared<std::string>();
  auto jinv_q = std::make_shared<uint64_t>(0);
  auto jinv_gen = std::make_shared<std::string>();
  add_curve_options(jinv, jinv_curve, jinv_q, jinv_gen);
  jinv->callback(
      [&opt, jinv_curve, jinv_q, jinv_gen] { cmd_j(opt, *jinv_curve, *jinv_q, *jinv_gen); });

  // divpoly --curve C --l L
  auto* dpoly = app.add_subcommand("divpoly", "l-division polynomial in x-form");
  auto dpoly_curve = std::make_shared<std::string>();
  auto dpoly_q = std::make_shared<uint64_t>(0);
  auto dpoly_gen = std::make_shared<std::string>();
  auto dpoly_l = std::make_shared<int>(0);
  add_curve_options(dpoly, dpoly_curve, dpoly_q, dpoly_gen);
  dpoly->add_option("--l", *dpoly_l, "odd prime distinct from the characteristic")->required();
  dpoly->callback([&opt, dpoly_curve, dpoly_q, dpoly_l, dpoly_gen] {
    cmd_divpoly(opt, *dpoly_curve, *dpoly_q, *dpoly_l, *dpoly_gen);
  });

  // torsion-resultant --curve C --l L
  auto* tres = app.add_subcommand("torsion-resultant",
                                  "Res_x(psi_l, y^2 - x^3 - ax - b) over F_q[t] with separability");
  auto tres_curve = std::make_shared<std::string>();
  auto tres_q = std::make_shared<uint64_t>(0);
  auto tres_gen = std::make_shared<std::string>();
  auto tres_l = std::make_shared<int>(0);
  add_curve_options(tres, tres_curve, tres_q, tres_gen);
  tres->add_option("--l", *tres_l, "odd prime distinct from the characteristic")->required();
  tres->callback([&opt, tres_curve, tres_q, tres_l, tres_gen] {
    cmd_torsion(opt, *tres_curve, *tres_q, *tres_l, *tres_gen);
  });

  // igusa --q Q --l L
  auto* igusa = app.add_subcommand("igusa", "constant-field subgroup <q> of F_l^*");
  igusa->fallthrough();
  auto igusa_q = std::make_shared<uint64_t>(0);
  auto igusa_l = std::make_shared<uint64_t>(0);
  igusa->add_option("--q", *igusa_q, "field size (prime power)")->required();
  igusa->add_option("--l", *igusa_l, "odd prime not dividing q")->required();
  igusa->callback([&opt, igusa_q, igusa_l] { cmd_igusa(opt, *igusa_q, *igusa_l); });

  // cft params / cft ray
  auto* cft = app.add_subcommand("cft", "class-field-theoretic construction parameters");
  cft->fallthrough();
  cft->require_subcommand(1);
  auto* params = cft->add_subcommand("params", "smallest usable prime l and conductor rule");
  params->fallthrough();
  params->set_help_flag("--help", "print help");  // frees -h for the class number
  auto cp_p = std::make_shared<uint64_t>(0);
  auto cp_q = std::make_shared<uint64_t>(0);
  auto cp_order = std::make_shared<uint64_t>(0);
  auto cp_h = std::make_shared<uint64_t>(0);
  params->add_option("--p", *cp_p, "characteristic")->required();
  params->add_option("--q", *cp_q, "field size (power of p)")->required();
  params->add_option("--order", *cp_order, "Galois group order")->required();
  params->add_option("--h", *cp_h, "class number")->required();
  params->callback(
      [&opt, cp_p, cp_q, cp_order, cp_h] { cmd_cft_params(opt, *cp_p, *cp_q, *cp_order, *cp_h); });
  auto* ray = cft->add_subcommand("ray", "ray class group order for conductor T*infinity");
  ray->fallthrough();
  ray->set_help_flag("--help", "print help");
  auto ray_h = std::make_shared<uint64_t>(0);
  auto ray_q = std::make_shared<uint64_t>(0);
  auto ray_t = std::make_shared<uint64_t>(0);
  auto ray_l = std::make_shared<uint64_t>(0);
  ray->add_option("--h", *ray_h, "class number")->required();
  ray->add_option("--q", *ray_q, "field size (prime power)")->required();
  ray->add_option("--T", *ray_t, "conductor degree")->required();
  ray->add_option("--l", *ray_l, "optional prime to test for divisibility");
  ray->callback([&opt, ray_h, ray_q, ray_t, ray_l] {
    cmd_cft_ray(opt, *ray_h, *ray_q, *ray_t, *ray_l);
  });

  // scenario run ID / scenario list
  auto* scen = app.add_subcommand("scenario", "executable catalog of worked examples");
  scen->fallthrough();
  scen->require_subcommand(1);
  auto* srun = scen->add_subcommand("run", "run one scenario and check its expectations");
  srun->fallthrough();
  auto scen_id = std::make_shared<std::string>();
  srun->add_option("id", *scen_id, "scenario id (see 'scenario list')")->required();
  srun->callback([&opt, scen_id] { cmd_scenario_run(opt, *scen_id); });
  auto* slist = scen->add_subcommand("list", "list scenario ids and titles");
  slist->fallthrough();
  slist->callback([&opt] { cmd_scenario_list(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ScenarioFail&) {
    return 1;
  } catch (const UsageFailure& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const glab::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return user_fault(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
