#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "ecr/error.hpp"
#include "ecr/io.hpp"
#include "ecr/oeis.hpp"
#include "ecr/paths.hpp"
#include "ecr/pipeline.hpp"
#include "ecr/transforms.hpp"

namespace ecr::cli {
namespace {

using io::Json;

struct Globals {
  std::size_t order = 32;
  std::string format = "text";
  bool offline = false;
};

struct CurveArgs {
  std::string a, b, c;
  bool given() const { return !a.empty() || !b.empty() || !c.empty(); }
  CurveParams build() const {
    if (a.empty() || b.empty() || c.empty()) throw Error(Errc::ParseError, "--a, --b and --c are all required");
    return curve_new(parse_rational(a), parse_rational(b), parse_rational(c));
  }
};

void add_curve_flags(CLI::App* sub, CurveArgs& args) {
  sub->add_option("--a", args.a, "curve parameter a (integer or p/q)")->allow_extra_args(false);
  sub->add_option("--b", args.b, "curve parameter b")->allow_extra_args(false);
  sub->add_option("--c", args.c, "curve parameter c")->allow_extra_args(false);
}

struct SequenceSource {
  std::string inline_text;
  std::string file;
};

void add_sequence_flags(CLI::App* sub, SequenceSource& src) {
  sub->add_option("sequence", src.inline_text, "terms separated by commas or whitespace, or a JSON array; '-' reads stdin");
  sub->add_option("--seq", src.inline_text, "same as the positional sequence");
  sub->add_option("--file", src.file, "read the sequence from a file");
}

std::vector<Rational> parse_sequence_text(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(Errc::ParseError, "empty sequence");
  if (text[first] == '[') {
    try {
      return io::sequence_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw Error(Errc::ParseError, std::string("bad JSON sequence: ") + e.what());
    }
  }
  std::vector<Rational> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_rational(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch)))
      flush();
    else
      token += ch;
  }
  flush();
  return out;
}

std::string slurp(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Rational> read_sequence(const SequenceSource& src, std::istream& in) {
  if (!src.inline_text.empty() && src.inline_text != "-") return parse_sequence_text(src.inline_text);
  if (!src.file.empty()) {
    std::ifstream f(src.file);
    if (!f) throw Error(Errc::ParseError, "cannot read " + src.file);
    return parse_sequence_text(slurp(f));
  }
  return parse_sequence_text(slurp(in));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string steps_text(const StepSet& s) {
  std::string out;
  for (const Step& st : s.steps) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(st.dx) + "," + std::to_string(st.dy) + "):" + to_string(st.weight);
  }
  if (s.origin_override) out += " origin_override:" + to_string(*s.origin_override);
  return out;
}

std::string point_text(const CurvePoint& p) {
  if (p.is_infinity()) return "O";
  return "(" + to_string(p.x()) + "," + to_string(p.y()) + ")";
}

/// One labelled sequence in the selected format.
void emit_sequence(std::ostream& out, const Globals& g, const std::string& name, const std::vector<Rational>& seq) {
  if (g.format == "json")
    out << Json{{name, io::to_json(seq)}}.dump(2) << '\n';
  else if (g.format == "csv")
    out << join(seq) << '\n';
  else
    out << name << ": " << join(seq) << '\n';
}

void emit_triangle(std::ostream& out, const Globals& g, const Triangle& t) {
  if (g.format == "json") {
    out << io::to_json(t).dump() << '\n';
  } else if (g.format == "csv") {
    out << io::triangle_to_csv(t);
  } else {
    for (std::size_t n = 0; n < t.size(); ++n) out << n << ": " << join(t[n], " ") << '\n';
  }
}

// ---------------------------------------------------------------- derive

int cmd_derive(const Globals& gl, const CurveArgs& ca, std::ostream& out) {
  const CurveParams E = ca.build();
  const std::size_t order = gl.order;
  const Series g = derive_g(E, order);
  const Series gam = derive_gamma(E, order);
  const StepSet sg = stepset_for_g(E);
  const StepSet sgam = stepset_for_gamma(E);
  const std::size_t hcount = std::min<std::size_t>((order + 1) / 2, 12);
  const auto h = hankel_transform(g.vector(), hcount);
  const auto W = eds(E, hcount + 1).terms;
  const SomosParams curve_form = somos_params(E);
  const SomosParams appendix_form = somos_params_am(g_family_params(E));

  if (gl.format == "json") {
    Json doc{{"curve", io::curve_json(E)},
             {"order", order},
             {"g", io::to_json(g)},
             {"gamma", io::to_json(gam)},
             {"steps_g", io::to_json(sg)},
             {"steps_gamma", io::to_json(sgam)},
             {"a_matrix_g", io::to_json(g_family_params(E))},
             {"a_matrix_gamma", io::to_json(gamma_family_params(E))},
             {"somos", {{"curve_form", io::to_json(curve_form)}, {"appendix_form", io::to_json(appendix_form)}}},
             {"hankel", io::to_json(h)},
             {"eds", io::to_json(W)}};
    out << doc.dump(2) << '\n';
  } else if (gl.format == "csv") {
    out << "a,b,c," << to_string(E.a()) << ',' << to_string(E.b()) << ',' << to_string(E.c()) << '\n';
    out << "g," << join(g.vector()) << '\n';
    out << "gamma," << join(gam.vector()) << '\n';
    out << "steps_g," << csv_field(steps_text(sg)) << '\n';
    out << "steps_gamma," << csv_field(steps_text(sgam)) << '\n';
    out << "somos_curve_form," << to_string(curve_form.r) << ',' << to_string(curve_form.s) << '\n';
    out << "somos_appendix_form," << to_string(appendix_form.r) << ',' << to_string(appendix_form.s) << '\n';
    out << "hankel," << join(h) << '\n';
    out << "eds," << join(W) << '\n';
  } else {
    out << "curve: y^2 - (" << to_string(E.a()) << ")xy - y = x^3 - (" << to_string(E.b()) << ")x^2 - ("
        << to_string(E.c()) << ")x, discriminant " << to_string(E.discriminant()) << '\n';
    out << "g: " << join(g.vector()) << '\n';
    out << "gamma: " << join(gam.vector()) << '\n';
    out << "steps g: " << steps_text(sg) << '\n';
    out << "steps gamma: " << steps_text(sgam) << '\n';
    out << "somos (r,s): curve form (" << to_string(curve_form.r) << "," << to_string(curve_form.s)
        << "), appendix form (" << to_string(appendix_form.r) << "," << to_string(appendix_form.s) << ")\n";
    out << "hankel: " << join(h) << '\n';
    out << "eds: " << join(W) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Globals& gl, const CurveArgs& ca, std::ostream& out) {
  const CurveParams E = ca.build();
  const VerifyReport report = full_verify(E, gl.order);
  if (gl.format == "json") {
    out << io::to_json(report).dump(2) << '\n';
  } else if (gl.format == "csv") {
    out << "name,pass,detail\n";
    for (const auto& c : report.checks) out << c.name << ',' << (c.pass ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
  } else {
    for (const auto& c : report.checks)
      out << (c.pass ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    out << (report.all_pass() ? "all checks pass" : "some checks FAILED") << '\n';
  }
  return report.all_pass() ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- paths

struct PathsArgs {
  std::string steps_json;
  std::string steps_file;
  std::string family = "g";
  long r = 0;
  std::size_t rows = 8;
  bool brute = false;
};

int cmd_paths(const Globals& gl, const CurveArgs& ca, const PathsArgs& pa, std::ostream& out, std::ostream& err) {
  StepSet steps;
  if (!pa.steps_json.empty() || !pa.steps_file.empty()) {
    std::string text = pa.steps_json;
    if (text.empty()) {
      std::ifstream f(pa.steps_file);
      if (!f) throw Error(Errc::ParseError, "cannot read " + pa.steps_file);
      text = slurp(f);
    }
    try {
      steps = io::stepset_from_json(Json::parse(text));
    } catch (const Json::exception& e) {
      throw Error(Errc::ParseError, std::string("bad step set JSON: ") + e.what());
    }
  } else if (ca.given()) {
    const CurveParams E = ca.build();
    if (pa.family == "g")
      steps = stepset_for_g(E);
    else if (pa.family == "gamma")
      steps = stepset_for_gamma(E);
    else
      steps = stepset_orbit(E, pa.r);
  } else {
    throw Error(Errc::ParseError, "paths needs --steps, --steps-file or a curve");
  }

  const Triangle t = dp_count(steps, pa.rows);
  emit_triangle(out, gl, t);
  if (pa.brute) {
    const std::size_t upto = std::min(pa.rows, kBruteForceMaxN + 1);
    for (std::size_t n = 0; n < upto; ++n) {
      if (brute_force_row(steps, n) != t[n]) {
        err << "brute-force enumeration disagrees on row " << n << '\n';
        return kCheckFailed;
      }
    }
    err << "brute-force enumeration agrees on rows 0.." << (upto ? upto - 1 : 0) << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- hankel

int cmd_hankel(const Globals& gl, const SequenceSource& src, std::size_t count, std::istream& in, std::ostream& out) {
  const auto seq = read_sequence(src, in);
  if (count == 0) count = (seq.size() + 1) / 2;
  emit_sequence(out, gl, "hankel", hankel_transform(seq, count));
  return kOk;
}

// ---------------------------------------------------------------- eds

int cmd_eds(const Globals& gl, const CurveArgs& ca, std::size_t n, std::ostream& out) {
  emit_sequence(out, gl, "eds", eds(ca.build(), n).terms);
  return kOk;
}

// ---------------------------------------------------------------- points

int cmd_points(const Globals& gl, const CurveArgs& ca, std::size_t n, std::ostream& out) {
  const CurveParams E = ca.build();
  const PointMultiples m = point_multiples(E, n);
  if (gl.format == "json") {
    Json pts = Json::array();
    for (std::size_t k = 0; k < m.points.size(); ++k) {
      Json p = io::to_json(m.points[k]);
      p["k"] = k + 1;
      pts.push_back(p);
    }
    Json doc{{"points", pts}};
    doc["torsion_order"] = m.torsion_order ? Json(*m.torsion_order) : Json(nullptr);
    out << doc.dump(2) << '\n';
  } else if (gl.format == "csv") {
    out << "k,x,y\n";
    for (std::size_t k = 0; k < m.points.size(); ++k)
      out << k + 1 << ',' << to_string(m.points[k].x()) << ',' << to_string(m.points[k].y()) << '\n';
  } else {
    for (std::size_t k = 0; k < m.points.size(); ++k) out << k + 1 << "P = " << point_text(m.points[k]) << '\n';
    if (m.torsion_order) out << "P has order " << *m.torsion_order << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- jfrac

struct JfracArgs {
  std::string shift = "0";
  std::size_t depth = 0;
};

int cmd_jfrac(const Globals& gl, const CurveArgs& ca, const SequenceSource& src, const JfracArgs& ja,
              std::istream& in, std::ostream& out) {
  JFraction jf;
  std::optional<std::size_t> zero_lambda;
  std::optional<bool> matches;
  if (ca.given()) {
    const CurveParams E = ca.build();
    const Rational shift = parse_rational(ja.shift);
    const std::size_t depth = ja.depth ? ja.depth : 8;
    jf = jfrac_from_points(E, shift, depth);
    const std::size_t n = std::min(jf.valid_order(), gl.order);
    matches = jfrac_eval(jf, n) == ps_binomial(derive_g(E, n), shift);
  } else {
    const auto seq = read_sequence(src, in);
    if (seq.empty()) throw Error(Errc::ParseError, "empty sequence");
    const std::size_t depth = ja.depth ? ja.depth : (seq.size() - 1) / 2;
    const auto ex = jfrac_extract(Series(seq), depth);
    jf = ex.fraction;
    zero_lambda = ex.zero_lambda_at;
  }
  const auto expansion = jfrac_eval(jf, std::min(jf.valid_order(), gl.order)).vector();

  if (gl.format == "json") {
    Json doc = io::to_json(jf);
    doc["valid_order"] = jf.valid_order();
    doc["expansion"] = io::to_json(expansion);
    if (zero_lambda) doc["zero_lambda_at"] = *zero_lambda;
    if (matches) doc["matches_binomial_transform"] = *matches;
    out << doc.dump(2) << '\n';
  } else if (gl.format == "csv") {
    out << "b," << join(jf.b) << '\n' << "lam," << join(jf.lam) << '\n' << "expansion," << join(expansion) << '\n';
  } else {
    out << "b: " << join(jf.b) << '\n' << "lam: " << join(jf.lam) << '\n';
    out << "expansion (" << expansion.size() << " terms): " << join(expansion) << '\n';
    if (zero_lambda) out << "extraction stopped: lam_" << *zero_lambda << " = 0\n";
    if (matches) out << "matches binomial transform of g: " << (*matches ? "yes" : "NO") << '\n';
  }
  return matches.value_or(true) ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- oeis

struct OeisArgs {
  std::string id;
  std::string from;
};

int cmd_oeis(const Globals& gl, const CurveArgs& ca, const SequenceSource& src, const OeisArgs& oa,
             std::istream& in, std::ostream& out, std::ostream& err) {
  if (!oeis::valid_id(oa.id)) {
    err << "error: malformed OEIS id '" << oa.id << "'\n";
    return kBadInput;
  }
  std::vector<Rational> seq;
  if (!oa.from.empty()) {
    const std::size_t n = gl.order;
    if (oa.from == "catalan") {
      seq = catalan_gf(n).vector();
    } else {
      const CurveParams E = ca.build();
      if (oa.from == "g")
        seq = derive_g(E, n).vector();
      else if (oa.from == "gamma")
        seq = derive_gamma(E, n).vector();
      else
        seq = hankel_transform(derive_gamma(E, n).vector(), (n + 1) / 2);
    }
  } else {
    seq = read_sequence(src, in);
  }

  oeis::LookupOptions opts;
  opts.offline = gl.offline;
  opts.cache_dir = oeis::default_cache_dir();
  if (const char* url = std::getenv("EC_RIORDAN_OEIS_URL"); url && *url) opts.base_url = url;
  const auto res = oeis::lookup(oa.id, opts);
  switch (res.status) {
    case oeis::LookupStatus::Found:
      break;
    case oeis::LookupStatus::UnknownOffline:
    case oeis::LookupStatus::BadId:
      err << "error: " << res.message << '\n';
      return kBadInput;
    case oeis::LookupStatus::NetworkFailure:
      err << "error: " << res.message << '\n';
      return kNetworkFailure;
  }

  const auto cmp = oeis::compare(seq, res.values);
  if (gl.format == "json") {
    Json doc{{"id", oa.id}, {"source", res.source}, {"match", cmp.match}, {"offset", cmp.offset},
             {"compared", cmp.compared}};
    doc["first_mismatch"] = cmp.first_mismatch ? Json(*cmp.first_mismatch) : Json(nullptr);
    out << doc.dump(2) << '\n';
  } else if (gl.format == "csv") {
    out << "id,source,match,offset,compared,first_mismatch\n"
        << oa.id << ',' << res.source << ',' << (cmp.match ? "true" : "false") << ',' << cmp.offset << ','
        << cmp.compared << ',' << (cmp.first_mismatch ? std::to_string(*cmp.first_mismatch) : "") << '\n';
  } else if (cmp.match) {
    out << oa.id << ": match on " << cmp.compared << " terms at offset " << cmp.offset << " (" << res.source << ")\n";
  } else {
    out << oa.id << ": mismatch";
    if (cmp.first_mismatch) out << " at index " << *cmp.first_mismatch;
    out << " (" << res.source << ")\n";
  }
  return cmp.match ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic curves, Riordan arrays and lattice paths with exact arithmetic", "ec-riordan"};
  app.require_subcommand(1);
  Globals gl;
  app.add_option("--order", gl.order, "series order (default 32)")->check(CLI::PositiveNumber);
  app.add_option("--format", gl.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--offline", gl.offline, "use bundled OEIS fixtures only");

  CurveArgs curve;
  SequenceSource seq;

  auto* derive = app.add_subcommand("derive", "g, gamma, step sets, Somos parameters, Hankel and EDS prefixes");
  add_curve_flags(derive, curve);

  auto* verify = app.add_subcommand("verify", "run every cross-check on one curve");
  add_curve_flags(verify, curve);

  PathsArgs pa;
  auto* paths = app.add_subcommand("paths", "weighted lattice path counts");
  add_curve_flags(paths, curve);
  paths->add_option("--steps", pa.steps_json, "step set as JSON [{\"dx\":1,\"dy\":1,\"w\":\"1\"},...]");
  paths->add_option("--steps-file", pa.steps_file, "read the step set JSON from a file");
  paths->add_option("--family", pa.family, "with a curve: g, gamma or orbit")->check(CLI::IsMember({"g", "gamma", "orbit"}));
  paths->add_option("--r", pa.r, "binomial orbit index for --family orbit");
  paths->add_option("--rows", pa.rows, "number of rows (default 8)");
  paths->add_flag("--brute", pa.brute, "cross-check against exhaustive enumeration");

  std::size_t hankel_count = 0;
  auto* hankel = app.add_subcommand("hankel", "Hankel transform of a sequence");
  add_sequence_flags(hankel, seq);
  hankel->add_option("--count", hankel_count, "number of determinants (default: all available)");

  std::size_t eds_n = 12;
  auto* eds_cmd = app.add_subcommand("eds", "elliptic divisibility sequence W_0..W_n at (0,0)");
  add_curve_flags(eds_cmd, curve);
  eds_cmd->add_option("--n", eds_n, "last index (default 12)");

  std::size_t points_n = 8;
  auto* points = app.add_subcommand("points", "multiples kP of P = (0,0)");
  add_curve_flags(points, curve);
  points->add_option("--n", points_n, "number of multiples (default 8)");

  JfracArgs ja;
  auto* jfrac = app.add_subcommand("jfrac", "J-fraction from the multiples of P, or extracted from a sequence");
  add_curve_flags(jfrac, curve);
  add_sequence_flags(jfrac, seq);
  jfrac->add_option("--shift", ja.shift, "binomial shift for the curve form (default 0)");
  jfrac->add_option("--depth", ja.depth, "number of levels");

  OeisArgs oa;
  auto* oeis_cmd = app.add_subcommand("oeis", "compare a sequence with an OEIS entry");
  add_curve_flags(oeis_cmd, curve);
  add_sequence_flags(oeis_cmd, seq);
  oeis_cmd->add_option("--id", oa.id, "A-number, e.g. A025243")->required();
  oeis_cmd->add_option("--from", oa.from, "g, gamma, hankel (of gamma) or catalan instead of a given sequence")
      ->check(CLI::IsMember({"g", "gamma", "hankel", "catalan"}));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*derive) return cmd_derive(gl, curve, out);
    if (*verify) return cmd_verify(gl, curve, out);
    if (*paths) return cmd_paths(gl, curve, pa, out, err);
    if (*hankel) return cmd_hankel(gl, seq, hankel_count, in, out);
    if (*eds_cmd) return cmd_eds(gl, curve, eds_n, out);
    if (*points) return cmd_points(gl, curve, points_n, out);
    if (*jfrac) return cmd_jfrac(gl, curve, seq, ja, in, out);
    if (*oeis_cmd) return cmd_oeis(gl, curve, seq, oa, in, out, err);
  } catch (const Error& e) {
    err << "error: " << (e.code() == Errc::SingularCurve ? "singular curve: " : "") << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace ecr::cli
