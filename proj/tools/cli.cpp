#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "bsinf/errors.hpp"
#include "bsinf/invariant.hpp"
#include "bsinf/oracle.hpp"
#include "bsinf/parser.hpp"
#include "bsinf/report_json.hpp"

namespace bsinf::cli {

namespace {

constexpr double kDirectionTolerance = 1e-6;

struct Settings {
  bool json = false;
  bool quiet = false;
  std::optional<int> radius_max;
  std::optional<std::string> epsilon;
  std::string output;
};

class Session {
 public:
  Session(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {
    if (s.epsilon) opts_.epsilon = parse_rational(*s.epsilon);
    if (opts_.epsilon && *opts_.epsilon <= 0) throw Error("--epsilon must be positive");
    if (s.radius_max) oracle_.radius_exp_max = *s.radius_max;
  }

  int invariant(const std::string& arg);
  int equiv(const std::string& a, const std::string& b);
  int normal_form(const std::string& arg);
  int realize(const std::string& arg);
  int check(const std::string& arg);

 private:
  std::string load(const std::string& arg);
  ParsedCurve curve(const std::string& arg) { return parse_curve(load(arg)); }
  InfinityReport report(const ParsedCurve& c) {
    return c.factors.size() > 1 ? k_at_infinity(c.factors, opts_) : k_at_infinity(c.poly, opts_);
  }
  KInvariant tuple(const std::string& text);
  void warn(const std::string& msg) {
    if (!s_.quiet) err_ << "warning: " << msg << "\n";
  }
  void print_report(const InfinityReport& r);

  const Settings& s_;
  std::ostream& out_;
  std::ostream& err_;
  InvariantOptions opts_;
  OracleConfig oracle_;
};

const std::regex& tuple_pattern() {
  static const std::regex re(R"(^\s*\d+(\s*,\s*\d+)*\s*$)");
  return re;
}

std::string normal_form_text(const NormalFormDescriptor& a) { return emit_normal_form(a).to_string(); }

std::string Session::load(const std::string& arg) {
  if (arg.empty() || arg.front() != '@') return arg;
  const std::string path = arg.substr(1);
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

KInvariant Session::tuple(const std::string& raw) {
  const std::string text = load(raw);
  if (!std::regex_match(text, tuple_pattern())) throw Error("expected a comma-separated tuple, got \"" + text + "\"");
  std::vector<std::size_t> v;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const unsigned long n = std::stoul(item);
    if (n == 0) throw Error("tuple entries must be positive");
    v.push_back(n);
  }
  KInvariant k(v);
  if (k.entries != v) warn("tuple reordered to " + k.to_string());
  return k;
}

void Session::print_report(const InfinityReport& r) {
  const std::string nf = normal_form_text(r.descriptor);
  if (s_.json) {
    out_ << report_to_json(r, nf) << "\n";
    return;
  }
  out_ << "curve: " << r.input << "\n";
  if (r.bounded) {
    out_ << "bounded curve; k = ()\n";
    return;
  }
  for (const PointRecord& p : r.points) {
    out_ << "point " << p.point.to_string() << ":";
    if (p.plus) out_ << " " << p.plus->direction.to_string() << " x" << p.plus->count;
    if (p.minus) out_ << " " << p.minus->direction.to_string() << " x" << p.minus->count;
    if (!p.plus && !p.minus) out_ << " no branches";
    out_ << (p.certified ? "  [certified, eps = " : "  [UNCERTIFIED, eps = ") << to_string(p.epsilon) << "]\n";
  }
  out_ << "k = " << r.k.to_string() << "\n";
  out_ << "descriptor A = " << r.descriptor.to_string() << "\n";
  out_ << "normal form: " << nf << "\n";
}

int Session::invariant(const std::string& arg) {
  print_report(report(curve(arg)));
  return kOk;
}

int Session::equiv(const std::string& a, const std::string& b) {
  const InfinityReport ra = report(curve(a));
  const InfinityReport rb = report(curve(b));
  const bool eq = equivalent_at_infinity(ra, rb);
  if (s_.json) {
    nlohmann::json j{{"schema", kJsonSchema},
                     {"equivalent", eq},
                     {"reports", nlohmann::json::array({nlohmann::json::parse(report_to_json(ra, normal_form_text(ra.descriptor))),
                                                        nlohmann::json::parse(report_to_json(rb, normal_form_text(rb.descriptor)))})}};
    out_ << j.dump(2) << "\n";
  } else if (eq) {
    out_ << "EQUIVALENT: k = " << ra.k.to_string() << "\n";
  } else {
    out_ << "NOT EQUIVALENT: k1 = " << ra.k.to_string() << ", k2 = " << rb.k.to_string() << "\n";
  }
  return eq ? kOk : kNotEquivalent;
}

int Session::normal_form(const std::string& arg) {
  if (std::regex_match(load(arg), tuple_pattern())) {
    const KInvariant k = tuple(arg);
    const NormalFormDescriptor a = canonical_descriptor(k);
    const std::string nf = normal_form_text(a);
    if (s_.json) {
      nlohmann::json d = nlohmann::json::array();
      for (const DescriptorPair& p : a.pairs) d.push_back({p.r0, p.r1});
      out_ << nlohmann::json{{"schema", kJsonSchema}, {"k", k.entries}, {"descriptor", d}, {"normal_form", nf}}.dump(2)
           << "\n";
    } else {
      out_ << "A = " << a.to_string() << "\n" << "polynomial: " << nf << "\n";
    }
    return kOk;
  }
  const InfinityReport r = report(curve(arg));
  if (s_.json) {
    out_ << report_to_json(r, normal_form_text(r.descriptor)) << "\n";
  } else {
    out_ << "k = " << r.k.to_string() << "\n"
         << "A = " << r.descriptor.to_string() << "\n"
         << "polynomial: " << normal_form_text(r.descriptor) << "\n";
  }
  return kOk;
}

int Session::realize(const std::string& arg) {
  const KInvariant k = tuple(arg);
  const std::vector<BivarPoly> factors = realize_paper_factors(k);
  const BivarPoly p = product(factors);
  const bool verified = factors.empty() || k_at_infinity(factors, opts_).k == k;
  if (s_.json) {
    out_ << nlohmann::json{{"schema", kJsonSchema},
                           {"k", k.entries},
                           {"factored", factored_string(factors)},
                           {"polynomial", p.to_string()},
                           {"verified", verified}}
                .dump(2)
         << "\n";
  } else {
    out_ << factored_string(factors) << "\n";
    out_ << "expanded: " << p.to_string() << "\n";
    if (verified)
      out_ << "verified: k = " << k.to_string() << "\n";
    else
      out_ << "verification FAILED\n";
  }
  if (!verified) err_ << "error: realized curve does not reproduce " << k.to_string() << "\n";
  return verified ? kOk : kError;
}

int Session::check(const std::string& arg) {
  const ParsedCurve c = curve(arg);
  const InfinityReport r = report(c);
  const OracleReport o = oracle_k(c.factors.empty() ? std::vector<BivarPoly>{c.poly} : c.factors, oracle_);

  std::vector<std::size_t> oc = o.counts();
  bool agree = oc == r.k.entries;
  const std::vector<DirectionCount> exact = r.directions();
  for (const OracleDirection& d : o.directions) {
    bool matched = false;
    for (const DirectionCount& e : exact) {
      const auto [ux, uy] = e.direction.unit();
      if (e.count == d.count && std::hypot(ux - d.x, uy - d.y) <= kDirectionTolerance) matched = true;
    }
    agree = agree && matched;
  }
  const KInvariant ok(oc);
  if (s_.json) {
    nlohmann::json dirs = nlohmann::json::array();
    for (const OracleDirection& d : o.directions) dirs.push_back({{"dir", {d.x, d.y}}, {"count", d.count}});
    out_ << nlohmann::json{{"schema", kJsonSchema},
                           {"exact", nlohmann::json::parse(report_to_json(r, normal_form_text(r.descriptor)))},
                           {"oracle", {{"k", oc}, {"stable", o.stable}, {"directions", dirs}}},
                           {"agree", agree}}
                .dump(2)
         << "\n";
  } else {
    out_ << "exact:  k = " << r.k.to_string() << (r.certified() ? "" : " (uncertified)") << "\n";
    out_ << "oracle: k = " << ok.to_string() << (o.stable ? " (stable)" : " (unstable)") << "\n";
    out_ << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  if (!o.stable) warn("oracle counts did not stabilize over the radius schedule");
  return agree ? kOk : kDisagree;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify real plane algebraic curves at infinity", "bsinf"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Settings s;
  app.add_flag("--json", s.json, "Machine-readable output (schema bsinf/1)");
  app.add_flag("-q,--quiet", s.quiet, "Suppress warnings");
  app.add_option("--radius-max", s.radius_max, "Largest oracle radius exponent (radii up to 2^N)")->check(CLI::Range(4, 60));
  app.add_option("--epsilon", s.epsilon, "Override the certified radius (results marked uncertified)");
  app.add_option("-o,--output", s.output, "Write results to this file instead of stdout");

  std::string a, b;
  auto* inv = app.add_subcommand("invariant", "Compute k(X, infinity) of a curve");
  inv->add_option("curve", a, "Polynomial or @file")->required();
  auto* eqv = app.add_subcommand("equiv", "Decide equivalence at infinity of two curves");
  eqv->add_option("curve1", a, "Polynomial or @file")->required();
  eqv->add_option("curve2", b, "Polynomial or @file")->required();
  auto* nf = app.add_subcommand("normal-form", "Canonical normal form of a curve or of a tuple");
  nf->add_option("input", a, "Polynomial, tuple such as 1,3, or @file")->required();
  auto* rea = app.add_subcommand("realize", "Build a curve realizing an even-sum tuple");
  rea->add_option("tuple", a, "Comma-separated positive integers")->required();
  auto* chk = app.add_subcommand("check", "Cross-check the exact pipeline against the numeric oracle");
  chk->add_option("curve", a, "Polynomial or @file")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  std::ostringstream buffer;
  std::ostream& sink = s.output.empty() ? out : buffer;
  int code = kOk;
  try {
    Session session(s, sink, err);
    if (*inv)
      code = session.invariant(a);
    else if (*eqv)
      code = session.equiv(a, b);
    else if (*nf)
      code = session.normal_form(a);
    else if (*rea)
      code = session.realize(a);
    else
      code = session.check(a);
  } catch (const NotRealizable& e) {
    err << "not realizable: " << e.what() << "\n";
    return kNotRealizable;
  } catch (const SyntaxError& e) {
    err << "SyntaxError: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  if (!s.output.empty()) {
    const std::string path = s.output.front() == '@' ? s.output.substr(1) : s.output;
    std::ofstream f(path);
    if (!(f << buffer.str())) {
      err << "error: cannot write " << path << "\n";
      return kError;
    }
  }
  return code;
}

}  // namespace bsinf::cli
