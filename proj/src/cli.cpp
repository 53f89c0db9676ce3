#include "whitforge/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "whitforge/errors.hpp"
#include "whitforge/io.hpp"
#include "whitforge/orbits.hpp"

#ifndef WHITFORGE_FIXTURE_DIR
#define WHITFORGE_FIXTURE_DIR "fixtures"
#endif

namespace whitforge::cli {
namespace {

using io::Json;

struct Options {
  std::string input = "-";
  std::string output = "json";
  std::string mu, lambda, eta, gamma;
  std::string a = "1", b = "1";
  std::string group = "GL", field = "real";
  std::string t;
  std::string rule = "weight-two";
  std::string filter;
  std::string dir;
  int n = 0;
};

// A command's result: the JSON document plus its human-readable rendering.
struct Report {
  Json doc;
  std::string text;
  int status = kOk;
};

std::string span_text(const Subspace& s) {
  std::string out = "span{";
  bool first = true;
  for (const auto& m : s.matrices()) {
    out += (first ? "" : ", ") + to_e_notation(m);
    first = false;
  }
  return out + "}";
}

std::string list_text(const std::vector<Rational>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + to_string(values[i]);
  return out.empty() ? "(none)" : out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string checks_text(const std::vector<NamedCheck>& checks) {
  std::string out;
  for (const auto& c : checks) out += "  " + c.name + ": " + (c.passed ? "ok" : "FAILED") + "\n";
  return out;
}

Json read_document(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("input is not valid JSON: ") + e.what());
  }
}

QMatrix resolve_h(const io::PairInput& in) {
  if (in.h) return *in.h;
  return find_Z(make_whittaker_pair(in.s, in.f)).h;
}

Report orbit_classify(const Options& o, std::istream& in) {
  const Json doc = read_document(o.input, in);
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  std::optional<std::size_t> n;
  if (doc.contains("n")) n = doc.at("n").get<std::size_t>();
  const char* key = doc.contains("N") ? "N" : "f";
  if (!doc.contains(key)) throw ParseError("input lacks \"N\" (or \"f\")");
  const QMatrix f = io::matrix_from_json(doc[key], n);
  const Partition p = jordan_partition(f);
  const SlOrbitClass cls = sl_class(f);
  const QMatrix h = doc.contains("h") ? io::matrix_from_json(doc["h"], f.rows()) : neutral_for(f);
  const QMatrix e = sl2_complete(f, h);
  Report r;
  r.doc = {{"partition", io::encode(p)}, {"transpose", io::encode(transpose(p))}, {"sl_class", io::encode(cls)},
           {"h", io::encode(h)},         {"e", io::encode(e)}};
  r.text = "partition: " + to_string(p) + "\ntranspose: " + to_string(transpose(p)) +
           "\nsl class: d = " + std::to_string(cls.d) + ", a = " + cls.a_class.get_str() +
           "\nh: " + to_e_notation(h) + "\ne: " + to_e_notation(e) + "\n";
  if (doc.contains("e")) {
    const QMatrix w = io::matrix_from_json(doc["e"], f.rows());
    const bool ok = bracket(h, w) == Rational(2) * w && bracket(h, f) == Rational(-2) * f && bracket(w, f) == h;
    r.doc["witness_valid"] = ok;
    r.text += "witness e valid: " + yes_no(ok) + "\n";
  }
  return r;
}

Report orbit_closure(const Options& o) {
  const Composition eta = io::parse_composition(o.eta), gamma = io::parse_composition(o.gamma);
  const bool leq = closure_leq(eta, gamma);
  return {{{"leq", leq}}, "O_" + to_string(eta) + " <= O_" + to_string(gamma) + ": " + yes_no(leq) + "\n"};
}

Json classification(const GroupType& g, const Partition& lambda, std::string& text) {
  Json row = {{"lambda", io::encode(lambda)}, {"type_valid", is_type_valid(g, lambda)}};
  if (!row["type_valid"].get<bool>()) {
    text += to_string(lambda) + ": not a valid orbit label\n";
    return row;
  }
  const Classification c = classify(g, lambda);
  row["special"] = c.special;
  row["admissible"] = c.admissible ? Json(*c.admissible) : Json(nullptr);
  row["quasi_admissible"] = c.quasi_admissible;
  Json dist = nullptr;
  if (g.tag == GroupTag::GL || g.tag == GroupTag::SL) dist = distinguished(g, lambda);
  row["distinguished"] = dist;
  text += to_string(lambda) + ": special " + yes_no(c.special) + ", admissible " +
          (c.admissible ? yes_no(*c.admissible) : std::string("n/a")) + ", quasi-admissible " +
          yes_no(c.quasi_admissible) + (dist.is_null() ? "" : ", distinguished " + yes_no(dist.get<bool>())) + "\n";
  return row;
}

Report classify_cmd(const Options& o) {
  const GroupType g{parse_group_tag(o.group), parse_field_flavor(o.field)};
  Report r;
  r.text = "group " + to_string(g.tag) + " over a " + to_string(g.field) + " field\n";
  if (!o.lambda.empty()) {
    const Partition lambda = io::parse_partition(o.lambda);
    if (!is_type_valid(g, lambda))
      throw MathError(ErrorKind::InvalidPartitionForType, to_string(lambda) + " does not label an orbit of this group");
    r.doc = classification(g, lambda, r.text);
  } else {
    if (o.n <= 0) throw ParseError("classify needs --lambda or a positive --n");
    Json rows = Json::array();
    for (const auto& lambda : enumerate_orbits(g, o.n)) rows.push_back(classification(g, lambda, r.text));
    r.doc = {{"n", o.n}, {"orbits", rows}};
  }
  r.doc["group"] = to_string(g.tag);
  r.doc["field"] = to_string(g.field);
  return r;
}

Report pair_check(const Options& o, std::istream& in) {
  const auto input = io::read_pair_input(read_document(o.input, in));
  const auto pair = make_whittaker_pair(input.s, input.f);
  const QMatrix h = input.h ? *input.h : find_Z(pair).h;
  const QMatrix z = pair.s - h;
  const NeutralityReport nr = neutrality(h, pair.f);
  const bool commute_h = bracket(z, h).is_zero(), commute_f = bracket(z, pair.f).is_zero();
  const bool neutral = nr.by_definition;
  Report r;
  r.doc = {{"whittaker_pair", true},   {"n", input.n},           {"h", io::encode(h)},
           {"Z", io::encode(z)},       {"h_source", input.h ? "input" : "solved"},
           {"neutrality", io::encode(nr)}, {"Z_commutes_h", commute_h}, {"Z_commutes_f", commute_f}};
  r.text = "Whittaker pair: yes\nh (" + std::string(input.h ? "input" : "solved") + "): " + to_e_notation(h) +
           "\nZ: " + to_e_notation(z) + "\nneutral: " + yes_no(neutral) + "\n[Z, h] = 0: " + yes_no(commute_h) +
           "\n[Z, f] = 0: " + yes_no(commute_f) + "\n";
  const bool ok = neutral && commute_h && commute_f;
  r.doc["ok"] = ok;
  if (ok) {
    const auto crit = critical_numbers(h, z, pair.f);
    r.doc["criticals"] = io::encode(crit);
    r.text += "critical numbers: " + list_text(crit) + "\n";
  }
  return r;
}

Report pair_chain(const Options& o, std::istream& in) {
  const auto input = io::read_pair_input(read_document(o.input, in));
  const auto pair = make_whittaker_pair(input.s, input.f);
  Report r;
  if (!o.t.empty()) {
    const Rational t = parse_rational(o.t);
    const auto d = find_Z(pair);
    const auto s = snapshot(d.h, d.z, pair.f, t);
    r.doc = io::encode(s);
    r.doc["h"] = io::encode(d.h);
    r.doc["Z"] = io::encode(d.z);
    r.text = "t = " + to_string(t) + "\n  u: " + span_text(s.u) + "\n  v: " + span_text(s.v) + "\n  w: " +
             span_text(s.w) + "\n  rad: " + span_text(s.rad) + "\n  l: " + span_text(s.l) + "\n  r: " +
             span_text(s.r) + "\n";
    return r;
  }
  const auto c = chain(pair);
  r.doc = io::encode(c);
  std::ostringstream text;
  text << "h: " << to_e_notation(c.h) << "\nZ: " << to_e_notation(c.z) << "\ne: " << to_e_notation(c.e)
       << "\ncritical numbers: " << list_text(c.criticals) << "\n";
  for (const auto& s : c.snapshots)
    text << "t = " << to_string(s.t) << ": dim l = " << s.l.dim() << ", dim r = " << s.r.dim()
         << "\n  l: " << span_text(s.l) << "\n";
  for (const auto& ob : c.obstructions)
    text << "obstruction at " << to_string(ob.t) << ": " << span_text(ob.space) << ", dual " << span_text(ob.dual)
         << "\n";
  text << c.verified.size() << " checks passed\n";
  r.text = text.str();
  return r;
}

Report quasi_cmd(const Options& o, std::istream& in) {
  const auto input = io::read_pair_input(read_document(o.input, in));
  make_whittaker_pair(input.s, input.f);
  const QMatrix h = resolve_h(input);
  const auto q = quasi_criticals(input.s, input.f, h, parse_quasi_rule(o.rule));
  Report r;
  r.doc = io::encode(q);
  r.doc["h"] = io::encode(h);
  r.text = "rule: " + to_string(q.rule) + "\nquasi-critical numbers: " + list_text(q.values) +
           "\ncount: " + std::to_string(q.in_invariant) + "\n";
  return r;
}

Report model_cmd(const Options& o, std::istream& in) {
  const auto input = io::read_pair_input(read_document(o.input, in));
  const auto pair = make_whittaker_pair(input.s, input.f);
  Report r;
  if (input.f_prime) {
    const auto q = quasi_model_data(make_whittaker_triple(pair, *input.f_prime));
    r.doc = io::encode(q);
    r.text = "u: " + span_text(q.u) + "\nv: " + span_text(q.v) + "\nz: " + span_text(q.z) + "\nk: " + span_text(q.k) +
             "\n";
  } else {
    const auto m = model_data(pair);
    r.doc = io::encode(m);
    r.text = "u: " + span_text(m.u) + "\nn_rad: " + span_text(m.n_rad) + "\nn_prime: " + span_text(m.n_prime) + "\n";
  }
  return r;
}

std::string deform_text(const DeformationCertificate& c) {
  return "mu = " + to_string(c.mu) + ", lambda = " + to_string(c.lambda) + "\nh: " + to_e_notation(c.h) +
         "\nf: " + to_e_notation(c.f) + "\nZ: " + to_e_notation(c.z) + "\npsi: " + to_e_notation(c.psi) + "\n" +
         checks_text(c.checks);
}

Report deform_gl_cmd(const Options& o) {
  const auto c = deform_gl(io::parse_partition(o.mu), io::parse_partition(o.lambda));
  return {io::encode(c), deform_text(c)};
}

Report deform_sl_cmd(const Options& o) {
  const auto out = deform_sl(io::parse_partition(o.mu), io::parse_partition(o.lambda), parse_rational(o.a),
                             parse_rational(o.b));
  if (const auto* miss = std::get_if<ConditionNotMet>(&out))
    return {io::encode(*miss),
            "condition not met: a/b is not a " + std::to_string(miss->d) + "-th power (class " +
                miss->a_class.get_str() + ")\n",
            kMathError};
  const auto& c = std::get<DeformationCertificate>(out);
  return {io::encode(c), deform_text(c)};
}

Report compar_cmd(const Options& o) {
  const auto c = compar_certificate(io::parse_partition(o.mu), io::parse_partition(o.lambda));
  return {io::encode(c), "S: " + to_e_notation(c.s) + "\nF: " + to_e_notation(c.F) + "\n" + checks_text(c.checks)};
}

Report fixtures_cmd(const Options& o) {
  const auto results = verify_fixtures(o.dir.empty() ? default_fixture_dir() : o.dir, o.filter);
  Json rows = Json::array();
  std::string text;
  bool all = !results.empty();
  for (const auto& res : results) {
    rows.push_back({{"name", res.name}, {"passed", res.passed}, {"diff", res.diff}});
    text += (res.passed ? "PASS " : "FAIL ") + res.name + "\n";
    if (!res.passed) text += res.diff;
    all = all && res.passed;
  }
  text += std::to_string(results.size()) + " fixtures, " + (all ? "all passed" : "failures present") + "\n";
  return {{{"fixtures", rows}, {"passed", all}}, text, all ? kOk : kMathError};
}

// Resolves "/a/0/b" in `doc`; nullopt when a step is missing.
std::optional<Json> lookup(const Json& doc, const std::string& pointer) {
  try {
    return doc.at(Json::json_pointer(pointer));
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for nilpotent orbits and Whittaker pairs", "whitforge"};
  app.require_subcommand(1);
  Options o;

  auto output_flag = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto input_arg = [&](CLI::App* sub) { sub->add_option("input", o.input, "input JSON file, '-' for stdin"); };
  auto partitions = [&](CLI::App* sub) {
    sub->add_option("--mu", o.mu, "smaller partition, e.g. 2,2")->required();
    sub->add_option("--lambda", o.lambda, "larger partition, e.g. 3,1")->required();
  };

  auto* oc = app.add_subcommand("orbit-classify", "Jordan type, SL class and sl2 data of a nilpotent matrix");
  input_arg(oc);
  auto* cl = app.add_subcommand("orbit-closure", "closure order of two gl_n orbits");
  cl->add_option("--eta", o.eta, "composition of the smaller orbit")->required();
  cl->add_option("--gamma", o.gamma, "composition of the larger orbit")->required();
  auto* cf = app.add_subcommand("classify", "special, admissible, quasi-admissible and distinguished orbits");
  cf->add_option("--group", o.group, "GL, SL, Sp, O, SO, U or SU");
  cf->add_option("--field", o.field, "real or padic");
  auto* cf_lambda = cf->add_option("--lambda", o.lambda, "orbit label");
  cf->add_option("--n", o.n, "classify every orbit of size n")->excludes(cf_lambda);
  auto* pc = app.add_subcommand("pair-check", "validate a Whittaker pair and its neutral element");
  input_arg(pc);
  auto* ch = app.add_subcommand("pair-chain", "deformation chain certificate, or one snapshot with --t");
  input_arg(ch);
  ch->add_option("--t", o.t, "snapshot parameter, e.g. 1/4");
  auto* qc = app.add_subcommand("quasi-criticals", "quasi-critical numbers t > 1");
  input_arg(qc);
  qc->add_option("--rule", o.rule, "weight-two or weight-one-or-two");
  auto* md = app.add_subcommand("model-data", "model subgroup data (triple data when f_prime is given)");
  input_arg(md);
  auto* dg = app.add_subcommand("deform-gl", "raise O_mu to O_lambda in gl_n");
  partitions(dg);
  auto* ds = app.add_subcommand("deform-sl", "raise O_mu^b to O_lambda^a in sl_n");
  partitions(ds);
  ds->add_option("--a", o.a, "class of the target orbit");
  ds->add_option("--b", o.b, "class of the source orbit");
  auto* cp = app.add_subcommand("compar", "orbit comparison data S = h + Z, F = f + psi");
  partitions(cp);
  auto* vf = app.add_subcommand("verify-fixtures", "run the built-in example fixtures");
  vf->add_option("--filter", o.filter, "only fixtures whose name contains this text");
  vf->add_option("--dir", o.dir, "fixture directory");
  for (auto* sub : {oc, cl, cf, pc, ch, qc, md, dg, ds, cp, vf}) output_flag(sub);

  std::vector<const char*> argv{"whitforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const bool text = o.output == "text";
  try {
    Report r;
    if (oc->parsed()) r = orbit_classify(o, in);
    else if (cl->parsed()) r = orbit_closure(o);
    else if (cf->parsed()) r = classify_cmd(o);
    else if (pc->parsed()) r = pair_check(o, in);
    else if (ch->parsed()) r = pair_chain(o, in);
    else if (qc->parsed()) r = quasi_cmd(o, in);
    else if (md->parsed()) r = model_cmd(o, in);
    else if (dg->parsed()) r = deform_gl_cmd(o);
    else if (ds->parsed()) r = deform_sl_cmd(o);
    else if (cp->parsed()) r = compar_cmd(o);
    else r = fixtures_cmd(o);
    out << (text ? r.text : io::dump(r.doc));
    return r.status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kParseError;
  } catch (const MathError& e) {
    if (!text) out << io::dump({{"error", {{"kind", to_string(e.kind())}, {"clause", e.clause()}, {"message", e.what()}}}});
    err << "rejected: " << e.what() << "\n";
    return kMathError;
  }
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("WHITFORGE_FIXTURE_DIR"); env && *env) return env;
  return WHITFORGE_FIXTURE_DIR;
}

std::vector<FixtureResult> verify_fixtures(const std::string& dir, const std::string& filter) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw ParseError("fixture directory '" + dir + "' not found");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<FixtureResult> results;
  for (const auto& path : files) {
    std::ifstream file(path);
    Json fx;
    try {
      fx = Json::parse(file);
    } catch (const Json::exception& e) {
      results.push_back({path.filename().string(), false, "  unreadable fixture: " + std::string(e.what()) + "\n"});
      continue;
    }
    const std::string name = fx.value("name", path.stem().string());
    if (!filter.empty() && name.find(filter) == std::string::npos) continue;

    std::istringstream input(fx.contains("input") ? fx["input"].dump() : std::string());
    std::ostringstream out, err;
    const int status = run(fx.at("command").get<std::vector<std::string>>(), input, out, err);
    FixtureResult res{name, true, {}};
    const int want = fx.value("exit", 0);
    if (status != want) {
      res.passed = false;
      res.diff += "  exit status " + std::to_string(status) + ", expected " + std::to_string(want) + "\n";
      if (!err.str().empty()) res.diff += "  stderr: " + err.str();
    }
    Json doc;
    try {
      doc = Json::parse(out.str());
    } catch (const Json::exception&) {
      res.passed = false;
      res.diff += "  output is not JSON\n";
      results.push_back(res);
      continue;
    }
    for (const auto& [pointer, expected] : fx.at("expected").items()) {
      const auto actual = lookup(doc, pointer);
      if (actual && *actual == expected) continue;
      res.passed = false;
      res.diff += "  " + pointer + ":\n    expected " + expected.dump() + "\n    actual   " +
                  (actual ? actual->dump() : std::string("<missing>")) + "\n";
    }
    results.push_back(res);
  }
  return results;
}

}  // namespace whitforge::cli
