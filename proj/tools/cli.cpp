#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "kls/bruhat.hpp"
#include "kls/engine.hpp"
#include "kls/error.hpp"
#include "kls/hypertoric.hpp"
#include "kls/json_io.hpp"
#include "kls/matroid.hpp"
#include "kls/point_count.hpp"
#include "kls/polytope.hpp"

namespace kls::cli {

namespace {

struct Settings {
  std::string input;
  std::string kernel;
  std::string side = "right";
  std::string format = "json";
  std::string output;
  bool strict = false;
  unsigned threads = 1;
  bool crapo = false;
  std::vector<long long> qs{2, 3, 5};

  ComputeOptions options() const { return {threads, strict, std::nullopt}; }
};

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

// A parsed input document and the poset its kernels live on.
struct Instance {
  std::string kind;  // poset | matroid | polytope | bruhat
  Json document;
  PosetPtr poset;
  std::optional<Matroid> matroid;
  std::optional<FlatLattice> flats;
  std::optional<FacePoset> faces;
  std::optional<BruhatData> bruhat;
};

Instance load_instance(const std::string& path, const ComputeOptions& opts, std::ostream& err) {
  Instance inst;
  inst.document = read_json(path);
  const Json& doc = inst.document;
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "input must be a JSON object");
  const std::string type = doc.contains("type") && doc["type"].is_string() ? doc["type"].get<std::string>() : "";
  if (type == "bruhat") {
    inst.kind = "bruhat";
    if (!doc.contains("n") || !doc["n"].is_number_integer())
      throw Error(ErrorKind::ParseError, "bruhat input needs an integer \"n\"");
    inst.bruhat = bruhat(doc["n"].get<int>(), opts);
    inst.poset = inst.bruhat->poset;
  } else if (!type.empty()) {
    inst.kind = "matroid";
    inst.matroid = matroid_from_json(doc);
    inst.flats = lattice_of_flats(*inst.matroid);
    inst.poset = inst.flats->poset;
    if (inst.flats->has_loops)
      err << "notice: matroid has loops; the lattice of flats is that of its simplification\n";
  } else if (doc.contains("facets")) {
    inst.kind = "polytope";
    inst.faces = face_poset(polytope_from_json(doc));
    inst.poset = inst.faces->poset;
  } else if (doc.contains("elements")) {
    inst.kind = "poset";
    inst.poset = poset_from_json(doc);
  } else {
    throw Error(ErrorKind::ParseError, "unrecognized input document");
  }
  return inst;
}

IncidenceElement make_kernel(const Instance& inst, const std::string& name, const ComputeOptions& opts,
                             std::vector<std::string>& verified) {
  if (name == "chi") return characteristic_kernel(inst.poset, opts);
  if (name == "lambda") return eulerian_kernel(inst.poset);
  if (name == "R") {
    if (!inst.bruhat) throw Error(ErrorKind::InvalidArgument, "kernel R requires a Bruhat input");
    return inst.bruhat->r_polynomials;
  }
  if (name == "hypertoric") {
    if (inst.flats) return hypertoric_kernel(*inst.flats, opts);
    if (inst.kind == "poset") return hypertoric_kernel(inst.poset, scale_rank(*inst.poset, 2), opts);
    throw Error(ErrorKind::InvalidArgument, "kernel hypertoric requires a matroid or poset input");
  }
  if (name == "custom") {
    if (inst.kind != "poset" || !inst.document.contains("kernel"))
      throw Error(ErrorKind::ParseError, "kernel custom requires a poset document with a \"kernel\" table");
    auto kappa = element_from_json(inst.poset, inst.document["kernel"], IntPolynomial{1});
    Check c = check_kernel(kappa, opts);
    if (!c.passed) throw Error(ErrorKind::NotAKernel, c.detail);
    verified.push_back("is_kernel");
    return kappa;
  }
  throw Error(ErrorKind::ParseError, "unknown kernel \"" + name + "\"");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_csv(std::ostream& os, const IncidenceElement& f) {
  os << "pair,coefficients\n";
  const RankedPoset& P = f.poset();
  for (PairIndex p = 0; p < P.num_pairs(); ++p) {
    auto [x, y] = P.pairs()[p];
    if (x == y) continue;
    std::string coeffs;
    for (const auto& c : f[p].coeffs()) coeffs += (coeffs.empty() ? "" : ";") + c.str();
    os << csv_field(P.label(x) + "<" + P.label(y)) << ',' << coeffs << '\n';
  }
}

void emit(const Settings& s, std::ostream& out, const std::string& text) {
  if (s.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(s.output);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write " + s.output);
  file << text;
}

int cmd_compute(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto opts = s.options();
  Instance inst = load_instance(s.input, opts, err);
  std::vector<std::string> verified;
  auto kappa = make_kernel(inst, s.kernel, opts, verified);
  if (opts.strict && verified.empty()) {
    Check c = check_kernel(kappa, opts);
    if (!c.passed) throw Error(ErrorKind::NotAKernel, c.detail);
    verified.push_back("is_kernel");
  }

  std::optional<IncidenceElement> result;
  if (s.side == "right") result = right_kls(kappa, opts);
  else if (s.side == "left") result = left_kls(kappa, opts);
  else if (s.side == "z") result = z_function(kappa, opts);
  else if (s.side == "bb") result = batyrev_borisov(kappa, opts);
  else if (s.side == "kernel") result = kappa;
  else throw Error(ErrorKind::ParseError, "unknown side \"" + s.side + "\"");
  if (opts.strict && (s.side == "right" || s.side == "left")) verified.push_back("defining identity");

  std::ostringstream text;
  if (s.format == "csv") {
    write_csv(text, *result);
  } else if (s.format == "json") {
    Json doc;
    doc["poset"] = poset_to_json(result->poset());
    doc["kernel"] = s.kernel;
    doc["side"] = s.side;
    doc["entries"] = element_to_json(*result);
    doc["verified"] = verified;
    text << doc.dump(2) << '\n';
  } else {
    throw Error(ErrorKind::ParseError, "unknown output format \"" + s.format + "\"");
  }
  emit(s, out, text.str());
  return kOk;
}

Json check_to_json(const RankedPoset& P, const Check& c) {
  Json j;
  j["property"] = c.property;
  j["passed"] = c.passed;
  j["counterexample"] = c.counterexample ? Json(P.label(c.counterexample->first) + "<" +
                                                P.label(c.counterexample->second))
                                         : Json(nullptr);
  j["detail"] = c.detail;
  return j;
}

Check compare(std::string property, const IncidenceElement& a, const IncidenceElement& b) {
  Check c{std::move(property), true, std::nullopt, ""};
  if (auto d = first_difference(a, b)) {
    c.passed = false;
    c.counterexample = d;
    c.detail = a.at(d->first, d->second).to_string() + " vs " + b.at(d->first, d->second).to_string();
  }
  return c;
}

Check predicate(std::string property, bool ok, std::string detail = "") {
  return Check{std::move(property), ok, std::nullopt, ok ? "" : std::move(detail)};
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto opts = s.options();
  Instance inst = load_instance(s.input, opts, err);
  const RankedPoset& P = *inst.poset;
  std::vector<Check> checks;
  std::vector<std::string> unused;

  std::optional<IncidenceElement> kappa;
  if (s.kernel == "custom") {
    if (inst.kind != "poset" || !inst.document.contains("kernel"))
      throw Error(ErrorKind::ParseError, "kernel custom requires a poset document with a \"kernel\" table");
    kappa = element_from_json(inst.poset, inst.document["kernel"], IntPolynomial{1});
  } else {
    kappa = make_kernel(inst, s.kernel, opts, unused);
  }
  const PosetPtr& host = kappa->poset_ptr();
  Check kernel_check = check_kernel(*kappa, opts);
  checks.push_back(kernel_check);
  bool alternating = is_alternating(*kappa);

  if (kernel_check.passed) {
    auto f = right_kls(*kappa, opts);
    auto g = left_kls(*kappa, opts);
    checks.push_back(compare("bar(f) == kappa f", bar(f), convolve(*kappa, f, opts)));
    checks.push_back(compare("bar(g) == g kappa", bar(g), convolve(g, *kappa, opts)));
    checks.push_back(predicate("f, g in the half subring", in_half_subring(f) && in_half_subring(g)));
    auto z = convolve(convolve(g, *kappa, opts), f, opts);
    checks.push_back(compare("Z == bar(g) f", z, convolve(bar(g), f, opts)));
    checks.push_back(compare("Z == g bar(f)", z, convolve(g, bar(f), opts)));
    checks.push_back(predicate("Z symmetric", is_symmetric(z)));
    checks.push_back(compare("kernel_from_right(f) == kappa", kernel_from_right(f, opts), *kappa));
    checks.push_back(compare("kernel_from_left(g) == kappa", kernel_from_left(g, opts), *kappa));

    auto star = opposite(*host);
    auto kappa_star = transport_to_opposite(*kappa, star);
    checks.push_back(compare("right_kls(kappa*) == left_kls(kappa)*", right_kls(kappa_star, opts),
                             transport_to_opposite(g, star)));
    checks.push_back(compare("left_kls(kappa*) == right_kls(kappa)*", left_kls(kappa_star, opts),
                             transport_to_opposite(f, star)));
    checks.push_back(compare("Z(kappa*) == Z(kappa)*", z_function(kappa_star, opts), transport_to_opposite(z, star)));

    if (P.minimum()) {
      auto rec = recover_fg_from_z(z, opts);
      checks.push_back(compare("recover f from Z", rec.f, f));
      checks.push_back(compare("recover g from Z", rec.g, g));
    }
    if (alternating) {
      auto duality = alternating_duality(*kappa, opts);
      checks.insert(checks.end(), duality.checks.begin(), duality.checks.end());
    }
    if (inst.bruhat && s.kernel == "R") {
      auto w0 = w0_duality_check(*inst.bruhat, opts);
      checks.insert(checks.end(), w0.begin(), w0.end());
    }
    if (inst.flats && s.kernel == "chi")
      checks.push_back(compare("left_kls(chi) == zeta", g, zeta(host)));
    if (inst.flats && s.kernel == "hypertoric")
      checks.push_back(compare("left_kls(kappa) == broken-circuit h", g, broken_circuit_h(*inst.flats, opts)));
  }

  if (s.crapo) {
    if (!inst.matroid || !inst.matroid->realization())
      throw Error(ErrorKind::InvalidArgument, "--crapo needs a matrix matroid input");
    const auto& [columns, field] = *inst.matroid->realization();
    auto crapo = crapo_cross_check(columns, field, s.qs, opts);
    checks.insert(checks.end(), crapo.begin(), crapo.end());
  }

  bool all = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  Json report;
  report["input"] = inst.kind;
  report["kernel"] = s.kernel;
  report["alternating"] = alternating;
  Json list = Json::array();
  for (const auto& c : checks) list.push_back(check_to_json(*host, c));
  report["checks"] = list;
  report["passed"] = all;
  emit(s, out, report.dump(2) + "\n");
  if (!all) {
    for (const auto& c : checks)
      if (!c.passed) err << "FAIL " << c.property << ": " << c.detail << '\n';
  }
  return all ? kOk : kPreconditionFailure;
}

int cmd_recover(const Settings& s, std::ostream& out, std::ostream&) {
  const auto opts = s.options();
  Json doc = read_json(s.input);
  PosetPtr poset;
  const Json* entries = nullptr;
  if (doc.contains("poset") && doc.contains("entries")) {
    poset = poset_from_json(doc["poset"]);
    entries = &doc["entries"];
  } else if (doc.contains("elements") && doc.contains("Z")) {
    poset = poset_from_json(doc);
    entries = &doc["Z"];
  } else {
    throw Error(ErrorKind::ParseError, "expected {\"poset\", \"entries\"} or a poset document with \"Z\"");
  }
  auto z = element_from_json(poset, *entries, IntPolynomial{1});
  auto fg = recover_fg_from_z(z, opts);
  Json result;
  result["poset"] = poset_to_json(*poset);
  result["f"] = element_to_json(fg.f);
  result["g"] = element_to_json(fg.g);
  emit(s, out, result.dump(2) + "\n");
  return kOk;
}

std::vector<long long> parse_q_list(const std::string& text) {
  std::vector<long long> qs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      qs.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad --q entry \"" + item + "\"");
    }
  }
  return qs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kazhdan-Lusztig-Stanley polynomials of weakly ranked posets", "kls"};
  app.require_subcommand(1);
  Settings s;
  std::string q_text = "2,3,5";
  const std::vector<std::string> kernels{"chi", "lambda", "R", "hypertoric", "custom"};

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--strict", s.strict, "Re-verify kernel axioms and round trips");
    sub->add_option("--threads", s.threads, "Worker threads (output is identical for any value)")
        ->check(CLI::Range(1u, 256u));
    sub->add_option("-o,--output", s.output, "Write the result to a file instead of stdout");
  };
  auto* compute = app.add_subcommand("compute", "Compute KLS functions, Z or B' for a kernel");
  compute->add_option("input", s.input, "Input JSON document")->required();
  compute->add_option("--kernel", s.kernel)->required()->check(CLI::IsMember(kernels));
  compute->add_option("--side", s.side, "right | left | z | bb | kernel")
      ->check(CLI::IsMember({"right", "left", "z", "bb", "kernel"}));
  compute->add_option("--out", s.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  add_common(compute);

  auto* verify = app.add_subcommand("verify", "Run every applicable verification for a kernel");
  verify->add_option("input", s.input, "Input JSON document")->required();
  verify->add_option("--kernel", s.kernel)->required()->check(CLI::IsMember(kernels));
  verify->add_flag("--crapo", s.crapo, "Cross-check chi against finite-field point counts");
  verify->add_option("--q", q_text, "Comma-separated primes for --crapo");
  add_common(verify);

  auto* recover = app.add_subcommand("recover", "Recover right and left KLS functions from a Z table");
  recover->add_option("input", s.input, "Z table: compute --side z output, or a poset document with \"Z\"")
      ->required();
  add_common(recover);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    s.qs = parse_q_list(q_text);
    if (*compute) return cmd_compute(s, out, err);
    if (*verify) return cmd_verify(s, out, err);
    return cmd_recover(s, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::UnknownElement:
      case ErrorKind::CycleDetected:
      case ErrorKind::RankAxiomViolation:
      case ErrorKind::MissingRank:
      case ErrorKind::DimensionMismatch:
        return kParseError;
      default:
        break;
    }
    return is_internal(e.kind()) ? kInternalError : kPreconditionFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "error: ParseError: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace kls::cli
