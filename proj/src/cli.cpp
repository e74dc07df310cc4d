// Copyright 2026 The btlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "btlab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "btlab/errors.hpp"
#include "btlab/gamma_graph.hpp"
#include "btlab/invariants.hpp"
#include "btlab/kraft.hpp"
#include "btlab/sweep.hpp"
#include "btlab/witt.hpp"

namespace btlab {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int c = -1;
  int d = -1;
  std::string perm;
  std::optional<int> degree;
  int max_level = 10;
  std::optional<int> level;
  std::string format = "table";
  std::optional<int> annotate_p;
  int samples = 200;
  int max_h = 7;
  uint64_t seed = 7;
  int p = 2;
  int len = 2;
  std::string law = "all";
  std::string op = "add";
  std::string lhs;
  std::string rhs;
  std::string out_path;
};

struct Outcome {
  int code = kExitOk;
  std::string document;
};

// Left-aligned columns separated by two spaces.
class Table {
 public:
  void Row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string Render() const {
    std::vector<size_t> width;
    for (const auto& row : rows_) {
      if (width.size() < row.size()) width.resize(row.size(), 0);
      for (size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    }
    std::ostringstream out;
    for (const auto& row : rows_) {
      std::string line;
      for (size_t k = 0; k < row.size(); ++k) {
        line += row[k];
        if (k + 1 < row.size()) line += std::string(width[k] - row[k].size() + 2, ' ');
      }
      out << line << '\n';
    }
    return out.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

template <typename T>
std::string Join(const std::vector<T>& values, const std::string& sep) {
  std::ostringstream out;
  for (size_t k = 0; k < values.size(); ++k) {
    if (k) out << sep;
    out << values[k];
  }
  return out.str();
}

std::string PairText(IndexPair p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")"; }

std::string EpsText(const EpsilonSeq& eps) { return "(" + Join(eps.values, ",") + ")"; }

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

Signature RequireSignature(const Options& opt) {
  if (opt.c < 0 || opt.d < 0) throw Error(ErrorKind::kSignatureMismatch, "--c and --d must be given and >= 0");
  return Signature{opt.c, opt.d};
}

Permutation RequirePerm(const Options& opt) {
  if (opt.perm.empty()) throw Error(ErrorKind::kEmptyInput, "--perm is required");
  return ParsePermutation(opt.perm, opt.degree);
}

std::vector<int> ParseComponents(const std::string& text, const char* flag) {
  std::vector<int> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char ch) { return std::isspace(ch); }),
                token.end());
    if (token.empty()) continue;
    try {
      size_t used = 0;
      int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(value);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kSyntax, std::string(flag) + " component '" + token + "' is not an integer");
    }
  }
  if (out.empty()) throw Error(ErrorKind::kEmptyInput, std::string(flag) + " needs a component list");
  return out;
}

Json ReportJson(const InvariantReport& report, int max_level, std::optional<int> annotate_p) {
  Json doc;
  doc["h"] = report.sig.h();
  doc["c"] = report.sig.c;
  doc["d"] = report.sig.d;
  doc["perm"] = report.perm.ToOneLine();
  Json orbits = Json::array();
  for (const auto& profile : report.profiles) {
    Json o;
    o["rep"] = {profile.orbit.points.front().i, profile.orbit.points.front().j};
    Json points = Json::array();
    for (IndexPair p : profile.orbit.points) points.push_back({p.i, p.j});
    o["points"] = points;
    o["epsilon"] = profile.eps.values;
    o["circular_level"] = profile.circular_level ? Json(*profile.circular_level) : Json(nullptr);
    Json segments = Json::array();
    for (const auto& seg : profile.segments) {
      segments.push_back(Json{{"start", seg.start}, {"length", seg.length}, {"level", seg.level}});
    }
    o["segments"] = segments;
    Json a = Json::array();
    for (int n = 1; n <= max_level; ++n) a.push_back(profile.SegmentsOfLevel(n));
    o["a"] = a;
    orbits.push_back(o);
  }
  doc["orbits"] = orbits;
  doc["gamma"] = report.gamma;
  doc["c_exponent"] = report.c_exponent;
  doc["isomorphism_number"] = report.isomorphism_number;
  doc["specializing_height"] = report.specializing_height;
  if (annotate_p) {
    doc["p"] = *annotate_p;
    Json counts = Json::array();
    for (int e : report.c_exponent) counts.push_back(std::to_string(*annotate_p) + "^" + std::to_string(e));
    doc["component_count"] = counts;
  }
  return doc;
}

std::string ReportTable(const InvariantReport& report, std::optional<int> annotate_p) {
  std::ostringstream out;
  out << "h=" << report.sig.h() << " c=" << report.sig.c << " d=" << report.sig.d
      << " perm=" << report.perm.ToOneLine() << "\n\n";
  Table orbits;
  orbits.Row({"orbit", "size", "epsilon", "circular", "segments"});
  for (const auto& profile : report.profiles) {
    std::vector<std::string> segs;
    for (const auto& seg : profile.segments) {
      segs.push_back("s" + std::to_string(seg.start) + ":len" + std::to_string(seg.length) + ":lvl" +
                     std::to_string(seg.level));
    }
    orbits.Row({"[" + PairText(profile.orbit.points.front()) + "]", std::to_string(profile.orbit.size()),
                EpsText(profile.eps), profile.circular_level ? std::to_string(*profile.circular_level) : "-",
                segs.empty() ? "-" : Join(segs, " ")});
  }
  out << orbits.Render() << '\n';
  Table levels;
  std::vector<std::string> header{"m", "gamma", "c_exponent"};
  if (annotate_p) header.push_back("components");
  levels.Row(header);
  for (size_t k = 0; k < report.gamma.size(); ++k) {
    std::vector<std::string> row{std::to_string(k + 1), std::to_string(report.gamma[k]),
                                 std::to_string(report.c_exponent[k])};
    if (annotate_p) row.push_back(std::to_string(*annotate_p) + "^" + std::to_string(report.c_exponent[k]));
    levels.Row(row);
  }
  out << levels.Render() << '\n';
  out << "isomorphism_number  " << report.isomorphism_number << '\n';
  out << "specializing_height  " << report.specializing_height << '\n';
  return out.str();
}

Outcome RunInvariants(const Options& opt) {
  const Permutation perm = RequirePerm(opt);
  const Signature sig = RequireSignature(opt);
  CheckSignature(perm, sig);
  InvariantReport report = ComputeInvariants(perm, sig, opt.max_level);
  if (opt.format == "json") return {kExitOk, Dump(ReportJson(report, opt.max_level, opt.annotate_p))};
  return {kExitOk, ReportTable(report, opt.annotate_p)};
}

Json SummaryJson(const ComponentSummary& s) {
  Json cycles = Json::array();
  for (const auto& c : s.cycles) cycles.push_back(Json{{"length", c.length}, {"weight", c.weight}});
  return Json{{"free_paths", s.free_paths},
              {"zeroed_paths", s.zeroed_paths},
              {"zeroed_cycles", s.zeroed_cycles},
              {"zeroed_vertices", s.zeroed_vertices},
              {"cycles", cycles}};
}

Outcome RunOracle(const Options& opt) {
  const Permutation perm = RequirePerm(opt);
  const Signature sig = RequireSignature(opt);
  CheckSignature(perm, sig);
  const int level = opt.level.value_or(opt.max_level);
  if (level < 1) throw Error(ErrorKind::kOutOfRange, "--level must be >= 1");
  InvariantReport report = ComputeInvariants(perm, sig, opt.max_level);
  OracleResult oracle = OracleInvariants(perm, sig, level);
  CrossCheckVerdict verdict = CrossCheck(perm, sig, opt.max_level);
  const int code = verdict.pass ? kExitOk : kExitMismatch;
  const std::string verdict_text = verdict.pass ? "pass" : "fail: " + verdict.first_mismatch->Describe();

  if (opt.format == "json") {
    Json doc = ReportJson(report, opt.max_level, opt.annotate_p);
    Json per_orbit = Json::array();
    for (const auto& s : oracle.per_orbit) per_orbit.push_back(SummaryJson(s));
    doc["oracle"] = Json{{"level", level},
                         {"dimension", oracle.dimension},
                         {"exponent", oracle.exponent},
                         {"per_orbit", per_orbit}};
    doc["verdict"] = verdict_text;
    return {code, Dump(doc)};
  }
  std::ostringstream out;
  out << ReportTable(report, opt.annotate_p) << '\n';
  out << "oracle level " << level << ": dimension=" << oracle.dimension << " exponent=" << oracle.exponent
      << "\n";
  Table t;
  t.Row({"orbit", "free_paths", "zeroed_vertices", "cycles"});
  for (size_t k = 0; k < oracle.per_orbit.size(); ++k) {
    const auto& s = oracle.per_orbit[k];
    std::vector<std::string> cycles;
    for (const auto& c : s.cycles) cycles.push_back(std::to_string(c.length) + "/w" + std::to_string(c.weight));
    t.Row({"[" + PairText(report.profiles[k].orbit.points.front()) + "]", std::to_string(s.free_paths),
           std::to_string(s.zeroed_vertices), cycles.empty() ? "-" : Join(cycles, " ")});
  }
  out << t.Render() << "verdict  " << verdict_text << '\n';
  return {code, out.str()};
}

Outcome RunVerify(const Options& opt) {
  if (opt.max_level < 1) throw Error(ErrorKind::kOutOfRange, "--max-level must be >= 1");
  auto cases = RandomSweep(opt.seed, opt.samples, opt.max_h);
  int mismatches = 0;
  int property_violations = 0;
  std::optional<std::string> first;
  for (const auto& sc : cases) {
    CrossCheckVerdict verdict = CrossCheck(sc.perm, sc.sig, opt.max_level);
    if (!verdict.pass) {
      ++mismatches;
      if (!first) first = verdict.first_mismatch->Describe();
    }
    InvariantReport report = ComputeInvariants(sc.perm, sc.sig, opt.max_level);
    auto violations = CheckGammaProperties(report.gamma, sc.sig.c * sc.sig.d);
    property_violations += static_cast<int>(violations.size());
    if (!violations.empty() && !first) {
      first = "perm=" + sc.perm.ToOneLine() + " c=" + std::to_string(sc.sig.c) + " d=" +
              std::to_string(sc.sig.d) + " " + violations.front();
    }
  }
  const bool pass = mismatches == 0 && property_violations == 0;
  if (opt.format == "json") {
    Json doc{{"samples", opt.samples},
             {"max_h", opt.max_h},
             {"max_level", opt.max_level},
             {"seed", opt.seed},
             {"mismatches", mismatches},
             {"property_violations", property_violations},
             {"first_failure", first ? Json(*first) : Json(nullptr)},
             {"verdict", pass ? "pass" : "fail"}};
    return {pass ? kExitOk : kExitMismatch, Dump(doc)};
  }
  Table t;
  t.Row({"samples", std::to_string(opt.samples)});
  t.Row({"max_h", std::to_string(opt.max_h)});
  t.Row({"max_level", std::to_string(opt.max_level)});
  t.Row({"seed", std::to_string(opt.seed)});
  t.Row({"mismatches", std::to_string(mismatches)});
  t.Row({"property_violations", std::to_string(property_violations)});
  if (first) t.Row({"first_failure", *first});
  t.Row({"verdict", pass ? "pass" : "fail"});
  return {pass ? kExitOk : kExitMismatch, t.Render()};
}

Outcome RunEnumerate(const Options& opt) {
  const Signature sig = RequireSignature(opt);
  auto classes = EnumerateBT1(sig);
  const long long expected = Binomial(sig.h(), sig.c);
  const long long count = static_cast<long long>(classes.size());
  const int code = count == expected ? kExitOk : kExitMismatch;
  if (opt.format == "json") {
    Json list = Json::array();
    for (const auto& cls : classes) list.push_back(cls.ToString());
    Json doc{{"c", sig.c}, {"d", sig.d}, {"classes", list}, {"count", count}, {"binomial", expected}};
    return {code, Dump(doc)};
  }
  std::ostringstream out;
  for (const auto& cls : classes) out << cls.ToString() << '\n';
  out << count << '\n';
  return {code, out.str()};
}

Outcome RunKraftType(const Options& opt) {
  const Permutation perm = RequirePerm(opt);
  const Signature sig = RequireSignature(opt);
  BTClass type = KraftType(perm, sig);
  BTClass dual = DualClass(type);
  if (opt.format == "json") {
    Json words = Json::array();
    for (const auto& w : type.words) words.push_back(w.letters());
    Json doc{{"h", sig.h()},        {"c", sig.c},       {"d", sig.d}, {"perm", perm.ToOneLine()},
             {"type", type.ToString()}, {"words", words}, {"dual", dual.ToString()}};
    return {kExitOk, Dump(doc)};
  }
  Table t;
  t.Row({"perm", perm.ToOneLine()});
  t.Row({"type", type.ToString()});
  t.Row({"dual", dual.ToString()});
  return {kExitOk, t.Render()};
}

std::vector<WittLaw> SelectLaws(const std::string& law) {
  if (law == "all") return {WittLaw::kSum, WittLaw::kProduct, WittLaw::kNegation};
  if (law == "sum") return {WittLaw::kSum};
  if (law == "product") return {WittLaw::kProduct};
  if (law == "neg") return {WittLaw::kNegation};
  throw Error(ErrorKind::kSyntax, "--law must be sum, product, neg or all");
}

Outcome RunWittPolys(const Options& opt) {
  const auto laws = SelectLaws(opt.law);
  if (opt.format == "json") {
    Json doc{{"p", opt.p}, {"len", opt.len}};
    for (WittLaw law : laws) {
      Json list = Json::array();
      auto polys = WittPolynomials(law, opt.p, opt.len);
      for (const auto& poly : polys) list.push_back(poly.ToString(WittVariableNames(opt.len)));
      doc[LawSymbol(law)] = list;
    }
    return {kExitOk, Dump(doc)};
  }
  std::ostringstream out;
  for (WittLaw law : laws) {
    auto polys = WittPolynomials(law, opt.p, opt.len);
    for (size_t i = 0; i < polys.size(); ++i) {
      out << RenderWittPolynomial(law, static_cast<int>(i), polys[i], opt.len) << '\n';
    }
  }
  return {kExitOk, out.str()};
}

Outcome RunWittEval(const Options& opt) {
  WittVec x = MakeWittVec(opt.p, ParseComponents(opt.lhs, "--lhs"));
  // teichmuller takes a single element of F_p.
  if (opt.op == "teichmuller" && x.length() != 1) {
    throw Error(ErrorKind::kLengthMismatch, "--lhs for teichmuller is one element of F_p");
  }
  if (opt.op != "teichmuller" && x.length() != opt.len) {
    throw Error(ErrorKind::kLengthMismatch,
                "--lhs has " + std::to_string(x.length()) + " components, --len is " + std::to_string(opt.len));
  }
  auto rhs = [&] {
    WittVec y = MakeWittVec(opt.p, ParseComponents(opt.rhs, "--rhs"));
    if (y.length() != opt.len) {
      throw Error(ErrorKind::kLengthMismatch,
                  "--rhs has " + std::to_string(y.length()) + " components, --len is " + std::to_string(opt.len));
    }
    return y;
  };
  WittVec result;
  if (opt.op == "add") {
    result = WittAdd(x, rhs());
  } else if (opt.op == "mul") {
    result = WittMul(x, rhs());
  } else if (opt.op == "neg") {
    result = WittNeg(x);
  } else if (opt.op == "frobenius") {
    result = Frobenius(x);
  } else if (opt.op == "verschiebung") {
    result = Verschiebung(x);
  } else if (opt.op == "p-multiple") {
    result = PMultiple(x);
  } else if (opt.op == "teichmuller") {
    result = Teichmuller(opt.p, x.components.front(), opt.len);
  } else {
    throw Error(ErrorKind::kSyntax,
                "--op must be add, mul, neg, frobenius, verschiebung, p-multiple or teichmuller");
  }
  if (opt.format == "json") {
    Json doc{{"p", opt.p}, {"len", opt.len}, {"op", opt.op}, {"result", result.components}};
    return {kExitOk, Dump(doc)};
  }
  return {kExitOk, "(" + Join(result.components, ",") + ")\n"};
}

Outcome RunWittCheck(const Options& opt) {
  RingIsoReport report = RingIsoTable(opt.p, opt.len);
  const int code = report.pass() ? kExitOk : kExitMismatch;
  if (opt.format == "json") {
    Json doc{{"p", opt.p},
             {"len", opt.len},
             {"modulus", report.modulus},
             {"bijective", report.bijective},
             {"additive", report.additive},
             {"multiplicative", report.multiplicative},
             {"verdict", report.pass() ? "pass" : "fail"}};
    return {code, Dump(doc)};
  }
  Table t;
  t.Row({"ring", "W_" + std::to_string(opt.len) + "(F_" + std::to_string(opt.p) + ") vs Z/" +
                     std::to_string(report.modulus)});
  t.Row({"bijective", report.bijective ? "yes" : "no"});
  t.Row({"additive", report.additive ? "yes" : "no"});
  t.Row({"multiplicative", report.multiplicative ? "yes" : "no"});
  t.Row({"verdict", report.pass() ? "pass" : "fail"});
  return {code, t.Render()};
}

void AddFormat(CLI::App* sub, Options& opt) {
  sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  sub->add_option("--out", opt.out_path, "Also write the output to this file");
}

void AddPermFlags(CLI::App* sub, Options& opt) {
  sub->add_option("--c", opt.c, "Codimension")->required();
  sub->add_option("--d", opt.d, "Dimension")->required();
  sub->add_option("--perm", opt.perm, "Permutation, one-line \"4,5,1,2,3\" or cycles \"(1 2 3)\"")->required();
  sub->add_option("--degree", opt.degree, "Degree for cycle notation");
  sub->add_option("--max-level", opt.max_level, "Tabulate levels 1..M")->capture_default_str();
  AddFormat(sub, opt);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Invariants of canonical truncated Barsotti-Tate groups", "btlab"};
  app.require_subcommand(1);

  auto* invariants = app.add_subcommand("invariants", "gamma, c_m, isomorphism number for (perm, c, d)");
  AddPermFlags(invariants, opt);
  invariants->add_option("--p", opt.annotate_p, "Annotate component counts as p^c_m");

  auto* oracle = app.add_subcommand("oracle", "Graph-oracle dimension/exponent and cross-check");
  AddPermFlags(oracle, opt);
  oracle->add_option("--level", opt.level, "Level for the per-orbit oracle summary (default: max level)");

  auto* verify = app.add_subcommand("verify", "Seeded random sweep of formula vs oracle");
  verify->add_option("--samples", opt.samples)->capture_default_str();
  verify->add_option("--max-h", opt.max_h)->capture_default_str();
  verify->add_option("--max-level", opt.max_level)->capture_default_str();
  verify->add_option("--seed", opt.seed)->capture_default_str();
  AddFormat(verify, opt);

  auto* enumerate = app.add_subcommand("enumerate-bt1", "All BT_1 classes of signature (c, d)");
  enumerate->add_option("--c", opt.c)->required();
  enumerate->add_option("--d", opt.d)->required();
  AddFormat(enumerate, opt);

  auto* kraft = app.add_subcommand("kraft-type", "Circular-word type of H_pi[p]");
  kraft->add_option("--c", opt.c)->required();
  kraft->add_option("--d", opt.d)->required();
  kraft->add_option("--perm", opt.perm)->required();
  kraft->add_option("--degree", opt.degree);
  AddFormat(kraft, opt);

  auto* polys = app.add_subcommand("witt-polys", "Witt sum/product/negation polynomials");
  polys->add_option("--p", opt.p)->required();
  polys->add_option("--len", opt.len)->required();
  polys->add_option("--law", opt.law)->check(CLI::IsMember({"sum", "product", "neg", "all"}));
  AddFormat(polys, opt);

  auto* eval = app.add_subcommand("witt-eval", "Arithmetic on W_len(F_p)");
  eval->add_option("--p", opt.p)->required();
  eval->add_option("--len", opt.len)->required();
  eval->add_option("--op", opt.op)->capture_default_str();
  eval->add_option("--lhs", opt.lhs)->required();
  eval->add_option("--rhs", opt.rhs);
  AddFormat(eval, opt);

  auto* check = app.add_subcommand("witt-check", "Ring isomorphism W_len(F_p) = Z/p^len");
  check->add_option("--p", opt.p)->required();
  check->add_option("--len", opt.len)->required();
  AddFormat(check, opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  Outcome outcome;
  try {
    if (invariants->parsed()) outcome = RunInvariants(opt);
    else if (oracle->parsed()) outcome = RunOracle(opt);
    else if (verify->parsed()) outcome = RunVerify(opt);
    else if (enumerate->parsed()) outcome = RunEnumerate(opt);
    else if (kraft->parsed()) outcome = RunKraftType(opt);
    else if (polys->parsed()) outcome = RunWittPolys(opt);
    else if (eval->parsed()) outcome = RunWittEval(opt);
    else outcome = RunWittCheck(opt);
  } catch (const Error& e) {
    err << "btlab: " << e.what() << '\n';
    return e.is_input_error() ? kExitInputError : kExitMismatch;
  }

  out << outcome.document;
  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) {
      err << "btlab: cannot write " << opt.out_path << '\n';
      return kExitInputError;
    }
    file << outcome.document;
  }
  if (outcome.code == kExitMismatch) err << "btlab: verification failed\n";
  return outcome.code;
}

}  // namespace btlab
