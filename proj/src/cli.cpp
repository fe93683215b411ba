#include "fbk/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fbk/closure.hpp"
#include "fbk/error.hpp"
#include "fbk/fuzz.hpp"
#include "fbk/garside.hpp"
#include "fbk/hilden.hpp"
#include "fbk/moves.hpp"
#include "fbk/plat.hpp"
#include "fbk/report.hpp"
#include "fbk/word_syntax.hpp"

namespace fbk {

namespace {

struct Options {
  bool pretty = false;
  int n = 0;
  std::vector<std::string> words;

  std::string convention = "blackboard";

  std::string kind;
  std::size_t split = 0;
  int index = 1;
  int sign = 1;
  int k = 0;
  std::string side = "right";
  std::string conjugator;

  std::string suite;
  std::string dict_path;
  bool strict = false;

  std::string triple;

  std::uint64_t seed = 0;
  int trials = 100;
  std::vector<int> n_range{1, 5};
  std::vector<int> length_range{0, 15};
  std::string mix;
  int jobs = 1;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(what + ": " + e.what(), e.byte);
  }
}

FramingConvention convention_from(const std::string& s) {
  if (s == "blackboard") return FramingConvention::Blackboard;
  if (s == "integer") return FramingConvention::Integer;
  throw InvalidArgument("unknown framing convention " + s);
}

int cmd_nf(const Options& o, std::ostream& out) {
  const BraidWord w = parse_word(o.words.at(0), o.n);
  out << dump(Json{{"input", print_word(w)}, {"normal_form", to_json(normalize(w))}}, o.pretty)
      << '\n';
  return kExitOk;
}

int cmd_eq(const Options& o, std::ostream& out) {
  const FramedBraid a = normalize(parse_word(o.words.at(0), o.n));
  const FramedBraid b = normalize(parse_word(o.words.at(1), o.n));
  out << dump(Json{{"equal", framed_equal(a, b)}}, o.pretty) << '\n';
  return kExitOk;
}

int cmd_closure(const Options& o, std::ostream& out) {
  const FramedBraid a = normalize(parse_word(o.words.at(0), o.n));
  Json j = to_json(closure_signature(a, convention_from(o.convention)));
  if (permutation_of(a.beta()).is_full_cycle()) j["knot_framing"] = knot_framing(a);
  out << dump(j, o.pretty) << '\n';
  return kExitOk;
}

int cmd_plat(const Options& o, std::ostream& out) {
  const FramedBraid a = normalize(parse_word(o.words.at(0), o.n));
  out << dump(to_json(plat_signature(a)), o.pretty) << '\n';
  return kExitOk;
}

int cmd_move(const Options& o, std::ostream& out) {
  const FramedBraid a = normalize(parse_word(o.words.at(0), o.n));
  const auto kind = move_kind_from_string(o.kind);
  if (!kind) throw InvalidArgument("unknown move kind " + o.kind);
  MoveDescriptor d;
  d.kind = *kind;
  d.split = o.split;
  d.i = o.index;
  d.sign = o.sign;
  d.k = o.k;
  if (o.side == "left") {
    d.side = InclusionSide::Left;
  } else if (o.side != "right") {
    throw InvalidArgument("side must be left or right");
  }
  if (d.kind == MoveKind::Conjugation) {
    if (o.conjugator.empty()) throw InvalidArgument("Conjugation needs --conjugator");
    d.conjugator = normalize(parse_word(o.conjugator, o.n));
  }

  Json j{{"input", to_json(a)}, {"move", to_json(d)}};
  if (d.kind == MoveKind::TauConjugation) {
    Json steps = Json::array();
    for (const auto& s : tau_conjugation_as_RL_sequence(a, d.i, d.sign)) {
      steps.push_back(Json{{"move", to_json(s.move)}, {"element", to_json(s.element)}});
    }
    j["steps"] = std::move(steps);
    j["result"] = j["steps"].back()["element"];
  } else {
    const FramedBraid b = apply_move(a, d);
    j["result"] = to_json(b);
    const auto convention = (d.kind == MoveKind::IntRL_over || d.kind == MoveKind::IntRL_under)
                                ? FramingConvention::Integer
                                : FramingConvention::Blackboard;
    j["closure_preserved"] =
        signatures_match(closure_signature(a, convention), closure_signature(b, convention));
  }
  out << dump(j, o.pretty) << '\n';
  return kExitOk;
}

int cmd_hilden(const Options& o, std::ostream& out) {
  const auto suite = relation_suite_from_string(o.suite);
  if (!suite) throw InvalidArgument("unknown suite " + o.suite);
  GeneratorDictionary dict = GeneratorDictionary::builtin(o.n);
  if (!o.dict_path.empty()) {
    const Json extra = parse_json(read_text(o.dict_path), o.dict_path);
    if (!extra.is_object()) throw InvalidArgument("dictionary file must hold a JSON object");
    for (const auto& [name, word] : extra.items()) {
      if (!word.is_string()) throw InvalidArgument("dictionary entry " + name + " is not a string");
      dict.set(name, normalize(parse_word(word.get<std::string>(), 2 * o.n)));
    }
  }
  const auto reports = verify_relation_suite(dict, *suite);
  out << dump(to_json(reports), o.pretty) << '\n';
  for (const auto& r : reports) {
    if (r.skipped ? o.strict : !r.holds) return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_transfer(const Options& o, std::ostream& out) {
  const std::string text = (!o.triple.empty() && o.triple.front() == '{') ? o.triple : read_text(o.triple);
  const Json in = parse_json(text, "transfer input");
  std::vector<int> perm;
  FramingVector delta, kappa;
  try {
    perm = in.at("permutation").get<std::vector<int>>();
    delta = in.at("delta").get<FramingVector>();
    kappa = in.at("kappa").get<FramingVector>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("transfer input needs permutation, delta, kappa: ") + e.what());
  }
  const auto r = solve_framing_transfer(Permutation(perm), delta, kappa);
  Json j{{"solvable", r.has_value()}};
  j["r"] = r ? Json(*r) : Json(nullptr);
  out << dump(j, o.pretty) << '\n';
  return kExitOk;
}

std::map<FuzzMode, double> parse_mix(const std::string& text) {
  std::map<FuzzMode, double> mix;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    const std::string name = item.substr(0, eq);
    const auto mode = fuzz_mode_from_string(name);
    if (!mode) throw InvalidArgument("unknown fuzz mode " + name);
    mix[*mode] = eq == std::string::npos ? 1.0 : std::stod(item.substr(eq + 1));
  }
  return mix;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  FuzzConfig c;
  c.seed = o.seed;
  if (const char* env = std::getenv("FBK_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      c.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("FBK_SEED is not an unsigned integer: ") + env);
    }
  }
  c.trials = o.trials;
  c.n_range = {o.n_range.at(0), o.n_range.at(1)};
  c.word_length_range = {o.length_range.at(0), o.length_range.at(1)};
  if (!o.mix.empty()) c.move_mix = parse_mix(o.mix);
  c.jobs = o.jobs;
  const FuzzReport report = run_fuzz(c);
  out << dump(report.to_json(), o.pretty) << '\n';
  return report.failed == 0 ? kExitOk : kExitVerificationFailed;
}

void add_strands(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Strand count")->required()->check(CLI::Range(1, 4096));
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Framed braid toolkit", "fbk"};
  app.require_subcommand(1);
  app.add_flag("--pretty", o.pretty, "Indent JSON output");

  auto* nf = app.add_subcommand("nf", "Framed normal form of a word");
  add_strands(nf, o);
  nf->add_option("word", o.words)->required()->expected(1);

  auto* eq = app.add_subcommand("eq", "Compare two words in RB_n");
  add_strands(eq, o);
  eq->add_option("words", o.words)->required()->expected(2);

  auto* closure = app.add_subcommand("closure", "Closure signature");
  add_strands(closure, o);
  closure->add_option("word", o.words)->required()->expected(1);
  closure->add_option("--convention", o.convention, "blackboard or integer");

  auto* plat = app.add_subcommand("plat", "Plat closure signature (even strand count)");
  add_strands(plat, o);
  plat->add_option("word", o.words)->required()->expected(1);

  auto* move = app.add_subcommand("move", "Apply one move");
  add_strands(move, o);
  move->add_option("word", o.words)->required()->expected(1);
  move->add_option("--kind", o.kind, "Move kind")->required();
  move->add_option("--split", o.split, "Unit letters in a1");
  move->add_option("--index", o.index, "Strand index");
  move->add_option("--sign", o.sign, "Kink sign or twist exponent");
  move->add_option("--k", o.k, "Integer RL twist");
  move->add_option("--side", o.side, "right or left");
  move->add_option("--conjugator", o.conjugator, "Word for Conjugation");

  auto* hilden = app.add_subcommand("hilden-verify", "Verify a relation suite");
  hilden->add_option("--n", o.n, "Half strand count")->required()->check(CLI::Range(1, 64));
  hilden->add_option("--suite", o.suite, "hilden_1, framed_hilden or pure_framed")->required();
  hilden->add_option("--dict", o.dict_path, "JSON object of extra generator words");
  hilden->add_flag("--strict", o.strict, "Count skipped relations as failures");

  auto* transfer = app.add_subcommand("transfer", "Solve a framing transfer");
  transfer->add_option("input", o.triple, "JSON text, a file, or - for stdin")->required();

  auto* fuzz = app.add_subcommand("fuzz", "Randomized move invariance checks");
  fuzz->add_option("--seed", o.seed, "Seed (FBK_SEED overrides)");
  fuzz->add_option("--trials", o.trials);
  fuzz->add_option("--n-range", o.n_range, "lo hi")->expected(2);
  fuzz->add_option("--length-range", o.length_range, "lo hi")->expected(2);
  fuzz->add_option("--mix", o.mix, "mode=weight,... over rl, int_rl, rm, conjugation, "
                                   "tau_conj, double_coset, stabilization, negative");
  fuzz->add_option("--jobs", o.jobs);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto fail = [&](const std::string& kind, const std::string& message, Json extra) {
    Json j{{"error", kind}, {"message", message}};
    for (auto& [key, v] : extra.items()) j[key] = v;
    err << j.dump() << '\n';
    return kExitUsage;
  };

  try {
    if (nf->parsed()) return cmd_nf(o, out);
    if (eq->parsed()) return cmd_eq(o, out);
    if (closure->parsed()) return cmd_closure(o, out);
    if (plat->parsed()) return cmd_plat(o, out);
    if (move->parsed()) return cmd_move(o, out);
    if (hilden->parsed()) return cmd_hilden(o, out);
    if (transfer->parsed()) return cmd_transfer(o, out);
    if (fuzz->parsed()) return cmd_fuzz(o, out);
  } catch (const ParseError& e) {
    return fail("parse", e.reason(), Json{{"offset", e.offset()}});
  } catch (const Error& e) {
    return fail("usage", e.what(), Json::object());
  } catch (const std::logic_error& e) {
    err << Json{{"error", "internal"}, {"message", e.what()}}.dump() << '\n';
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace fbk
