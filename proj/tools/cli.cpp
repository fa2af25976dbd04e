// Copyright 2026 The plcat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "plcat/centrality.hpp"
#include "plcat/checks.hpp"
#include "plcat/coherence.hpp"
#include "plcat/eval.hpp"
#include "plcat/matrix.hpp"
#include "plcat/model_file.hpp"

namespace plcat::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string              model_path;
  std::string              mode_text = "prelinear";
  std::size_t              depth     = 6;
  std::size_t              max_size  = 3;
  std::size_t              tuple_size = 2;
  std::string              format    = "text";
  std::vector<std::string> words;
  std::string              replay_path;
  std::vector<std::size_t> ns;
  std::optional<std::size_t> square_units;
  std::size_t              square_depth = 4;
  std::optional<std::size_t> uniqueness_units;

  bool structured() const { return format == "structured"; }
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json report_json(const Model& m, const CheckReport& r) {
  json j{{"law", r.law},
         {"passed", r.passed},
         {"instances", r.instances},
         {"failures", r.failures}};
  if (!r.note.empty()) j["note"] = r.note;
  if (r.counterexample) j["counterexample"] = json::parse(counterexample_to_json(m, *r.counterexample));
  return j;
}

void print_report(std::ostream& out, const Model& m, const CheckReport& r) {
  out << (r.passed ? "PASS  " : "FAIL  ") << r.law << "  ";
  if (r.passed)
    out << r.instances << " instances";
  else
    out << r.failures << " of " << r.instances << " instances";
  if (!r.note.empty()) out << "  (" << r.note << ")";
  out << '\n';
  if (r.counterexample) {
    out << "      " << r.counterexample->detail << '\n';
    out << "      counterexample: " << counterexample_to_json(m, *r.counterexample) << '\n';
  }
}

std::unique_ptr<Model> load(const RunConfig& cfg) {
  if (cfg.model_path.empty()) throw InputError("--model is required");
  try {
    return load_model(cfg.model_path);
  } catch (const ModelFileError& e) {
    throw InputError(e.what());
  }
}

json document(const std::string& command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

// ---------------------------------------------------------------------------

int cmd_word(const RunConfig& cfg, std::ostream& out) {
  if (cfg.words.size() != 1) throw InputError("word expects exactly one word argument");
  Word w;
  try {
    w = parse_word(cfg.words.front());
  } catch (const SyntaxError& e) {
    throw InputError(std::string(e.what()));
  }
  json doc = document("word");
  doc["word"]   = render_word(w);
  doc["tree"]   = render_tree(w);
  doc["length"] = w.length();
  doc["units"]  = w.units();
  int code      = kOk;
  if (w.length() == 1 || w.length() == 2) doc["unit_free_core"] = render_word(unit_free_core(w));
  if (w.length() == 1) {
    json a = json::array();
    for (const auto& at : attachment_sequence(w)) a.push_back(render_attachment(at));
    doc["attachments"] = a;
  }
  if (w.length() == 2) {
    const CoreSplit s = core_split(w);
    json            a = json::array();
    for (const auto& at : s.attachments) a.push_back(render_attachment(at));
    doc["core_split"] = {{"w1", render_word(s.w1)},
                         {"op", std::string(1, op_symbol(s.op))},
                         {"w2", render_word(s.w2)},
                         {"attachments", a}};
  }
  if (w.length() == 0) {
    const auto both          = length_zero_cancellations(w);
    doc["unit_cancellation"] = {{"to_zero", render_term(both.to_zero)},
                                {"to_one", render_term(both.to_one)}};
  } else if (w.length() <= 2) {
    const CanonTerm u        = unit_cancel(w);
    doc["unit_cancellation"] = {{"term", render_term(u)}, {"target", render_word(u.target())}};
  } else {
    doc["error"] = "unit cancellation is defined for words of length at most 2";
    code         = kUnsupported;
  }

  if (cfg.structured()) {
    out << doc.dump(2) << '\n';
    return code;
  }
  out << "word: " << doc["word"].get<std::string>() << '\n'
      << "tree: " << doc["tree"].get<std::string>() << '\n'
      << "length: " << w.length() << '\n'
      << "units: " << w.units() << '\n';
  if (doc.contains("unit_free_core"))
    out << "unit-free core: " << doc["unit_free_core"].get<std::string>() << '\n';
  if (doc.contains("attachments")) {
    out << "attachments (innermost first):";
    for (const auto& a : doc["attachments"]) out << ' ' << a.get<std::string>();
    out << '\n';
  }
  if (doc.contains("core_split")) {
    const auto& s = doc["core_split"];
    out << "core split: " << s["w1"].get<std::string>() << ' ' << s["op"].get<std::string>()
        << ' ' << s["w2"].get<std::string>() << '\n'
        << "attachments (innermost first):";
    for (const auto& a : s["attachments"]) out << ' ' << a.get<std::string>();
    if (s["attachments"].empty()) out << " none";
    out << '\n';
  }
  if (w.length() == 0) {
    out << "unit cancellation to 0: " << doc["unit_cancellation"]["to_zero"].get<std::string>()
        << '\n'
        << "unit cancellation to 1: " << doc["unit_cancellation"]["to_one"].get<std::string>()
        << '\n';
  } else if (code == kOk) {
    out << "unit cancellation: " << doc["unit_cancellation"]["term"].get<std::string>() << '\n'
        << "  target: " << doc["unit_cancellation"]["target"].get<std::string>() << '\n';
  } else {
    out << "unit cancellation: unsupported for length " << w.length() << '\n';
  }
  return code;
}

// ---------------------------------------------------------------------------

int replay_file(const RunConfig& cfg, const Model& m, std::ostream& out) {
  std::ifstream in(cfg.replay_path);
  if (!in) throw InputError("cannot read " + cfg.replay_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Counterexample c;
  try {
    c = counterexample_from_json(m, buf.str());
  } catch (const ModelFileError& e) {
    throw InputError(e.what());
  }
  if (!is_law(c.law)) throw InputError("unknown law '" + c.law + "'");
  CheckOptions opts;
  opts.max_size = cfg.max_size;
  const auto verdict = replay(m, c, opts);
  if (cfg.structured()) {
    json doc          = document("check");
    doc["replay"]     = json::parse(counterexample_to_json(m, c));
    doc["reproduced"] = verdict.has_value();
    if (verdict) doc["detail"] = *verdict;
    out << doc.dump(2) << '\n';
  } else if (verdict) {
    out << "REPRODUCED  " << c.law << "\n      " << *verdict << '\n';
  } else {
    out << "HOLDS  " << c.law << " at the given instance\n";
  }
  return verdict ? kLawFailed : kOk;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const auto model = load(cfg);
  const Model& m   = *model;
  if (!cfg.replay_path.empty()) return replay_file(cfg, m, out);

  CheckOptions opts;
  opts.max_size = cfg.max_size;
  std::vector<CheckReport> reports;
  auto add = [&](std::vector<CheckReport> rs) {
    for (auto& r : rs) reports.push_back(std::move(r));
  };
  add(check_structure(m, opts));
  add(check_transformer(m, opts));
  add(check_prelinear(m, opts));
  add(check_centrality(m, opts));
  CoherenceOptions co;
  co.depth          = cfg.depth;
  co.max_tuple_size = cfg.tuple_size;
  co.mode           = parse_mode(cfg.mode_text);
  for (std::size_t n = 1; n <= 3; ++n) reports.push_back(coherence_identity_check(m, n, co));
  const auto lin       = is_lineariser(m, cfg.max_size);
  auto       linearity = check_linearity_theorem(m, opts);
  add(std::move(linearity.details));
  reports.push_back(linearity.report);
  const bool ok = all_passed(reports);

  if (cfg.structured()) {
    json doc      = document("check");
    doc["config"] = {{"model", cfg.model_path}, {"kind", m.kind()}, {"max_size", cfg.max_size},
                     {"depth", cfg.depth},      {"mode", cfg.mode_text},
                     {"tuple_size", cfg.tuple_size}};
    doc["lineariser"] = {{"value", lin.value}};
    if (!lin.value) {
      doc["lineariser"]["witness"] = {m.name(lin.witness->first), m.name(lin.witness->second)};
      doc["lineariser"]["reason"]  = lin.reason;
    }
    doc["linearity"] = {{"lineariser", linearity.lineariser},
                        {"matrices_realizable", linearity.matrices_realizable},
                        {"addition_definable", linearity.addition_definable},
                        {"monoids_distributive", linearity.monoids_distributive}};
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(report_json(m, r));
    doc["passed"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    out << "model: " << cfg.model_path << " (" << m.kind() << ", " << m.objects().size()
        << " base objects)\n";
    for (const auto& r : reports) print_report(out, m, r);
    out << "lineariser: " << (lin.value ? "true" : "false");
    if (!lin.value) out << " (" << lin.reason << ")";
    out << '\n';
    const auto failed = std::count_if(reports.begin(), reports.end(),
                                      [](const CheckReport& r) { return !r.passed; });
    out << "summary: " << reports.size() << " laws, " << failed << " failed\n";
  }
  return ok ? kOk : kLawFailed;
}

// ---------------------------------------------------------------------------

int cmd_central(const RunConfig& cfg, std::ostream& out) {
  const auto model = load(cfg);
  const Model& m   = *model;
  if (cfg.words.size() != 2) throw InputError("central expects two object names X Y");
  std::vector<ObjId> xy;
  for (const auto& name : cfg.words) {
    const auto x = parse_object(m, name);
    if (!x) throw InputError("unknown object '" + name + "'");
    xy.push_back(*x);
  }
  const ObjId x = xy[0], y = xy[1];
  const auto  z = central_hom(m, x, y);
  const auto  lin = is_lineariser(m, std::numeric_limits<std::size_t>::max());
  std::optional<CentralMonoid> monoid;
  if (lin.value) monoid = central_monoid(m, x, y);

  if (cfg.structured()) {
    json doc        = document("central");
    doc["x"]        = m.name(x);
    doc["y"]        = m.name(y);
    doc["central"]  = json::array();
    for (const Mor& f : z) doc["central"].push_back(f.map);
    doc["lineariser"] = lin.value;
    if (monoid) {
      doc["addition"]    = monoid->table;
      doc["zero"]        = monoid->unit;
      doc["commutative"] = monoid->commutative;
    } else {
      doc["witness"] = lin.reason;
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }
  if (monoid) {
    out << render_addition_table(m, *monoid);
    out << "commutative: " << (monoid->commutative ? "yes" : "no") << '\n';
  } else {
    out << "Z(" << m.name(x) << ", " << m.name(y) << "): " << z.size() << " central morphisms\n";
    for (std::size_t k = 0; k < z.size(); ++k) out << "  " << k << ": " << m.describe(z[k]) << '\n';
    out << "no addition: " << lin.reason << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_coherence(const RunConfig& cfg, std::ostream& out) {
  const auto model = load(cfg);
  const Model& m   = *model;
  const Mode   mode = parse_mode(cfg.mode_text);
  std::vector<CheckReport> reports;
  std::vector<std::size_t> ns = cfg.ns.empty() ? std::vector<std::size_t>{1, 2, 3} : cfg.ns;
  for (std::size_t n : ns) {
    if (n < 1 || n > 3) throw InputError("--n must be 1, 2 or 3");
    CoherenceOptions co;
    co.depth          = cfg.depth;
    co.max_tuple_size = cfg.tuple_size;
    co.mode           = mode;
    reports.push_back(coherence_identity_check(m, n, co));
  }
  if (cfg.square_units) {
    SweepOptions so{cfg.square_depth, cfg.tuple_size, mode};
    reports.push_back(unit_cancellation_square_check(m, enumerate_words(2, *cfg.square_units), so));
  }
  if (cfg.uniqueness_units) {
    SweepOptions so{cfg.depth, cfg.tuple_size, mode};
    reports.push_back(path_uniqueness_check(m, words_up_to_length_two(*cfg.uniqueness_units), so));
  }
  const bool ok = all_passed(reports);
  if (cfg.structured()) {
    json doc      = document("coherence");
    doc["config"] = {{"model", cfg.model_path}, {"depth", cfg.depth}, {"mode", cfg.mode_text},
                     {"tuple_size", cfg.tuple_size}};
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(report_json(m, r));
    doc["passed"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) print_report(out, m, r);
  }
  return ok ? kOk : kLawFailed;
}

void add_model_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--model", cfg.model_path, "Model file (JSON)")->required();
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
}

void add_search_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--mode", cfg.mode_text, "prelinear or partially-linear")
      ->check(CLI::IsMember({"prelinear", "partially-linear", "partially_linear"}));
  cmd->add_option("--depth", cfg.depth, "Maximum number of elementary steps")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tuple-size", cfg.tuple_size,
                  "Largest carrier among the objects substituted into words")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App  app{"canonical morphisms, linearisers and central morphisms in finite models"};
  RunConfig cfg;
  app.name("plcat");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* word = app.add_subcommand("word", "Parse a word and show its unit cancellation");
  word->add_option("word", cfg.words, "Word, e.g. \"(1*(_+_))\"")->required();
  word->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* check = app.add_subcommand("check", "Run every law check on a model");
  add_model_options(check, cfg);
  add_search_options(check, cfg);
  check->add_option("--max-size", cfg.max_size, "Largest base object carrier checked")
      ->check(CLI::PositiveNumber);
  check->add_option("--replay", cfg.replay_path,
                    "Evaluate a saved counterexample instead of running the suite");

  auto* central = app.add_subcommand("central", "List Z(X, Y) and its addition table");
  add_model_options(central, cfg);
  central->add_option("objects", cfg.words, "Object names X Y")->required()->expected(2);

  auto* coherence = app.add_subcommand("coherence", "Sweep canonical paths");
  add_model_options(coherence, cfg);
  add_search_options(coherence, cfg);
  coherence->add_option("--n", cfg.ns, "Sum/product lengths (default 1 2 3)");
  coherence->add_option("--square-units", cfg.square_units,
                        "Also check the unit-cancellation square from length-2 words "
                        "with at most this many units");
  coherence->add_option("--square-depth", cfg.square_depth, "Path length for --square-units")
      ->check(CLI::PositiveNumber);
  coherence->add_option("--uniqueness-units", cfg.uniqueness_units,
                        "Also check path uniqueness among words of length <= 2 "
                        "with at most this many units");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    if (*word) return cmd_word(cfg, out);
    if (*check) return cmd_check(cfg, out);
    if (*central) return cmd_central(cfg, out);
    if (*coherence) return cmd_coherence(cfg, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace plcat::cli
