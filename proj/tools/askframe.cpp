// Copyright 2026 The askframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// askframe: ask/framing detection, response generation, evaluation and
// lexicon adaptation from the command line.
//
// Exit codes: 0 success, 1 partial (malformed records skipped), 2 usage,
// configuration or I/O error.

#include <askframe/error.hpp>
#include <askframe/evalkit.hpp>
#include <askframe/lexicon.hpp>
#include <askframe/morphvar.hpp>
#include <askframe/pipeline.hpp>
#include <askframe/records.hpp>
#include <askframe/respond.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kPartial = 1;
constexpr int kFailure = 2;

struct LexiconSpec {
  std::string path;
  std::optional<askframe::LexiconFormat> format;
};

struct RunConfig {
  std::optional<LexiconSpec> lexicon;  // detect
  std::vector<LexiconSpec> lexica;     // eval
  std::optional<std::string> variants;
  std::optional<std::string> templates;
  std::optional<std::string> ground_truth;
  double alpha = 0.02;
  bool strict_trigger_match = false;
  askframe::Granularity granularity = askframe::Granularity::kPerLabel;
  std::string analyzer = "rule";
  askframe::DetectOptions detect;
  askframe::BandCuts bands;
  unsigned threads = 0;
};

// Flags given on the command line; they override the config file.
struct GlobalFlags {
  std::string config;
  std::vector<std::string> lexica;
  std::string format;
  std::string variants;
  std::string templates;
  std::string out;
  std::optional<double> alpha;
  bool strict = false;
  bool no_variants = false;
  unsigned threads = 0;
};

std::string resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? p : (base / path).lexically_normal().string();
}

LexiconSpec lexicon_spec(const json& j, const fs::path& base) {
  if (j.is_string()) return {resolve(base, j.get<std::string>()), std::nullopt};
  if (!j.is_object() || !j.contains("path")) throw askframe::Error("lexicon entry needs a path");
  LexiconSpec s{resolve(base, j.at("path").get<std::string>()), std::nullopt};
  if (j.contains("format")) {
    s.format = askframe::parse_lexicon_format(j.at("format").get<std::string>());
    if (!s.format) throw askframe::Error("unknown lexicon format in config");
  }
  return s;
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw askframe::Error("cannot open config '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw askframe::Error("config '" + path + "' is not a JSON object");
  fs::path base = fs::path(path).parent_path();
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "lexicon") {
        cfg.lexicon = lexicon_spec(v, base);
      } else if (key == "lexica") {
        for (const json& e : v) cfg.lexica.push_back(lexicon_spec(e, base));
      } else if (key == "variants") {
        cfg.variants = resolve(base, v.get<std::string>());
      } else if (key == "templates") {
        cfg.templates = resolve(base, v.get<std::string>());
      } else if (key == "ground_truth") {
        cfg.ground_truth = resolve(base, v.get<std::string>());
      } else if (key == "alpha") {
        cfg.alpha = v.get<double>();
      } else if (key == "strict_trigger_match") {
        cfg.strict_trigger_match = v.get<bool>();
      } else if (key == "granularity") {
        std::string g = v.get<std::string>();
        if (g == "label")
          cfg.granularity = askframe::Granularity::kPerLabel;
        else if (g == "clause")
          cfg.granularity = askframe::Granularity::kPerClause;
        else
          throw askframe::Error("granularity must be 'label' or 'clause'");
      } else if (key == "analyzer") {
        cfg.analyzer = v.get<std::string>();
      } else if (key == "use_variants") {
        cfg.detect.use_variants = v.get<bool>();
      } else if (key == "variants_for_framings") {
        cfg.detect.variants_for_framings = v.get<bool>();
      } else if (key == "suffix_fallback") {
        cfg.detect.use_suffix_fallback = v.get<bool>();
      } else if (key == "ambiguity_penalty") {
        cfg.detect.ambiguity_penalty = v.get<double>();
      } else if (key == "band_high") {
        cfg.bands.high = v.get<double>();
      } else if (key == "band_mid") {
        cfg.bands.mid = v.get<double>();
      } else if (key == "threads") {
        cfg.threads = v.get<unsigned>();
      } else {
        throw askframe::Error("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw askframe::Error("config '" + path + "': " + e.what());
  }
  return cfg;
}

RunConfig effective_config(const GlobalFlags& flags) {
  RunConfig cfg = flags.config.empty() ? RunConfig{} : load_config(flags.config);
  std::optional<askframe::LexiconFormat> format;
  if (!flags.format.empty()) {
    format = askframe::parse_lexicon_format(flags.format);
    if (!format) throw askframe::Error("unknown --format '" + flags.format + "'");
  }
  if (!flags.lexica.empty()) {
    cfg.lexica.clear();
    for (const std::string& p : flags.lexica) cfg.lexica.push_back({p, format});
    cfg.lexicon = cfg.lexica.front();
  } else if (format) {
    for (LexiconSpec& s : cfg.lexica) s.format = format;
    if (cfg.lexicon) cfg.lexicon->format = format;
  }
  if (!flags.variants.empty()) cfg.variants = flags.variants;
  if (!flags.templates.empty()) cfg.templates = flags.templates;
  if (flags.alpha) cfg.alpha = *flags.alpha;
  if (flags.strict) cfg.strict_trigger_match = true;
  if (flags.no_variants) cfg.detect.use_variants = false;
  if (flags.threads) cfg.threads = flags.threads;
  if (cfg.alpha <= 0.0 || cfg.alpha >= 1.0) throw askframe::Error("alpha must lie in (0, 1)");
  if (cfg.analyzer != "rule") throw askframe::Error("unknown analyzer '" + cfg.analyzer + "'");
  return cfg;
}

// A flat list opens with a "[CATEGORY]" header; anything else is normalized.
askframe::LexiconFormat sniff_format(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line[first] == '[' ? askframe::LexiconFormat::kFlatList
                              : askframe::LexiconFormat::kNormalized;
  }
  return askframe::LexiconFormat::kNormalized;
}

askframe::Lexicon load_spec(const LexiconSpec& s) {
  return askframe::load_lexicon_file(s.path, s.format ? *s.format : sniff_format(s.path));
}

askframe::VariantTable load_variant_table(const RunConfig& cfg) {
  if (!cfg.variants) return {};
  return askframe::load_variants_file(*cfg.variants);
}

class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {}
  std::ostream& stream() { return buffer_; }
  // Writes everything at once so a failed run leaves no partial file.
  void commit() {
    if (path_.empty() || path_ == "-") {
      std::cout << buffer_.str();
      std::cout.flush();
      return;
    }
    std::ofstream f(path_, std::ios::binary | std::ios::trunc);
    f << buffer_.str();
    if (!f) throw askframe::Error("cannot write '" + path_ + "'");
  }

 private:
  std::string path_;
  std::ostringstream buffer_;
};

int report_skipped(const askframe::CorpusLoad& load, const std::string& path) {
  for (const askframe::RecordIssue& issue : load.skipped) {
    std::cerr << "askframe: " << path;
    if (issue.line) std::cerr << ":" << issue.line;
    std::cerr << ": skipped record: " << issue.reason << '\n';
  }
  return load.skipped.empty() ? kOk : kPartial;
}

askframe::CorpusLoad load_corpus_checked(const std::string& path) {
  if (!fs::exists(path)) throw askframe::Error("corpus '" + path + "' does not exist");
  return askframe::load_corpus(path);
}

int cmd_detect(const GlobalFlags& flags, const std::string& corpus_path) {
  RunConfig cfg = effective_config(flags);
  if (!cfg.lexicon) throw askframe::Error("detect needs a lexicon (--lexicon or config)");
  askframe::Lexicon lexicon = load_spec(*cfg.lexicon);
  askframe::VariantTable variants = load_variant_table(cfg);
  askframe::CorpusLoad corpus = load_corpus_checked(corpus_path);
  askframe::PipelineSetup setup{&lexicon, &variants, nullptr, cfg.detect};
  Output out(flags.out);
  for (const askframe::AnalyzedMessage& m : askframe::run_pipeline(corpus.records, setup, cfg.threads))
    out.stream() << askframe::to_json_line(m.detection) << '\n';
  out.commit();
  return report_skipped(corpus, corpus_path);
}

int cmd_respond(const GlobalFlags& flags, const std::string& detections_path) {
  RunConfig cfg = effective_config(flags);
  if (!cfg.templates) throw askframe::Error("respond needs a template file (--templates or config)");
  std::vector<askframe::ResponseTemplate> templates = askframe::load_templates_file(*cfg.templates);
  std::ifstream in(detections_path, std::ios::binary);
  if (!in) throw askframe::Error("cannot open detections '" + detections_path + "'");
  std::vector<askframe::DetectionRecord> detections = askframe::load_detections_jsonl(in);
  Output out(flags.out);
  for (const askframe::DetectionRecord& d : detections)
    out.stream() << askframe::to_json_line(
                        askframe::generate_response(d.selection(), templates, cfg.bands))
                 << '\n';
  out.commit();
  return kOk;
}

int cmd_eval(const GlobalFlags& flags, const std::string& corpus_path, const std::string& gt_flag,
             const std::string& text_path) {
  RunConfig cfg = effective_config(flags);
  std::string gt_path = gt_flag.empty() ? cfg.ground_truth.value_or("") : gt_flag;
  if (gt_path.empty()) throw askframe::Error("eval needs a ground-truth file (--gt or config)");
  if (cfg.lexica.size() < 2) throw askframe::Error("eval needs at least two lexica");
  std::vector<askframe::Lexicon> lexica;
  for (const LexiconSpec& s : cfg.lexica) lexica.push_back(load_spec(s));
  std::vector<const askframe::Lexicon*> ptrs;
  for (const askframe::Lexicon& l : lexica) ptrs.push_back(&l);
  askframe::VariantTable variants = load_variant_table(cfg);
  std::vector<askframe::GroundTruthRecord> gt = askframe::load_ground_truth_file(gt_path);
  askframe::CorpusLoad corpus = load_corpus_checked(corpus_path);

  askframe::CompareSetup setup;
  setup.variants = &variants;
  setup.detect = cfg.detect;
  setup.scoring.strict_trigger = cfg.strict_trigger_match;
  setup.scoring.granularity = cfg.granularity;
  setup.alpha = cfg.alpha;
  setup.threads = cfg.threads;
  askframe::Comparison cmp = askframe::compare_lexica(corpus.records, gt, ptrs, setup);

  Output text(text_path);
  askframe::write_report_text(text.stream(), cmp);
  if (!flags.out.empty()) {
    Output json_out(flags.out);
    askframe::write_report_json(json_out.stream(), cmp);
    json_out.commit();
  }
  text.commit();
  return report_skipped(corpus, corpus_path);
}

int cmd_segment(const GlobalFlags& flags, const std::string& corpus_path) {
  askframe::CorpusLoad corpus = load_corpus_checked(corpus_path);
  Output out(flags.out);
  for (const askframe::CorpusRecord& r : corpus.records) {
    askframe::Message m = askframe::segment_record(r, askframe::default_analyzer());
    for (const askframe::Clause& c : m.clauses) {
      json j = {{"message_id", m.message_id},
                {"clause_ordinal", c.ordinal},
                {"offset", c.offset},
                {"text", c.text}};
      out.stream() << j.dump() << '\n';
    }
  }
  out.commit();
  return report_skipped(corpus, corpus_path);
}

askframe::Lexicon load_cli_lexicon(const GlobalFlags& flags, const std::string& path) {
  if (flags.format.empty()) return load_spec({path, std::nullopt});
  auto format = askframe::parse_lexicon_format(flags.format);
  if (!format) throw askframe::Error("unknown --format '" + flags.format + "'");
  return askframe::load_lexicon_file(path, *format);
}

int cmd_lexicon_diff(const GlobalFlags& flags, const std::string& a, const std::string& b, bool list) {
  askframe::Lexicon from = load_cli_lexicon(flags, a);
  askframe::Lexicon to = load_cli_lexicon(flags, b);
  Output out(flags.out);
  askframe::write_diff_report(out.stream(), askframe::diff_lexica(from, to), list);
  out.commit();
  return kOk;
}

int cmd_lexicon_apply(const GlobalFlags& flags, const std::string& base_path,
                      const std::string& ledger_path) {
  askframe::Lexicon base = load_cli_lexicon(flags, base_path);
  askframe::AdaptationLedger ledger = askframe::load_ledger_file(ledger_path);
  Output out(flags.out);
  askframe::write_lexicon(out.stream(), askframe::apply_ledger(base, ledger));
  out.commit();
  return kOk;
}

int cmd_lexicon_validate(const GlobalFlags& flags, const std::vector<std::string>& paths) {
  Output out(flags.out);
  for (const std::string& p : paths) {
    askframe::Lexicon lex = load_cli_lexicon(flags, p);
    out.stream() << p << ": ok (" << lex.name() << ", " << lex.size() << " entries, "
                 << lex.classes().size() << " classes)\n";
  }
  out.commit();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"askframe: detect asks and framings in messages, respond, evaluate and adapt lexica"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags flags;
  app.add_option("--config", flags.config, "JSON run configuration");
  app.add_option("--lexicon", flags.lexica, "Lexicon file (repeat for eval)");
  app.add_option("--format", flags.format, "Lexicon format: normalized or flatlist");
  app.add_option("--variants", flags.variants, "Variant table file");
  app.add_option("--templates", flags.templates, "Response template file");
  app.add_option("--out", flags.out, "Output path (default stdout)");
  app.add_option("--alpha", flags.alpha, "Significance level for McNemar tests");
  app.add_flag("--strict-trigger-match", flags.strict, "Require trigger lemma equality when scoring");
  app.add_flag("--no-variants", flags.no_variants, "Disable variant mapping");
  app.add_option("--threads", flags.threads, "Worker threads (0 = hardware)");

  std::string corpus, detections, gt, text_out, lex_a, lex_b, ledger;
  std::vector<std::string> validate_paths;
  bool list = false;

  auto* detect = app.add_subcommand("detect", "Detect asks and framings in a corpus");
  detect->add_option("corpus", corpus, "JSON Lines corpus or directory")->required();
  auto* respond = app.add_subcommand("respond", "Generate responses from detect output");
  respond->add_option("detections", detections, "Output of detect")->required();
  auto* eval = app.add_subcommand("eval", "Evaluate lexica against ground truth");
  eval->add_option("corpus", corpus, "JSON Lines corpus or directory")->required();
  eval->add_option("--gt", gt, "Ground-truth JSON Lines");
  eval->add_option("--text", text_out, "Plain-text report path (default stdout)");
  auto* segment = app.add_subcommand("segment", "Print clause segmentation as JSON Lines");
  segment->add_option("corpus", corpus, "JSON Lines corpus or directory")->required();
  auto* lexicon = app.add_subcommand("lexicon", "Lexicon adaptation tools");
  lexicon->require_subcommand(1);
  lexicon->fallthrough();
  auto* diff = lexicon->add_subcommand("diff", "Per-category and per-class differences");
  diff->add_option("from", lex_a)->required();
  diff->add_option("to", lex_b)->required();
  diff->add_flag("--list", list, "List added and deleted lemmas");
  auto* apply = lexicon->add_subcommand("apply", "Apply an adaptation ledger");
  apply->add_option("base", lex_a)->required();
  apply->add_option("ledger", ledger)->required();
  auto* validate = lexicon->add_subcommand("validate", "Check lexicon files");
  validate->add_option("files", validate_paths)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kFailure;
  }

  try {
    if (*detect) return cmd_detect(flags, corpus);
    if (*respond) return cmd_respond(flags, detections);
    if (*eval) return cmd_eval(flags, corpus, gt, text_out);
    if (*segment) return cmd_segment(flags, corpus);
    if (*diff) return cmd_lexicon_diff(flags, lex_a, lex_b, list);
    if (*apply) return cmd_lexicon_apply(flags, lex_a, ledger);
    if (*validate) return cmd_lexicon_validate(flags, validate_paths);
  } catch (const askframe::AlignmentError& e) {
    std::cerr << "askframe: misaligned ground truth: " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "askframe: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}
