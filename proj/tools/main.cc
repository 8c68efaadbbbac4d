// Copyright 2026 The ocrkit Authors
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

// ocrkit command-line driver.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "ocrkit/augment.h"
#include "ocrkit/corpus.h"
#include "ocrkit/csv.h"
#include "ocrkit/engines.h"
#include "ocrkit/errormodel.h"
#include "ocrkit/evaluate.h"
#include "ocrkit/inject.h"
#include "ocrkit/report.h"
#include "ocrkit/status.h"
#include "ocrkit/textmetrics.h"
#include "ocrkit/validation.h"

namespace fs = std::filesystem;
using namespace ocrkit;

namespace {

constexpr char kUnitsNote[] =
    "CER is reported in percent: 100 * edit distance / reference length; it "
    "can exceed 100 when the hypothesis is much longer than the reference.\n"
    "Accuracy bands: Good CER <= 2, Average 2 < CER <= 10, Poor CER > 10.\n"
    "Exit codes: 0 ok, 1 I/O, 2 domain error, 3 engine error.";

struct Globals {
  std::uint64_t seed = 0;
  int parallelism = 1;
  std::string form = "nfc";
  std::string unit = "codepoint";
  std::string whitespace = "preserve";
  std::string cache_dir;

  NormalizationPolicy Policy() const {
    NormalizationPolicy p;
    p.form = form == "nfc" ? NormalizationPolicy::Form::kNfc
                           : NormalizationPolicy::Form::kNone;
    p.unit = unit == "grapheme" ? NormalizationPolicy::UnitKind::kGraphemeCluster
                                : NormalizationPolicy::UnitKind::kCodePoint;
    p.whitespace = whitespace == "collapse"
                       ? NormalizationPolicy::Whitespace::kCollapseRuns
                       : NormalizationPolicy::Whitespace::kPreserve;
    return p;
  }
};

void Output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    WriteFile(path, text);
  }
}

std::vector<TextPair> PairsWithHypotheses(const Manifest& m) {
  std::vector<TextPair> pairs;
  for (const ArticlePair& p : m.entries) {
    if (!p.hypothesis_text) {
      throw Error(ErrorCode::kInvalidArgument,
                  "article '" + p.article_id + "' has no hypothesis (hyp_text or hyp_path)");
    }
    pairs.push_back({p.article_id, p.reference_text, *p.hypothesis_text});
  }
  return pairs;
}

std::vector<KindSet> ParseKindSets(const std::vector<std::string>& specs) {
  std::vector<KindSet> out;
  for (const std::string& s : specs) out.push_back(KindSet::Parse(s));
  return out;
}

// ---------------------------------------------------------------- cer

struct CerArgs {
  std::string ref, hyp, manifest, out;
};

int RunCer(const Globals& g, const CerArgs& a) {
  const NormalizationPolicy policy = g.Policy();
  if (!a.manifest.empty()) {
    const Manifest m = LoadManifest(a.manifest);
    const std::vector<TextPair> pairs = PairsWithHypotheses(m);
    const CorpusCer c = ComputeCorpusCer(pairs, policy, g.parallelism);
    std::string out = CsvRow({"id", "language", "ref_len", "distance", "cer"});
    for (std::size_t i = 0; i < c.per_article.size(); ++i) {
      const CerReport& r = c.per_article[i].report;
      out += CsvRow({c.per_article[i].id, m.entries[i].language,
                     std::to_string(r.ref_len), std::to_string(r.distance),
                     FormatFixed(r.cer, 4)});
    }
    out += CsvRow({"micro", "", std::to_string(c.total_ref_len),
                   std::to_string(c.total_distance), FormatFixed(c.micro_cer, 4)});
    out += CsvRow({"macro", "", "", "", FormatFixed(c.macro_cer, 4)});
    Output(a.out, out);
    return 0;
  }
  if (a.ref.empty() || a.hyp.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "give --ref and --hyp, or --manifest");
  }
  const CerReport r = ComputeCer(ReadFile(a.ref), ReadFile(a.hyp), policy);
  std::string out = CsvRow({"ref_len", "distance", "cer", "substitutions",
                            "insertions", "deletions", "class"});
  out += CsvRow({std::to_string(r.ref_len), std::to_string(r.distance),
                 FormatFixed(r.cer, 4), std::to_string(r.counts.substitutions),
                 std::to_string(r.counts.insertions), std::to_string(r.counts.deletions),
                 std::string(AccuracyClassName(Classify(r.cer)))});
  Output(a.out, out);
  return 0;
}

// ----------------------------------------------------------- validate

struct ValidateArgs {
  std::string manifest, out;
  double sigma = 2.0;
  std::string side = "two-sided";
  std::string grouping = "per-language";
};

int RunValidate(const Globals& g, const ValidateArgs& a) {
  const Manifest m = LoadManifest(a.manifest);
  const std::vector<TextPair> pairs = PairsWithHypotheses(m);
  const CorpusCer c = ComputeCorpusCer(pairs, g.Policy(), g.parallelism);
  std::vector<ArticleScore> scores;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    scores.push_back({pairs[i].id, m.entries[i].language, c.per_article[i].report.cer});
  }
  ValidationConfig config;
  config.sigma_multiplier = a.sigma;
  config.side = a.side == "high" ? ValidationConfig::Side::kHighOnly
                                 : ValidationConfig::Side::kTwoSided;
  config.grouping = a.grouping == "global" ? ValidationConfig::Grouping::kGlobal
                                           : ValidationConfig::Grouping::kPerLanguage;
  Output(a.out, AnomaliesToCsv(FlagAnomalies(scores, config)));
  return 0;
}

// --------------------------------------------------------------- mine

struct MineArgs {
  std::string manifest, out, language;
  std::size_t top_k = 10;
};

int RunMine(const Globals& g, const MineArgs& a) {
  const Manifest m = LoadManifest(a.manifest);
  std::string language = a.language;
  if (language.empty() && !m.entries.empty()) {
    language = m.entries.front().language;
    for (const ArticlePair& p : m.entries) {
      if (p.language != language) {
        language.clear();
        break;
      }
    }
  }
  ErrorModel model =
      MineErrorModel(PairsWithHypotheses(m), language, g.Policy(), g.parallelism);
  if (a.top_k > 0 && !model.entries.empty()) model = TopK(model, a.top_k);
  Output(a.out, ErrorModelToJson(model));
  return 0;
}

// ------------------------------------------------------------- inject

struct InjectArgs {
  std::string model, in, out, kinds = "all";
  double rate = 0.0;
  double tolerance = 0.5;
};

int RunInject(const Globals& g, const InjectArgs& a) {
  const ErrorModel model = LoadErrorModel(a.model);
  InjectionConfig config;
  config.target_cer = a.rate;
  config.kinds = KindSet::Parse(a.kinds);
  config.seed = g.seed;
  config.tolerance = a.tolerance;
  config.policy = g.Policy();
  const InjectionResult r = Inject(ReadFile(a.in), model, config);
  Output(a.out, r.noisy_text);
  std::fprintf(stderr, "target_cer=%s achieved_cer=%s edits=%zu%s\n",
               FormatFixed(a.rate, 4).c_str(), FormatFixed(r.achieved_cer, 4).c_str(),
               r.plan.edits.size(), r.off_target ? " off_target" : "");
  return 0;
}

// -------------------------------------------------------------- sweep

struct SweepArgs {
  std::string model, corpus, out_dir;
  std::vector<double> rates = {0, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
  std::vector<std::string> kinds = {"all", "sub", "ins", "del"};
  double tolerance = 0.5;
  bool mt_export = false;
};

int RunSweep(const Globals& g, const SweepArgs& a) {
  const ErrorModel model = LoadErrorModel(a.model);
  std::vector<std::string> corpus;
  std::istringstream lines(ReadFile(a.corpus));
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    corpus.push_back(line);
  }
  SweepConfig config;
  config.rates = a.rates;
  config.kind_sets = ParseKindSets(a.kinds);
  config.seed = g.seed;
  config.parallelism = g.parallelism;
  config.tolerance = a.tolerance;
  config.mt_export = a.mt_export;
  config.policy = g.Policy();
  const std::vector<SweepCell> cells = ocrkit::RunSweep(corpus, model, config, a.out_dir);
  std::string out = CsvRow({"stem", "rate", "kinds", "corpus_micro_cer", "failed_texts"});
  for (const SweepCell& c : cells) {
    out += CsvRow({c.stem, FormatFixed(c.rate, 4), c.kinds.label(),
                   FormatFixed(c.corpus_micro_cer, 4), std::to_string(c.failed_texts)});
  }
  std::cout << out;
  return 0;
}

// ------------------------------------------------------------ augment

struct AugmentArgs {
  std::string op, in, out, script;
  double density = 0.05;
  double angle = 5.0;
  double alpha = 0.5;
  StyleSpec style;
  std::string color = "#000000";
};

Rgb ParseColor(const std::string& s) {
  unsigned r = 0, gr = 0, b = 0;
  if (s.size() != 7 || s[0] != '#' ||
      std::sscanf(s.c_str() + 1, "%2x%2x%2x", &r, &gr, &b) != 3) {
    throw Error(ErrorCode::kInvalidArgument, "color must be #rrggbb, got '" + s + "'");
  }
  return {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(gr),
          static_cast<std::uint8_t>(b)};
}

int RunAugment(const Globals& g, AugmentArgs a) {
  if (a.op == "style") {
    a.style.color = ParseColor(a.color);
    const StyledDocument doc = EmitStyledDocument(ReadFile(a.in), a.style, a.script);
    for (const std::string& w : doc.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    Output(a.out, doc.html);
    return 0;
  }
  const PageImage img = ReadImage(a.in);
  PageImage result;
  if (a.op == "saltpepper") {
    SaltPepperStats stats;
    result = SaltPepper(img, a.density, g.seed, &stats);
    std::fprintf(stderr, "corrupted=%zu of %zu\n", stats.corrupted,
                 static_cast<std::size_t>(img.width()) * img.height());
  } else if (a.op == "skew") {
    result = Skew(img, a.angle);
  } else {
    result = Opacity(img, a.alpha);
  }
  WriteImage(result, a.out);
  return 0;
}

// ----------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string manifest, engine = "mock", out, articles_out, dataset;
  std::string cache_mode = "readwrite";
  std::string engine_name;
  // mock
  std::string noise_model, noise_kinds = "all";
  double noise_cer = 0.0;
  std::string suffix = ".gt.txt";
  // command
  std::vector<std::string> command;
  // http
  std::string url, json_path = "/text", api_key_env;
  std::string language_table;
  std::vector<std::string> options;
  int timeout_ms = 120000;
};

EngineOptions ParseOptions(const std::vector<std::string>& kv) {
  EngineOptions out;
  for (const std::string& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      out[s] = "";
    } else {
      out[s.substr(0, eq)] = s.substr(eq + 1);
    }
  }
  return out;
}

std::shared_ptr<EngineAdapter> MakeEngine(const Globals& g, const EvaluateArgs& a) {
  if (a.engine == "mock") {
    MockEngineConfig c;
    if (!a.engine_name.empty()) c.name = a.engine_name;
    c.transcript_suffix = a.suffix;
    if (!a.noise_model.empty()) c.noise_model = LoadErrorModel(a.noise_model);
    c.noise_cer = a.noise_cer;
    c.noise_kinds = KindSet::Parse(a.noise_kinds);
    c.seed = g.seed;
    return std::make_shared<MockEngine>(std::move(c));
  }
  if (a.engine == "command") {
    CommandEngineConfig c;
    if (!a.engine_name.empty()) c.name = a.engine_name;
    if (!a.command.empty()) c.argv = a.command;
    if (!a.language_table.empty()) c.language_table = a.language_table;
    c.options = ParseOptions(a.options);
    c.timeout = std::chrono::milliseconds(a.timeout_ms);
    return std::make_shared<CommandEngine>(std::move(c));
  }
  HttpEngineConfig c;
  if (!a.engine_name.empty()) c.name = a.engine_name;
  c.url = a.url;
  c.json_path = a.json_path;
  c.api_key_env = a.api_key_env;
  if (!a.language_table.empty()) c.language_table = a.language_table;
  c.options = ParseOptions(a.options);
  c.timeout = std::chrono::milliseconds(a.timeout_ms);
  return std::make_shared<HttpEngine>(std::move(c));
}

int RunEvaluate(const Globals& g, const EvaluateArgs& a) {
  const Manifest m = LoadManifest(a.manifest);
  std::shared_ptr<EngineAdapter> engine;
  const bool replay = a.cache_mode == "replay";
  if (!replay) engine = MakeEngine(g, a);
  if (!g.cache_dir.empty()) {
    const CacheMode mode = replay                       ? CacheMode::kReplay
                           : a.cache_mode == "record" ? CacheMode::kRecord
                                                        : CacheMode::kReadWrite;
    std::string name = a.engine_name;
    if (name.empty()) name = engine ? engine->name() : a.engine;
    engine = std::make_shared<CachingEngine>(engine, TranscriptCache(g.cache_dir),
                                             mode, name);
  } else if (replay) {
    throw Error(ErrorCode::kInvalidArgument, "replay mode needs --cache-dir");
  }
  EvaluationConfig config;
  config.parallelism = g.parallelism;
  config.policy = g.Policy();
  config.dataset = a.dataset;
  const EvaluationResult r = Evaluate(m, *engine, config);
  if (!a.articles_out.empty()) WriteFile(a.articles_out, ArticlesToCsv(r.articles));
  const ReportFormat format = a.out.empty() ? ReportFormat::kCsv : FormatForPath(a.out);
  Output(a.out, RenderReports(r.languages, format));
  return 0;
}

// ------------------------------------------------------------- report

struct ReportArgs {
  std::vector<std::string> in;
  std::string format = "markdown", out, summary_out, groups_out;
};

int RunReport(const Globals&, const ReportArgs& a) {
  std::vector<LanguageReport> reports;
  for (const std::string& path : a.in) {
    std::vector<LanguageReport> more = LoadReports(path);
    reports.insert(reports.end(), more.begin(), more.end());
  }
  const auto format = ParseReportFormat(a.format);
  Output(a.out, RenderReports(reports, *format));
  if (!a.summary_out.empty()) Output(a.summary_out, SummaryToCsv(Summarize(reports)));
  if (!a.groups_out.empty()) Output(a.groups_out, GroupAveragesToCsv(GroupAverages(reports)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ocrkit: OCR evaluation, error mining, noise injection and image augmentation"};
  app.footer(kUnitsNote);
  app.require_subcommand(1);

  Globals g;
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--parallelism", g.parallelism, "Worker threads (>= 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--norm", g.form, "Unicode normalization before scoring")
      ->check(CLI::IsMember({"nfc", "none"}))
      ->capture_default_str();
  app.add_option("--unit", g.unit, "Unit of comparison")
      ->check(CLI::IsMember({"codepoint", "grapheme"}))
      ->capture_default_str();
  app.add_option("--whitespace", g.whitespace, "Whitespace handling")
      ->check(CLI::IsMember({"preserve", "collapse"}))
      ->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "Transcript cache directory");

  auto footer = [](CLI::App* sub) { sub->footer(kUnitsNote); };

  CerArgs cer;
  auto* cer_cmd = app.add_subcommand("cer", "Character error rate of hypothesis text");
  cer_cmd->add_option("--ref", cer.ref, "Reference text file");
  cer_cmd->add_option("--hyp", cer.hyp, "Hypothesis text file");
  cer_cmd->add_option("--manifest", cer.manifest, "JSONL manifest with hypotheses");
  cer_cmd->add_option("--out", cer.out, "Output CSV (default stdout)");
  footer(cer_cmd);

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "Flag annotations with anomalous CER");
  val_cmd->add_option("--manifest", val.manifest)->required();
  val_cmd->add_option("--sigma", val.sigma, "Threshold in standard deviations")
      ->capture_default_str();
  val_cmd->add_option("--side", val.side)
      ->check(CLI::IsMember({"two-sided", "high"}))
      ->capture_default_str();
  val_cmd->add_option("--grouping", val.grouping)
      ->check(CLI::IsMember({"per-language", "global"}))
      ->capture_default_str();
  val_cmd->add_option("--out", val.out, "Anomaly CSV (default stdout)");
  footer(val_cmd);

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Mine an OCR error model from aligned pairs");
  mine_cmd->add_option("--manifest", mine.manifest)->required();
  mine_cmd->add_option("--top-k", mine.top_k, "Keep the k most frequent errors; 0 keeps all")
      ->capture_default_str();
  mine_cmd->add_option("--language", mine.language);
  mine_cmd->add_option("--out", mine.out, "Model JSON (default stdout)");
  footer(mine_cmd);

  InjectArgs inj;
  auto* inj_cmd = app.add_subcommand("inject", "Inject modelled OCR errors into text");
  inj_cmd->add_option("--model", inj.model)->required();
  inj_cmd->add_option("--in", inj.in)->required();
  inj_cmd->add_option("--out", inj.out, "Noisy text (default stdout)");
  inj_cmd->add_option("--rate", inj.rate, "Target CER in percent")
      ->check(CLI::Range(0.0, 100.0))
      ->required();
  inj_cmd->add_option("--kinds", inj.kinds, "all, or a list such as sub,ins")
      ->capture_default_str();
  inj_cmd->add_option("--tolerance", inj.tolerance, "Allowed CER deviation in percent")
      ->capture_default_str();
  footer(inj_cmd);

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand("sweep", "Inject errors over a grid of rates and kinds");
  sw_cmd->add_option("--model", sw.model)->required();
  sw_cmd->add_option("--corpus", sw.corpus, "Text file, one text per line")->required();
  sw_cmd->add_option("--out-dir", sw.out_dir)->required();
  sw_cmd->add_option("--rates", sw.rates, "Target CERs in percent")->delimiter(',')
      ->capture_default_str();
  sw_cmd->add_option("--kinds", sw.kinds, "Kind sets, e.g. all sub ins del ins+del")
      ->capture_default_str();
  sw_cmd->add_option("--tolerance", sw.tolerance)->capture_default_str();
  sw_cmd->add_flag("--mt-export", sw.mt_export, "Also write parallel .noisy/.orig files");
  footer(sw_cmd);

  AugmentArgs aug;
  auto* aug_cmd = app.add_subcommand("augment", "Image noise and styled page rendering");
  aug_cmd->add_option("--op", aug.op)
      ->check(CLI::IsMember({"saltpepper", "skew", "opacity", "style"}))
      ->required();
  aug_cmd->add_option("--in", aug.in, "Input image, or text for --op style")->required();
  aug_cmd->add_option("--out", aug.out, "Output image (.png/.pgm/.ppm) or HTML")->required();
  aug_cmd->add_option("--density", aug.density, "Salt-and-pepper pixel fraction")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  aug_cmd->add_option("--angle", aug.angle, "Counter-clockwise rotation in degrees")
      ->capture_default_str();
  aug_cmd->add_option("--alpha", aug.alpha, "Opacity in [0, 1]")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  aug_cmd->add_option("--script", aug.script, "Script tag choosing default fonts");
  aug_cmd->add_option("--font", aug.style.font_family)->capture_default_str();
  aug_cmd->add_option("--font-size", aug.style.font_size, "Points")->capture_default_str();
  aug_cmd->add_flag("--bold", aug.style.bold);
  aug_cmd->add_flag("--italic", aug.style.italic);
  aug_cmd->add_option("--letter-spacing", aug.style.letter_spacing, "em")
      ->capture_default_str();
  aug_cmd->add_option("--opacity", aug.style.opacity)->capture_default_str();
  aug_cmd->add_option("--color", aug.color, "#rrggbb")->capture_default_str();
  footer(aug_cmd);

  EvaluateArgs ev;
  auto* ev_cmd = app.add_subcommand("evaluate", "Run an OCR engine over a manifest and score it");
  ev_cmd->add_option("--manifest", ev.manifest)->required();
  ev_cmd->add_option("--engine", ev.engine)
      ->check(CLI::IsMember({"mock", "command", "http"}))
      ->capture_default_str();
  ev_cmd->add_option("--engine-name", ev.engine_name, "Label used in reports and cache keys");
  ev_cmd->add_option("--cache-mode", ev.cache_mode)
      ->check(CLI::IsMember({"readwrite", "replay", "record"}))
      ->capture_default_str();
  ev_cmd->add_option("--out", ev.out, "Per-language report (.csv/.json/.md; default stdout)");
  ev_cmd->add_option("--articles-out", ev.articles_out, "Per-article CER CSV");
  ev_cmd->add_option("--dataset", ev.dataset, "Dataset label (default: from manifest)");
  ev_cmd->add_option("--noise-model", ev.noise_model, "mock: error model to inject");
  ev_cmd->add_option("--noise-cer", ev.noise_cer, "mock: target CER in percent");
  ev_cmd->add_option("--noise-kinds", ev.noise_kinds, "mock: error kinds")->capture_default_str();
  ev_cmd->add_option("--transcript-suffix", ev.suffix, "mock: sidecar suffix")
      ->capture_default_str();
  ev_cmd->add_option("--command", ev.command,
                     "command: argv template with {image} and {lang}")
      ->expected(1, 64);
  ev_cmd->add_option("--url", ev.url, "http: endpoint");
  ev_cmd->add_option("--json-path", ev.json_path, "http: JSON pointer to the text")
      ->capture_default_str();
  ev_cmd->add_option("--api-key-env", ev.api_key_env, "http: variable holding the API key");
  ev_cmd->add_option("--language-table", ev.language_table, "tesseract, http or mock");
  ev_cmd->add_option("--option", ev.options, "Engine option key=value (repeatable)");
  ev_cmd->add_option("--timeout-ms", ev.timeout_ms)->capture_default_str();
  footer(ev_cmd);

  ReportArgs rep;
  auto* rep_cmd = app.add_subcommand("report", "Render, summarize and group language reports");
  rep_cmd->add_option("--in", rep.in, "Report CSV or JSON files")->required();
  rep_cmd->add_option("--format", rep.format)
      ->check(CLI::IsMember({"csv", "json", "markdown"}))
      ->capture_default_str();
  rep_cmd->add_option("--out", rep.out, "Rendered report (default stdout)");
  rep_cmd->add_option("--summary-out", rep.summary_out, "Band percentages per engine/dataset");
  rep_cmd->add_option("--groups-out", rep.groups_out, "Mean CER per script group");
  footer(rep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cer_cmd) return RunCer(g, cer);
    if (*val_cmd) return RunValidate(g, val);
    if (*mine_cmd) return RunMine(g, mine);
    if (*inj_cmd) return RunInject(g, inj);
    if (*sw_cmd) return RunSweep(g, sw);
    if (*aug_cmd) return RunAugment(g, aug);
    if (*ev_cmd) return RunEvaluate(g, ev);
    if (*rep_cmd) return RunReport(g, rep);
  } catch (const Error& e) {
    std::fprintf(stderr, "ocrkit: %s: %s\n", std::string(ErrorCodeName(e.code())).c_str(),
                 e.what());
    return ExitCodeFor(e.code());
  } catch (const fs::filesystem_error& e) {
    std::fprintf(stderr, "ocrkit: io: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "ocrkit: %s\n", e.what());
    return 2;
  }
  return 2;
}
