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

#pragma once

#include <askframe/category.hpp>
#include <askframe/error.hpp>
#include <askframe/pipeline.hpp>

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace askframe {

struct GoldLabel {
  Kind kind = Kind::kAsk;
  Category category = Category::kPerform;
  std::string trigger;

  friend bool operator==(const GoldLabel&, const GoldLabel&) = default;
};

struct GroundTruthRecord {
  std::string message_id;
  std::size_t clause_ordinal = 0;
  // Optional copy of the clause text, used to check alignment with segmentation.
  std::optional<std::string> clause_text;
  std::vector<GoldLabel> labels;
  // The first ask label of this clause is the message's top ask.
  bool top_ask = false;

  friend bool operator==(const GroundTruthRecord&, const GroundTruthRecord&) = default;
};

// Throws ParseError on malformed lines, duplicate (message, clause) records,
// a kind that contradicts the category, top_ask without an ask label, or a
// second top_ask in one message.
std::vector<GroundTruthRecord> load_ground_truth(std::istream& in);
std::vector<GroundTruthRecord> load_ground_truth_file(const std::string& path);
void write_ground_truth(std::ostream& out, const std::vector<GroundTruthRecord>& records);

enum class OutputType { kAsk, kFraming, kTopAsk };
inline constexpr std::array<OutputType, 3> kAllOutputTypes = {OutputType::kAsk, OutputType::kFraming,
                                                               OutputType::kTopAsk};
std::string_view to_string(OutputType t) noexcept;

struct ConfusionCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }
  ConfusionCounts& operator+=(const ConfusionCounts& o) noexcept;
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
  bool precision_undefined = false;  // tp + fp == 0
  bool recall_undefined = false;     // tp + fn == 0

  bool degenerate() const noexcept { return precision_undefined || recall_undefined; }
};

PRF prf(const ConfusionCounts& counts) noexcept;

enum class Granularity { kPerLabel, kPerClause };

struct ScoringOptions {
  bool strict_trigger = false;
  Granularity granularity = Granularity::kPerLabel;
};

struct SystemLabel {
  Category category = Category::kPerform;
  std::string trigger;
};

// One clause (or one message for TopAsk) worth of labels of a single kind.
struct LabelUnit {
  std::vector<SystemLabel> system;
  std::vector<SystemLabel> gold;
};

// Counts for one unit: maximum matching on category (and trigger when strict).
ConfusionCounts score_unit(const LabelUnit& unit, const ScoringOptions& options = {});
// The unit's full label multiset matches.
bool unit_correct(const LabelUnit& unit, const ScoringOptions& options = {});

// Checks that gt covers exactly the clauses of the detections: no unknown
// message, no duplicate record, every clause present, clause text equal when
// recorded. Throws AlignmentError naming the first offending clause id.
class AlignmentError : public Error {
 public:
  AlignmentError(std::string clause_id, const std::string& reason)
      : Error(reason + " at clause " + clause_id), clause_id_(std::move(clause_id)) {}
  const std::string& clause_id() const noexcept { return clause_id_; }

 private:
  std::string clause_id_;
};

void check_alignment(const std::vector<AnalyzedMessage>& system,
                     const std::vector<GroundTruthRecord>& gt);

// Decision units for one output type, in message order then clause order.
std::vector<LabelUnit> label_units(const std::vector<DetectionRecord>& system,
                                   const std::vector<GroundTruthRecord>& gt, OutputType type);

ConfusionCounts score_condition(const std::vector<DetectionRecord>& system,
                                const std::vector<GroundTruthRecord>& gt, OutputType type,
                                const ScoringOptions& options = {});

// Per-decision correctness for McNemar.
std::vector<bool> decision_vector(const std::vector<DetectionRecord>& system,
                                  const std::vector<GroundTruthRecord>& gt, OutputType type,
                                  const ScoringOptions& options = {});

enum class McNemarMethod { kChiSquareCC, kExactBinomial };
std::string_view to_string(McNemarMethod m) noexcept;

struct McNemarResult {
  std::size_t b = 0;
  std::size_t c = 0;
  double statistic = 0.0;
  double p_value = 1.0;
  McNemarMethod method = McNemarMethod::kExactBinomial;
};

// Two-sided exact binomial p-value for k successes out of n at p = 1/2,
// computed as min(1, 2 * P[X <= min(k, n - k)]).
double binomial_two_sided_p(std::size_t n, std::size_t k);
// Upper tail of the chi-square distribution with one degree of freedom.
double chi_square_1df_upper(double x);

// Exact binomial when b + c < exact_below, continuity-corrected chi-square otherwise.
McNemarResult mcnemar_counts(std::size_t b, std::size_t c, std::size_t exact_below = 25);
McNemarResult mcnemar(const std::vector<bool>& correct_a, const std::vector<bool>& correct_b,
                      std::size_t exact_below = 25);

struct ConditionReport {
  OutputType type = OutputType::kAsk;
  ConfusionCounts counts;
  PRF scores;
};

struct EvalReport {
  std::string lexicon_name;
  std::size_t message_count = 0;
  std::size_t clause_count = 0;
  std::array<ConditionReport, 3> conditions;

  const ConditionReport& at(OutputType t) const noexcept {
    return conditions[static_cast<std::size_t>(t)];
  }
};

EvalReport evaluate(std::string lexicon_name, const std::vector<AnalyzedMessage>& system,
                    const std::vector<GroundTruthRecord>& gt, const ScoringOptions& options = {});

struct PairwiseTest {
  std::size_t a = 0;  // indices into Comparison::reports
  std::size_t b = 0;
  OutputType type = OutputType::kAsk;
  McNemarResult result;
  bool significant = false;
};

struct Comparison {
  double alpha = 0.02;
  std::vector<EvalReport> reports;
  std::vector<PairwiseTest> tests;
};

struct CompareSetup {
  const VariantTable* variants = nullptr;
  const Analyzer* analyzer = nullptr;
  DetectOptions detect;
  ScoringOptions scoring;
  double alpha = 0.02;
  unsigned threads = 0;
};

// Segments the corpus once, then runs detection per lexicon over the same
// clauses. Requires at least two lexica.
Comparison compare_lexica(const std::vector<CorpusRecord>& corpus,
                          const std::vector<GroundTruthRecord>& gt,
                          const std::vector<const Lexicon*>& lexica, const CompareSetup& setup);

void write_report_json(std::ostream& out, const Comparison& comparison);
void write_report_text(std::ostream& out, const Comparison& comparison);

}  // namespace askframe
