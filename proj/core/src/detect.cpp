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

#include <askframe/detect.hpp>

#include <algorithm>
#include <array>
#include <unordered_set>

namespace askframe {

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::kDirectVerb: return "direct_verb";
    case Provenance::kVariantMapped: return "variant_mapped";
    case Provenance::kSuffixFallback: return "suffix_fallback";
  }
  return "direct_verb";
}

std::optional<Provenance> parse_provenance(std::string_view s) noexcept {
  for (Provenance p : {Provenance::kDirectVerb, Provenance::kVariantMapped,
                       Provenance::kSuffixFallback})
    if (to_string(p) == s) return p;
  return std::nullopt;
}

std::string_view to_string(ContextTag c) noexcept {
  switch (c) {
    case ContextTag::kFinancial: return "financial";
    case ContextTag::kCredential: return "credential";
    case ContextTag::kLinkClick: return "link_click";
    case ContextTag::kContact: return "contact";
    case ContextTag::kGeneric: return "generic";
  }
  return "generic";
}

std::optional<ContextTag> parse_context(std::string_view s) noexcept {
  for (ContextTag c : {ContextTag::kFinancial, ContextTag::kCredential, ContextTag::kLinkClick,
                       ContextTag::kContact, ContextTag::kGeneric})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::size_t ArgumentSlots::filled() const noexcept {
  std::size_t n = 0;
  if (context && *context != ContextTag::kGeneric) ++n;
  if (target) ++n;
  if (object) ++n;
  return n;
}

double base_confidence(Provenance p) noexcept {
  switch (p) {
    case Provenance::kDirectVerb: return 1.0;
    case Provenance::kVariantMapped: return 0.9;
    case Provenance::kSuffixFallback: return 0.6;
  }
  return 0.0;
}

double slot_fill(const ArgumentSlots& slots) noexcept {
  return (1.0 + static_cast<double>(slots.filled())) / 4.0;
}

namespace {

bool ends_with(std::string_view s, std::string_view suf) {
  return s.size() >= suf.size() && s.substr(s.size() - suf.size()) == suf;
}

std::string_view first_word(std::string_view lemma) {
  return lemma.substr(0, lemma.find(' '));
}

bool participle_form(const Token& t, std::string_view lemma) {
  if (t.lower == first_word(lemma)) return false;
  return !ends_with(t.lower, "ing") && !ends_with(t.lower, "s");
}

}  // namespace

Disambiguation disambiguate_at(std::string_view trigger_lemma, CategorySet candidates,
                               const Clause& clause, std::size_t token_index) {
  const Token* tok = token_index < clause.tokens.size() ? &clause.tokens[token_index] : nullptr;
  bool avoid = tok != nullptr && tok->avoidance_scope;
  auto keep = [&](CategorySet wanted, int rule) -> std::optional<Disambiguation> {
    CategorySet kept = candidates & wanted;
    if (kept.empty()) return std::nullopt;
    return Disambiguation{kept, rule};
  };
  if (clause.mood == Mood::kImperative && !avoid)
    if (auto d = keep(CategorySet::asks(), 1)) return *d;
  if (avoid || clause.flags.negated || clause.flags.conditional)
    if (auto d = keep({Category::kLose}, 2)) return *d;
  if (clause.mood != Mood::kImperative && tok != nullptr && participle_form(*tok, trigger_lemma))
    if (auto d = keep(CategorySet::framings(), 3)) return *d;
  if (clause.mood == Mood::kDeclarative) {
    bool you_before = false;
    for (std::size_t k = 0; k < token_index && k < clause.tokens.size(); ++k)
      if (clause.tokens[k].lower == "you") you_before = true;
    if (you_before)
      if (auto d = keep({Category::kGain}, 4)) return *d;
  }
  if (clause.mood == Mood::kInterrogative)
    if (auto d = keep(CategorySet::asks(), 5)) return *d;
  return {candidates, 6};
}

CategorySet disambiguate(std::string_view trigger_lemma, CategorySet candidates,
                         const Clause& clause, std::size_t token_index) {
  return disambiguate_at(trigger_lemma, candidates, clause, token_index).categories;
}

// ---------------------------------------------------------------------------

namespace {

const std::unordered_set<std::string_view> kFinancialWords = {
    "money",   "cash",     "bank",    "banking",  "payment",  "payments", "fund",
    "funds",   "credit",   "debt",    "debts",    "discount", "prize",    "prizes",
    "reward",  "rewards",  "dollar",  "dollars",  "euro",     "euros",    "gift",
    "wire",    "invoice",  "salary",  "deposit",  "fee",      "fees",     "price",
    "loan",    "loans",    "interest", "refund",  "bitcoin",  "payroll",  "cheque",
    "tax",      "taxes",   "winnings", "lottery",  "inheritance"};
const std::unordered_set<std::string_view> kCredentialWords = {
    "password", "passwords", "account",  "accounts", "login",   "username", "pin",
    "ssn",      "credentials", "passcode", "otp",    "verification"};

int entity_rank(PosTag p) {
  switch (p) {
    case PosTag::kUrl: return 0;
    case PosTag::kEmail: return 1;
    case PosTag::kMoney: return 2;
    case PosTag::kPercent: return 3;
    default: return 4;
  }
}

bool noun_like(const Token& t) {
  if (!t.is_word() || is_function_word(t.lower) || is_auxiliary(t.lower) ||
      is_negator(t.lower) || is_politeness_marker(t.lower))
    return false;
  return t.pos == PosTag::kNoun || t.pos == PosTag::kOther || t.pos == PosTag::kAdj;
}

std::optional<std::string> find_object(std::size_t end, const Clause& c) {
  const std::vector<Token>& toks = c.tokens;
  std::size_t best = toks.size();
  for (std::size_t j = end; j < toks.size(); ++j) {
    if (!toks[j].is_entity()) continue;
    if (best == toks.size() || entity_rank(toks[j].pos) < entity_rank(toks[best].pos)) best = j;
  }
  if (best != toks.size())
    return c.text.substr(toks[best].begin, toks[best].end - toks[best].begin);

  for (std::size_t j = end; j < toks.size(); ++j) {
    const Token& t = toks[j];
    if (t.pos == PosTag::kVerb) return std::nullopt;
    if (t.pos == PosTag::kPunct && (t.lower == "." || t.lower == "?" || t.lower == "!"))
      return std::nullopt;
    if (!noun_like(t)) continue;
    std::size_t last = j;
    while (last + 1 < toks.size() && noun_like(toks[last + 1]) &&
           toks[last + 1].pos != PosTag::kAdj)
      ++last;
    return c.text.substr(t.begin, toks[last].end - t.begin);
  }
  return std::nullopt;
}

std::optional<std::string> find_target(std::size_t begin, std::size_t end, const Clause& c) {
  auto addressee = [&](std::size_t k) {
    const std::string& w = c.tokens[k].lower;
    return w == "you" || w == "me" || w == "us";
  };
  for (std::size_t d = 1; d <= 3; ++d) {
    std::size_t after = end + d - 1;
    if (d <= 2 && after < c.tokens.size() && addressee(after)) return c.tokens[after].text;
    if (begin >= d && addressee(begin - d)) return c.tokens[begin - d].text;
  }
  return std::nullopt;
}

ContextTag find_context(const Clause& c) {
  bool financial = false, link = false, credential = false, contact = false;
  for (const Token& t : c.tokens) {
    switch (t.pos) {
      case PosTag::kMoney:
      case PosTag::kPercent: financial = true; break;
      case PosTag::kUrl: link = true; break;
      case PosTag::kEmail: contact = true; break;
      case PosTag::kNum:
        if (is_phone_like(t.text)) contact = true;
        break;
      default:
        if (kFinancialWords.count(t.lower)) financial = true;
        if (kCredentialWords.count(t.lower)) credential = true;
    }
  }
  if (financial) return ContextTag::kFinancial;
  if (link) return ContextTag::kLinkClick;
  if (credential) return ContextTag::kCredential;
  if (contact) return ContextTag::kContact;
  return ContextTag::kGeneric;
}

}  // namespace

ArgumentSlots extract_arguments(std::size_t trigger_begin, std::size_t trigger_end,
                                const Clause& clause, Category ask_type) {
  ArgumentSlots slots;
  slots.ask_type = ask_type;
  slots.context = find_context(clause);
  slots.target = find_target(trigger_begin, trigger_end, clause);
  slots.object = find_object(trigger_end, clause);
  return slots;
}

// ---------------------------------------------------------------------------

namespace {

struct Hit {
  std::string lemma;
  std::size_t count = 1;  // tokens consumed
  Provenance provenance = Provenance::kDirectVerb;
  CategorySet allowed = CategorySet{Category::kPerform, Category::kGive, Category::kLose,
                                    Category::kGain};
};

bool skip_as_trigger(const Clause& c, std::size_t k) {
  const Token& t = c.tokens[k];
  switch (t.pos) {
    case PosTag::kPron:
    case PosTag::kDet:
    case PosTag::kPrep:
    case PosTag::kNum:
    case PosTag::kUrl:
    case PosTag::kMoney:
    case PosTag::kPercent:
    case PosTag::kEmail:
    case PosTag::kPunct:
      return true;
    default:
      break;
  }
  if (!t.is_word() || is_politeness_marker(t.lower) || is_negator(t.lower) ||
      is_function_word(t.lower))
    return true;
  if (is_auxiliary(t.lower)) {
    // Auxiliary unless it is the only verb of the clause.
    for (std::size_t j = k + 1; j < c.tokens.size(); ++j)
      if (c.tokens[j].pos == PosTag::kVerb || looks_like_verb(c.tokens[j].lower)) return true;
    static const std::unordered_set<std::string_view> kAlwaysAux = {
        "be", "been", "being", "am", "is", "are", "was", "were", "can", "could", "will",
        "would", "shall", "should", "may", "might", "must", "cannot"};
    return kAlwaysAux.count(t.lower) > 0 || t.lower.find('\'') != std::string::npos;
  }
  return false;
}

std::optional<Hit> match_at(const Clause& c, std::size_t k, const Lexicon& lex,
                            const VariantTable& variants, const DetectOptions& opt) {
  const std::vector<Token>& toks = c.tokens;
  const Token& t = toks[k];
  std::vector<std::string> forms = inflection_candidates(t.lower);

  if (t.pos != PosTag::kNoun && t.pos != PosTag::kAdj) {
    std::size_t max_n = std::min(lex.max_lemma_words(), toks.size() - k);
    for (std::size_t n = max_n; n >= 2; --n) {
      std::string rest;
      bool words = true;
      for (std::size_t j = k + 1; j < k + n; ++j) {
        if (!toks[j].is_word()) {
          words = false;
          break;
        }
        rest += ' ';
        rest += toks[j].lower;
      }
      if (!words) continue;
      for (const std::string& f : forms)
        if (lex.contains(f + rest)) return Hit{f + rest, n, Provenance::kDirectVerb};
    }
    for (const std::string& f : forms)
      if (lex.contains(f)) return Hit{f, 1, Provenance::kDirectVerb};
  }

  if (opt.use_variants) {
    Normalization n = normalize(variants, t.lower);
    if (n.source == VariantSource::kTable) {
      bool nominal = variants.has_pos(n.matched_form, WordClass::kNoun) ||
                     variants.has_pos(n.matched_form, WordClass::kAdj) ||
                     variants.has_pos(n.matched_form, WordClass::kAdv);
      for (const std::string& lemma : n.lemmas) {
        if (!lex.contains(lemma)) continue;
        if (lemma == n.matched_form && !nominal) continue;
        Hit h{lemma, 1, Provenance::kVariantMapped};
        if (!opt.variants_for_framings) h.allowed = CategorySet::asks();
        return h;
      }
      return std::nullopt;
    }
  }

  if (opt.use_suffix_fallback && t.pos != PosTag::kAdv) {
    if (auto guess = strip_suffix(t.lower)) {
      if (std::find(forms.begin(), forms.end(), *guess) == forms.end() && lex.contains(*guess))
        return Hit{*guess, 1, Provenance::kSuffixFallback};
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<AskFramingEvent> detect_events(const Clause& clause, const Lexicon& lexicon,
                                           const VariantTable& variants,
                                           const DetectOptions& options) {
  std::vector<AskFramingEvent> events;
  const std::vector<Token>& toks = clause.tokens;
  for (std::size_t k = 0; k < toks.size(); ++k) {
    if (skip_as_trigger(clause, k)) continue;
    std::optional<Hit> hit = match_at(clause, k, lexicon, variants, options);
    if (!hit) continue;
    CategorySet candidates = lexicon.categories_of(hit->lemma) & hit->allowed;
    if (candidates.empty()) continue;
    Disambiguation d = disambiguate_at(hit->lemma, candidates, clause, k);
    bool unresolved = d.rule == 6 && d.categories.size() > 1;
    std::vector<LexiconMatch> matches = lexicon.lookup(hit->lemma);
    std::size_t stop = k + hit->count;
    std::string surface = clause.text.substr(toks[k].begin, toks[stop - 1].end - toks[k].begin);
    for (Category cat : d.categories.members()) {
      AskFramingEvent ev;
      ev.message_id = clause.message_id;
      ev.clause_ordinal = clause.ordinal;
      ev.category = cat;
      ev.trigger.surface = surface;
      ev.trigger.lemma = hit->lemma;
      for (const LexiconMatch& m : matches) {
        if (m.category == cat) {
          ev.trigger.class_id = m.class_id;
          break;
        }
      }
      ev.trigger.token_index = k;
      ev.trigger.token_count = hit->count;
      ev.slots = extract_arguments(k, stop, clause, cat);
      ev.provenance = hit->provenance;
      ev.confidence = base_confidence(hit->provenance) * slot_fill(ev.slots);
      if (unresolved) ev.confidence *= options.ambiguity_penalty;
      ev.confidence = std::clamp(ev.confidence, 0.0, 1.0);
      events.push_back(std::move(ev));
    }
    k = stop - 1;
  }
  return events;
}

}  // namespace askframe
