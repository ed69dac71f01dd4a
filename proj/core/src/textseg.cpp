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

#include <askframe/textseg.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

#include "strings.hpp"

namespace askframe {

std::string_view to_string(PosTag p) noexcept {
  switch (p) {
    case PosTag::kVerb: return "verb";
    case PosTag::kNoun: return "noun";
    case PosTag::kAdj: return "adj";
    case PosTag::kAdv: return "adv";
    case PosTag::kPron: return "pron";
    case PosTag::kDet: return "det";
    case PosTag::kPrep: return "prep";
    case PosTag::kNum: return "num";
    case PosTag::kUrl: return "url";
    case PosTag::kMoney: return "money";
    case PosTag::kPercent: return "percent";
    case PosTag::kEmail: return "email";
    case PosTag::kPunct: return "punct";
    case PosTag::kOther: return "other";
  }
  return "other";
}

std::string_view to_string(Mood m) noexcept {
  switch (m) {
    case Mood::kImperative: return "imperative";
    case Mood::kInterrogative: return "interrogative";
    case Mood::kDeclarative: return "declarative";
  }
  return "declarative";
}

namespace {

using WordSet = std::unordered_set<std::string_view>;

const WordSet kPronouns = {"i", "me", "you", "he", "him", "she", "it", "we", "us", "they",
                           "them", "myself", "yourself", "yourselves", "himself", "herself",
                           "itself", "ourselves", "themselves", "someone", "anyone",
                           "everyone", "nobody", "somebody", "anybody", "everybody"};
const WordSet kPossessives = {"my", "your", "our", "their", "his", "her", "its"};
const WordSet kDeterminers = {"the", "a",    "an",    "this",  "that", "these", "those",
                              "my",  "your", "our",   "their", "his",  "her",   "its",
                              "each", "every", "some", "any",  "no",   "all",   "both",
                              "another", "either", "neither"};
const WordSet kPrepositions = {"to",      "of",     "in",      "on",     "at",      "by",
                               "for",     "with",   "from",    "into",   "onto",    "about",
                               "over",    "under",  "between", "through", "during", "before",
                               "after",   "within", "without", "until",  "since",   "around",
                               "near",    "across", "against", "upon",   "via",     "per",
                               "below",   "above",  "behind",  "beyond", "toward",  "towards",
                               "among",   "along",  "despite", "except", "inside",  "outside"};
const WordSet kAdverbs = {"now",  "today", "tomorrow", "yesterday", "tonight", "asap",
                          "immediately", "soon", "here", "there", "also", "still", "just",
                          "only", "again", "always", "already", "very", "too", "right",
                          "even", "ever", "quickly", "carefully", "kindly", "please",
                          "then", "instead", "together", "later", "once", "away", "back",
                          "never", "not", "otherwise", "almost", "quite", "rather"};
const WordSet kConjunctions = {"and", "or", "but", "if", "unless", "because", "so", "than",
                               "while", "although", "though", "whether", "nor", "yet"};
const WordSet kAuxiliaries = {"be",     "am",    "is",     "are",   "was",   "were",  "been",
                              "being",  "do",    "does",   "did",   "have",  "has",   "had",
                              "having", "can",   "could",  "will",  "would", "shall", "should",
                              "may",    "might", "must",   "don't", "doesn't", "didn't",
                              "won't",  "can't", "cannot", "isn't", "aren't", "wasn't",
                              "weren't", "haven't", "hasn't", "hadn't", "shouldn't",
                              "wouldn't", "couldn't", "mustn't", "i'm", "you're", "we're",
                              "they're", "it's", "you've", "we've", "i've", "you'll",
                              "we'll", "i'll", "it'll", "you'd", "i'd"};
const WordSet kModals = {"can", "could", "will", "would", "shall", "should", "may", "might",
                         "must", "cannot"};
const WordSet kWhWords = {"what", "who", "whom", "whose", "when", "where", "why", "how",
                          "which"};
const WordSet kPersonal = {"i", "you", "we", "they", "he", "she", "it"};
const WordSet kAvoiders = {"avoid", "avoids", "avoiding", "avoided", "prevent", "prevents",
                           "preventing", "prevented"};
const WordSet kTitleAbbrevs = {"dr", "mr", "mrs", "ms", "st", "jr", "sr", "prof", "mt", "rev"};
const WordSet kOtherAbbrevs = {"etc", "inc", "ltd", "co", "vs", "no", "approx", "dept", "corp",
                               "fig", "ave"};
const WordSet kDotWords = {"a.m.", "p.m.", "e.g.", "i.e.", "u.s."};
const WordSet kCalendar = {"monday",   "tuesday", "wednesday", "thursday", "friday",
                           "saturday", "sunday",  "january",   "february", "march",
                           "april",    "may",     "june",      "july",     "august",
                           "september", "october", "november", "december", "jan",
                           "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept",
                           "oct", "nov", "dec"};
const WordSet kTimeWords = {"tomorrow", "tonight", "today", "noon", "midnight", "morning",
                            "evening", "afternoon", "end", "eod", "close", "friday"};
const WordSet kTimeUnits = {"minute", "minutes", "hour", "hours", "day", "days", "week",
                            "weeks", "month", "months", "hrs", "hr", "mins"};
const WordSet kCurrencyWords = {"eu", "eur", "euro", "euros", "usd", "dollar", "dollars",
                                "gbp", "pounds", "btc", "bitcoin"};

// Common English verbs (base forms); inflections are recognized through
// inflection_candidates().
const WordSet kBaseVerbs = {
    "accept",  "access",   "act",      "add",      "agree",    "allow",    "answer",
    "apply",   "approve",  "arrive",   "ask",      "attach",   "attend",   "avoid",
    "be",      "become",   "begin",    "believe",  "bring",    "build",    "buy",
    "call",    "cancel",   "change",   "charge",   "check",    "choose",   "claim",
    "clean",   "click",    "close",    "collect",  "come",     "compare",  "complete",
    "comply",  "confirm",  "contact",  "continue", "copy",     "cost",     "cover",
    "create",  "cut",      "deal",     "decide",   "delete",   "deliver",  "deposit",
    "describe", "destroy", "discuss",  "do",       "donate",   "download", "drink",
    "drive",   "drop",     "eat",      "eliminate", "email",   "end",      "enjoy",
    "enter",   "expect",   "expire",   "explain",  "fail",     "fall",     "feel",
    "fill",    "find",     "finish",   "fix",      "follow",   "forfeit",  "forget",
    "forward", "free",     "get",      "give",     "go",       "grab",     "grant",
    "guarantee", "handle", "happen",   "hate",     "have",     "hear",     "help",
    "hit",     "hold",     "hope",     "identify", "ignore",   "include",  "increase",
    "inform",  "install",  "invest",   "invite",   "join",     "keep",     "know",
    "land",    "learn",    "leave",    "let",      "like",     "listen",   "live",
    "load",    "lock",     "log",      "look",     "lose",     "love",     "make",
    "manage",  "meet",     "miss",     "move",     "need",     "notice",   "notify",
    "obtain",  "offer",    "open",     "order",    "owe",      "paste",    "pay",
    "pick",    "place",    "plan",     "play",     "prefer",   "prepare",  "print",
    "process", "protect",  "provide",  "purchase", "put",      "reach",    "read",
    "receive", "recover",  "redeem",   "refer",    "register", "release",  "remain",
    "remember", "remove",  "renew",    "repair",   "reply",    "report",   "request",
    "require", "reset",    "respond",  "restore",  "return",   "review",   "run",
    "save",    "say",      "see",      "seem",     "select",   "sell",     "send",
    "serve",   "set",      "share",    "ship",     "show",     "sign",     "sit",
    "speak",   "spend",    "start",    "stay",     "steal",    "stop",     "submit",
    "suffer",  "suspend",  "take",     "talk",     "tell",     "thank",    "think",
    "threaten", "transfer", "travel",  "try",      "turn",     "understand", "unlock",
    "update",  "upgrade",  "use",      "validate", "verify",   "visit",    "wait",
    "want",    "warn",     "wire",     "withdraw", "work",     "worry",    "write"};

const WordSet kEdIngStoplist = {
    "morning", "evening", "nothing",  "something", "anything", "everything", "thing",
    "things",  "during",  "building", "meeting",   "ceiling",  "king",       "ring",
    "string",  "spring",  "wedding",  "sibling",   "pudding",  "wing",       "bed",
    "red",     "shed",    "hundred",  "indeed",    "sled",     "breed",      "weed",
    "need",    "feed",    "seed",     "speed",     "greed",    "bread",      "dead",
    "head",    "lead",    "thread",   "sacred",    "wicked",   "naked",      "kindred",
    "interesting", "amazing", "boring", "painting", "clothing", "ceiling", "ending",
    "heading", "pending", "funding", "parking",   "shipping", "banking",    "housing"};

const WordSet kAdverbLyStoplist = {"apply", "reply",  "supply", "comply", "rely", "imply",
                                   "multiply", "family", "ally", "rally", "tally", "bully",
                                   "fly", "july", "italy", "belly", "jelly", "holly"};

bool contains(const WordSet& set, std::string_view w) { return set.count(w) > 0; }

bool is_alpha(unsigned char c) { return std::isalpha(c) != 0 || c >= 0x80; }
bool is_digit(unsigned char c) { return std::isdigit(c) != 0; }
bool is_alnum(unsigned char c) { return is_alpha(c) || is_digit(c); }

bool istarts_with(std::string_view s, std::size_t at, std::string_view prefix) {
  if (s.size() - at < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(s[at + i])) != prefix[i]) return false;
  return true;
}

// Normalizes typographic apostrophes so that "don’t" matches "don't".
std::string lower_form(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text.compare(i, 3, "\xE2\x80\x99") == 0) {
      out.push_back('\'');
      i += 2;
      continue;
    }
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
  }
  return out;
}

// UTF-8 punctuation that must not glue into words: dashes, quotes other than
// the right single quote, ellipsis, bullets.
std::size_t utf8_punct_len(std::string_view s, std::size_t i) {
  if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
      static_cast<unsigned char>(s[i + 1]) == 0x80) {
    unsigned char c = static_cast<unsigned char>(s[i + 2]);
    if (c != 0x99 && (c <= 0xA2 || c == 0xA6)) return 3;
  }
  return 0;
}

bool is_euro(std::string_view s, std::size_t i) { return s.compare(i, 3, "\xE2\x82\xAC") == 0; }
bool is_pound(std::string_view s, std::size_t i) { return s.compare(i, 2, "\xC2\xA3") == 0; }

struct RawToken {
  std::size_t begin;
  std::size_t end;
  PosTag pos;
  bool newline_before;
};

constexpr std::string_view kTrailingPunct = ".,;:!?)]}\"'>";

std::size_t scan_number(std::string_view s, std::size_t i) {
  while (i < s.size()) {
    if (is_digit(static_cast<unsigned char>(s[i]))) {
      ++i;
    } else if ((s[i] == ',' || s[i] == '.' || s[i] == ':' || s[i] == '-' || s[i] == '/') &&
               i + 1 < s.size() && is_digit(static_cast<unsigned char>(s[i + 1]))) {
      ++i;
    } else {
      break;
    }
  }
  return i;
}

std::size_t scan_letters(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

// Currency word after a number, glued ("1.7Eu") or after one space ("1M Eu").
std::size_t scan_currency(std::string_view s, std::size_t i) {
  std::size_t j = i;
  if (j < s.size() && s[j] == ' ') ++j;
  std::size_t e = scan_letters(s, j);
  if (e == j) return i;
  if (e < s.size() && is_alnum(static_cast<unsigned char>(s[e]))) return i;
  std::string word = detail::to_lower(s.substr(j, e - j));
  return contains(kCurrencyWords, word) ? e : i;
}

PosTag word_pos(std::string_view lower) {
  if (contains(kPronouns, lower)) return PosTag::kPron;
  if (contains(kDeterminers, lower)) return PosTag::kDet;
  if (contains(kPrepositions, lower)) return PosTag::kPrep;
  if (contains(kAdverbs, lower)) return PosTag::kAdv;
  if (contains(kConjunctions, lower) || contains(kWhWords, lower)) return PosTag::kOther;
  if (looks_like_verb(lower)) return PosTag::kVerb;
  if (lower.size() >= 5 && lower.substr(lower.size() - 2) == "ly" &&
      !contains(kAdverbLyStoplist, lower))
    return PosTag::kAdv;
  return PosTag::kOther;
}

std::vector<RawToken> tokenize(std::string_view s) {
  std::vector<RawToken> out;
  bool newline = false;
  std::size_t i = 0;
  auto emit = [&](std::size_t b, std::size_t e, PosTag pos) {
    out.push_back({b, e, pos, newline});
    newline = false;
    i = e;
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      if (c == '\n') newline = true;
      ++i;
      continue;
    }
    bool boundary = i == 0 || !is_alnum(static_cast<unsigned char>(s[i - 1]));

    if (boundary && (istarts_with(s, i, "http://") || istarts_with(s, i, "https://") ||
                     istarts_with(s, i, "www."))) {
      std::size_t e = i;
      while (e < s.size() && !std::isspace(static_cast<unsigned char>(s[e]))) ++e;
      while (e > i && kTrailingPunct.find(s[e - 1]) != std::string_view::npos) --e;
      emit(i, e, PosTag::kUrl);
      continue;
    }

    if (is_alnum(c) && c < 0x80) {
      std::size_t e = i;
      while (e < s.size() && (std::isalnum(static_cast<unsigned char>(s[e])) ||
                              std::string_view("._%+-@").find(s[e]) != std::string_view::npos))
        ++e;
      std::string_view chunk = s.substr(i, e - i);
      std::size_t at = chunk.find('@');
      if (at != std::string_view::npos && at > 0) {
        while (!chunk.empty() && std::string_view(".-_").find(chunk.back()) != std::string_view::npos)
          chunk.remove_suffix(1);
        std::size_t dot = chunk.find('.', at);
        if (dot != std::string_view::npos && dot > at + 1 && dot + 1 < chunk.size()) {
          emit(i, i + chunk.size(), PosTag::kEmail);
          continue;
        }
      }
    }

    if ((c == '$' || is_euro(s, i) || is_pound(s, i))) {
      std::size_t sym = c == '$' ? 1 : (is_euro(s, i) ? 3 : 2);
      if (i + sym < s.size() && is_digit(static_cast<unsigned char>(s[i + sym]))) {
        std::size_t e = scan_number(s, i + sym);
        std::size_t l = scan_letters(s, e);
        std::string mag = detail::to_lower(s.substr(e, l - e));
        if (mag == "k" || mag == "m" || mag == "b" || mag == "bn" || mag == "mm") e = l;
        emit(i, e, PosTag::kMoney);
        continue;
      }
    }

    if (is_digit(c) && boundary) {
      std::size_t e = scan_number(s, i);
      if (e < s.size() && s[e] == '%') {
        emit(i, e + 1, PosTag::kPercent);
        continue;
      }
      std::size_t l = scan_letters(s, e);
      std::string glued = detail::to_lower(s.substr(e, l - e));
      bool glued_ok = l == s.size() || !is_alnum(static_cast<unsigned char>(s[l]));
      if (!glued.empty() && glued_ok) {
        if (contains(kCurrencyWords, glued)) {
          emit(i, l, PosTag::kMoney);
          continue;
        }
        if (glued == "k" || glued == "m" || glued == "bn") {
          std::size_t cur = scan_currency(s, l);
          emit(i, cur, cur > l ? PosTag::kMoney : PosTag::kNum);
          continue;
        }
        if (glued == "am" || glued == "pm" || glued == "st" || glued == "nd" || glued == "rd" ||
            glued == "th" || glued == "h" || glued == "hrs") {
          emit(i, l, PosTag::kNum);
          continue;
        }
      }
      if (glued.empty()) {
        std::size_t cur = scan_currency(s, e);
        if (cur > e) {
          emit(i, cur, PosTag::kMoney);
          continue;
        }
        std::size_t j = e;
        if (j < s.size() && s[j] == ' ') ++j;
        if (istarts_with(s, j, "percent") &&
            (j + 7 == s.size() || !is_alnum(static_cast<unsigned char>(s[j + 7])))) {
          emit(i, j + 7, PosTag::kPercent);
          continue;
        }
        emit(i, e, PosTag::kNum);
        continue;
      }
    }

    if (std::size_t plen = utf8_punct_len(s, i); plen > 0) {
      emit(i, i + plen, PosTag::kPunct);
      continue;
    }

    if (is_alnum(c)) {
      bool dotted = false;
      if (boundary) {
        for (std::string_view dw : kDotWords) {
          if (istarts_with(s, i, dw) &&
              (i + dw.size() == s.size() || !is_alnum(static_cast<unsigned char>(s[i + dw.size()])))) {
            emit(i, i + dw.size(), PosTag::kAdv);
            dotted = true;
            break;
          }
        }
      }
      if (dotted) continue;
      std::size_t e = i;
      while (e < s.size()) {
        unsigned char d = static_cast<unsigned char>(s[e]);
        if (utf8_punct_len(s, e) > 0) break;
        if (is_alnum(d)) {
          ++e;
        } else if ((d == '\'' || d == '-') && e + 1 < s.size() &&
                   std::isalpha(static_cast<unsigned char>(s[e + 1])) && e > i) {
          ++e;
        } else {
          break;
        }
      }
      std::string lower = lower_form(s.substr(i, e - i));
      bool numeric = std::all_of(lower.begin(), lower.end(),
                                 [](unsigned char ch) { return std::isdigit(ch) != 0; });
      emit(i, e, numeric ? PosTag::kNum : word_pos(lower));
      continue;
    }

    // Everything else is a one-byte (or one code point) punctuation token.
    std::size_t len = 1;
    if (c >= 0xC0) len = c >= 0xF0 ? 4 : c >= 0xE0 ? 3 : 2;
    emit(i, std::min(s.size(), i + len), PosTag::kPunct);
  }
  return out;
}

bool has_word(const std::vector<RawToken>& toks, std::size_t b, std::size_t e, std::string_view s) {
  for (std::size_t k = b; k < e; ++k) {
    PosTag p = toks[k].pos;
    if (p == PosTag::kPunct || p == PosTag::kNum || p == PosTag::kUrl || p == PosTag::kMoney ||
        p == PosTag::kPercent || p == PosTag::kEmail)
      continue;
    std::string_view text = s.substr(toks[k].begin, toks[k].end - toks[k].begin);
    if (std::any_of(text.begin(), text.end(), [](unsigned char ch) { return is_alpha(ch); }))
      return true;
  }
  return false;
}

bool is_terminator(std::string_view t) { return t == "." || t == "!" || t == "?"; }
bool is_closer(std::string_view t) {
  return t == ")" || t == "]" || t == "\"" || t == "'" || t == "\xE2\x80\x9D" ||
         t == "\xE2\x80\x99";
}

bool starts_upper(std::string_view t) {
  return !t.empty() && std::isupper(static_cast<unsigned char>(t.front())) != 0;
}

struct Span {
  std::size_t begin;  // token index
  std::size_t end;
  bool coordinated = false;
};

std::vector<Span> sentence_spans(const std::vector<RawToken>& toks, std::string_view s) {
  std::vector<Span> out;
  auto text = [&](std::size_t k) { return s.substr(toks[k].begin, toks[k].end - toks[k].begin); };
  std::size_t start = 0;
  std::size_t k = 0;
  while (k < toks.size()) {
    if (k > start && toks[k].newline_before) {
      out.push_back({start, k});
      start = k;
    }
    std::string_view t = text(k);
    bool brk = false;
    if (is_terminator(t)) {
      brk = true;
      if (t == "." && k > start) {
        std::string prev = lower_form(text(k - 1));
        bool next_upper = k + 1 < toks.size() && starts_upper(text(k + 1));
        if (contains(kTitleAbbrevs, prev)) brk = false;
        if (contains(kOtherAbbrevs, prev) && !next_upper) brk = false;
        if (prev.size() == 1 && starts_upper(text(k - 1)) && toks[k - 1].end == toks[k].begin &&
            next_upper && toks[k - 1].pos != PosTag::kNum)
          brk = false;
      }
      if (k + 1 < toks.size() && toks[k + 1].newline_before) brk = true;
      if (brk) {
        while (k + 1 < toks.size() && !toks[k + 1].newline_before &&
               (is_terminator(text(k + 1)) || is_closer(text(k + 1))))
          ++k;
      }
    } else if (contains(kDotWords, lower_form(t)) && k + 1 < toks.size() &&
               !toks[k + 1].newline_before) {
      std::string lower = lower_form(t);
      std::string next = lower_form(text(k + 1));
      brk = (lower == "a.m." || lower == "p.m.") && starts_upper(text(k + 1)) &&
            !contains(kCalendar, next);
    }
    ++k;
    if (brk) {
      out.push_back({start, k});
      start = k;
    }
  }
  if (start < toks.size()) out.push_back({start, toks.size()});
  return out;
}

bool verb_at(const std::vector<RawToken>& toks, std::size_t k, std::string_view s) {
  if (k > 0 && toks[k - 1].pos == PosTag::kDet) return false;
  if (toks[k].pos == PosTag::kVerb) return true;
  if (toks[k].pos != PosTag::kOther && toks[k].pos != PosTag::kAdv) return false;
  return looks_like_verb(lower_form(s.substr(toks[k].begin, toks[k].end - toks[k].begin)));
}

bool span_has_verb(const std::vector<RawToken>& toks, std::size_t b, std::size_t e,
                   std::string_view s) {
  for (std::size_t k = b; k < e; ++k)
    if (verb_at(toks, k, s)) return true;
  return false;
}

// The right conjunct opens a verb phrase or a pronoun-subject clause.
bool opens_predicate(const std::vector<RawToken>& toks, std::size_t b, std::size_t e,
                     std::string_view s) {
  std::size_t k = b;
  auto lower = [&](std::size_t i) {
    return lower_form(s.substr(toks[i].begin, toks[i].end - toks[i].begin));
  };
  while (k < e && (toks[k].pos == PosTag::kAdv || lower(k) == "else" || is_negator(lower(k))))
    ++k;
  if (k < e && toks[k].pos == PosTag::kPron) ++k;
  while (k < e && toks[k].pos == PosTag::kAdv) ++k;
  return k < e && verb_at(toks, k, s);
}

std::vector<Span> coordination_split(const std::vector<RawToken>& toks, Span sent,
                                     std::string_view s) {
  std::vector<Span> out;
  std::size_t cur = sent.begin;
  for (std::size_t k = sent.begin + 1; k + 1 < sent.end; ++k) {
    std::string lower = lower_form(s.substr(toks[k].begin, toks[k].end - toks[k].begin));
    if (lower != "or" && lower != "and") continue;
    if (span_has_verb(toks, cur, k, s) && opens_predicate(toks, k + 1, sent.end, s)) {
      out.push_back({cur, k, cur != sent.begin});
      cur = k;
    }
  }
  out.push_back({cur, sent.end, cur != sent.begin});
  return out;
}

}  // namespace

bool Token::is_word() const noexcept {
  switch (pos) {
    case PosTag::kPunct:
    case PosTag::kNum:
    case PosTag::kUrl:
    case PosTag::kMoney:
    case PosTag::kPercent:
    case PosTag::kEmail:
      return false;
    default:
      return std::any_of(lower.begin(), lower.end(), [](unsigned char c) { return is_alpha(c); });
  }
}

bool is_phone_like(std::string_view text) noexcept {
  std::size_t digits = 0;
  for (unsigned char c : text) {
    if (std::isdigit(c))
      ++digits;
    else if (c != '-' && c != '.' && c != ' ' && c != '(' && c != ')' && c != '+')
      return false;
  }
  return digits >= 7 && text.find('-') != std::string_view::npos;
}

bool is_auxiliary(std::string_view lower) noexcept { return contains(kAuxiliaries, lower); }

bool is_politeness_marker(std::string_view lower) noexcept {
  return lower == "please" || lower == "kindly" || lower == "pls" || lower == "plz";
}

bool is_negator(std::string_view lower) noexcept {
  if (lower == "not" || lower == "never" || lower == "cannot") return true;
  return lower.size() > 3 && lower.substr(lower.size() - 3) == "n't";
}

bool is_function_word(std::string_view lower) noexcept {
  return contains(kConjunctions, lower) || contains(kWhWords, lower);
}

bool looks_like_verb(std::string_view lower) noexcept {
  if (lower.empty()) return false;
  if (contains(kAuxiliaries, lower)) return true;
  if (contains(kEdIngStoplist, lower)) return false;
  for (const std::string& cand : inflection_candidates(lower))
    if (contains(kBaseVerbs, cand)) return true;
  auto ends = [&](std::string_view suf) {
    return lower.size() >= suf.size() + 3 && lower.substr(lower.size() - suf.size()) == suf;
  };
  return ends("ed") || ends("ing");
}

// ---------------------------------------------------------------------------

Message RuleAnalyzer::segment(std::string_view message_id, std::string_view raw_text) const {
  Message msg;
  msg.message_id = std::string(message_id);
  msg.raw_text = std::string(raw_text);
  std::vector<RawToken> toks = tokenize(raw_text);
  if (toks.empty()) return msg;

  std::vector<Span> spans;
  for (const Span& sent : sentence_spans(toks, raw_text)) {
    for (const Span& part : coordination_split(toks, sent, raw_text)) {
      if (!spans.empty() && !has_word(toks, part.begin, part.end, raw_text)) {
        spans.back().end = part.end;
        continue;
      }
      spans.push_back(part);
    }
  }

  for (const Span& span : spans) {
    Clause clause;
    clause.message_id = msg.message_id;
    clause.ordinal = msg.clauses.size();
    clause.offset = toks[span.begin].begin;
    std::size_t stop = toks[span.end - 1].end;
    clause.text = std::string(raw_text.substr(clause.offset, stop - clause.offset));
    clause.coordinated = span.coordinated;
    for (std::size_t k = span.begin; k < span.end; ++k) {
      Token t;
      t.text = std::string(raw_text.substr(toks[k].begin, toks[k].end - toks[k].begin));
      t.lower = lower_form(t.text);
      t.pos = toks[k].pos;
      t.begin = toks[k].begin - clause.offset;
      t.end = toks[k].end - clause.offset;
      clause.tokens.push_back(std::move(t));
    }
    msg.clauses.push_back(std::move(clause));
  }
  return msg;
}

namespace {

bool is_closed_class(PosTag p) {
  return p == PosTag::kPron || p == PosTag::kDet || p == PosTag::kPrep || p == PosTag::kPunct ||
         p == PosTag::kNum || p == PosTag::kUrl || p == PosTag::kMoney ||
         p == PosTag::kPercent || p == PosTag::kEmail;
}

bool lexicon_has_word(const Lexicon& lex, std::string_view lower, const Token* next) {
  for (const std::string& cand : inflection_candidates(lower)) {
    if (lex.contains(cand)) return true;
    if (next != nullptr && lex.contains(cand + " " + next->lower)) return true;
  }
  return false;
}

CategorySet trigger_categories(const Lexicon& lex, const VariantTable& variants,
                               std::string_view lower) {
  CategorySet out;
  for (const std::string& cand : inflection_candidates(lower)) out = out | lex.categories_of(cand);
  Normalization n = normalize(variants, lower);
  if (n.source == VariantSource::kTable)
    for (const std::string& lemma : n.lemmas) out = out | lex.categories_of(lemma);
  return out;
}

bool known_base_form(const Lexicon& lex, const VariantTable& variants, const Token& t,
                     const Token* next) {
  if (lex.contains(t.lower) || variants.is_verb(t.lower)) return true;
  return next != nullptr && lex.contains(t.lower + " " + next->lower);
}

bool is_time_expression(const Token& t) {
  if (t.pos == PosTag::kNum) return true;
  if (t.lower == "a.m." || t.lower == "p.m.") return true;
  return contains(kCalendar, t.lower) || contains(kTimeWords, t.lower);
}

bool has_deadline(const std::vector<Token>& toks) {
  for (std::size_t k = 0; k < toks.size(); ++k) {
    const std::string& w = toks[k].lower;
    if (w == "asap" || w == "immediately" || w == "urgently") return true;
    const Token* next = k + 1 < toks.size() ? &toks[k + 1] : nullptr;
    if (next == nullptr) continue;
    if ((w == "by" || w == "before" || w == "until") && is_time_expression(*next)) return true;
    if ((w == "by" || w == "before") && (next->lower == "the" || next->lower == "this") &&
        k + 2 < toks.size() && is_time_expression(toks[k + 2]))
      return true;
    if ((w == "within" || w == "in") && next->pos == PosTag::kNum && k + 2 < toks.size() &&
        contains(kTimeUnits, toks[k + 2].lower))
      return true;
    if (w == "within" && contains(kTimeUnits, next->lower)) return true;
  }
  return false;
}

Mood find_mood(const Clause& c, const Lexicon& lex, const VariantTable& variants) {
  const std::vector<Token>& toks = c.tokens;
  for (auto it = toks.rbegin(); it != toks.rend(); ++it) {
    if (it->pos != PosTag::kPunct || is_closer(it->lower)) continue;
    if (it->lower == "?") return Mood::kInterrogative;
    break;
  }
  std::size_t k = 0;
  auto skippable = [&](const Token& t) {
    if (t.pos == PosTag::kPunct) return true;
    if (is_politeness_marker(t.lower)) return true;
    if (t.lower == "or" || t.lower == "and" || t.lower == "then" || t.lower == "so" ||
        t.lower == "just" || t.lower == "now")
      return true;
    return t.pos == PosTag::kAdv && t.lower != "not";
  };
  while (k < toks.size() && skippable(toks[k])) ++k;
  if (k < toks.size()) {
    const std::string& w = toks[k].lower;
    std::size_t head = k;
    if (w == "don't" || w == "never") {
      head = k + 1;
    } else if (w == "do" && k + 1 < toks.size() && toks[k + 1].lower == "not") {
      head = k + 2;
    }
    if (head < toks.size()) {
      const Token* next = head + 1 < toks.size() ? &toks[head + 1] : nullptr;
      if (head > k && (toks[head].lower == "be" || toks[head].lower == "let"))
        return Mood::kImperative;
      if (toks[head].pos == PosTag::kVerb && known_base_form(lex, variants, toks[head], next))
        return Mood::kImperative;
    }
    if (k + 1 < toks.size()) {
      const std::string& n = toks[k + 1].lower;
      if (contains(kAuxiliaries, w) && (contains(kPersonal, n) || contains(kPossessives, n)))
        return Mood::kInterrogative;
      if (contains(kWhWords, w) && contains(kAuxiliaries, n)) return Mood::kInterrogative;
    }
  }
  return Mood::kDeclarative;
}

bool scope_stop(const Token& t) {
  return t.lower == "," || t.lower == ";" || t.lower == ":" || t.lower == "but";
}

}  // namespace

Clause RuleAnalyzer::tag(Clause clause, const Lexicon& lexicon,
                         const VariantTable& variants) const {
  std::vector<Token>& toks = clause.tokens;
  for (std::size_t k = 0; k < toks.size(); ++k) {
    Token& t = toks[k];
    t.negation_scope = false;
    t.avoidance_scope = false;
    if (is_closed_class(t.pos) || !t.is_word() || is_politeness_marker(t.lower) ||
        is_auxiliary(t.lower) || is_negator(t.lower))
      continue;
    const Token* next = k + 1 < toks.size() ? &toks[k + 1] : nullptr;
    bool after_det = k > 0 && toks[k - 1].pos == PosTag::kDet;
    if (lexicon_has_word(lexicon, t.lower, next)) {
      t.pos = after_det ? PosTag::kNoun : PosTag::kVerb;
      continue;
    }
    Normalization n = normalize(variants, t.lower);
    if (n.source == VariantSource::kTable) {
      bool verb_form = variants.is_verb(n.matched_form);
      t.pos = verb_form && !after_det ? PosTag::kVerb
              : variants.has_pos(n.matched_form, WordClass::kAdj) ? PosTag::kAdj
              : variants.has_pos(n.matched_form, WordClass::kAdv) ? PosTag::kAdv
                                                                  : PosTag::kNoun;
    } else if (t.pos == PosTag::kVerb && after_det) {
      t.pos = PosTag::kNoun;
    }
  }

  bool negated = false;
  bool avoidance = false;
  for (std::size_t k = 0; k < toks.size(); ++k) {
    bool negator = is_negator(toks[k].lower);
    bool avoider = contains(kAvoiders, toks[k].lower);
    if (!negator && !avoider) continue;
    for (std::size_t j = k + 1; j < toks.size() && !scope_stop(toks[j]); ++j) {
      Token& t = toks[j];
      if (negator) {
        t.negation_scope = true;
        if (t.pos == PosTag::kVerb || looks_like_verb(t.lower)) negated = true;
        if (t.is_word() &&
            trigger_categories(lexicon, variants, t.lower).contains(Category::kLose))
          t.avoidance_scope = true;
      }
      if (avoider) t.avoidance_scope = true;
      avoidance = avoidance || t.avoidance_scope;
    }
  }

  bool conditional = clause.coordinated && !toks.empty() && toks.front().lower == "or";
  for (std::size_t k = 0; k < toks.size(); ++k) {
    const std::string& w = toks[k].lower;
    if (w == "if" || w == "unless" || w == "otherwise") conditional = true;
    if (w == "or" && k + 1 < toks.size() && toks[k + 1].lower == "else") conditional = true;
  }

  clause.flags.negated = negated;
  clause.flags.avoidance_scope = avoidance;
  clause.flags.conditional = conditional;
  clause.flags.deadline = has_deadline(toks);
  clause.mood = find_mood(clause, lexicon, variants);
  return clause;
}

Message Analyzer::analyze(std::string_view message_id, std::string_view raw_text,
                          const Lexicon& lexicon, const VariantTable& variants) const {
  Message msg = segment(message_id, raw_text);
  for (Clause& c : msg.clauses) c = tag(std::move(c), lexicon, variants);
  return msg;
}

const Analyzer& default_analyzer() {
  static const RuleAnalyzer analyzer;
  return analyzer;
}

Message segment(std::string_view message_id, std::string_view raw_text) {
  return default_analyzer().segment(message_id, raw_text);
}

Clause tag(Clause clause, const Lexicon& lexicon, const VariantTable& variants) {
  return default_analyzer().tag(std::move(clause), lexicon, variants);
}

}  // namespace askframe
