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

#include <askframe/error.hpp>
#include <askframe/respond.hpp>

#include <algorithm>
#include <fstream>
#include <istream>

#include "strings.hpp"

namespace askframe {

std::string_view to_string(Band b) noexcept {
  switch (b) {
    case Band::kHigh: return "high";
    case Band::kMid: return "mid";
    case Band::kLow: return "low";
  }
  return "low";
}

Band band_of(double confidence, const BandCuts& cuts) noexcept {
  if (confidence >= cuts.high) return Band::kHigh;
  if (confidence >= cuts.mid) return Band::kMid;
  return Band::kLow;
}

bool CategoryPattern::matches(std::optional<Category> c) const noexcept {
  switch (mode) {
    case Mode::kAny: return true;
    case Mode::kPresent: return c.has_value();
    case Mode::kAbsent: return !c.has_value();
    case Mode::kExact: return c.has_value() && *c == category;
  }
  return false;
}

bool ResponseTemplate::is_universal() const noexcept {
  return ask.mode == CategoryPattern::Mode::kAny && framing.mode == CategoryPattern::Mode::kAny &&
         !band && required_slots.empty();
}

double joint_confidence(const TopSelection& selection) noexcept {
  if (!selection.top_ask && !selection.top_framing) return 0.0;
  double c = 1.0;
  if (selection.top_ask) c *= selection.top_ask->event.confidence;
  if (selection.top_framing) c *= selection.top_framing->event.confidence;
  return c;
}

namespace {

// Slots are read from the top ask, or from the top framing for ask-less templates.
const AskFramingEvent* primary_event(const ResponseTemplate& t, const TopSelection& sel) {
  if (t.ask.mode == CategoryPattern::Mode::kAbsent)
    return sel.top_framing ? &sel.top_framing->event : nullptr;
  return sel.top_ask ? &sel.top_ask->event : nullptr;
}

bool slot_present(const AskFramingEvent& e, SlotName s) {
  switch (s) {
    case SlotName::kObject: return e.slots.object.has_value();
    case SlotName::kTarget: return e.slots.target.has_value();
    case SlotName::kContext:
      return e.slots.context.has_value() && *e.slots.context != ContextTag::kGeneric;
  }
  return false;
}

std::optional<Category> category_of(const std::optional<ScoredEvent>& s) {
  if (!s) return std::nullopt;
  return s->event.category;
}

}  // namespace

bool template_applies(const ResponseTemplate& t, const TopSelection& selection, Band band) {
  if (!t.ask.matches(category_of(selection.top_ask))) return false;
  if (!t.framing.matches(category_of(selection.top_framing))) return false;
  if (t.band && *t.band != band) return false;
  if (t.required_slots.empty()) return true;
  const AskFramingEvent* e = primary_event(t, selection);
  if (e == nullptr) return false;
  return std::all_of(t.required_slots.begin(), t.required_slots.end(),
                     [&](SlotName s) { return slot_present(*e, s); });
}

namespace {

constexpr std::string_view kPlaceholders[] = {"trigger", "framing_trigger", "object"};

std::vector<std::string> placeholders_in(std::string_view text, std::size_t line_no,
                                         const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string_view::npos) {
    std::size_t close = text.find('}', pos);
    if (close == std::string_view::npos) throw ParseError("unterminated placeholder", line_no, line);
    std::string name(text.substr(pos + 1, close - pos - 1));
    if (std::find(std::begin(kPlaceholders), std::end(kPlaceholders), name) ==
        std::end(kPlaceholders))
      throw ParseError("unknown placeholder {" + name + "}", line_no, line);
    out.push_back(std::move(name));
    pos = close + 1;
  }
  return out;
}

CategoryPattern parse_pattern(std::string_view field, std::size_t line_no, const std::string& line) {
  CategoryPattern p;
  if (field == "*") return p;
  if (field == "+") {
    p.mode = CategoryPattern::Mode::kPresent;
    return p;
  }
  if (field == "-") {
    p.mode = CategoryPattern::Mode::kAbsent;
    return p;
  }
  auto c = parse_category(field);
  if (!c) throw ParseError("unknown category pattern", line_no, line);
  p.mode = CategoryPattern::Mode::kExact;
  p.category = *c;
  return p;
}

void check_guarantees(const ResponseTemplate& t, std::size_t line_no, const std::string& line) {
  bool needs_object = false;
  for (const std::string& ph : placeholders_in(t.text, line_no, line)) {
    if (ph == "trigger" && !t.ask.guarantees_presence())
      throw ParseError("template " + t.id + ": {trigger} needs a present ask", line_no, line);
    if (ph == "framing_trigger" && !t.framing.guarantees_presence())
      throw ParseError("template " + t.id + ": {framing_trigger} needs a present framing",
                       line_no, line);
    if (ph == "object") needs_object = true;
  }
  if (!needs_object) return;
  bool required = std::find(t.required_slots.begin(), t.required_slots.end(), SlotName::kObject) !=
                  t.required_slots.end();
  bool primary = t.ask.guarantees_presence() ||
                 (t.ask.mode == CategoryPattern::Mode::kAbsent && t.framing.guarantees_presence());
  if (!required || !primary)
    throw ParseError("template " + t.id + ": {object} not guaranteed by required slots", line_no,
                     line);
}

}  // namespace

std::vector<ResponseTemplate> load_templates(std::istream& in) {
  std::vector<ResponseTemplate> out;
  std::string line;
  std::size_t line_no = 0;
  while (detail::read_line(in, line)) {
    ++line_no;
    std::string_view view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;
    auto fields = detail::split(view, '|');
    if (fields.size() < 6) throw ParseError("expected 6 '|'-separated fields", line_no, line);
    // The text field may itself contain '|'.
    std::size_t text_start = 0;
    for (std::size_t i = 0; i < 5; ++i) text_start += fields[i].size() + 1;
    ResponseTemplate t;
    t.id = std::string(detail::trim(fields[0]));
    if (t.id.empty()) throw ParseError("empty template id", line_no, line);
    if (std::any_of(out.begin(), out.end(), [&](const ResponseTemplate& o) { return o.id == t.id; }))
      throw ParseError("duplicate template id", line_no, line);
    t.ask = parse_pattern(detail::trim(fields[1]), line_no, line);
    t.framing = parse_pattern(detail::trim(fields[2]), line_no, line);
    std::string_view band = detail::trim(fields[3]);
    if (band == "high")
      t.band = Band::kHigh;
    else if (band == "mid")
      t.band = Band::kMid;
    else if (band == "low")
      t.band = Band::kLow;
    else if (band != "*")
      throw ParseError("unknown band", line_no, line);
    std::string_view slots = detail::trim(fields[4]);
    if (slots != "-" && !slots.empty()) {
      for (std::string_view s : detail::split(slots, ',')) {
        s = detail::trim(s);
        if (s == "object")
          t.required_slots.push_back(SlotName::kObject);
        else if (s == "target")
          t.required_slots.push_back(SlotName::kTarget);
        else if (s == "context")
          t.required_slots.push_back(SlotName::kContext);
        else
          throw ParseError("unknown slot", line_no, line);
      }
    }
    t.text = std::string(detail::trim(view.substr(text_start)));
    if (t.text.empty()) throw ParseError("empty template text", line_no, line);
    check_guarantees(t, line_no, line);
    out.push_back(std::move(t));
  }
  if (in.bad()) throw Error("read failure while loading templates");
  if (out.empty()) throw Error("empty template file");
  if (std::none_of(out.begin(), out.end(), [](const ResponseTemplate& t) { return t.is_universal(); }))
    throw Error("template set has no universal fallback (ask=*, framing=*, band=*, no slots)");
  return out;
}

std::vector<ResponseTemplate> load_templates_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open template file '" + path + "'");
  try {
    return load_templates(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.reason(), e.line(), e.content());
  }
}

namespace {

void replace_all(std::string& text, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
}

}  // namespace

ResponsePlan generate_response(const TopSelection& selection,
                               const std::vector<ResponseTemplate>& templates,
                               const BandCuts& cuts) {
  ResponsePlan plan;
  plan.message_id = selection.message_id;
  plan.ask = category_of(selection.top_ask);
  plan.framing = category_of(selection.top_framing);
  plan.confidence = joint_confidence(selection);
  plan.band = band_of(plan.confidence, cuts);
  for (const ResponseTemplate& t : templates) {
    if (!template_applies(t, selection, plan.band)) continue;
    std::string text = t.text;
    if (selection.top_ask) replace_all(text, "{trigger}", selection.top_ask->event.trigger.lemma);
    if (selection.top_framing)
      replace_all(text, "{framing_trigger}", selection.top_framing->event.trigger.lemma);
    if (const AskFramingEvent* e = primary_event(t, selection); e && e->slots.object)
      replace_all(text, "{object}", *e->slots.object);
    plan.template_id = t.id;
    plan.rendered_text = std::move(text);
    return plan;
  }
  throw Error("no applicable response template for message '" + selection.message_id + "'");
}

}  // namespace askframe
