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

#include <askframe/lexicon.hpp>
#include <askframe/morphvar.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace askframe::testing {

inline std::string data_path(const std::string& rel) { return std::string(ASKFRAME_TEST_DATA_DIR) + "/" + rel; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline const Lexicon& lcs_plus() {
  static const Lexicon lex = load_lexicon_file(data_path("lexicon/lcs_plus_seed.tsv"), LexiconFormat::kNormalized);
  return lex;
}
inline const Lexicon& stylus() {
  static const Lexicon lex = load_lexicon_file(data_path("lexicon/stylus_seed.tsv"), LexiconFormat::kNormalized);
  return lex;
}
inline const Lexicon& thesaurus() {
  static const Lexicon lex = load_lexicon_file(data_path("lexicon/thesaurus_seed.txt"), LexiconFormat::kFlatList);
  return lex;
}
inline const VariantTable& variants() {
  static const VariantTable table = load_variants_file(data_path("variants.txt"));
  return table;
}

}  // namespace askframe::testing
