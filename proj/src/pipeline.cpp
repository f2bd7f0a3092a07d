// Copyright 2026 The farsi-std Authors.
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

#include "farsi/pipeline.hpp"

namespace farsi {

StandardizedTokens standardize_tokens(std::u32string_view text,
                                      const PipelineConfig& config) {
  StandardizedTokens result;
  result.normalized = normalize(text, config.normalization);
  result.tokens = tokenize(result.normalized, config.tokenizer);
  if (config.split_attached) {
    result.tokens = split_attached(result.tokens, config.lexicon, config.known_words);
  }
  if (config.repair_affixes) {
    result.tokens = repair_affixes(result.tokens, config.lexicon);
  }
  if (config.normalization.fix_zwnj) {
    for (Token& t : result.tokens) {
      const std::u32string_view original = std::u32string_view(result.normalized)
                                               .substr(t.span.start, t.span.size());
      if (t.text != original) t.text = fix_zwnj(t.text);
    }
  }
  return result;
}

std::u32string standardize(std::u32string_view text, const PipelineConfig& config) {
  if (!config.repair_affixes && !config.split_attached) {
    return normalize(text, config.normalization);
  }
  const StandardizedTokens st = standardize_tokens(text, config);
  return splice(st.tokens, st.normalized);
}

}  // namespace farsi
