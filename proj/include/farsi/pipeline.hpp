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

#ifndef FARSI_PIPELINE_HPP_
#define FARSI_PIPELINE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "farsi/morpho_repair.hpp"
#include "farsi/normalizer.hpp"
#include "farsi/tokenizer.hpp"

namespace farsi {

// The full standardization pipeline: normalize, then tokenize and repair
// affix boundaries.
struct PipelineConfig {
  NormalizationConfig normalization;
  TokenizerConfig tokenizer;
  bool repair_affixes = true;
  bool split_attached = false;
  AffixLexicon lexicon = default_affix_lexicon();
  WordSet known_words;
};

struct StandardizedTokens {
  std::u32string normalized;
  // Spans index `normalized`; rewritten tokens carry their final text.
  std::vector<Token> tokens;
};

// Normalizes `text` and returns its tokens after the optional split and
// repair stages. When ZWNJ cleanup is enabled, joins that break no cursive
// connection are dropped from rewritten tokens.
StandardizedTokens standardize_tokens(std::u32string_view text,
                                      const PipelineConfig& config);

// The canonical form of `text` under `config`.
std::u32string standardize(std::u32string_view text,
                           const PipelineConfig& config = {});

}  // namespace farsi

#endif  // FARSI_PIPELINE_HPP_
