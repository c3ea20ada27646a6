#pragma once

#include <array>
#include <string_view>

namespace evomt {

// The part-of-speech tags understood by the lexicon, tagger and grammar.
inline constexpr std::array<std::string_view, 18> kTagset = {
    "PRP", "DT",  "JJ",  "JJR", "JJS", "NN", "NNS", "NNP", "VB",
    "VBD", "VBZ", "VBG", "VBN", "VBP", "RB", "IN",  "CD",  "SYM",
};

bool is_tag(std::string_view tag);

}  // namespace evomt
