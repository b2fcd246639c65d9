#pragma once

#include "lam/chords.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lam {

// Chord with endpoints replaced by their ranks among all endpoints; lo < hi.
struct RankedChord {
  std::int64_t lo, hi;
};

std::vector<RankedChord> rank_chords(const std::vector<Chord>& chords);

struct LinkScan {
  std::uint64_t count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> examples;  // a few linked index pairs
};

// All-pairs crossing test. The OpenMP version and the serial reference return the
// same count and the same (smallest) example pairs.
LinkScan linked_pairs(const std::vector<RankedChord>& chords, std::size_t max_examples = 8);
LinkScan linked_pairs_serial(const std::vector<RankedChord>& chords, std::size_t max_examples = 8);

}  // namespace lam
