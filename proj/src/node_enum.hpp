#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ifslab/ifs.hpp"

namespace ifslab::detail {

inline std::array<int, 3> letters_of(Alphabet alphabet) {
  return alphabet == Alphabet::binary ? std::array<int, 3>{-1, 1, 0} : std::array<int, 3>{-1, 0, 1};
}

inline std::int64_t ipow_int(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

inline Complex step(Complex sum, int letter, Complex power) {
  if (letter > 0) return sum + power;
  if (letter < 0) return sum - power;
  return sum;
}

// Depth-first walk over the words of `length` letters in lexicographic order.
// Calls visit(index, node) where index is the lexicographic rank.
template <typename Visit>
void walk_suffixes(const std::vector<Complex>& powers, int base, const std::array<int, 3>& letters,
                   int pos, int length, Complex sum, std::int64_t index, Visit& visit) {
  if (pos == length) {
    visit(index, sum);
    return;
  }
  for (int d = 0; d < base; ++d) {
    walk_suffixes(powers, base, letters, pos + 1, length, step(sum, letters[d], powers[pos]),
                  index * base + d, visit);
  }
}

// Splits the enumeration at a prefix length so that the outer loop has enough
// independent blocks; each block is walked in order by one thread.
template <typename MakeVisitor, typename Combine>
void for_each_node_parallel(Complex lambda, int length, Alphabet alphabet, int threads,
                            MakeVisitor make_visitor, Combine combine) {
  const int base = alphabet_size(alphabet);
  const auto letters = letters_of(alphabet);
  std::vector<Complex> powers(length);
  Complex pw(1.0, 0.0);
  for (int j = 0; j < length; ++j) {
    powers[j] = pw;
    pw *= lambda;
  }
  int split = 0;
  while (split < length && ipow_int(base, split) < 256) ++split;
  const std::int64_t blocks = ipow_int(base, split);

#pragma omp parallel num_threads(threads)
  {
    auto visitor = make_visitor();
#pragma omp for schedule(static)
    for (std::int64_t q = 0; q < blocks; ++q) {
      Complex sum(0.0, 0.0);
      std::int64_t rem = q;
      std::int64_t scale = blocks;
      for (int j = 0; j < split; ++j) {
        scale /= base;
        const int d = static_cast<int>(rem / scale);
        rem %= scale;
        sum = step(sum, letters[d], powers[j]);
      }
      walk_suffixes(powers, base, letters, split, length, sum, q, visitor);
    }
#pragma omp critical
    combine(visitor);
  }
}

}  // namespace ifslab::detail
