#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ifslab/numerics.hpp"
#include "ifslab/series.hpp"

namespace ifslab {

/// The three maps z -> -1 + lambda z, lambda z, 1 + lambda z. The enumerator
/// value is the translation, which is also the coefficient the letter
/// contributes to a node.
enum class Letter : std::int8_t { minus = -1, center = 0, plus = 1 };

enum class Alphabet { binary, ternary };

std::string_view to_string(Alphabet alphabet);
Alphabet parse_alphabet(std::string_view text);
int alphabet_size(Alphabet alphabet);

/// Finite itinerary, packed two bits per letter. Up to kMaxLength letters.
class Word {
 public:
  static constexpr int kMaxLength = 32;

  Word() = default;
  explicit Word(Alphabet alphabet) : binary_(alphabet == Alphabet::binary) {}
  Word(std::initializer_list<Letter> letters, Alphabet alphabet = Alphabet::ternary);

  /// "+-O+" style text; 'O' or '0' is the center letter.
  static Word parse(std::string_view text, Alphabet alphabet = Alphabet::ternary);

  /// Word of `length` letters from the coefficient signs (-1, 0, +1).
  static Word from_signs(std::span<const int> signs, Alphabet alphabet = Alphabet::ternary);

  int size() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  bool binary() const noexcept { return binary_; }
  Alphabet alphabet() const noexcept { return binary_ ? Alphabet::binary : Alphabet::ternary; }

  Letter operator[](int i) const;
  void push_back(Letter letter);

  /// First `length` letters.
  Word prefix(int length) const;

  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t length_ = 0;
  bool binary_ = false;
};

/// Disk of the instar with a given itinerary: center is the node, radius
/// |lambda|^{|w|} / (1 - |lambda|).
struct NodalDisk {
  Word word;
  Disk disk;

  Complex node() const { return disk.center; }
};

/// Radius of the disk D_R containing both attractors, R = 1 / (1 - |lambda|).
double containing_radius(Complex lambda);

/// Radius of a nodal disk whose word has `length` letters.
double nodal_radius(Complex lambda, int length);

Complex apply_map(Letter letter, Complex lambda, Complex z);

/// sum_j a_j lambda^j over the letters of `word`.
Complex node(const Word& word, Complex lambda);

/// Deepest level accepted by instar_disks / attractor_sample.
int max_level(Alphabet alphabet);

/// All nodal disks of the instar at `level` (words of length level + 1) in
/// lexicographic order, minus < center < plus, first letter most significant.
/// Throws ErrorKind::level_too_deep past max_level.
std::vector<NodalDisk> instar_disks(int level, Complex lambda, Alphabet alphabet, int threads = 1);

/// Nodes of all words of length depth + 1, in the same order as instar_disks.
PointSet attractor_sample(Complex lambda, int depth, Alphabet alphabet, int threads = 1);

/// Smallest gap |center - nu| - (radius + nodal radius) over the nodes nu of the
/// level-`level` instar, skipping nodes within `exclude_tol` of `exclude`.
struct InstarGap {
  double gap = 0.0;
  Complex nearest{};
  std::int64_t skipped = 0;
};
InstarGap instar_gap(Complex lambda, int level, Alphabet alphabet, Disk probe, Complex exclude,
                     double exclude_tol, int threads = 1);

/// Residuals of the similarity about an overlap point xi between the nodal
/// disks of a|l+n+kp and a|l+n.
struct SelfSimResidual {
  double center = 0.0;  ///< |lambda^{-kp}(nu_{a|l+n+kp} - xi) - (nu_{a|l+n} - xi)|
  double radius = 0.0;  ///< | |lambda|^{-kp} rho_{l+n+kp} - rho_{l+n} |
};

/// Throws ErrorKind::invalid_argument if `a_word` is shorter than l + n + kp + 1
/// letters or disagrees with a nonzero coefficient of f.
SelfSimResidual check_overlap_selfsim(const RationalTypeSeries& f, Complex lambda, Complex xi,
                                      const Word& a_word, int n, int k);

/// The itinerary a with a_j = c_j where c_j != 0 and a_j = zero_signs[i] at
/// the i-th zero position, truncated to `length` letters.
Word overlap_itinerary(const RationalTypeSeries& f, std::span<const int> zero_signs, int length);

/// The overlap point sum_i zero_signs[i] lambda^{z_i} matching overlap_itinerary.
Complex overlap_point(const RationalTypeSeries& f, std::span<const int> zero_signs, Complex lambda);

}  // namespace ifslab
