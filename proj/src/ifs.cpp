#include "ifslab/ifs.hpp"

#include <cmath>
#include <limits>

#include "ifslab/errors.hpp"
#include "node_enum.hpp"
#include "parallel.hpp"

namespace ifslab {

std::string_view to_string(Alphabet alphabet) {
  return alphabet == Alphabet::binary ? "binary" : "ternary";
}

Alphabet parse_alphabet(std::string_view text) {
  if (text == "binary" || text == "2") return Alphabet::binary;
  if (text == "ternary" || text == "3") return Alphabet::ternary;
  throw Error(ErrorKind::parse_error, "alphabet must be 'binary' or 'ternary'");
}

int alphabet_size(Alphabet alphabet) { return alphabet == Alphabet::binary ? 2 : 3; }

Word::Word(std::initializer_list<Letter> letters, Alphabet alphabet) : Word(alphabet) {
  for (Letter l : letters) push_back(l);
}

Word Word::parse(std::string_view text, Alphabet alphabet) {
  Word out(alphabet);
  for (char ch : text) {
    switch (ch) {
      case '+': out.push_back(Letter::plus); break;
      case '-': out.push_back(Letter::minus); break;
      case 'O':
      case '0': out.push_back(Letter::center); break;
      default: throw Error(ErrorKind::parse_error, std::string("bad letter '") + ch + "' in word");
    }
  }
  return out;
}

Word Word::from_signs(std::span<const int> signs, Alphabet alphabet) {
  Word out(alphabet);
  for (int s : signs) {
    if (s < -1 || s > 1) throw Error(ErrorKind::invalid_argument, "letter sign out of range");
    out.push_back(static_cast<Letter>(s));
  }
  return out;
}

Letter Word::operator[](int i) const {
  if (i < 0 || i >= length_) throw Error(ErrorKind::invalid_argument, "word index out of range");
  return static_cast<Letter>(static_cast<int>((bits_ >> (2 * i)) & 3U) - 1);
}

void Word::push_back(Letter letter) {
  if (length_ >= kMaxLength) throw Error(ErrorKind::invalid_argument, "word longer than 32 letters");
  if (binary_ && letter == Letter::center) {
    throw Error(ErrorKind::invalid_argument, "binary words cannot use the center letter");
  }
  bits_ |= static_cast<std::uint64_t>(static_cast<int>(letter) + 1) << (2 * length_);
  ++length_;
}

Word Word::prefix(int length) const {
  if (length < 0 || length > length_) throw Error(ErrorKind::invalid_argument, "prefix longer than word");
  Word out(alphabet());
  for (int i = 0; i < length; ++i) out.push_back((*this)[i]);
  return out;
}

std::string Word::to_string() const {
  std::string out;
  for (int i = 0; i < length_; ++i) {
    const Letter l = (*this)[i];
    out.push_back(l == Letter::plus ? '+' : l == Letter::minus ? '-' : 'O');
  }
  return out;
}

double containing_radius(Complex lambda) { return 1.0 / (1.0 - std::abs(lambda)); }

double nodal_radius(Complex lambda, int length) {
  return std::pow(std::abs(lambda), length) * containing_radius(lambda);
}

Complex apply_map(Letter letter, Complex lambda, Complex z) {
  return static_cast<double>(static_cast<int>(letter)) + lambda * z;
}

Complex node(const Word& word, Complex lambda) {
  Complex sum(0.0, 0.0);
  Complex power(1.0, 0.0);
  for (int j = 0; j < word.size(); ++j) {
    sum = detail::step(sum, static_cast<int>(word[j]), power);
    power *= lambda;
  }
  return sum;
}

int max_level(Alphabet alphabet) { return alphabet == Alphabet::binary ? 22 : 14; }

namespace {

void check_level(int level, Alphabet alphabet) {
  if (level < 0) throw Error(ErrorKind::invalid_argument, "level must be nonnegative");
  if (level > max_level(alphabet)) {
    throw Error(ErrorKind::level_too_deep, "level " + std::to_string(level) + " exceeds the " +
                                               std::string(to_string(alphabet)) + " limit of " +
                                               std::to_string(max_level(alphabet)));
  }
}

Word word_at(std::int64_t index, int length, Alphabet alphabet) {
  const int base = alphabet_size(alphabet);
  const auto letters = detail::letters_of(alphabet);
  std::vector<int> signs(length);
  for (int j = length - 1; j >= 0; --j) {
    signs[j] = letters[static_cast<int>(index % base)];
    index /= base;
  }
  return Word::from_signs(signs, alphabet);
}

}  // namespace

PointSet attractor_sample(Complex lambda, int depth, Alphabet alphabet, int threads) {
  check_level(depth, alphabet);
  const int length = depth + 1;
  PointSet out(static_cast<std::size_t>(detail::ipow_int(alphabet_size(alphabet), length)));
  struct Writer {
    PointSet* out;
    void operator()(std::int64_t index, Complex value) { (*out)[index] = value; }
  };
  detail::for_each_node_parallel(
      lambda, length, alphabet, detail::resolve_threads(threads), [&] { return Writer{&out}; },
      [](Writer&) {});
  return out;
}

std::vector<NodalDisk> instar_disks(int level, Complex lambda, Alphabet alphabet, int threads) {
  check_level(level, alphabet);
  const PointSet nodes = attractor_sample(lambda, level, alphabet, threads);
  const double radius = nodal_radius(lambda, level + 1);
  std::vector<NodalDisk> out(nodes.size());
  const auto count = static_cast<std::int64_t>(nodes.size());
#pragma omp parallel for num_threads(detail::resolve_threads(threads)) schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    out[i] = NodalDisk{word_at(i, level + 1, alphabet), Disk{nodes[i], radius}};
  }
  return out;
}

InstarGap instar_gap(Complex lambda, int level, Alphabet alphabet, Disk probe, Complex exclude,
                     double exclude_tol, int threads) {
  check_level(level, alphabet);
  const double reach = probe.radius + nodal_radius(lambda, level + 1);
  struct Best {
    double gap = std::numeric_limits<double>::infinity();
    std::int64_t index = std::numeric_limits<std::int64_t>::max();
    Complex node{};
    std::int64_t skipped = 0;
    Complex center;
    Complex exclude;
    double tol;
    double reach;
    void operator()(std::int64_t i, Complex nu) {
      if (std::abs(nu - exclude) <= tol) {
        ++skipped;
        return;
      }
      const double g = std::abs(center - nu) - reach;
      if (g < gap || (g == gap && i < index)) {
        gap = g;
        index = i;
        node = nu;
      }
    }
  };
  Best total;
  detail::for_each_node_parallel(
      lambda, level + 1, alphabet, detail::resolve_threads(threads),
      [&] { return Best{.center = probe.center, .exclude = exclude, .tol = exclude_tol, .reach = reach}; },
      [&](Best& local) {
        total.skipped += local.skipped;
        if (local.gap < total.gap || (local.gap == total.gap && local.index < total.index)) {
          total.gap = local.gap;
          total.index = local.index;
          total.node = local.node;
        }
      });
  return InstarGap{total.gap, total.node, total.skipped};
}

Word overlap_itinerary(const RationalTypeSeries& f, std::span<const int> zero_signs, int length) {
  const auto zeros = f.zero_positions();
  if (zero_signs.size() != zeros.size()) {
    throw Error(ErrorKind::invalid_argument, "need one sign per zero coefficient");
  }
  Word out(Alphabet::binary);
  std::size_t next_zero = 0;
  for (int j = 0; j < length; ++j) {
    const int c = f.coeff_at(j);
    if (c != 0) {
      out.push_back(static_cast<Letter>(c));
    } else {
      if (next_zero >= zeros.size()) {
        throw Error(ErrorKind::zeros_in_period, "zero coefficient in the periodic block");
      }
      const int s = zero_signs[next_zero++];
      if (s != 1 && s != -1) throw Error(ErrorKind::invalid_argument, "zero signs must be +-1");
      out.push_back(static_cast<Letter>(s));
    }
  }
  return out;
}

Complex overlap_point(const RationalTypeSeries& f, std::span<const int> zero_signs, Complex lambda) {
  const auto zeros = f.zero_positions();
  if (zero_signs.size() != zeros.size()) {
    throw Error(ErrorKind::invalid_argument, "need one sign per zero coefficient");
  }
  Complex xi(0.0, 0.0);
  for (std::size_t i = 0; i < zeros.size(); ++i) xi += static_cast<double>(zero_signs[i]) * ipow(lambda, zeros[i]);
  return xi;
}

SelfSimResidual check_overlap_selfsim(const RationalTypeSeries& f, Complex lambda, Complex xi,
                                      const Word& a_word, int n, int k) {
  const int l = f.preperiod();
  const int p = f.period();
  if (n < 0 || k < 0) throw Error(ErrorKind::invalid_argument, "n and k must be nonnegative");
  const int long_len = l + n + k * p + 1;
  const int short_len = l + n + 1;
  if (a_word.size() < long_len) {
    throw Error(ErrorKind::invalid_argument, "itinerary needs at least " + std::to_string(long_len) + " letters");
  }
  for (int j = 0; j < long_len; ++j) {
    const int c = f.coeff_at(j);
    if (c != 0 && static_cast<int>(a_word[j]) != c) {
      throw Error(ErrorKind::invalid_argument, "itinerary disagrees with a nonzero coefficient at index " +
                                                   std::to_string(j));
    }
  }
  const Complex scale = ipow(lambda, -k * p);
  const Complex big = node(a_word.prefix(long_len), lambda) - xi;
  const Complex small = node(a_word.prefix(short_len), lambda) - xi;
  SelfSimResidual out;
  out.center = std::abs(scale * big - small);
  out.radius = std::abs(std::abs(scale) * nodal_radius(lambda, long_len) - nodal_radius(lambda, short_len));
  return out;
}

}  // namespace ifslab
