#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "ifslab/errors.hpp"
#include "ifslab/ifs.hpp"
#include "support.hpp"

using namespace ifslab;

TEST_CASE("Word") {
  const Word w = Word::parse("+-O+");
  CHECK(w.size() == 4);
  CHECK(w[0] == Letter::plus);
  CHECK(w[1] == Letter::minus);
  CHECK(w[2] == Letter::center);
  CHECK(w.to_string() == "+-O+");
  CHECK(w.prefix(2) == Word::parse("+-"));
  CHECK_THROWS_AS(Word::parse("+O", Alphabet::binary), Error);
  CHECK_THROWS_AS(Word::parse("+x"), Error);
  Word long_word;
  for (int i = 0; i < Word::kMaxLength; ++i) long_word.push_back(Letter::plus);
  CHECK_THROWS_AS(long_word.push_back(Letter::minus), Error);
}

TEST_CASE("apply_map and node") {
  const Complex half(0.5, 0.0);
  const Complex l(0.0, 1.0 / std::numbers::sqrt2);
  CHECK(apply_map(Letter::plus, half, 0.0) == Complex(1.0, 0.0));
  CHECK(std::abs(apply_map(Letter::minus, l, 1.0) - Complex(-1.0, 1.0 / std::numbers::sqrt2)) < 1e-15);
  CHECK(apply_map(Letter::center, Complex(0.3, 0.2), 0.0) == Complex(0.0, 0.0));

  CHECK(node(Word::parse("+"), Complex(0.3, 0.9)) == Complex(1.0, 0.0));
  CHECK(node(Word::parse("+-"), half) == Complex(0.5, 0.0));
  const Complex l5 = testing::root_of(5);
  CHECK(std::abs(node(Word::parse("++-"), l5) - (1.0 + l5 - l5 * l5)) < 1e-15);

  // A node is the image of 0 under the composed maps, outermost letter first.
  const Word w = Word::parse("+O--+");
  Complex z(0.0, 0.0);
  for (int j = w.size() - 1; j >= 0; --j) z = apply_map(w[j], l5, z);
  CHECK(std::abs(node(w, l5) - z) < 1e-14);
}

TEST_CASE("instar_disks") {
  const auto level0 = instar_disks(0, Complex(0.5, 0.0), Alphabet::binary);
  REQUIRE(level0.size() == 2);
  CHECK(level0[0].node() == Complex(-1.0, 0.0));
  CHECK(level0[1].node() == Complex(1.0, 0.0));
  CHECK(level0[0].disk.radius == doctest::Approx(1.0));

  CHECK(instar_disks(1, Complex(0.3, 0.4), Alphabet::ternary).size() == 9);
  CHECK(instar_disks(4, Complex(0.3, 0.4), Alphabet::binary).size() == 32);
  CHECK(instar_disks(4, Complex(0.3, 0.4), Alphabet::ternary).size() == 243);

  const Complex l(0.0, 1.0 / std::numbers::sqrt2);
  const auto rect = instar_disks(2, l, Alphabet::binary);
  REQUIRE(rect.size() == 8);
  for (const auto& d : rect) {
    CHECK(std::abs(d.node().real()) <= 2.0 + d.disk.radius);
    CHECK(std::abs(d.node().imag()) <= std::numbers::sqrt2 + d.disk.radius);
    CHECK(std::abs(d.node() - node(d.word, l)) < 1e-15);
  }
  CHECK(rect.front().word.to_string() == "---");
  CHECK(rect.back().word.to_string() == "+++");

  CHECK_THROWS_AS(instar_disks(15, l, Alphabet::ternary), Error);
  CHECK_THROWS_AS(instar_disks(23, l, Alphabet::binary), Error);
}

TEST_CASE("child disks nest inside their parents") {
  const Complex lambda(0.41, 0.37);
  for (Alphabet a : {Alphabet::binary, Alphabet::ternary}) {
    const int base = alphabet_size(a);
    for (int n = 0; n < 6; ++n) {
      const auto parents = instar_disks(n, lambda, a);
      const auto children = instar_disks(n + 1, lambda, a);
      for (std::size_t c = 0; c < children.size(); ++c) {
        const auto& child = children[c];
        const auto& parent = parents[c / base];
        CHECK(child.word.prefix(n + 1) == parent.word);
        CHECK(std::abs(child.disk.center - parent.disk.center) + child.disk.radius <= parent.disk.radius + 1e-12);
      }
      const double expect = std::pow(std::abs(lambda), n + 1) / (1.0 - std::abs(lambda));
      CHECK(parents.front().disk.radius == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("attractor_sample") {
  const PointSet two = attractor_sample(Complex(0.4, 0.2), 0, Alphabet::binary);
  CHECK(two == PointSet{Complex(-1.0, 0.0), Complex(1.0, 0.0)});
  CHECK(attractor_sample(Complex(0.4, 0.2), 0, Alphabet::ternary).size() == 3);

  const PointSet real = attractor_sample(Complex(0.5, 0.0), 10, Alphabet::binary);
  CHECK(real.size() == 2048);
  for (const Complex& z : real) {
    CHECK(z.imag() == 0.0);
    CHECK(std::abs(z.real()) <= 2.0);
  }

  const Complex l(0.0, 1.0 / std::numbers::sqrt2);
  const double eps = std::pow(std::abs(l), 17) / (1.0 - std::abs(l));
  const PointSet rect = attractor_sample(l, 16, Alphabet::binary);
  for (const Complex& z : rect) {
    CHECK(std::abs(z.real()) <= 2.0 + eps);
    CHECK(std::abs(z.imag()) <= std::numbers::sqrt2 + eps);
  }

  // Symmetric about 0: the word w and its negation sit at mirrored indices.
  for (Alphabet a : {Alphabet::binary, Alphabet::ternary}) {
    const PointSet s = attractor_sample(Complex(0.35, 0.55), 7, a);
    for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] == -s[s.size() - 1 - i]);
  }
}

TEST_CASE("instar_gap matches a direct scan") {
  const Complex lambda = testing::root_of(1);
  const Disk probe{Complex(1.3, 0.9), 0.2};
  const int level = 5;
  const auto disks = instar_disks(level, lambda, Alphabet::ternary);
  double best = 1e300;
  for (const auto& d : disks) best = std::min(best, std::abs(probe.center - d.node()) - probe.radius - d.disk.radius);
  const InstarGap g = instar_gap(lambda, level, Alphabet::ternary, probe, Complex(100.0, 0.0), 0.0, 3);
  CHECK(g.gap == best);
  CHECK(g.skipped == 0);
  const InstarGap skip = instar_gap(lambda, level, Alphabet::ternary, probe, g.nearest, 1e-12, 2);
  CHECK(skip.skipped >= 1);
  CHECK(skip.gap >= g.gap);
}

TEST_CASE("overlap self-similarity") {
  const auto lm5 = landmark(5);
  const Complex l5 = resolve_root(lm5);
  const std::vector<int> none;
  const Word a5 = overlap_itinerary(lm5.series, none, 20);
  CHECK(a5.to_string().substr(0, 7) == "+++-++-");
  for (int k : {0, 1, 2}) {
    const SelfSimResidual r = check_overlap_selfsim(lm5.series, l5, Complex(0.0, 0.0), a5, 0, k);
    CHECK(r.center <= 1e-10);
    CHECK(r.radius <= 1e-10);
    if (k == 0) {
      CHECK(r.center == 0.0);
      CHECK(r.radius == 0.0);
    }
  }

  const auto lm2 = landmark(2);
  const Complex l2 = resolve_root(lm2);
  for (int sign : {-1, 1}) {
    const std::vector<int> s{sign};
    const Complex xi = overlap_point(lm2.series, s, l2);
    CHECK(std::abs(xi - static_cast<double>(sign) * ipow(l2, 3)) < 1e-15);
    const Word a = overlap_itinerary(lm2.series, s, 12);
    CHECK(a[3] == static_cast<Letter>(sign));
    for (int n : {0, 1, 2}) {
      const SelfSimResidual r = check_overlap_selfsim(lm2.series, l2, xi, a, n, 1);
      CHECK(r.center <= 1e-10 * (1.0 + std::abs(xi)));
    }
  }

  // Itinerary that disagrees with a nonzero coefficient is rejected.
  CHECK_THROWS_AS(check_overlap_selfsim(lm5.series, l5, 0.0, Word::parse("+-+-+-+-"), 0, 1), Error);
  CHECK_THROWS_AS(check_overlap_selfsim(lm5.series, l5, 0.0, Word::parse("++"), 0, 1), Error);
}
