#include "ifslab/paramspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ifslab/errors.hpp"
#include "parallel.hpp"

namespace ifslab {

std::string_view to_string(ParamSet set) { return set == ParamSet::M ? "M" : "M0"; }

ParamSet parse_param_set(std::string_view text) {
  if (text == "m" || text == "M") return ParamSet::M;
  if (text == "m0" || text == "M0") return ParamSet::M0;
  throw Error(ErrorKind::parse_error, "set must be 'm' or 'm0'");
}

namespace {

void check_lambda(Complex lambda) {
  const double r = std::abs(lambda);
  if (!(r > 0.0) || !(r < 1.0)) {
    throw Error(ErrorKind::invalid_lambda, "parameter must satisfy 0 < |lambda| < 1");
  }
}

struct SearchTables {
  std::vector<Complex> powers;  // lambda^j, j = 0..depth
  std::vector<double> bounds;   // prune_bound(lambda, k), k = 0..depth
};

SearchTables make_tables(Complex lambda, int depth) {
  SearchTables t;
  t.powers.resize(depth + 1);
  t.bounds.resize(depth + 1);
  const double modulus = std::abs(lambda);
  const double radius = 1.0 / (1.0 - modulus);
  const double guard = 1e-15 * radius;
  Complex pw(1.0, 0.0);
  double tail = modulus * radius;
  for (int k = 0; k <= depth; ++k) {
    t.powers[k] = pw;
    t.bounds[k] = tail + guard;
    pw *= lambda;
    tail *= modulus;
  }
  return t;
}

std::span<const int> digits(ParamSet set) {
  static constexpr std::array<int, 3> ternary{-1, 0, 1};
  static constexpr std::array<int, 2> binary{-1, 1};
  if (set == ParamSet::M) return ternary;
  return binary;
}

}  // namespace

double prune_bound(Complex lambda, int k) {
  const double modulus = std::abs(lambda);
  const double radius = 1.0 / (1.0 - modulus);
  return std::pow(modulus, k + 1) * radius + 1e-15 * radius;
}

MembershipResult membership(Complex lambda, ParamSet set, int depth) {
  check_lambda(lambda);
  if (depth < 1) throw Error(ErrorKind::invalid_argument, "search depth must be at least 1");
  const SearchTables t = make_tables(lambda, depth);
  const auto choices = digits(set);

  MembershipResult result;
  result.set = set;
  const Complex root(1.0, 0.0);
  if (std::abs(root) > t.bounds[0]) {
    result.kind = MembershipResult::Kind::escaped;
    result.depth = 1;
    return result;
  }

  // Children are tried closest-to-zero first; the verdict and the escape depth
  // do not depend on the order, only the running time does.
  struct Frame {
    Complex value;
    std::array<Complex, 3> children;
    int count;
    int next;
  };
  std::vector<Frame> stack;
  stack.reserve(depth + 1);
  auto expand = [&](Complex value, int k) {
    Frame fr{value, {}, 0, 0};
    std::array<std::pair<double, Complex>, 3> live{};
    for (int c : choices) {
      const Complex child = value + static_cast<double>(c) * t.powers[k + 1];
      const double size = std::abs(child);
      if (size <= t.bounds[k + 1]) live[fr.count++] = {size, child};
    }
    std::sort(live.begin(), live.begin() + fr.count,
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (int i = 0; i < fr.count; ++i) fr.children[i] = live[i].second;
    return fr;
  };

  int deepest_alive = 0;
  stack.push_back(expand(root, 0));
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.count) {
      stack.pop_back();
      continue;
    }
    const Complex child = top.children[top.next++];
    const int level = static_cast<int>(stack.size());
    deepest_alive = std::max(deepest_alive, level);
    if (level == depth) {
      result.kind = MembershipResult::Kind::survived;
      result.depth = depth;
      return result;
    }
    stack.push_back(expand(child, level));
  }
  result.kind = MembershipResult::Kind::escaped;
  result.depth = std::max(deepest_alive + 1, 1);
  return result;
}

SurvivorList survivors(Complex lambda, ParamSet set, int depth, std::size_t cap) {
  check_lambda(lambda);
  if (depth < 0) throw Error(ErrorKind::invalid_argument, "depth must be nonnegative");
  const SearchTables t = make_tables(lambda, depth);
  const auto choices = digits(set);
  SurvivorList out;
  std::vector<int> prefix{1};
  std::vector<Complex> values{Complex(1.0, 0.0)};
  if (std::abs(values[0]) > t.bounds[0]) return out;

  // Recursion depth is bounded by `depth`.
  auto visit = [&](auto&& self, int k) -> bool {
    if (k == depth) {
      if (out.prefixes.size() == cap) {
        out.overflow = true;
        return false;
      }
      out.prefixes.push_back(prefix);
      return true;
    }
    for (int c : choices) {
      const Complex child = values.back() + static_cast<double>(c) * t.powers[k + 1];
      if (std::abs(child) > t.bounds[k + 1]) continue;
      prefix.push_back(c);
      values.push_back(child);
      const bool go_on = self(self, k + 1);
      prefix.pop_back();
      values.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  visit(visit, 0);
  return out;
}

Window parse_window(std::string_view text) {
  std::array<double, 4> v{};
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t comma = text.find(',', pos);
    if ((i < 3) == (comma == std::string_view::npos)) {
      throw Error(ErrorKind::parse_error, "window must be x0,y0,x1,y1");
    }
    const std::string item(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    try {
      std::size_t used = 0;
      v[i] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse_error, "bad window coordinate '" + item + "'");
    }
    pos = comma + 1;
  }
  Window w{v[0], v[1], v[2], v[3]};
  if (!(w.x0 < w.x1) || !(w.y0 < w.y1)) throw Error(ErrorKind::invalid_window, "window needs x0 < x1 and y0 < y1");
  return w;
}

Complex pixel_center(const Window& window, int width, int height, int i, int j) {
  const double x = window.x0 + (i + 0.5) * (window.x1 - window.x0) / width;
  const double y = window.y1 - (j + 0.5) * (window.y1 - window.y0) / height;
  return {x, y};
}

std::int32_t escape_value(Complex lambda, ParamSet set, int depth) {
  const double r = std::abs(lambda);
  if (r == 0.0 || r >= 1.0) return 1;
  const MembershipResult m = membership(lambda, set, depth);
  return m.survived() ? 0 : m.depth;
}

EscapeGrid escape_grid(const Window& window, int width, int height, ParamSet set, int depth, int threads) {
  if (!(window.x0 < window.x1) || !(window.y0 < window.y1)) {
    throw Error(ErrorKind::invalid_window, "window needs x0 < x1 and y0 < y1");
  }
  if (width < 1 || height < 1) throw Error(ErrorKind::invalid_window, "image needs at least one pixel");
  if (depth < 1) throw Error(ErrorKind::invalid_argument, "depth must be at least 1");
  EscapeGrid grid{window, width, height, depth, set, {}};
  grid.values.assign(static_cast<std::size_t>(width) * height, 0);
  const auto count = static_cast<std::int64_t>(grid.values.size());
#pragma omp parallel for num_threads(detail::resolve_threads(threads)) schedule(dynamic, 16)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    const int i = static_cast<int>(idx % width);
    const int j = static_cast<int>(idx / width);
    grid.values[idx] = escape_value(pixel_center(window, width, height, i, j), set, depth);
  }
  return grid;
}

}  // namespace ifslab
