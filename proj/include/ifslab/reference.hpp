#pragma once

// Single-threaded counterparts of the parallel kernels. They follow the same
// summation order, so results match the parallel versions bit for bit; the
// tests and the benchmark compare against them.

#include <vector>

#include "ifslab/certificate.hpp"
#include "ifslab/ifs.hpp"
#include "ifslab/numerics.hpp"
#include "ifslab/paramspace.hpp"

namespace ifslab::serial {

PointSet attractor_sample(Complex lambda, int depth, Alphabet alphabet);

InstarGap instar_gap(Complex lambda, int level, Alphabet alphabet, Disk probe, Complex exclude,
                     double exclude_tol);

EscapeGrid escape_grid(const Window& window, int width, int height, ParamSet set, int depth);

double directed_distance(std::span<const Complex> from, std::span<const Complex> to);

std::vector<ConditionRecord> condition_iii(const RationalTypeSeries& f, Complex lambda, int n,
                                           Variant variant);

}  // namespace ifslab::serial
