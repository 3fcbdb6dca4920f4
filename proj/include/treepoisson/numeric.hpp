#pragma once

#include <complex>
#include <span>

namespace treepoisson {

using Complex = std::complex<double>;

// z^m by repeated squaring; m may be negative. Fails fast with a
// NumericRegimeError once |m|*|log|z|| leaves the double range instead of
// letting inf/0 propagate.
Complex pow_int(Complex z, long long m);

// Deterministic pairwise (tree) reduction.
Complex pairwise_sum(std::span<const Complex> values);

}  // namespace treepoisson
