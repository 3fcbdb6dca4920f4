#include "treepoisson/numeric.hpp"

#include <cmath>
#include <cstdlib>

#include "treepoisson/errors.hpp"

namespace treepoisson {

Complex pow_int(Complex z, long long m) {
    if (m == 0) return {1.0, 0.0};
    if (z == Complex{0.0, 0.0}) throw NumericRegimeError("pow_int: zero base");
    const double log_mag = std::log(std::abs(z));
    if (static_cast<double>(std::llabs(m)) * std::fabs(log_mag) > 600.0)
        throw NumericRegimeError("pow_int: |z|^m outside the double range");
    unsigned long long e =
        m < 0 ? 0ull - static_cast<unsigned long long>(m) : static_cast<unsigned long long>(m);
    Complex base = z;
    Complex acc{1.0, 0.0};
    while (e != 0) {
        if (e & 1ull) acc *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return m < 0 ? Complex{1.0, 0.0} / acc : acc;
}

namespace {

Complex pairwise_block(const Complex* data, std::size_t n) {
    if (n <= 8) {
        Complex s{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) s += data[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_block(data, half) + pairwise_block(data + half, n - half);
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> values) {
    return values.empty() ? Complex{0.0, 0.0} : pairwise_block(values.data(), values.size());
}

}  // namespace treepoisson
