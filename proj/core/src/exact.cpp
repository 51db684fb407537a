#include "halfcube/exact.hpp"

namespace halfcube {

namespace {

template <typename Int>
IntMatrix<Int> convert(const IntMatrix<std::int64_t>& m) {
    IntMatrix<Int> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (auto v : m[i]) out[i].push_back(Int(v));
    }
    return out;
}

}  // namespace

BigInt determinant(const IntMatrix<std::int64_t>& m) {
    try {
        return to_big(bareiss_determinant(convert<Checked64>(m)));
    } catch (const OverflowError&) {
        return bareiss_determinant(convert<BigInt>(m));
    }
}

int determinant_sign(const IntMatrix<std::int64_t>& m) {
    try {
        return sign_of(bareiss_determinant(convert<Checked64>(m)));
    } catch (const OverflowError&) {
        return sign_of(bareiss_determinant(convert<BigInt>(m)));
    }
}

std::int64_t checked_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // C(n, i) * (n - i) / (i + 1) stays integral at every step.
    Checked64 r = 1;
    for (int i = 0; i < k; ++i) {
        BigInt t = to_big(r) * (n - i) / (i + 1);
        if (t > INT64_MAX) throw OverflowError();
        r = static_cast<std::int64_t>(t);
    }
    return r.value();
}

std::int64_t checked_factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Checked64 r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r.value();
}

std::int64_t checked_pow2(int e) {
    if (e < 0 || e > 62) throw OverflowError();
    return std::int64_t{1} << e;
}

}  // namespace halfcube
