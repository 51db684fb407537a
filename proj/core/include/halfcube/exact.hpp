#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace halfcube {

using BigInt = boost::multiprecision::cpp_int;

struct OverflowError : std::overflow_error {
    OverflowError() : std::overflow_error("int64 overflow in exact arithmetic") {}
};

/// 64-bit integer whose arithmetic throws OverflowError instead of wrapping.
/// Algorithms templated on the integer type run on Checked64 first and are
/// retried on BigInt when that throws.
class Checked64 {
public:
    constexpr Checked64() = default;
    constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT: implicit by intent

    std::int64_t value() const { return v_; }

    friend Checked64 operator+(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError();
        return r;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError();
        return r;
    }
    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError();
        return r;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) {
        if (a.v_ == INT64_MIN && b.v_ == -1) throw OverflowError();
        return a.v_ / b.v_;
    }
    friend Checked64 operator%(Checked64 a, Checked64 b) {
        if (b.v_ == -1) return 0;
        return a.v_ % b.v_;
    }
    Checked64 operator-() const {
        if (v_ == INT64_MIN) throw OverflowError();
        return -v_;
    }
    Checked64& operator+=(Checked64 o) { return *this = *this + o; }
    Checked64& operator-=(Checked64 o) { return *this = *this - o; }
    Checked64& operator*=(Checked64 o) { return *this = *this * o; }

    friend auto operator<=>(Checked64, Checked64) = default;
    friend bool operator==(Checked64, Checked64) = default;

private:
    std::int64_t v_ = 0;
};

inline Checked64 abs(Checked64 a) { return a < 0 ? -a : a; }
inline BigInt to_big(Checked64 a) { return BigInt(a.value()); }
inline BigInt to_big(const BigInt& a) { return a; }
inline int sign_of(Checked64 a) { return a < 0 ? -1 : (a > 0 ? 1 : 0); }
inline int sign_of(const BigInt& a) { return a.sign(); }

template <typename Int>
using IntMatrix = std::vector<std::vector<Int>>;

/// Fraction-free (Bareiss) determinant of a square matrix. An empty matrix
/// has determinant 1.
template <typename Int>
Int bareiss_determinant(IntMatrix<Int> m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == Int(0)) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == Int(0)) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Exact determinant sign of an integer matrix, with overflow fallback.
int determinant_sign(const IntMatrix<std::int64_t>& m);

/// Exact determinant of an integer matrix, with overflow fallback.
BigInt determinant(const IntMatrix<std::int64_t>& m);

std::int64_t checked_binomial(int n, int k);
std::int64_t checked_factorial(int n);
std::int64_t checked_pow2(int e);

}  // namespace halfcube
