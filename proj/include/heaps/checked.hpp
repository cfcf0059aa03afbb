#ifndef heaps_checked_hpp
#define heaps_checked_hpp

#include <cstdint>
#include <concepts>

#include "heaps/error.hpp"

namespace heaps {

// Integer arithmetic that throws OverflowError instead of wrapping.

template<std::integral T>
T checked_add(T a, T b) {
    T out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in addition");
    }
    return out;
}

template<std::integral T>
T checked_sub(T a, T b) {
    T out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in subtraction");
    }
    return out;
}

template<std::integral T>
T checked_mul(T a, T b) {
    T out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("integer overflow in multiplication");
    }
    return out;
}

template<std::integral T>
T checked_pow(T base, unsigned exp) {
    T out = 1;
    for (unsigned i = 0; i < exp; ++i) {
        out = checked_mul(out, base);
    }
    return out;
}

inline std::int64_t factorial(unsigned k) {
    std::int64_t out = 1;
    for (unsigned i = 2; i <= k; ++i) {
        out = checked_mul<std::int64_t>(out, i);
    }
    return out;
}

// C(n, k) for n possibly negative is not needed; n >= 0 here.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // out * (n - k + i) is divisible by i after the multiplication
        out = checked_mul<std::int64_t>(out, n - k + i) / i;
    }
    return out;
}

inline std::int64_t sign_pow(std::int64_t exp) {
    return (exp % 2 == 0) ? 1 : -1;
}

}

#endif /* heaps_checked_hpp */
