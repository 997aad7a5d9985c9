// AVX2 variants of the F2 row kernels. This translation unit is compiled with
// -mavx2; it must only be entered after the runtime dispatch confirmed support.
#if defined(__x86_64__)

#include <immintrin.h>

#include "f2alg/f2kernel.hpp"

namespace f2alg::bitops::avx2 {

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n)
{
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < n; ++i)
        dst[i] ^= src[i];
}

bool is_zero(const std::uint64_t* p, std::size_t n)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i)));
    std::uint64_t tail = 0;
    for (; i < n; ++i)
        tail |= p[i];
    return _mm256_testz_si256(acc, acc) && tail == 0;
}

bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n)
{
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(x, y));
    }
    std::uint64_t fold = static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 0)) ^
                         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 1)) ^
                         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 2)) ^
                         static_cast<std::uint64_t>(_mm256_extract_epi64(acc, 3));
    for (; i < n; ++i)
        fold ^= a[i] & b[i];
    return (__builtin_popcountll(fold) & 1) != 0;
}

}  // namespace f2alg::bitops::avx2

#endif
