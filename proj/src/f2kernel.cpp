#include "f2alg/f2kernel.hpp"

namespace f2alg::bitops {

namespace scalar {

    void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            dst[i] ^= src[i];
    }

    bool is_zero(const std::uint64_t* p, std::size_t n)
    {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            acc |= p[i];
        return acc == 0;
    }

    bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n)
    {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            acc ^= a[i] & b[i];
        return (__builtin_popcountll(acc) & 1) != 0;
    }

}  // namespace scalar

namespace {

    struct Dispatch {
        void (*xor_words)(std::uint64_t*, const std::uint64_t*, std::size_t);
        bool (*is_zero)(const std::uint64_t*, std::size_t);
        bool (*and_parity)(const std::uint64_t*, const std::uint64_t*, std::size_t);
        bool avx2;
    };

    Dispatch select()
    {
#if defined(__x86_64__)
        if (__builtin_cpu_supports("avx2"))
            return {&avx2::xor_words, &avx2::is_zero, &avx2::and_parity, true};
#endif
        return {&scalar::xor_words, &scalar::is_zero, &scalar::and_parity, false};
    }

    const Dispatch g_dispatch = select();

}  // namespace

bool using_avx2()
{
    return g_dispatch.avx2;
}

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n)
{
    g_dispatch.xor_words(dst, src, n);
}

bool is_zero(const std::uint64_t* p, std::size_t n)
{
    return g_dispatch.is_zero(p, n);
}

bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n)
{
    return g_dispatch.and_parity(a, b, n);
}

}  // namespace f2alg::bitops
