// Word-level kernels for bit-packed F2 rows: scalar reference implementations
// plus AVX2 variants selected once at runtime. Callers go through the
// dispatched entry points; the per-ISA namespaces stay visible so the
// equivalence tests can pin scalar and SIMD against each other.
#ifndef F2ALG_F2KERNEL_HPP
#define F2ALG_F2KERNEL_HPP

#include <cstddef>
#include <cstdint>

namespace f2alg::bitops {

namespace scalar {
    void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    bool is_zero(const std::uint64_t* p, std::size_t n);
    // Parity of popcount(a & b): the F2 dot product of two packed rows.
    bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
    void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
    bool is_zero(const std::uint64_t* p, std::size_t n);
    bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
}  // namespace avx2
#endif

// True when the dispatched entry points resolve to the AVX2 variants.
bool using_avx2();

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
bool is_zero(const std::uint64_t* p, std::size_t n);
bool and_parity(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);

}  // namespace f2alg::bitops

#endif
