#ifndef JAHMM_KERNELS_HPP
#define JAHMM_KERNELS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace jahmm::kernels {

// Reduction and update kernels used by the likelihood and EM inner loops.
//
// Every kernel is defined by a fixed four-lane accumulation pattern: element
// i feeds lane (i mod 4) over the aligned prefix, lanes are combined as
// ((l0+l1)+(l2+l3)), and the remainder is folded in sequentially. Multiply-
// adds are IEEE fused (std::fma / vfmadd / vfma) in every variant, so the
// scalar, AVX2 and NEON implementations return bitwise-identical results and
// the choice of variant never affects output. Equivalence is enforced by
// tests/test_kernels.cpp.

enum class Backend { scalar = 0, avx2 = 1, neon = 2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);
Backend best_supported_backend();
Backend active_backend();
// Throws std::invalid_argument if the CPU (or the build) lacks the variant.
void set_backend(Backend b);
std::vector<Backend> supported_backends();

// sum of x
double sum(std::span<const double> x);
// sum of a[i]*b[i]
double dot(std::span<const double> a, std::span<const double> b);
// out[i] += c*x[i]
void scaled_add(std::span<double> out, std::span<const double> x, double c);

// one-pass {sum(w), sum(w[i]*x[i])}
struct WeightedSum {
  double total;
  double weighted;
};
WeightedSum weighted_sum(std::span<const double> w, std::span<const double> x);

// Function-pointer table one ISA variant fills in.
struct KernelTable {
  double (*sum)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  void (*scaled_add)(double*, const double*, double, std::size_t);
  WeightedSum (*weighted_sum)(const double*, const double*, std::size_t);
};

namespace detail {
const KernelTable& scalar_table();
#if defined(JAHMM_BUILD_AVX2)
const KernelTable& avx2_table();
#endif
#if defined(JAHMM_BUILD_NEON)
const KernelTable& neon_table();
#endif
}  // namespace detail

}  // namespace jahmm::kernels

#endif
