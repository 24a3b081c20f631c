#pragma once
// Numeric kernels behind the group metrics. The OpenMP variants must be
// bit-identical across thread counts: every row i produces its partial
// sum independently and partials are reduced in fixed index order. The
// serial variants are the plain reference implementations kept for
// cross-checking and benchmarks.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace paudit::kernels {

// Compensated (Kahan) summation in index order.
double kahan_sum(std::span<const double> values);

double dot(std::span<const double> a, std::span<const double> b);
double l2_norm(std::span<const double> v);

// 1 - cos(a, b). Zero-norm policy: either norm 0 -> 1.0 (callers count
// the event). Throws DimensionMismatch on unequal lengths.
double cosine_distance(std::span<const double> a, std::span<const double> b);

struct PairwiseResult {
    double mean_distance = 0.0;   // over all n(n-1)/2 pairs
    std::uint64_t pair_count = 0;
    std::uint64_t zero_norm_vectors = 0;
};

// Mean pairwise cosine distance over n row-major vectors of width dim.
// Requires n >= 2 (throws GroupTooSmall).
PairwiseResult mean_pairwise_cosine_distance(std::span<const double> data,
                                             std::size_t n, std::size_t dim);
PairwiseResult mean_pairwise_cosine_distance_serial(
    std::span<const double> data, std::size_t n, std::size_t dim);

// Distances between consecutive rows: result[k] = dist(row k, row k+1).
std::vector<double> consecutive_cosine_distances(std::span<const double> data,
                                                 std::size_t n,
                                                 std::size_t dim);

}  // namespace paudit::kernels
