#include "paudit/kernels.hpp"

#include <cmath>

#include "paudit/errors.hpp"

namespace paudit::kernels {

double kahan_sum(std::span<const double> values) {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        double y = v - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double l2_norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double cosine_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw DimensionMismatch("cosine_distance: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
    const double na = l2_norm(a);
    const double nb = l2_norm(b);
    if (na == 0.0 || nb == 0.0) return 1.0;
    return 1.0 - dot(a, b) / (na * nb);
}

namespace {

std::vector<double> row_norms(std::span<const double> data, std::size_t n,
                              std::size_t dim) {
    std::vector<double> norms(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        norms[static_cast<std::size_t>(i)] =
            l2_norm(data.subspan(static_cast<std::size_t>(i) * dim, dim));
    return norms;
}

double pair_distance(std::span<const double> data, std::size_t dim,
                     const std::vector<double>& norms, std::size_t i,
                     std::size_t j) {
    if (norms[i] == 0.0 || norms[j] == 0.0) return 1.0;
    const double d =
        dot(data.subspan(i * dim, dim), data.subspan(j * dim, dim));
    return 1.0 - d / (norms[i] * norms[j]);
}

}  // namespace

PairwiseResult mean_pairwise_cosine_distance_serial(
    std::span<const double> data, std::size_t n, std::size_t dim) {
    if (n < 2)
        throw GroupTooSmall("pairwise distance needs n >= 2, got " +
                            std::to_string(n));
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i)
        norms[i] = l2_norm(data.subspan(i * dim, dim));

    PairwiseResult r;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            sum += pair_distance(data, dim, norms, i, j);
    for (double nm : norms)
        if (nm == 0.0) ++r.zero_norm_vectors;
    r.pair_count = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    r.mean_distance = sum / static_cast<double>(r.pair_count);
    return r;
}

PairwiseResult mean_pairwise_cosine_distance(std::span<const double> data,
                                             std::size_t n, std::size_t dim) {
    if (n < 2)
        throw GroupTooSmall("pairwise distance needs n >= 2, got " +
                            std::to_string(n));
    const std::vector<double> norms = row_norms(data, n, dim);

    std::vector<double> partial(n, 0.0);
#pragma omp parallel for schedule(dynamic, 8)
    for (long long li = 0; li < static_cast<long long>(n); ++li) {
        const auto i = static_cast<std::size_t>(li);
        double s = 0.0;
        for (std::size_t j = i + 1; j < n; ++j)
            s += pair_distance(data, dim, norms, i, j);
        partial[i] = s;
    }

    PairwiseResult r;
    for (double nm : norms)
        if (nm == 0.0) ++r.zero_norm_vectors;
    r.pair_count = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    r.mean_distance = kahan_sum(partial) / static_cast<double>(r.pair_count);
    return r;
}

std::vector<double> consecutive_cosine_distances(std::span<const double> data,
                                                 std::size_t n,
                                                 std::size_t dim) {
    std::vector<double> out;
    if (n < 2) return out;
    out.resize(n - 1);
    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i)
        norms[i] = l2_norm(data.subspan(i * dim, dim));
    for (std::size_t i = 0; i + 1 < n; ++i)
        out[i] = pair_distance(data, dim, norms, i, i + 1);
    return out;
}

}  // namespace paudit::kernels
