#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cityform {

inline constexpr const char* kVersion = "0.1.0";

/// Input or configuration rejected before any numerics ran (CLI exit code 2).
class validation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Estimation or geometry processing failed numerically (CLI exit code 3).
class numeric_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline double missing() { return std::numeric_limits<double>::quiet_NaN(); }
inline bool is_missing(double v) { return std::isnan(v); }

/// Neumaier compensated accumulator; summation order still matters bit-wise,
/// so reductions over parallel work must consume slots in index order.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_total(std::span<const double> xs) {
    CompensatedSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

inline double mean_of(std::span<const double> xs) {
    if (xs.empty()) return missing();
    return compensated_total(xs) / static_cast<double>(xs.size());
}

/// Population standard deviation (divide by n).
inline double population_sd(std::span<const double> xs) {
    if (xs.empty()) return missing();
    const double m = mean_of(xs);
    CompensatedSum ss;
    for (double x : xs) ss.add((x - m) * (x - m));
    return std::sqrt(ss.value() / static_cast<double>(xs.size()));
}

/// Sample skewness g1 = m3 / m2^(3/2).
inline double skewness_g1(std::span<const double> xs) {
    const double n = static_cast<double>(xs.size());
    if (n < 3) return missing();
    const double m = mean_of(xs);
    CompensatedSum s2, s3;
    for (double x : xs) {
        const double d = x - m;
        s2.add(d * d);
        s3.add(d * d * d);
    }
    const double m2 = s2.value() / n;
    if (m2 <= 0) return missing();
    return (s3.value() / n) / std::pow(m2, 1.5);
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 1469598103934665603ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

inline std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

inline std::string format_double(double v, const char* fmt = "%.12g") {
    if (is_missing(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof(buf), fmt, v);
    return std::string(buf);
}

}  // namespace cityform
