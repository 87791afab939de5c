#include "orblab/series.hpp"

#include <array>
#include <cmath>

namespace orblab {
namespace {

// Generator matrix of E8 (D8 plus glue vector), scaled by 2 to stay integral.
// Rows are basis vectors; the true basis is rows/2, so the Gram matrix below
// carries a factor of 4.
constexpr std::array<std::array<int, 8>, 8> kGen2 = {{
    {2, -2, 0, 0, 0, 0, 0, 0},
    {0, 2, -2, 0, 0, 0, 0, 0},
    {0, 0, 2, -2, 0, 0, 0, 0},
    {0, 0, 0, 2, -2, 0, 0, 0},
    {0, 0, 0, 0, 2, -2, 0, 0},
    {0, 0, 0, 0, 0, 2, -2, 0},
    {0, 0, 0, 0, 0, 2, 2, 0},
    {1, 1, 1, 1, 1, 1, 1, 1},
}};

struct Gram {
    std::array<std::array<long, 8>, 8> g{};
    Gram() {
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                long dot = 0;
                for (int k = 0; k < 8; ++k)
                    dot += static_cast<long>(kGen2[i][k]) * kGen2[j][k];
                g[i][j] = dot / 4; // undo the scale-by-2 on both factors
            }
    }
};

// Recursive shell enumeration: count x in Z^8 with x^T G x <= bound,
// using a Cholesky factorization for pruning and the exact Gram form
// for the final norm.
class ShellCounter {
  public:
    explicit ShellCounter(long bound) : bound_(bound) {
        Gram gram;
        g_ = gram.g;
        // Cholesky G = L D L^T
        std::array<std::array<double, 8>, 8> a{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) a[i][j] = static_cast<double>(g_[i][j]);
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j <= i - 1; ++j) {
                double s = a[i][j];
                for (int k = 0; k < j; ++k) s -= l_[i][k] * d_[k] * l_[j][k];
                l_[i][j] = s / d_[j];
            }
            double s = a[i][i];
            for (int k = 0; k < i; ++k) s -= l_[i][k] * l_[i][k] * d_[k];
            d_[i] = s;
            l_[i][i] = 1.0;
        }
    }

    // counts[n] = number of lattice vectors of norm 2n, 2n <= bound
    std::vector<long> count() {
        counts_.assign(static_cast<size_t>(bound_ / 2) + 1, 0);
        std::array<int, 8> x{};
        recurse(7, 0.0, x);
        return counts_;
    }

  private:
    void recurse(int level, double partial, std::array<int, 8>& x) {
        if (level < 0) {
            long norm = 0;
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j)
                    norm += static_cast<long>(x[i]) * g_[i][j] * x[j];
            if (norm <= bound_ && norm % 2 == 0) ++counts_[static_cast<size_t>(norm / 2)];
            return;
        }
        double center = 0.0;
        for (int j = level + 1; j < 8; ++j) center += l_[j][level] * x[j];
        double room = (static_cast<double>(bound_) - partial) / d_[level];
        if (room < 0) room = 0;
        double half = std::sqrt(room) + 1e-9;
        int lo = static_cast<int>(std::ceil(-center - half));
        int hi = static_cast<int>(std::floor(-center + half));
        for (int v = lo; v <= hi; ++v) {
            x[level] = v;
            double t = v + center;
            recurse(level - 1, partial + d_[level] * t * t, x);
        }
        x[level] = 0;
    }

    long bound_;
    std::array<std::array<long, 8>, 8> g_{};
    std::array<std::array<double, 8>, 8> l_{};
    std::array<double, 8> d_{};
    std::vector<long> counts_;
};

} // namespace

TruncatedSeries e8_theta_series(int order) {
    if (order < 0) throw ValidationError("order must be >= 0");
    ShellCounter counter(2L * order);
    std::vector<long> counts = counter.count();
    TruncatedSeries theta(order);
    for (int n = 0; n <= order; ++n) theta.set_coeff(n, Rat(counts[static_cast<size_t>(n)]));
    return theta;
}

TruncatedSeries e8cubed_character(int order) {
    // a(t) = t * (theta_E8 / eta^8)^3 = theta_E8(t)^3 * prod_m (1-t^m)^{-24};
    // the eta prefactor t^{1/3} per eta^8 cancels against the explicit t.
    TruncatedSeries theta = e8_theta_series(order);
    TruncatedSeries euler = TruncatedSeries::one(order);
    for (int m = 1; m <= order; ++m) {
        TruncatedSeries f(order);
        f.set_coeff(0, Rat(1));
        f.set_coeff(m, Rat(-1));
        euler = euler * f;
    }
    return theta.pow(3) * euler.recip().pow(24);
}

} // namespace orblab
