#include "frftlab/fft.hpp"

#include <cmath>
#include <numbers>

namespace frftlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

void fft_pow2(std::vector<cplx>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0) throw NumericError("fft size must be a power of two");
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
        const cplx wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            cplx w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = a[i + k];
                const cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
    if (inverse) {
        const double s = 1.0 / static_cast<double>(n);
        for (auto& v : a) v *= s;
    }
}

std::vector<cplx> fft_linear_convolve(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    const std::size_t out_len = a.size() + b.size() - 1;
    const std::size_t n = next_pow2(out_len);
    std::vector<cplx> fa(n, cplx{0, 0}), fb(n, cplx{0, 0});
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    fft_pow2(fa, false);
    fft_pow2(fb, false);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
    fft_pow2(fa, true);
    fa.resize(out_len);
    return fa;
}

std::vector<cplx> chirpz_sum(const std::vector<cplx>& g, double t0, double ht, double y0,
                             double hy, std::size_t m) {
    const std::size_t n = g.size();
    if (n == 0 || m == 0) throw NumericError("chirpz: empty input or output");
    // e^{-2pi i y_k t_j} split with k*j = (k^2 + j^2 - (k-j)^2)/2, beta = hy*ht.
    const double beta = hy * ht;

    std::vector<cplx> a(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double dj = static_cast<double>(j);
        const double phase = -2.0 * kPi * y0 * ht * dj - kPi * beta * dj * dj;
        a[j] = g[j] * std::polar(1.0, phase);
    }
    // b spans offsets -(n-1)..(m-1)
    std::vector<cplx> b(n + m - 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double off = static_cast<double>(i) - static_cast<double>(n - 1);
        b[i] = std::polar(1.0, kPi * beta * off * off);
    }
    auto c = fft_linear_convolve(a, b);

    std::vector<cplx> out(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double dk = static_cast<double>(k);
        const double phase = -2.0 * kPi * (y0 * t0 + dk * hy * t0) - kPi * beta * dk * dk;
        out[k] = c[k + n - 1] * std::polar(1.0, phase);
    }
    return out;
}

}  // namespace frftlab
