#pragma once

// Quaternion scalars: Hamilton product, conjugation, the complex split
// q = q1 + q2*j, conjugacy-class (equivalence) utilities and seeded
// sampling of the unit ball.

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>

namespace qschur {

using Complex = std::complex<double>;

struct Quaternion {
    double w = 0.0;  // real part
    double x = 0.0;  // i component
    double y = 0.0;  // j component
    double z = 0.0;  // k component

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion real(double r) { return {r, 0.0, 0.0, 0.0}; }
    static Quaternion from_complex(const Complex& c) {
        return {c.real(), c.imag(), 0.0, 0.0};
    }

    constexpr bool operator==(const Quaternion&) const = default;
};

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
}

// Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
}

constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }

constexpr Quaternion operator/(const Quaternion& a, double s) {
    return {a.w / s, a.x / s, a.y / s, a.z / s};
}

constexpr Quaternion conj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

constexpr double norm_sq(const Quaternion& a) {
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

double abs(const Quaternion& a);

constexpr double re(const Quaternion& a) { return a.w; }

constexpr Quaternion im(const Quaternion& a) { return {0.0, a.x, a.y, a.z}; }

// |Im(a)|, the radius of the conjugacy sphere through a.
double im_abs(const Quaternion& a);

bool is_real(const Quaternion& a, double tol = 0.0);

// conj(a) / |a|^2; throws std::domain_error on zero input.
Quaternion inverse(const Quaternion& a);

// a^k for k >= 0 by repeated multiplication.
Quaternion pow_int(const Quaternion& a, int k);

// Unique split a = a1 + a2*j with a1, a2 complex: a1 = w + x*i, a2 = y + z*i.
std::pair<Complex, Complex> split(const Quaternion& a);

constexpr Quaternion join(const Complex& a1, const Complex& a2) {
    return {a1.real(), a1.imag(), a2.real(), a2.imag()};
}

// Same conjugacy class: Re(a) = Re(b) and |a| = |b|, both within tol.
bool equivalent(const Quaternion& a, const Quaternion& b, double tol);

// Complex representative Re(g) + |Im(g)|*i of the conjugacy sphere of g.
// Throws std::domain_error for real g (the class degenerates to a point).
Complex sphere_representative(const Quaternion& g);

// Affine reconstruction of g^k from a^k and b^k on a shared conjugacy
// sphere: (g-b)(a-b)^{-1} a^k + (a-g)(a-b)^{-1} b^k.
// Inputs must be pairwise distinct and pairwise equivalent.
Quaternion power_interpolation_check(const Quaternion& a, const Quaternion& b,
                                     const Quaternion& g, int k,
                                     double equiv_tol = 1e-12);

// 4x4 real matrices of left and right multiplication: L(a)*vec(q) = vec(a*q)
// and R(b)*vec(q) = vec(q*b), vec = (w, x, y, z).
std::array<std::array<double, 4>, 4> left_mul_matrix(const Quaternion& a);
std::array<std::array<double, 4>, 4> right_mul_matrix(const Quaternion& b);

// Stream-indexed seeding so harness phases draw independent deterministic
// sequences from one user seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

// Rejection sampling from the cube [-1,1]^4 into the open ball of radius
// 1 - margin. The margin keeps sampled points away from the boundary where
// the Stein series converges slowly.
class BallSampler {
  public:
    explicit BallSampler(std::uint64_t seed, double margin = 0.05);

    Quaternion next();                // |q| < 1 - margin
    Quaternion next_cube();           // uniform on [-1,1]^4, no rejection
    Complex next_disk();              // complex slice point, |z| < 1 - margin
    // Ball point at distance > min_slice_dist from the complex slice.
    Quaternion next_offslice(double min_slice_dist = 0.05);
    // Random point on the conjugacy sphere of a (imaginary part rotated by a
    // random unit quaternion).
    Quaternion next_on_sphere_of(const Quaternion& a);

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unit_{-1.0, 1.0};
    std::normal_distribution<double> gauss_{0.0, 1.0};
    double margin_;
};

}  // namespace qschur
