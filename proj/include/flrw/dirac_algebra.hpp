#pragma once

#include <array>
#include <cstddef>

#include "flrw/cosmology.hpp"
#include "flrw/special_functions.hpp"

namespace flrw {

using Spinor = std::array<Complex, 4>;
using WaveVector = std::array<double, 3>;

/// Dense 4x4 complex matrix, row-major.
class Matrix4c {
 public:
  Matrix4c() { entries_.fill(Complex(0.0, 0.0)); }

  static Matrix4c identity();
  static Matrix4c diagonal(Complex d0, Complex d1, Complex d2, Complex d3);

  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[4 * row + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[4 * row + col];
  }

  Matrix4c& operator+=(const Matrix4c& other);
  Matrix4c& operator-=(const Matrix4c& other);
  Matrix4c& operator*=(Complex scale);

  /// Largest |entry|.
  [[nodiscard]] double max_abs() const;

  friend bool operator==(const Matrix4c&, const Matrix4c&) = default;

 private:
  std::array<Complex, 16> entries_;
};

Matrix4c operator+(Matrix4c lhs, const Matrix4c& rhs);
Matrix4c operator-(Matrix4c lhs, const Matrix4c& rhs);
Matrix4c operator*(const Matrix4c& lhs, const Matrix4c& rhs);
Matrix4c operator*(Complex scale, Matrix4c m);
Spinor operator*(const Matrix4c& m, const Spinor& v);

Spinor operator+(const Spinor& a, const Spinor& b);
Spinor operator-(const Spinor& a, const Spinor& b);
Spinor operator*(Complex scale, const Spinor& v);
double max_abs(const Spinor& v);
double norm2(const Spinor& v);  // sum of |v_i|^2

/// Contravariant gamma matrices in the Dirac representation, mu = 0..3.
const Matrix4c& gamma(int mu);

struct ProjectorPair {
  Matrix4c gamma_U;  // (I + gamma^0) / 2, upper 2-spinor
  Matrix4c gamma_L;  // (I - gamma^0) / 2, lower 2-spinor
};
const ProjectorPair& projectors();

/// First-order operator  coeff_dt d/dt + coeff_0  acting on one Fourier
/// mode, with the t-derivatives of both coefficients.
struct OperatorSymbol {
  Matrix4c coeff_dt;
  Matrix4c coeff_0;
  Matrix4c d_coeff_dt;
  Matrix4c d_coeff_0;
};

/// Dirac operator i g0 d_t + i t^-ell g^j (i k_j) + (3 ell / 2t) i g0 - m/t.
OperatorSymbol dirac_symbol(double t, const WaveVector& k,
                            const CosmologyParams& p);

/// Right co-factor  i t^(-ell/2) g0 T d_t + i t^(-3 ell/2) g^j T (i k_j),
/// T = t^(im) gU + t^(-im) gL.
OperatorSymbol dco_symbol(double t, const WaveVector& k,
                          const CosmologyParams& p);

/// coeff_dt * derivative + coeff_0 * value.
Spinor apply_symbol(const OperatorSymbol& symbol, const Spinor& value,
                    const Spinor& derivative);

/// Spinor whose components are cubic polynomials in t, so derivatives are
/// exact. coefficients[component][power].
struct PolynomialSpinor {
  std::array<std::array<Complex, 4>, 4> coefficients{};

  [[nodiscard]] Spinor value(double t) const;
  [[nodiscard]] Spinor derivative(double t) const;
  [[nodiscard]] Spinor second_derivative(double t) const;
};

/// Residual of D(Dco psi) = -diag(t^-a P(m), t^-w P(-m)) psi, where
/// P(+-m) = d_t^2 + t^(-2 ell)|k|^2 + (ell +- 2im)/t d_t, a = ell/2 - im,
/// w = ell/2 + im. Returns max|lhs - rhs| / (1 + max|rhs|).
double verify_composition(double t, const WaveVector& k,
                          const CosmologyParams& p,
                          const PolynomialSpinor& psi);

/// max-norm of  sum_{k,j} (t^-im gU + t^im gL) g^k g^j (t^im gU + t^-im gL)
/// (i k_k)(i k_j) - |k|^2 I.
double verify_condition13(const WaveVector& k, double t, Complex m);

}  // namespace flrw
