#include "flrw/dirac_algebra.hpp"

#include <algorithm>
#include <cmath>

namespace flrw {
namespace {

const Complex kI(0.0, 1.0);

std::array<Matrix4c, 4> make_gammas() {
  std::array<Matrix4c, 4> g;
  g[0] = Matrix4c::diagonal(1.0, 1.0, -1.0, -1.0);
  // g^k = [[0, s^k], [-s^k, 0]] with the Pauli matrices s^k, row-major 2x2.
  const std::array<std::array<Complex, 4>, 3> pauli = {{
      {0.0, 1.0, 1.0, 0.0},
      {0.0, -kI, kI, 0.0},
      {1.0, 0.0, 0.0, -1.0},
  }};
  for (std::size_t k = 0; k < 3; ++k) {
    Matrix4c& m = g[k + 1];
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        m(i, j + 2) = pauli[k][2 * i + j];
        m(i + 2, j) = -pauli[k][2 * i + j];
      }
    }
  }
  return g;
}

Complex dot_ik(const WaveVector& k, std::size_t j) { return kI * k[j]; }

// sum_j g^j (i k_j)
Matrix4c spatial_part(const WaveVector& k) {
  Matrix4c s;
  for (std::size_t j = 0; j < 3; ++j) {
    s += dot_ik(k, j) * gamma(static_cast<int>(j) + 1);
  }
  return s;
}

}  // namespace

Matrix4c Matrix4c::identity() { return diagonal(1.0, 1.0, 1.0, 1.0); }

Matrix4c Matrix4c::diagonal(Complex d0, Complex d1, Complex d2, Complex d3) {
  Matrix4c m;
  m(0, 0) = d0;
  m(1, 1) = d1;
  m(2, 2) = d2;
  m(3, 3) = d3;
  return m;
}

Matrix4c& Matrix4c::operator+=(const Matrix4c& other) {
  for (std::size_t i = 0; i < 16; ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix4c& Matrix4c::operator-=(const Matrix4c& other) {
  for (std::size_t i = 0; i < 16; ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix4c& Matrix4c::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

double Matrix4c::max_abs() const {
  double best = 0.0;
  for (const auto& e : entries_) best = std::max(best, std::abs(e));
  return best;
}

Matrix4c operator+(Matrix4c lhs, const Matrix4c& rhs) { return lhs += rhs; }
Matrix4c operator-(Matrix4c lhs, const Matrix4c& rhs) { return lhs -= rhs; }
Matrix4c operator*(Complex scale, Matrix4c m) { return m *= scale; }

Matrix4c operator*(const Matrix4c& lhs, const Matrix4c& rhs) {
  Matrix4c out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < 4; ++l) acc += lhs(i, l) * rhs(l, j);
      out(i, j) = acc;
    }
  }
  return out;
}

Spinor operator*(const Matrix4c& m, const Spinor& v) {
  Spinor out{};
  for (std::size_t i = 0; i < 4; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < 4; ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Spinor operator+(const Spinor& a, const Spinor& b) {
  Spinor out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = a[i] + b[i];
  return out;
}

Spinor operator-(const Spinor& a, const Spinor& b) {
  Spinor out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = a[i] - b[i];
  return out;
}

Spinor operator*(Complex scale, const Spinor& v) {
  Spinor out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = scale * v[i];
  return out;
}

double max_abs(const Spinor& v) {
  double best = 0.0;
  for (const auto& e : v) best = std::max(best, std::abs(e));
  return best;
}

double norm2(const Spinor& v) {
  double sum = 0.0;
  for (const auto& e : v) sum += std::norm(e);
  return sum;
}

const Matrix4c& gamma(int mu) {
  static const std::array<Matrix4c, 4> gammas = make_gammas();
  return gammas.at(static_cast<std::size_t>(mu));
}

const ProjectorPair& projectors() {
  static const ProjectorPair pair = [] {
    const Matrix4c id = Matrix4c::identity();
    return ProjectorPair{0.5 * (id + gamma(0)), 0.5 * (id - gamma(0))};
  }();
  return pair;
}

OperatorSymbol dirac_symbol(double t, const WaveVector& k,
                            const CosmologyParams& p) {
  const double ell = p.ell();
  const Complex m = p.mass();
  const Matrix4c id = Matrix4c::identity();
  const Matrix4c spatial = spatial_part(k);
  const double t_ell = std::pow(t, -ell);

  OperatorSymbol s;
  s.coeff_dt = kI * gamma(0);
  s.coeff_0 = (kI * t_ell) * spatial + (kI * (1.5 * ell / t)) * gamma(0) -
              (m / t) * id;
  s.d_coeff_0 = (kI * (-ell) * t_ell / t) * spatial +
                (kI * (-1.5 * ell / (t * t))) * gamma(0) + (m / (t * t)) * id;
  return s;
}

OperatorSymbol dco_symbol(double t, const WaveVector& k,
                          const CosmologyParams& p) {
  const double ell = p.ell();
  const Complex m = p.mass();
  const auto& [gU, gL] = projectors();
  const Complex up = cpow(t, kI * m);
  const Complex down = cpow(t, -kI * m);
  const Matrix4c twist = up * gU + down * gL;
  const Matrix4c d_twist = (kI * m * up / t) * gU - (kI * m * down / t) * gL;
  const Matrix4c spatial = spatial_part(k);

  const double t_half = std::pow(t, -0.5 * ell);
  const double t_three_half = std::pow(t, -1.5 * ell);

  OperatorSymbol s;
  s.coeff_dt = (kI * t_half) * (gamma(0) * twist);
  s.coeff_0 = (kI * t_three_half) * (spatial * twist);
  s.d_coeff_dt = (kI * (-0.5 * ell) * t_half / t) * (gamma(0) * twist) +
                 (kI * t_half) * (gamma(0) * d_twist);
  s.d_coeff_0 = (kI * (-1.5 * ell) * t_three_half / t) * (spatial * twist) +
                (kI * t_three_half) * (spatial * d_twist);
  return s;
}

Spinor apply_symbol(const OperatorSymbol& symbol, const Spinor& value,
                    const Spinor& derivative) {
  return symbol.coeff_dt * derivative + symbol.coeff_0 * value;
}

Spinor PolynomialSpinor::value(double t) const {
  Spinor out{};
  for (std::size_t c = 0; c < 4; ++c) {
    const auto& q = coefficients[c];
    out[c] = q[0] + t * (q[1] + t * (q[2] + t * q[3]));
  }
  return out;
}

Spinor PolynomialSpinor::derivative(double t) const {
  Spinor out{};
  for (std::size_t c = 0; c < 4; ++c) {
    const auto& q = coefficients[c];
    out[c] = q[1] + t * (2.0 * q[2] + t * 3.0 * q[3]);
  }
  return out;
}

Spinor PolynomialSpinor::second_derivative(double t) const {
  Spinor out{};
  for (std::size_t c = 0; c < 4; ++c) {
    const auto& q = coefficients[c];
    out[c] = 2.0 * q[2] + 6.0 * t * q[3];
  }
  return out;
}

double verify_composition(double t, const WaveVector& k,
                          const CosmologyParams& p,
                          const PolynomialSpinor& psi) {
  const Spinor v = psi.value(t);
  const Spinor d1 = psi.derivative(t);
  const Spinor d2 = psi.second_derivative(t);

  const OperatorSymbol co = dco_symbol(t, k, p);
  const OperatorSymbol dirac = dirac_symbol(t, k, p);
  const Spinor chi = apply_symbol(co, v, d1);
  const Spinor d_chi =
      co.d_coeff_dt * d1 + co.coeff_dt * d2 + co.d_coeff_0 * v + co.coeff_0 * d1;
  const Spinor lhs = apply_symbol(dirac, chi, d_chi);

  const double ell = p.ell();
  const Complex m = p.mass();
  const double k2 = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
  const double spatial = std::pow(t, -2.0 * ell) * k2;
  const auto reduced = [&](Complex mass) {
    return d2 + spatial * v + ((ell + 2.0 * kI * mass) / t) * d1;
  };
  const Complex a = 0.5 * ell - kI * m;
  const Complex w = 0.5 * ell + kI * m;
  const auto& [gU, gL] = projectors();
  const Spinor rhs = -1.0 * (cpow(t, -a) * (gU * reduced(m)) +
                             cpow(t, -w) * (gL * reduced(-m)));
  return max_abs(lhs - rhs) / (1.0 + max_abs(rhs));
}

double verify_condition13(const WaveVector& k, double t, Complex m) {
  // Products in extended precision: with |t^(im)| up to 1e2 the double
  // rounding of the sandwich alone is ~|k|^2 * eps.
  using CL = std::complex<long double>;
  using ML = std::array<std::array<CL, 4>, 4>;
  const auto widen = [](const Matrix4c& a) {
    ML out{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        out[i][j] = CL(a(i, j).real(), a(i, j).imag());
    return out;
  };
  const auto mul = [](const ML& a, const ML& b) {
    ML out{};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t l = 0; l < 4; ++l) out[i][j] += a[i][l] * b[l][j];
    return out;
  };
  const CL im = CL(0.0L, 1.0L) * CL(m.real(), m.imag());
  const long double log_t = std::log(static_cast<long double>(t));
  const CL up = std::exp(im * log_t);
  const CL down = std::exp(-im * log_t);
  const auto& [gU, gL] = projectors();
  const ML wU = widen(gU), wL = widen(gL);
  ML left{}, right{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      left[i][j] = down * wU[i][j] + up * wL[i][j];
      right[i][j] = up * wU[i][j] + down * wL[i][j];
    }
  }
  ML sum{};
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const CL weight = CL(0.0L, k[a - 1]) * CL(0.0L, k[b - 1]);
      const ML term = mul(mul(left, mul(widen(gamma(a)), widen(gamma(b)))), right);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) sum[i][j] += weight * term[i][j];
    }
  }
  const long double k2 = static_cast<long double>(k[0]) * k[0] +
                         static_cast<long double>(k[1]) * k[1] +
                         static_cast<long double>(k[2]) * k[2];
  long double worst = 0.0L;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(sum[i][j] - (i == j ? k2 : 0.0L)));
  return static_cast<double>(worst);
}

}  // namespace flrw
