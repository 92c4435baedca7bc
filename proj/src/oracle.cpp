#include "wres/numeric/oracle.hpp"

#include <Eigen/LU>
#include <functional>
#include <numbers>

#include "wres/clifford/connection.hpp"
#include "wres/numeric/quadrature.hpp"

namespace wres {

namespace {

using cd = std::complex<double>;
using Mat = Eigen::Matrix<cd, 16, 16>;
constexpr int kN = 4;
constexpr int kNrm = 3;
const cd kJ(0, 1);

struct Covector {
  std::array<double, 3> t;  // tangential, |t| = 1
  cd n;                     // normal component, possibly complex
};

}  // namespace

struct NumericOracle::Impl {
  OracleSettings s;
  std::array<Mat, kN> c, ch;
  std::array<Mat, kN> B;  // sigma_i + a_i at h'(0) = s.h_prime
  Mat p0;                 // sigma_0(D_A)
  Mat A;

  Impl(const SubbundleData& data, const OracleSettings& settings) : s(settings) {
    auto g = build_generators<cd>(kN);
    for (int j = 0; j < kN; ++j) c[j] = g.c[j], ch[j] = g.c_hat[j];
    A = build_A(g, data);
    auto omega = connection_from_metric(kN, s.h_prime);
    Mat P1 = Mat::Zero(), P2 = Mat::Zero();
    for (int i = 0; i < kN; ++i) {
      Mat sigma = Mat::Zero(), a = Mat::Zero();
      for (int st = 0; st < kN; ++st)
        for (int tt = 0; tt < kN; ++tt) {
          sigma -= 0.25 * omega[i][st][tt] * c[st] * c[tt];
          a += 0.25 * omega[i][st][tt] * ch[st] * ch[tt];
        }
      B[i] = sigma + a;
      P1 += c[i] * a;
      P2 += c[i] * sigma;
    }
    p0 = P1 + P2 + A;
  }

  // d/dx_n at 0 of a matrix function of a complex x_n
  Mat dxn(const std::function<Mat(cd)>& f) const {
    Mat sum = Mat::Zero();
    const int m = s.xn_points;
    for (int k = 0; k < m; ++k) {
      const cd e = std::polar(1.0, 2 * std::numbers::pi * k / m);
      sum += f(s.xn_radius * e) * (1.0 / e);
    }
    return sum / (double(m) * s.xn_radius);
  }

  Mat c_dx(int j, cd xn) const {
    return j < kNrm ? Mat(c[j] * std::sqrt(1.0 + s.h_prime * xn)) : c[j];
  }
  Mat p1(const Covector& xi, cd xn) const {
    Mat m = xi.n * c_dx(kNrm, xn);
    for (int j = 0; j < kNrm; ++j) m += xi.t[j] * c_dx(j, xn);
    return kJ * m;
  }
  // d/dxi_n of sigma_1(D_A)
  Mat dp1() const { return kJ * c[kNrm]; }
  Mat P2(const Covector& xi, cd xn) const {
    Mat p = p1(xi, xn);
    return p * p;
  }
  Mat dP2(const Covector& xi) const {
    Mat p = p1(xi, 0);
    return dp1() * p + p * dp1();
  }
  Mat P21(const Covector& xi) const {
    Mat p = p1(xi, 0);
    Mat dxp = dxn([&](cd x) { return p1(xi, x); });
    return p * p0 + p0 * p + dp1() * (-kJ) * dxp;
  }
  Mat P3(const Covector& xi, cd xn) const { return P2(xi, xn) * p1(xi, xn); }
  Mat P32(const Covector& xi) const {
    Mat dxp = dxn([&](cd x) { return p1(xi, x); });
    return P2(xi, 0) * p0 + P21(xi) * p1(xi, 0) + dP2(xi) * (-kJ) * dxp;
  }
  Mat dP3(const Covector& xi) const { return dP2(xi) * p1(xi, 0) + P2(xi, 0) * dp1(); }

  // top symbol of D_A^{-m} at x_n
  Mat q_top(int m, const Covector& xi, cd xn) const {
    Mat p = m == 1 ? p1(xi, xn) : m == 2 ? P2(xi, xn) : P3(xi, xn);
    return p.partialPivLu().inverse();
  }
  Mat dxn_q_top(int m, const Covector& xi) const {
    return dxn([&](cd x) { return q_top(m, xi, x); });
  }
  // next symbol of D_A^{-m} by the parametrix recursion
  Mat q_next(int m, const Covector& xi) const {
    Mat q = q_top(m, xi, 0);
    Mat dq = dxn_q_top(m, xi);
    Mat low = m == 1 ? p0 : m == 2 ? P21(xi) : P32(xi);
    Mat dtop = m == 1 ? dp1() : m == 2 ? dP2(xi) : dP3(xi);
    return -q * (low * q + dtop * (-kJ) * dq);
  }

  // nabla_X nabla_Y symbols
  cd N2(const Covector& xi, const FieldSetting& f) const {
    cd v = 0;
    for (int j = 0; j < kN; ++j)
      for (int l = 0; l < kN; ++l) v -= f.X[j] * f.Y[l] * comp(xi, j) * comp(xi, l);
    return v;
  }
  cd dN2(const Covector& xi, const FieldSetting& f) const {
    cd v = 0;
    for (int l = 0; l < kN; ++l) v -= (f.X[kNrm] * f.Y[l] + f.X[l] * f.Y[kNrm]) * comp(xi, l);
    return v;
  }
  Mat N1(const Covector& xi, const FieldSetting& f) const {
    Mat cX = Mat::Zero(), cY = Mat::Zero(), BX = Mat::Zero(), BY = Mat::Zero();
    cd xX = 0, xY = 0, dterm = 0;
    for (int j = 0; j < kN; ++j) {
      cX += f.X[j] * c[j];
      cY += f.Y[j] * c[j];
      BX += f.X[j] * B[j];
      BY += f.Y[j] * B[j];
      xX += f.X[j] * comp(xi, j);
      xY += f.Y[j] * comp(xi, j);
      for (int l = 0; l < kN; ++l) dterm += f.X[j] * f.dY[j][l] * comp(xi, l);
    }
    Mat m = kJ * dterm * Mat::Identity();
    m += kJ * xX * BY + kJ * xY * BX;
    m -= 0.5 * kJ * xX * (cY * A + A * cY);
    m -= 0.5 * kJ * xY * (cX * A + A * cX);
    return m;
  }
  static cd comp(const Covector& xi, int j) { return j < kNrm ? cd(xi.t[j]) : xi.n; }
};

NumericOracle::NumericOracle(const SubbundleData& data, OracleSettings settings)
    : impl_(std::make_unique<Impl>(data, settings)), settings_(settings) {}

NumericOracle::~NumericOracle() = default;

FieldSetting basis_probe(BasisElement e) {
  FieldSetting f;
  switch (e) {
    case BasisElement::TangentialMetric: f.X[0] = f.Y[0] = 1; break;
    case BasisElement::NormalProduct: f.X[kNrm] = f.Y[kNrm] = 1; break;
    case BasisElement::NormalDerivative: f.X[kNrm] = 1, f.dY[kNrm][kNrm] = 1; break;
    case BasisElement::TangentialDerivative: f.X[0] = 1, f.dY[0][kNrm] = 1; break;
  }
  return f;
}

namespace {

struct FirstPieces {
  Mat top, dtop, next;
};

}  // namespace

std::complex<double> NumericOracle::evaluate(const BoundaryCase& bc, OperatorPair pair, const FieldSetting& f) const {
  return evaluate(bc, pair, std::vector<FieldSetting>{f})[0];
}

std::vector<std::complex<double>> NumericOracle::evaluate(const BoundaryCase& bc, OperatorPair pair,
                                                          const std::vector<FieldSetting>& fields) const {
  const std::size_t nf = fields.size();
  std::vector<cd> total(nf, 0.0);
  // the model symbols carry no x' dependence, so d_{x'} sigma_l = 0
  if (bc.alpha) return total;
  const Impl& m = *impl_;
  const PairSpec& spec = pair_spec(pair);
  const int q_order = pair == OperatorPair::D2D2 ? 2 : 1;   // right factor of the first operator
  const int second_order = -spec.second_order;              // D_A^{-second_order}
  const bool first_top = bc.r == spec.first_order;
  const bool second_top = bc.l == spec.second_order;
  if (!first_top && bc.j) throw std::logic_error("x_n derivative of a lower-order symbol");
  if (!second_top && bc.k) throw std::logic_error("x_n derivative of a lower-order symbol");

  // S^2 product rule
  const QuadratureRule& gt = gauss_legendre(m.s.sphere_theta);
  const QuadratureRule& gx = gauss_legendre(m.s.xi_points);
  const int nz = m.s.contour_points;
  const int order = bc.k + bc.j + 1;  // derivatives moved onto the projected factor
  double fact = 1;
  for (int t = 2; t <= order; ++t) fact *= t;

  std::vector<double> xs, xw;
  {
    const double half = std::numbers::pi / 2, h = 2 * half / m.s.xi_panels;
    for (int p = 0; p < m.s.xi_panels; ++p)
      for (int i = 0; i < m.s.xi_points; ++i) {
        double t = -half + (p + 0.5) * h + 0.5 * h * gx.nodes[i];
        double cs = std::cos(t);
        xs.push_back(std::tan(t));
        xw.push_back(0.5 * h * gx.weights[i] / (cs * cs));
      }
  }
  std::vector<cd> zs(nz), dz(nz);
  for (int s = 0; s < nz; ++s) {
    const cd e = std::polar(1.0, 2 * std::numbers::pi * s / nz);
    zs[s] = kJ + m.s.contour_radius * e;
    dz[s] = kJ * m.s.contour_radius * e * (2 * std::numbers::pi / nz);
  }

  for (int a = 0; a < m.s.sphere_theta; ++a)
    for (int b = 0; b < m.s.sphere_phi; ++b) {
      const double ct = gt.nodes[a], st = std::sqrt(1 - ct * ct);
      const double ph = 2 * std::numbers::pi * (b + 0.5) / m.s.sphere_phi;
      const double w = gt.weights[a] * 2 * std::numbers::pi / m.s.sphere_phi;
      const std::array<double, 3> t{st * std::cos(ph), st * std::sin(ph), ct};

      // first factor before projection, on the contour around i
      std::vector<std::vector<Mat>> fz(nf, std::vector<Mat>(nz));
      for (int s = 0; s < nz; ++s) {
        Covector xi{t, zs[s]};
        if (first_top && bc.j == 0) {
          Mat q = m.q_top(q_order, xi, 0);
          for (std::size_t k = 0; k < nf; ++k) fz[k][s] = m.N2(xi, fields[k]) * q;
        } else if (first_top) {
          Mat dq = m.dxn_q_top(q_order, xi);
          for (std::size_t k = 0; k < nf; ++k) fz[k][s] = m.N2(xi, fields[k]) * dq;
        } else {
          Mat q = m.q_top(q_order, xi, 0), dq = m.dxn_q_top(q_order, xi), qn = m.q_next(q_order, xi);
          for (std::size_t k = 0; k < nf; ++k) {
            const FieldSetting& f = fields[k];
            fz[k][s] = m.N2(xi, f) * qn + m.N1(xi, f) * q - kJ * m.dN2(xi, f) * dq;
          }
        }
      }
      for (std::size_t x = 0; x < xs.size(); ++x) {
        Covector xi{t, xs[x]};
        Mat g = !second_top ? m.q_next(second_order, xi)
                : bc.k      ? m.dxn_q_top(second_order, xi)
                            : m.q_top(second_order, xi, 0);
        // order-th derivative of pi+ f: (1/2 pi i) \oint f(z) (-1)^order order! / (xi - z)^{order+1} dz
        const Mat gt = g.transpose();
        for (std::size_t k = 0; k < nf; ++k) {
          Mat F = Mat::Zero();
          for (int s = 0; s < nz; ++s) {
            cd kern = (order % 2 ? -fact : fact) / std::pow(xs[x] - zs[s], order + 1) * dz[s] / (2 * std::numbers::pi * kJ);
            F += kern * fz[k][s];
          }
          // integration by parts moved j + 1 derivatives from the second factor
          cd tr = F.cwiseProduct(gt).sum();
          total[k] += w * xw[x] * ((bc.j + 1) % 2 ? -tr : tr);
        }
      }
    }
  for (cd& v : total) v *= bc.prefactor.to_complex();
  return total;
}

std::map<BasisElement, std::complex<double>> NumericOracle::evaluate_basis(const BoundaryCase& c,
                                                                           OperatorPair pair) const {
  std::map<BasisElement, std::complex<double>> out;
  std::vector<FieldSetting> probes;
  for (BasisElement e : kBasis) probes.push_back(basis_probe(e));
  std::vector<cd> v = evaluate(c, pair, probes);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const BasisElement e = kBasis[k];
    const bool carries_h = e == BasisElement::TangentialMetric || e == BasisElement::NormalProduct;
    out[e] = v[k] / (carries_h ? settings_.h_prime : 1.0);
  }
  return out;
}

}  // namespace wres
