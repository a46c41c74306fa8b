#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "heigen/common.hpp"

namespace heigen {

// Exponents alpha with |alpha| = d in n variables, graded-lex order
// (within a single degree: lexicographically descending, X1^d first).
template <typename Real = double>
class ExponentTable {
 public:
  ExponentTable(int n, int d) : n_(n), d_(d) {
    require(n >= 1 && d >= 0, "exponent table needs n >= 1, d >= 0");
    std::vector<int> a(n, 0);
    fill(a, 0, d);
    size_ = static_cast<Eigen::Index>(flat_.size() / n_);
    weight_.resize(size_);
    for (Eigen::Index k = 0; k < size_; ++k) {
      weight_[k] = std::sqrt(static_cast<Real>(multinomial(alpha(k))));
      index_.emplace(std::vector<int>(alpha(k), alpha(k) + n_), k);
    }
  }

  int vars() const { return n_; }
  int degree() const { return d_; }
  Eigen::Index size() const { return size_; }
  const int* alpha(Eigen::Index k) const { return flat_.data() + k * n_; }
  int alpha(Eigen::Index k, int j) const { return flat_[k * n_ + j]; }
  // sqrt(binom(d, alpha))
  Real weight(Eigen::Index k) const { return weight_[k]; }

  Eigen::Index index_of(const std::vector<int>& a) const {
    auto it = index_.find(a);
    require(it != index_.end(), "exponent not in table");
    return it->second;
  }

  // d! / prod(alpha_i!), exact in integers for d <= 20
  static long double multinomial(const int* a, int n, int d) {
    if (d <= 20) {
      std::uint64_t r = 1;
      int acc = 0;
      for (int j = 0; j < n; ++j) {
        for (int t = 1; t <= a[j]; ++t) {
          ++acc;
          r = r * acc / t;  // stays integral: binomial build-up
        }
      }
      return static_cast<long double>(r);
    }
    long double l = std::lgamma(static_cast<long double>(d) + 1);
    for (int j = 0; j < n; ++j) l -= std::lgamma(static_cast<long double>(a[j]) + 1);
    return std::exp(l);
  }

 private:
  long double multinomial(const int* a) const { return multinomial(a, n_, d_); }

  void fill(std::vector<int>& a, int pos, int rest) {
    if (pos == n_ - 1) {
      a[pos] = rest;
      flat_.insert(flat_.end(), a.begin(), a.end());
      return;
    }
    for (int k = rest; k >= 0; --k) {
      a[pos] = k;
      fill(a, pos + 1, rest - k);
    }
  }

  int n_, d_;
  Eigen::Index size_ = 0;
  std::vector<int> flat_;
  std::vector<Real> weight_;
  std::map<std::vector<int>, Eigen::Index> index_;
};

// Tables are shared; built once per (n, d).
template <typename Real = double>
std::shared_ptr<const ExponentTable<Real>> exponent_table(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const ExponentTable<Real>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_shared<const ExponentTable<Real>>(n, d);
  return slot;
}

inline long double binomial(int a, int b) {
  if (b < 0 || b > a) return 0;
  long double r = 1;
  for (int k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return std::round(r);
}

// m homogeneous polynomials of degree d in n variables, stored in
// Weyl-scaled coefficients: f_i = sum_alpha c(i, alpha) sqrt(binom(d,alpha)) X^alpha.
// Row i of coeffs() is component i, columns follow the exponent table.
template <typename Real = double>
class PolySystem {
 public:
  using Scalar = std::complex<Real>;
  using Table = ExponentTable<Real>;

  PolySystem() = default;

  PolySystem(int n, int d, int components = -1)
      : n_(n), d_(d), table_(make_table(n, d)) {
    coeffs_ = CMatrix<Real>::Zero(components < 0 ? n : components, table_->size());
  }

  PolySystem(int n, int d, CMatrix<Real> coeffs)
      : n_(n), d_(d), table_(make_table(n, d)), coeffs_(std::move(coeffs)) {
    require(coeffs_.cols() == table_->size(), "coefficient count does not match binom(n+d-1,n-1)");
    require(coeffs_.allFinite(), "coefficients must be finite");
  }

  int vars() const { return n_; }
  int degree() const { return d_; }
  int components() const { return static_cast<int>(coeffs_.rows()); }
  Eigen::Index monomials() const { return table_->size(); }
  Eigen::Index total_size() const { return coeffs_.size(); }
  bool square() const { return components() == n_; }

  const Table& table() const { return *table_; }
  const CMatrix<Real>& coeffs() const { return coeffs_; }
  CMatrix<Real>& coeffs() { return coeffs_; }

  PolySystem component(int i) const {
    return PolySystem(n_, d_, CMatrix<Real>(coeffs_.row(i)));
  }

  bool same_shape(const PolySystem& o) const {
    return n_ == o.n_ && d_ == o.d_ && components() == o.components();
  }

  PolySystem& operator+=(const PolySystem& o) {
    require(same_shape(o), "system shape mismatch");
    coeffs_ += o.coeffs_;
    return *this;
  }
  PolySystem& operator-=(const PolySystem& o) {
    require(same_shape(o), "system shape mismatch");
    coeffs_ -= o.coeffs_;
    return *this;
  }
  PolySystem& operator*=(Scalar s) {
    coeffs_ *= s;
    return *this;
  }
  friend PolySystem operator+(PolySystem a, const PolySystem& b) { return a += b; }
  friend PolySystem operator-(PolySystem a, const PolySystem& b) { return a -= b; }
  friend PolySystem operator*(Scalar s, PolySystem a) { return a *= s; }
  friend PolySystem operator*(PolySystem a, Scalar s) { return a *= s; }
  PolySystem operator-() const { return PolySystem(n_, d_, CMatrix<Real>(-coeffs_)); }

  template <typename Other>
  PolySystem<Other> cast() const {
    return PolySystem<Other>(n_, d_, coeffs_.template cast<std::complex<Other>>());
  }

 private:
  static std::shared_ptr<const Table> make_table(int n, int d) {
    require(n >= 1, "n must be positive");
    require(d >= 1, "d must be positive");
    return exponent_table<Real>(n, d);
  }

  int n_ = 0, d_ = 0;
  std::shared_ptr<const Table> table_;
  CMatrix<Real> coeffs_;
};

template <typename Real>
std::complex<Real> bw_inner(const PolySystem<Real>& f, const PolySystem<Real>& g) {
  require(f.same_shape(g), "bw_inner: dimension mismatch");
  // sum f_alpha conj(g_alpha)
  return (g.coeffs().conjugate().cwiseProduct(f.coeffs())).sum();
}

template <typename Real>
Real bw_norm(const PolySystem<Real>& f) {
  return f.coeffs().norm();
}

namespace detail {

template <typename Real>
CMatrix<Real> power_table(const CVector<Real>& x, int d) {
  CMatrix<Real> pw(x.size(), d + 1);
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    pw(j, 0) = 1;
    for (int k = 1; k <= d; ++k) pw(j, k) = pw(j, k - 1) * x(j);
  }
  return pw;
}

}  // namespace detail

// Values sqrt(binom(d,alpha)) x^alpha over the exponent table.
template <typename Real>
CVector<Real> weyl_monomials(const ExponentTable<Real>& t, const CVector<Real>& x) {
  const int n = t.vars();
  CMatrix<Real> pw = detail::power_table<Real>(x, t.degree());
  CVector<Real> m(t.size());
  for (Eigen::Index k = 0; k < t.size(); ++k) {
    std::complex<Real> p(t.weight(k), 0);
    const int* a = t.alpha(k);
    for (int j = 0; j < n; ++j) p *= pw(j, a[j]);
    m(k) = p;
  }
  return m;
}

template <typename Real>
CVector<Real> evaluate(const PolySystem<Real>& f, const CVector<Real>& x) {
  require(x.size() == f.vars(), "evaluate: dimension mismatch");
  return f.coeffs() * weyl_monomials(f.table(), x);
}

template <typename Real>
CMatrix<Real> jacobian(const PolySystem<Real>& f, const CVector<Real>& x) {
  require(x.size() == f.vars(), "jacobian: dimension mismatch");
  const auto& t = f.table();
  const int n = f.vars();
  CMatrix<Real> pw = detail::power_table<Real>(x, f.degree());
  CMatrix<Real> dm(t.size(), n);
  for (Eigen::Index k = 0; k < t.size(); ++k) {
    const int* a = t.alpha(k);
    for (int j = 0; j < n; ++j) {
      if (a[j] == 0) {
        dm(k, j) = 0;
        continue;
      }
      std::complex<Real> p(t.weight(k) * static_cast<Real>(a[j]), 0);
      for (int i = 0; i < n; ++i) p *= pw(i, i == j ? a[i] - 1 : a[i]);
      dm(k, j) = p;
    }
  }
  return f.coeffs() * dm;
}

// F_f(v, lambda) = f(v) - lambda^(d-1) v
template <typename Real>
CVector<Real> ff_eval(const PolySystem<Real>& f, const EigenPairCandidate<Real>& c) {
  require(f.square(), "ff_eval needs n components");
  return evaluate(f, c.v) - std::pow(c.lambda, f.degree() - 1) * c.v;
}

// [Df(v) - lambda^(d-1) I | -(d-1) lambda^(d-2) v], n x (n+1)
template <typename Real>
CMatrix<Real> ff_jacobian(const PolySystem<Real>& f, const EigenPairCandidate<Real>& c) {
  require(f.square(), "ff_jacobian needs n components");
  const int n = f.vars(), d = f.degree();
  CMatrix<Real> J(n, n + 1);
  J.leftCols(n) = jacobian(f, c.v);
  J.leftCols(n).diagonal().array() -= std::pow(c.lambda, d - 1);
  // lambda^0 = 1 also for lambda = 0 (d = 2)
  std::complex<Real> l2 = d == 2 ? std::complex<Real>(1) : std::pow(c.lambda, d - 2);
  J.col(n) = -static_cast<Real>(d - 1) * l2 * c.v;
  return J;
}

// raw monomial coefficients c_alpha -> Weyl coefficients c_alpha / sqrt(binom(d,alpha))
template <typename Real>
PolySystem<Real> monomial_to_weyl(int n, int d, const CMatrix<Real>& raw) {
  auto t = exponent_table<Real>(n, d);
  require(raw.cols() == t->size(), "monomial_to_weyl: wrong coefficient count");
  CMatrix<Real> w = raw;
  for (Eigen::Index k = 0; k < t->size(); ++k) w.col(k) /= t->weight(k);
  return PolySystem<Real>(n, d, std::move(w));
}

template <typename Real>
CMatrix<Real> weyl_to_monomial(const PolySystem<Real>& f) {
  CMatrix<Real> raw = f.coeffs();
  for (Eigen::Index k = 0; k < f.monomials(); ++k) raw.col(k) *= f.table().weight(k);
  return raw;
}

// Raw monomial coefficients of prod_k (forms[k]^T X); degree = forms.size().
template <typename Real>
CVector<Real> linear_form_product(int n, const std::vector<CVector<Real>>& forms) {
  CVector<Real> cur = CVector<Real>::Ones(1);
  std::vector<int> a(n);
  for (std::size_t k = 0; k < forms.size(); ++k) {
    const auto& from = *exponent_table<Real>(n, static_cast<int>(k));
    const auto& to = *exponent_table<Real>(n, static_cast<int>(k) + 1);
    CVector<Real> next = CVector<Real>::Zero(to.size());
    for (Eigen::Index i = 0; i < from.size(); ++i) {
      if (cur(i) == std::complex<Real>(0)) continue;
      a.assign(from.alpha(i), from.alpha(i) + n);
      for (int j = 0; j < n; ++j) {
        ++a[j];
        next(to.index_of(a)) += cur(i) * forms[k](j);
        --a[j];
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// <X, z>^k (ell^T X) as a single Weyl-scaled polynomial; <X,z> = X^T conj(z)
template <typename Real>
PolySystem<Real> zeta_power_times_linear(const CVector<Real>& z, int k,
                                         const CVector<Real>& ell) {
  const int n = static_cast<int>(z.size());
  std::vector<CVector<Real>> forms(k, CVector<Real>(z.conjugate()));
  forms.push_back(ell);
  CMatrix<Real> raw = linear_form_product<Real>(n, forms).transpose();
  return monomial_to_weyl<Real>(n, k + 1, raw);
}

// <X, z>^d as a single Weyl-scaled polynomial
template <typename Real>
PolySystem<Real> zeta_power(const CVector<Real>& z, int d) {
  const int n = static_cast<int>(z.size());
  std::vector<CVector<Real>> forms(d, CVector<Real>(z.conjugate()));
  CMatrix<Real> raw = linear_form_product<Real>(n, forms).transpose();
  return monomial_to_weyl<Real>(n, d, raw);
}

// X -> f(A X)
template <typename Real>
PolySystem<Real> compose_linear(const PolySystem<Real>& f, const CMatrix<Real>& A) {
  const int n = f.vars(), d = f.degree();
  require(A.rows() == n && A.cols() == n, "compose_linear: A must be n x n");
  const auto& t = f.table();
  CMatrix<Real> raw = weyl_to_monomial(f);
  CMatrix<Real> out = CMatrix<Real>::Zero(f.components(), t.size());
  for (Eigen::Index k = 0; k < t.size(); ++k) {
    std::vector<CVector<Real>> forms;
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < t.alpha(k, j); ++r) forms.push_back(A.row(j).transpose());
    CVector<Real> p = linear_form_product<Real>(n, forms);
    out += raw.col(k) * p.transpose();
  }
  return monomial_to_weyl<Real>(n, d, out);
}

// U.f = U o f o U^{-1}
template <typename Real>
PolySystem<Real> unitary_action(const CMatrix<Real>& U, const PolySystem<Real>& f) {
  require(f.square(), "unitary_action needs a square system");
  PolySystem<Real> g = compose_linear(f, CMatrix<Real>(U.adjoint()));
  g.coeffs() = U * g.coeffs();
  return g;
}

// Stack components of several systems (same n, d) into one.
template <typename Real>
PolySystem<Real> stack(const std::vector<PolySystem<Real>>& parts) {
  require(!parts.empty(), "stack: nothing to stack");
  Eigen::Index rows = 0;
  for (const auto& p : parts) {
    require(p.vars() == parts[0].vars() && p.degree() == parts[0].degree(), "stack: shape mismatch");
    rows += p.components();
  }
  CMatrix<Real> c(rows, parts[0].monomials());
  Eigen::Index r = 0;
  for (const auto& p : parts) {
    c.middleRows(r, p.components()) = p.coeffs();
    r += p.components();
  }
  return PolySystem<Real>(parts[0].vars(), parts[0].degree(), std::move(c));
}

}  // namespace heigen
