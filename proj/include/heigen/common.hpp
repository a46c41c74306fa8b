#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace heigen {

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

enum class ErrorKind {
  InvalidInput,
  SingularRestriction,
  OracleDegenerate,
  SamplerStalled,
  NonFinite,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SingularRestriction: return "SingularRestriction";
    case ErrorKind::OracleDegenerate: return "OracleDegenerate";
    case ErrorKind::SamplerStalled: return "SamplerStalled";
    case ErrorKind::NonFinite: return "NonFinite";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, const char* msg) {
  if (!cond) throw Error(ErrorKind::InvalidInput, msg);
}

// A representative (v, lambda) of a point of P^n away from [0:1].
// lambda plays the role of the homogenizing coordinate, so a zero of
// F_f has f(v) = lambda^(d-1) v.
template <typename Real = double>
struct EigenPairCandidate {
  CVector<Real> v;
  std::complex<Real> lambda{0, 0};

  EigenPairCandidate() = default;
  EigenPairCandidate(CVector<Real> v_, std::complex<Real> l_)
      : v(std::move(v_)), lambda(l_) {}

  Eigen::Index n() const { return v.size(); }

  CVector<Real> stacked() const {
    CVector<Real> w(v.size() + 1);
    w.head(v.size()) = v;
    w(v.size()) = lambda;
    return w;
  }

  static EigenPairCandidate from_stacked(const CVector<Real>& w) {
    return EigenPairCandidate(w.head(w.size() - 1), w(w.size() - 1));
  }

  // same projective point, scaled so that ||(v, lambda)|| = 1
  EigenPairCandidate normalized() const {
    CVector<Real> w = stacked();
    return from_stacked(w / w.norm());
  }

  bool finite() const {
    return v.allFinite() && std::isfinite(lambda.real()) &&
           std::isfinite(lambda.imag());
  }
};

template <typename Real>
inline bool is_finite(const std::complex<Real>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace heigen
