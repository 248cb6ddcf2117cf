#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <string>

// Eigen scalar plumbing for the GMP exact types. Everything downstream of
// this header computes over Q with arbitrary-precision integers; there is no
// floating point and no tolerance anywhere in the library.

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40,
  };
};

}  // namespace Eigen

namespace vgit {

using Rational = mpq_class;
using Integer = mpz_class;
using Index = Eigen::Index;

using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Integer, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

inline bool is_zero(const RatVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return false;
  return true;
}

inline bool is_zero(const IntVec& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) return false;
  return true;
}

inline RatVec rat_vec(const IntVec& v) {
  RatVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

// Requires every entry to be an integer (denominator 1).
inline IntVec int_vec(const RatVec& v) {
  IntVec r(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    r[i] = v[i].get_num();
    if (v[i].get_den() != 1)
      throw std::invalid_argument("int_vec: non-integral entry");
  }
  return r;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Integer dot(const IntVec& a, const IntVec& b) {
  Integer s = 0;
  for (Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Scales v by a positive rational so that the entries become coprime
// integers. The direction of the ray through v is preserved; zero maps to
// zero.
inline RatVec primitive(const RatVec& v) {
  Integer l = 1;
  for (Index i = 0; i < v.size(); ++i) l = lcm(l, v[i].get_den());
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    Integer t = v[i].get_num() * (l / v[i].get_den());
    g = gcd(g, t);
  }
  if (g == 0) return RatVec::Zero(v.size());
  RatVec r(v.size());
  Rational f = Rational(l) / Rational(g);
  for (Index i = 0; i < v.size(); ++i) {
    r[i] = v[i] * f;
    r[i].canonicalize();
  }
  return r;
}

// Primitive representative with the sign fixed so that the first nonzero
// coordinate is positive. Used for sign-ambiguous data (hyperplane normals,
// lineality directions).
inline RatVec primitive_signed(const RatVec& v) {
  RatVec r = primitive(v);
  for (Index i = 0; i < r.size(); ++i) {
    if (sgn(r[i]) > 0) break;
    if (sgn(r[i]) < 0) {
      r = -r;
      break;
    }
  }
  return r;
}

inline int compare(const RatVec& a, const RatVec& b) {
  for (Index i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
  return compare(a, b) < 0;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  for (Index i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

inline std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace vgit
