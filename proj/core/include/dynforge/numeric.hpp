#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dynforge {

// Exact arithmetic is GMP-backed throughout; everything downstream works
// with these two aliases so the backing type stays swappable.
using Integer = mpz_class;
using Rational = mpq_class;

enum class Errc {
  WrongLength,
  LeadingEntryNonzero,
  DuplicateSourcePoint,
  DegenerateDegree,
  KernelDimensionNotOne,
  InconsistentSystem,
  DegenerateMap,
  IterationCapExceeded,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }
  const char* code_name() const { return code_name(code_); }

  static const char* code_name(Errc c) {
    switch (c) {
      case Errc::WrongLength: return "WrongLength";
      case Errc::LeadingEntryNonzero: return "LeadingEntryNonzero";
      case Errc::DuplicateSourcePoint: return "DuplicateSourcePoint";
      case Errc::DegenerateDegree: return "DegenerateDegree";
      case Errc::KernelDimensionNotOne: return "KernelDimensionNotOne";
      case Errc::InconsistentSystem: return "InconsistentSystem";
      case Errc::DegenerateMap: return "DegenerateMap";
      case Errc::IterationCapExceeded: return "IterationCapExceeded";
      case Errc::ParseError: return "ParseError";
      case Errc::Internal: return "Internal";
    }
    return "Unknown";
  }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

// ln |z| for z != 0, accurate to ~1e-15 relative even for huge z.
inline double log_abs(const Integer& z) {
  signed long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  if (mant < 0) mant = -mant;
  if (mant == 0.0) fail(Errc::Internal, "log_abs(0)");
  return std::log(mant) + static_cast<double>(exp2) * 0.6931471805599453;
}

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// "a" when the denominator is 1, "a/b" otherwise (always lowest terms).
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace dynforge
