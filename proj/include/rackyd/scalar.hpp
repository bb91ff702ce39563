#pragma once

// Exact scalar types. Every computation in the library is templated on one of
// these; there is no floating-point mode.

#include <atomic>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace rackyd {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of GF(p). The modulus is process-wide and must be installed with
/// ModP::Scope before any value is created; changing it while values are alive
/// is undefined. Residues are stored in [0, p).
class ModP {
public:
  ModP() = default;
  ModP(long long v) : value_(reduce(v)) {}  // NOLINT: implicit like any scalar literal

  static std::uint64_t modulus() { return modulus_.load(std::memory_order_relaxed); }

  class Scope {
  public:
    explicit Scope(std::uint64_t p);
    ~Scope() { modulus_.store(previous_, std::memory_order_relaxed); }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

  private:
    std::uint64_t previous_;
  };

  std::uint64_t residue() const { return value_; }

  ModP operator-() const { return from_residue(value_ == 0 ? 0 : modulus() - value_); }
  ModP& operator+=(const ModP& o) {
    value_ = (value_ + o.value_) % modulus();
    return *this;
  }
  ModP& operator-=(const ModP& o) { return *this += -o; }
  ModP& operator*=(const ModP& o) {
    value_ = static_cast<std::uint64_t>(static_cast<unsigned __int128>(value_) * o.value_ %
                                        modulus());
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.value_ == b.value_; }
  friend bool operator!=(const ModP& a, const ModP& b) { return a.value_ != b.value_; }
  // Eigen's generic kernels occasionally need an ordering; residues give one.
  friend bool operator<(const ModP& a, const ModP& b) { return a.value_ < b.value_; }

  ModP inverse() const;

  friend std::ostream& operator<<(std::ostream& os, const ModP& v) { return os << v.value_; }

private:
  static ModP from_residue(std::uint64_t r) {
    ModP out;
    out.value_ = r;
    return out;
  }
  static std::uint64_t reduce(long long v);

  std::uint64_t value_ = 0;
  static inline std::atomic<std::uint64_t> modulus_{0};
};

inline ModP::Scope::Scope(std::uint64_t p) : previous_(modulus()) {
  if (p < 2) throw std::invalid_argument("GF(p) modulus must be at least 2");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("GF(p) modulus " + std::to_string(p) + " is not prime");
  if (p > (std::uint64_t{1} << 62)) throw std::invalid_argument("GF(p) modulus too large");
  modulus_.store(p, std::memory_order_relaxed);
}

inline std::uint64_t ModP::reduce(long long v) {
  const auto p = static_cast<long long>(modulus());
  if (p == 0) throw std::logic_error("ModP used without an active modulus");
  long long r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

inline ModP ModP::inverse() const {
  if (value_ == 0) throw std::domain_error("division by zero in GF(p)");
  // Fermat: a^(p-2).
  ModP base = *this, acc(1);
  for (std::uint64_t e = modulus() - 2; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

/// Parsing, formatting and classification for each supported scalar type.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr const char* name = "rational";

  static Rational parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty scalar");
    Integer num, den(1);
    try {
      auto slash = s.find('/');
      num = Integer(s.substr(0, slash));
      if (slash != std::string::npos) den = Integer(s.substr(slash + 1));
    } catch (const std::runtime_error&) {
      throw ParseError("malformed scalar '" + s + "'");
    }
    if (den == 0) throw ParseError("zero denominator in scalar '" + s + "'");
    return Rational(num, den);
  }

  /// "n" for integers, "n/d" otherwise, always lowest terms.
  static std::string format(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return q.str();
  }

  static bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }
};

template <>
struct ScalarTraits<ModP> {
  static constexpr const char* name = "gfp";

  static ModP parse(std::string_view text) {
    Rational q = ScalarTraits<Rational>::parse(text);
    const Integer p(ModP::modulus());
    auto residue = [&](const Integer& v) {
      Integer r = v % p;
      if (r < 0) r += p;
      return ModP(r.convert_to<long long>());
    };
    ModP den = residue(boost::multiprecision::denominator(q));
    if (den == ModP(0))
      throw ParseError("scalar '" + std::string(text) + "' has denominator divisible by p");
    return residue(boost::multiprecision::numerator(q)) / den;
  }

  static std::string format(const ModP& v) { return std::to_string(v.residue()); }
  static bool is_integer(const ModP&) { return true; }
};

template <class S>
bool is_zero(const S& s) {
  return s == S(0);
}

}  // namespace rackyd

namespace Eigen {

template <>
struct NumTraits<rackyd::ModP> : GenericNumTraits<rackyd::ModP> {
  using Real = rackyd::ModP;
  using NonInteger = rackyd::ModP;
  using Literal = rackyd::ModP;
  using Nested = rackyd::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
