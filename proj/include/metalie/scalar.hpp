#ifndef METALIE_SCALAR_HPP_
#define METALIE_SCALAR_HPP_

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace metalie {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // The coefficient field of a presentation: Q when modulus == 0, GF(p) otherwise.
  struct Field {
    std::uint64_t modulus = 0;

    static Field rationals() { return {}; }
    static Field prime(std::uint64_t p);

    bool is_prime() const noexcept { return modulus != 0; }
    std::string to_string() const;
    friend bool operator==(Field const&, Field const&) = default;
  };

  // Exact field element.
  //
  // A scalar is either a canonical rational or a residue modulo a prime. Plain
  // integer constants are rationals; when a rational meets a residue in an
  // arithmetic operation it is mapped into GF(p) first, so the constants used by
  // the multiplication table (+1, -1) work in either field.
  class Scalar {
   public:
    Scalar() = default;
    Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
    explicit Scalar(mpq_class q);
    static Scalar residue(std::uint64_t value, std::uint64_t p);
    // Parses "3", "-2/7". Throws Error on malformed input or zero denominator.
    static Scalar parse(std::string_view text);

    // Maps a rational into `field` (identity for Q).
    Scalar in(Field const& field) const;

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_residue() const noexcept { return mod_ != 0; }
    std::uint64_t modulus() const noexcept { return mod_; }
    std::uint64_t residue_value() const noexcept { return r_; }
    mpq_class const& rational() const noexcept { return q_; }

    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(Scalar const& o);
    Scalar& operator-=(Scalar const& o);
    Scalar& operator*=(Scalar const& o);
    Scalar& operator/=(Scalar const& o);

    friend Scalar operator+(Scalar a, Scalar const& b) { return a += b; }
    friend Scalar operator-(Scalar a, Scalar const& b) { return a -= b; }
    friend Scalar operator*(Scalar a, Scalar const& b) { return a *= b; }
    friend Scalar operator/(Scalar a, Scalar const& b) { return a /= b; }

    friend bool operator==(Scalar const& a, Scalar const& b);

    // Rationals print as "n" or "n/d"; residues as their representative in [0, p).
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, Scalar const& s);

   private:
    void promote_with(Scalar const& o);
    static std::uint64_t reduce(mpq_class const& q, std::uint64_t p);

    mpq_class     q_;
    std::uint64_t mod_ = 0;
    std::uint64_t r_   = 0;
  };

}  // namespace metalie

#endif  // METALIE_SCALAR_HPP_
