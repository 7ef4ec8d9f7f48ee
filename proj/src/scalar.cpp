#include "metalie/scalar.hpp"

#include <cctype>
#include <ostream>

namespace metalie {

  namespace {
    using u128 = unsigned __int128;

    std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
      return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
    }

    std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
      std::uint64_t r = 1 % p;
      while (e != 0) {
        if (e & 1U) {
          r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1U;
      }
      return r;
    }
  }  // namespace

  Field Field::prime(std::uint64_t p) {
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    if (p < 2 || p >= (std::uint64_t{1} << 62U)
        || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
      throw Error("field modulus " + std::to_string(p)
                  + " is not a prime below 2^62");
    }
    return Field{p};
  }

  std::string Field::to_string() const {
    return is_prime() ? "GF(" + std::to_string(modulus) + ")" : "Q";
  }

  Scalar::Scalar(mpq_class q) : q_(std::move(q)) {
    q_.canonicalize();
  }

  Scalar Scalar::residue(std::uint64_t value, std::uint64_t p) {
    Scalar s;
    s.mod_ = p;
    s.r_   = value % p;
    return s;
  }

  Scalar Scalar::parse(std::string_view text) {
    auto valid_int = [](std::string_view t, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && !t.empty() && (t[0] == '-' || t[0] == '+')) {
        i = 1;
      }
      if (i == t.size()) {
        return false;
      }
      for (; i < t.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(t[i])) == 0) {
          return false;
        }
      }
      return true;
    };
    auto        slash = text.find('/');
    std::string num(text.substr(0, slash));
    std::string den = slash == std::string_view::npos
                          ? std::string("1")
                          : std::string(text.substr(slash + 1));
    if (!valid_int(num, true) || !valid_int(den, false)) {
      throw Error("malformed rational '" + std::string(text) + "'");
    }
    if (num[0] == '+') {
      num.erase(0, 1);
    }
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) {
      throw Error("zero denominator in '" + std::string(text) + "'");
    }
    return Scalar(mpq_class(n, d));
  }

  std::uint64_t Scalar::reduce(mpq_class const& q, std::uint64_t p) {
    mpz_class n = q.get_num() % p;
    if (n < 0) {
      n += p;
    }
    mpz_class d = q.get_den() % p;
    if (d == 0) {
      throw Error("denominator of " + q.get_str() + " vanishes modulo "
                  + std::to_string(p));
    }
    std::uint64_t nn = n.get_ui();
    std::uint64_t dd = d.get_ui();
    return mulmod(nn, powmod(dd, p - 2, p), p);
  }

  Scalar Scalar::in(Field const& field) const {
    if (!field.is_prime()) {
      if (is_residue()) {
        throw Error("cannot map a residue into Q");
      }
      return *this;
    }
    if (is_residue()) {
      if (mod_ != field.modulus) {
        throw Error("mixed prime fields");
      }
      return *this;
    }
    return residue(reduce(q_, field.modulus), field.modulus);
  }

  void Scalar::promote_with(Scalar const& o) {
    if (o.mod_ == mod_) {
      return;
    }
    if (mod_ != 0 && o.mod_ != 0) {
      throw Error("arithmetic between different prime fields");
    }
    if (mod_ == 0) {
      *this = in(Field{o.mod_});
    }
  }

  bool Scalar::is_zero() const noexcept {
    return mod_ != 0 ? r_ == 0 : sgn(q_) == 0;
  }

  bool Scalar::is_one() const noexcept {
    return mod_ != 0 ? r_ == 1 : q_ == 1;
  }

  Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (mod_ != 0) {
      s.r_ = r_ == 0 ? 0 : mod_ - r_;
    } else {
      s.q_ = -q_;
    }
    return s;
  }

  Scalar Scalar::inverse() const {
    if (is_zero()) {
      throw Error("division by zero");
    }
    if (mod_ != 0) {
      return residue(powmod(r_, mod_ - 2, mod_), mod_);
    }
    return Scalar(mpq_class(1) / q_);
  }

  Scalar& Scalar::operator+=(Scalar const& o) {
    if (o.mod_ != mod_) {
      promote_with(o);
      if (o.mod_ != mod_) {
        return *this += o.in(Field{mod_});
      }
    }
    if (mod_ != 0) {
      r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + o.r_) % mod_);
    } else {
      q_ += o.q_;
    }
    return *this;
  }

  Scalar& Scalar::operator-=(Scalar const& o) {
    return *this += -o;
  }

  Scalar& Scalar::operator*=(Scalar const& o) {
    if (o.mod_ != mod_) {
      promote_with(o);
      if (o.mod_ != mod_) {
        return *this *= o.in(Field{mod_});
      }
    }
    if (mod_ != 0) {
      r_ = mulmod(r_, o.r_, mod_);
    } else {
      q_ *= o.q_;
    }
    return *this;
  }

  Scalar& Scalar::operator/=(Scalar const& o) {
    return *this *= o.inverse();
  }

  bool operator==(Scalar const& a, Scalar const& b) {
    if (a.mod_ == b.mod_) {
      return a.mod_ != 0 ? a.r_ == b.r_ : a.q_ == b.q_;
    }
    if (a.mod_ != 0 && b.mod_ != 0) {
      return false;
    }
    return a.mod_ != 0 ? a == b.in(Field{a.mod_}) : a.in(Field{b.mod_}) == b;
  }

  std::string Scalar::to_string() const {
    return mod_ != 0 ? std::to_string(r_) : q_.get_str();
  }

  std::ostream& operator<<(std::ostream& os, Scalar const& s) {
    return os << s.to_string();
  }

}  // namespace metalie
