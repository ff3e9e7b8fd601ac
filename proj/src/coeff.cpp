#include "mirahoric/coeff.hpp"

#include <cctype>

namespace mirahoric {

namespace {

long reduce_rational(const Rational& v, long ell) {
  const Integer e = ell;
  Integer num = v.get_num();
  Integer den = v.get_den();
  num %= e;
  den %= e;
  const long d = mod_floor(den.get_si(), ell);
  if (d == 0)
    throw Error(ErrorKind::DivisionByZero,
                "denominator divisible by " + std::to_string(ell));
  return static_cast<long>(
      (static_cast<__int128>(mod_floor(num.get_si(), ell)) * mod_inverse(d, ell)) % ell);
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Rational parse_rational(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw Error(ErrorKind::InvalidArgument, "empty scalar");
  for (char c : t)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw Error(ErrorKind::InvalidArgument, "malformed rational '" + t + "'");
  Rational q;
  try {
    q = Rational(t[0] == '+' ? t.substr(1) : t, 10);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + t + "'");
  }
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + t + "'");
  q.canonicalize();
  return q;
}

}  // namespace

CoeffField CoeffField::prime(long ell) {
  if (!is_prime(ell))
    throw Error(ErrorKind::NotPrime, "coefficient characteristic must be prime, got " +
                                         std::to_string(ell));
  CoeffField f;
  f.ell_ = ell;
  return f;
}

std::string CoeffField::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(ell_);
}

Coeff::Coeff(const CoeffField& field, const Rational& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
    q_.canonicalize();
  } else {
    r_ = reduce_rational(value, field.characteristic());
  }
}

Coeff::Coeff(const CoeffField& field, long value) : field_(field) {
  if (field.is_rational())
    q_ = value;
  else
    r_ = mod_floor(value, field.characteristic());
}

Coeff Coeff::parse(const std::string& text, const CoeffField& field) {
  const std::string t = trim(text);
  const auto pos = t.find("mod");
  if (pos == std::string::npos) return Coeff(field, parse_rational(t));
  const Rational value = parse_rational(t.substr(0, pos));
  const std::string ell_text = trim(t.substr(pos + 3));
  long ell = 0;
  try {
    std::size_t used = 0;
    ell = std::stol(ell_text, &used);
    if (used != ell_text.size()) throw std::invalid_argument(ell_text);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "malformed modulus in '" + t + "'");
  }
  const CoeffField f = CoeffField::prime(ell);
  if (f != field)
    throw Error(ErrorKind::FieldMismatch, "'" + t + "' is not an element of " + field.name());
  return Coeff(f, value);
}

bool Coeff::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Coeff::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

const Rational& Coeff::rational() const {
  if (!field_.is_rational()) throw Error(ErrorKind::FieldMismatch, "not a rational scalar");
  return q_;
}

long Coeff::residue() const {
  if (field_.is_rational()) throw Error(ErrorKind::FieldMismatch, "not a residue scalar");
  return r_;
}

void Coeff::check_same_field(const Coeff& o) const {
  if (field_ != o.field_)
    throw Error(ErrorKind::FieldMismatch,
                "mixing " + field_.name() + " and " + o.field_.name() + " scalars");
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  Coeff out(field_, 0L);
  if (field_.is_rational())
    out.q_ = 1 / q_;
  else
    out.r_ = mod_inverse(r_, field_.characteristic());
  return out;
}

Coeff Coeff::pow(long e) const {
  Coeff base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Coeff acc = one(field_);
  while (k) {
    if (k & 1UL) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.characteristic();
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = mod_floor(r_ - o.r_, field_.characteristic());
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = static_cast<long>((static_cast<__int128>(r_) * o.r_) % field_.characteristic());
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

Coeff Coeff::operator-() const {
  Coeff out = *this;
  if (field_.is_rational())
    out.q_ = -q_;
  else
    out.r_ = mod_floor(-r_, field_.characteristic());
  return out;
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Coeff::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_) + " mod " + std::to_string(field_.characteristic());
}

Coeff Coeff::reduce_to(const CoeffField& target) const {
  if (field_ == target) return *this;
  if (!field_.is_rational() || target.is_rational())
    throw Error(ErrorKind::FieldMismatch,
                "cannot reduce " + field_.name() + " to " + target.name());
  return Coeff(target, q_);
}

std::optional<Coeff> Coeff::sqrt() const {
  if (field_.is_rational()) {
    if (q_ < 0) return std::nullopt;
    const Integer num = q_.get_num(), den = q_.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Coeff(field_, Rational(sn, sd));
  }
  const long ell = field_.characteristic();
  for (long s = 0; s < ell; ++s)
    if ((static_cast<__int128>(s) * s) % ell == r_) return Coeff(field_, s);
  return std::nullopt;
}

CoeffMatrix coeff_zero(std::size_t rows, std::size_t cols, const CoeffField& f) {
  return CoeffMatrix(rows, cols, Coeff::zero(f));
}

CoeffMatrix coeff_identity(std::size_t n, const CoeffField& f) {
  return CoeffMatrix::identity(n, Coeff::zero(f), Coeff::one(f));
}

CoeffMatrix reduce_to(const CoeffMatrix& m, const CoeffField& target) {
  CoeffMatrix out = coeff_zero(m.rows(), m.cols(), target);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).reduce_to(target);
  return out;
}

}  // namespace mirahoric
