#include "symlie/field.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace symlie {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotAnEigenvector: return "NotAnEigenvector";
    case ErrorCode::EigenvaluesNotInField: return "EigenvaluesNotInField";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

bool is_prime_number(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime_number(p))
    throw Error(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) + " is not a supported prime");
  return Field(Kind::Prime, p);
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::uint64_t parse_unsigned(const std::string& digits, std::string_view context) {
  if (digits.empty() || digits.size() > 18 || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::Parse, "expected an unsigned integer in '" + std::string(context) + "'");
  return std::stoull(digits);
}

mpq_class parse_rational(std::string text, std::string_view context) {
  if (!text.empty() && text[0] == '+') text.erase(0, 1);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty number in '" + std::string(context) + "'");
  bool ok = true;
  std::size_t slash = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '-' && (k == 0 || text[k - 1] == '/')) continue;
    if (c == '/') {
      ++slash;
      if (k == 0 || k + 1 == text.size()) ok = false;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) ok = false;
  }
  if (!ok || slash > 1) throw Error(ErrorCode::Parse, "malformed rational '" + std::string(context) + "'");
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw Error(ErrorCode::Parse, "malformed rational '" + std::string(context) + "'");
  if (q.get_den() == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(context) + "'");
  q.canonicalize();
  return q;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

}  // namespace

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  if (base == 0) throw Error(ErrorCode::Singular, "division by zero in prime field");
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

Field Field::parse(std::string_view tag_text) {
  std::string tag = strip_spaces(tag_text);
  if (tag == "Q") return rational();
  if (tag == "Qi" || tag == "Q(i)") return gaussian();
  std::string digits;
  if (tag.rfind("Fp(", 0) == 0 && tag.size() > 4 && tag.back() == ')')
    digits = tag.substr(3, tag.size() - 4);
  else if (tag.rfind("F_", 0) == 0)
    digits = tag.substr(2);
  else if (tag.rfind("Fp", 0) == 0)
    digits = tag.substr(2);
  else if (tag.rfind("F", 0) == 0)
    digits = tag.substr(1);
  else
    throw Error(ErrorCode::Parse, "unknown field tag '" + std::string(tag_text) + "' (expected Q, Qi or Fp(p))");
  return prime(parse_unsigned(digits, tag_text));
}

std::string Field::tag() const {
  switch (kind_) {
    case Kind::Rational: return "Q";
    case Kind::Gaussian: return "Qi";
    case Kind::Prime: return "Fp(" + std::to_string(p_) + ")";
  }
  return "?";
}

Scalar::Scalar(Field field) : field_(field) {}

Scalar Scalar::from_int(Field field, long value) { return from_rational(field, mpq_class(value)); }

Scalar Scalar::from_rational(Field field, const mpq_class& value) {
  Scalar s(field);
  if (field.is_prime()) {
    std::uint64_t p = field.characteristic();
    std::uint64_t den = reduce_mod(value.get_den(), p);
    if (den == 0) throw Error(ErrorCode::Singular, "denominator vanishes modulo " + std::to_string(p));
    s.r_ = mulmod(reduce_mod(value.get_num(), p), mod_inverse(den, p), p);
  } else {
    if (value.get_den() == 0) throw Error(ErrorCode::Singular, "zero denominator");
    s.re_ = value;
    s.re_.canonicalize();
  }
  return s;
}

Scalar Scalar::gaussian(const mpq_class& re, const mpq_class& im) {
  if (re.get_den() == 0 || im.get_den() == 0) throw Error(ErrorCode::Singular, "zero denominator");
  Scalar s(Field::gaussian());
  s.re_ = re;
  s.im_ = im;
  s.re_.canonicalize();
  s.im_.canonicalize();
  return s;
}

Scalar Scalar::imaginary_unit() { return gaussian(0, 1); }

Scalar Scalar::parse(Field field, std::string_view raw) {
  std::string text = strip_spaces(raw);
  if (text.size() >= 2 && text.front() == '"' && text.back() == '"') text = text.substr(1, text.size() - 2);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty scalar");

  auto mod_pos = text.find("mod");
  if (mod_pos != std::string::npos) {
    if (!field.is_prime()) throw Error(ErrorCode::FieldMismatch, "residue '" + std::string(raw) + "' given for field " + field.tag());
    std::uint64_t p = parse_unsigned(text.substr(mod_pos + 3), raw);
    if (p != field.characteristic())
      throw Error(ErrorCode::FieldMismatch, "residue '" + std::string(raw) + "' does not belong to " + field.tag());
    mpq_class value = parse_rational(text.substr(0, mod_pos), raw);
    if (value.get_den() != 1) throw Error(ErrorCode::Parse, "residue must be an integer in '" + std::string(raw) + "'");
    return from_rational(field, value);
  }

  if (text.back() == 'i') {
    if (field.kind() != Field::Kind::Gaussian)
      throw Error(ErrorCode::FieldMismatch, "imaginary scalar '" + std::string(raw) + "' given for field " + field.tag());
    std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
        split = k;
        break;
      }
    }
    std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
    std::string im_text = split == std::string::npos ? body : body.substr(split);
    if (im_text.empty() || im_text == "+") im_text = "1";
    if (im_text == "-") im_text = "-1";
    if (!im_text.empty() && im_text.back() == '*') im_text.pop_back();
    mpq_class re = re_text.empty() ? mpq_class(0) : parse_rational(re_text, raw);
    return gaussian(re, parse_rational(im_text, raw));
  }

  return from_rational(field, parse_rational(text, raw));
}

bool Scalar::is_zero() const noexcept {
  if (field_.is_prime()) return r_ == 0;
  return re_ == 0 && im_ == 0;
}

bool Scalar::is_one() const noexcept {
  if (field_.is_prime()) return r_ == 1 % field_.characteristic();
  return re_ == 1 && im_ == 0;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw Error(ErrorCode::FieldMismatch, "cannot combine scalars of " + field_.tag() + " and " + o.field_.tag());
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (field_.is_prime()) {
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  } else {
    s.re_ = -re_;
    s.im_ = -im_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_prime()) {
    r_ = (r_ + o.r_) % field_.characteristic();
  } else {
    re_ += o.re_;
    im_ += o.im_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_prime()) {
    std::uint64_t p = field_.characteristic();
    r_ = (r_ + p - o.r_) % p;
  } else {
    re_ -= o.re_;
    im_ -= o.im_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  switch (field_.kind()) {
    case Field::Kind::Prime:
      r_ = mulmod(r_, o.r_, field_.characteristic());
      break;
    case Field::Kind::Rational:
      re_ *= o.re_;
      break;
    case Field::Kind::Gaussian: {
      mpq_class re = re_ * o.re_ - im_ * o.im_;
      mpq_class im = re_ * o.im_ + im_ * o.re_;
      re_ = std::move(re);
      im_ = std::move(im);
      break;
    }
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Singular, "division by zero");
  Scalar s(field_);
  switch (field_.kind()) {
    case Field::Kind::Prime:
      s.r_ = mod_inverse(r_, field_.characteristic());
      break;
    case Field::Kind::Rational:
      s.re_ = 1 / re_;
      break;
    case Field::Kind::Gaussian: {
      mpq_class norm = re_ * re_ + im_ * im_;
      s.re_ = re_ / norm;
      s.im_ = -im_ / norm;
      break;
    }
  }
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = from_int(field_, 1);
  Scalar base = *this;
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  switch (field_.kind()) {
    case Field::Kind::Prime:
      return std::to_string(r_) + " mod " + std::to_string(field_.characteristic());
    case Field::Kind::Rational:
      return re_.get_str();
    case Field::Kind::Gaussian:
      break;
  }
  if (im_ == 0) return re_.get_str();
  std::string imag;
  mpq_class mag = abs(im_);
  imag = mag == 1 ? "i" : mag.get_str() + "i";
  if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
  return re_.get_str() + (im_ < 0 ? "-" : "+") + imag;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  if (a.field_.is_prime()) return a.r_ == b.r_;
  return a.re_ == b.re_ && a.im_ == b.im_;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  if (a.field_.is_prime()) return a.r_ < b.r_;
  if (a.re_ != b.re_) return a.re_ < b.re_;
  return a.im_ < b.im_;
}

namespace {

bool sqrt_rational(const mpq_class& q, mpq_class& out) {
  if (q < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  out = mpq_class(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace

bool try_sqrt(const Scalar& x, Scalar& root) {
  const Field& f = x.field();
  switch (f.kind()) {
    case Field::Kind::Prime: {
      std::uint64_t p = f.characteristic();
      for (std::uint64_t r = 0; r <= p / 2; ++r) {
        if (mulmod(r, r, p) == x.residue()) {
          root = Scalar::from_int(f, static_cast<long>(r));
          return true;
        }
      }
      return false;
    }
    case Field::Kind::Rational: {
      mpq_class r;
      if (!sqrt_rational(x.real(), r)) return false;
      root = Scalar::from_rational(f, r);
      return true;
    }
    case Field::Kind::Gaussian:
      break;
  }
  // (u + vi)^2 = a + bi  <=>  u^2 - v^2 = a, 2uv = b.
  const mpq_class& a = x.real();
  const mpq_class& b = x.imag();
  mpq_class u, v;
  if (b == 0) {
    if (a >= 0) {
      if (!sqrt_rational(a, u)) return false;
      v = 0;
    } else {
      if (!sqrt_rational(-a, v)) return false;
      u = 0;
    }
    root = Scalar::gaussian(u, v);
    return true;
  }
  mpq_class modulus;
  if (!sqrt_rational(a * a + b * b, modulus)) return false;
  mpq_class half = (a + modulus) / 2;
  if (!sqrt_rational(half, u)) return false;
  v = b / (2 * u);
  root = Scalar::gaussian(u, v);
  return true;
}

}  // namespace symlie
