#include "wald/series.hpp"

#include <algorithm>
#include <sstream>

#include "wald/context.hpp"
#include "wald/error.hpp"

namespace wald {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t q) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q);
}

std::uint32_t powmod(std::uint32_t base, std::uint64_t e, std::uint32_t q) {
  std::uint32_t result = 1 % q;
  while (e != 0) {
    if (e & 1U) result = mulmod(result, base, q);
    base = mulmod(base, base, q);
    e >>= 1;
  }
  return result;
}

}  // namespace

FqElem FqElem::from_int(long long v) {
  const long long q = current_q();
  long long r = v % q;
  if (r < 0) r += q;
  return FqElem(static_cast<std::uint32_t>(r));
}

FqElem FqElem::inverse() const {
  if (v_ == 0) throw Error(ErrorKind::NotInvertible, "zero in F_q");
  const std::uint32_t q = current_q();
  return FqElem(powmod(v_, q - 2, q));
}

bool FqElem::is_nonzero_square() const {
  if (v_ == 0) return false;
  const std::uint32_t q = current_q();
  return powmod(v_, (q - 1) / 2, q) == 1;
}

FqElem operator+(FqElem a, FqElem b) {
  const std::uint32_t q = current_q();
  std::uint32_t s = a.v_ + b.v_;
  return FqElem(s >= q ? s - q : s);
}

FqElem operator-(FqElem a, FqElem b) {
  const std::uint32_t q = current_q();
  return FqElem(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + q - b.v_);
}

FqElem operator*(FqElem a, FqElem b) { return FqElem(mulmod(a.v_, b.v_, current_q())); }

FqElem operator-(FqElem a) { return a.v_ == 0 ? a : FqElem(current_q() - a.v_); }

LaurentPoly::LaurentPoly(int constant) {
  if (constant == 0) return;
  FqElem c = FqElem::from_int(constant);
  if (!c.is_zero()) coeffs_.push_back(c.value());
}

LaurentPoly LaurentPoly::monomial(int exponent, FqElem coeff) {
  LaurentPoly p;
  if (!coeff.is_zero()) {
    p.offset_ = exponent;
    p.coeffs_.push_back(coeff.value());
  }
  return p;
}

LaurentPoly LaurentPoly::t_pow(int exponent) { return monomial(exponent, FqElem::from_int(1)); }

LaurentPoly LaurentPoly::from_coeffs(int offset, const std::vector<long long>& coeffs) {
  LaurentPoly p;
  p.offset_ = offset;
  p.coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) p.coeffs_.push_back(FqElem::from_int(c).value());
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::uint32_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  offset_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

FqElem LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < offset_ || exponent > degree()) return FqElem();
  return FqElem::from_int(coeffs_[static_cast<std::size_t>(exponent - offset_)]);
}

LaurentPoly LaurentPoly::truncated(int bound) const {
  if (is_zero() || degree() < bound) return *this;
  LaurentPoly p;
  if (bound <= offset_) return p;
  p.offset_ = offset_;
  p.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + (bound - offset_));
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.offset_ += k;
  return p;
}

LaurentPoly LaurentPoly::scaled(FqElem c) const {
  if (c.is_zero()) return {};
  LaurentPoly p = *this;
  const std::uint32_t q = current_q();
  for (auto& x : p.coeffs_) x = mulmod(x, c.value(), q);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const std::uint32_t q = current_q();
  const int lo = std::min(offset_, o.offset_);
  const int hi = std::max(degree(), o.degree());
  std::vector<std::uint32_t> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[offset_ - lo + i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    std::uint32_t& slot = out[o.offset_ - lo + i];
    slot += o.coeffs_[i];
    if (slot >= q) slot -= q;
  }
  offset_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly p = a;
  const std::uint32_t q = p.is_zero() ? 0 : current_q();
  for (auto& x : p.coeffs_) x = x == 0 ? 0 : q - x;
  return p;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  if (a.is_zero() || b.is_zero()) return p;
  const std::uint64_t q = current_q();
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.coeffs_[i]) * b.coeffs_[j]) % q;
    }
  }
  p.offset_ = a.offset_ + b.offset_;
  p.coeffs_.assign(acc.begin(), acc.end());
  p.normalize();
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() != b.is_zero()) return a.is_zero();
  if (a.offset_ != b.offset_) return a.offset_ < b.offset_;
  return a.coeffs_ < b.coeffs_;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const int k = offset_ + static_cast<int>(i);
    if (k == 0) {
      os << coeffs_[i];
    } else {
      os << coeffs_[i] << "*t^" << k;
    }
  }
  return os.str();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = std::hash<int>{}(offset_);
  for (auto c : coeffs_) h = h * 1000003U ^ c;
  return h;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

LaurentPoly invert_unit(const LaurentPoly& u, int precision) {
  if (u.valuation() != 0) {
    throw Error(ErrorKind::NotAUnit, "val(" + u.str() + ") != 0");
  }
  if (precision <= 0) return {};
  // Power-series long division: solve u * v = 1 coefficient by coefficient.
  const FqElem inv0 = u.coeff(0).inverse();
  std::vector<long long> v(static_cast<std::size_t>(precision), 0);
  for (int k = 0; k < precision; ++k) {
    FqElem s = k == 0 ? FqElem::from_int(1) : FqElem();
    for (int j = 1; j <= k && j <= u.degree(); ++j) {
      s = s - u.coeff(j) * FqElem::from_int(v[static_cast<std::size_t>(k - j)]);
    }
    v[static_cast<std::size_t>(k)] = (s * inv0).value();
  }
  return LaurentPoly::from_coeffs(0, v);
}

LaurentPoly unit_part(const LaurentPoly& x) {
  if (x.is_zero()) throw Error(ErrorKind::NotAUnit, "zero has no unit part");
  return x.shifted(-x.valuation());
}

}  // namespace wald
