#include "mdcalc/scalar.hpp"

#include <vector>

#include "mdcalc/errors.hpp"

namespace mdcalc {

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::NotInvertible, "division by zero scalar");
  if (is_real()) return Scalar(mpq_class(1) / re_);
  // 1/(a+bi) = (a-bi)/(a^2+b^2)
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    if (!is_real()) im_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

std::string imaginary_part_text(const mpq_class& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return im.get_str() + "*i";
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) return imaginary_part_text(im_);
  std::string im_text = imaginary_part_text(im_);
  if (im_text.front() != '-') im_text.insert(im_text.begin(), '+');
  return "(" + re_.get_str() + im_text + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar inverse_factorial(int k) {
  constexpr int kCached = 64;
  static const std::vector<mpq_class> cache = [] {
    std::vector<mpq_class> v{mpq_class(1)};
    for (long j = 1; j < kCached; ++j) v.push_back(v.back() / j);
    return v;
  }();
  if (k < kCached) return Scalar(cache[k]);
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Scalar(mpq_class(mpz_class(1), f));
}

}  // namespace mdcalc
