#pragma once
// Exact scalars (Q and Q(i)), dense matrices and polynomials over Q(i).

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spinlab {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SingularError : std::domain_error {
  using std::domain_error::domain_error;
};
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// mpq_class canonicalizes after every arithmetic op, so values stay reduced
// with positive denominator.
using Rational = mpq_class;

inline Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      throw ParseError("bad rational: " + s);
  std::string t = s[0] == '+' ? s.substr(1) : s;
  Rational r;
  if (r.set_str(t, 10) != 0) throw ParseError("bad rational: " + s);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT: implicit from integers is intended
  GaussRat(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRat inv() const {
    if (is_zero()) throw SingularError("division by zero in Q(i)");
    if (is_real()) return GaussRat(Rational(1) / re_);
    Rational d = norm();
    return GaussRat(re_ / d, -im_ / d);
  }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    *this = *this * o;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    *this = *this * o.inv();
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    if (a.is_zero() || b.is_zero()) return GaussRat();
    bool ar = a.is_real(), br = b.is_real();
    if (ar && br) return GaussRat(Rational(a.re_ * b.re_));
    if (ar) return GaussRat(a.re_ * b.re_, a.re_ * b.im_);
    if (br) return GaussRat(a.re_ * b.re_, a.im_ * b.re_);
    return GaussRat(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inv(); }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  // total order used only for canonical sorting
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  GaussRat pow(long k) const {
    if (k < 0) return inv().pow(-k);
    GaussRat r(1), b = *this;
    while (k) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  // "re+im*i", both parts always present, e.g. "1/2-3/4*i", "1+0*i"
  std::string str() const {
    std::string s = re_.get_str();
    if (sgn(im_) < 0)
      s += "-" + Rational(-im_).get_str();
    else
      s += "+" + im_.get_str();
    return s + "*i";
  }

  static GaussRat parse(const std::string& text);

 private:
  Rational re_{0};
  Rational im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }

// Accepts "3", "-1/2", "i", "-2*i", "3/4i", "1/2-3/4*i", "1+0*i" and spaces.
inline GaussRat GaussRat::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty scalar");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '*') {
      terms.push_back(s.substr(start, k - start));
      start = k;
    }
  }
  terms.push_back(s.substr(start));
  GaussRat out;
  for (std::string t : terms) {
    bool imag = false;
    if (!t.empty() && t.back() == 'i') {
      imag = true;
      t.pop_back();
      if (!t.empty() && t.back() == '*') t.pop_back();
    }
    Rational v;
    if (t.empty() || t == "+")
      v = 1;
    else if (t == "-")
      v = -1;
    else
      v = parse_rational(t);
    if (imag)
      out += GaussRat(Rational(0), v);
    else
      out += GaussRat(v);
  }
  return out;
}

class Poly;

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
  Mat(std::initializer_list<std::initializer_list<GaussRat>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      for (auto& x : row) a_.push_back(x);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }
  static Mat diag(const std::vector<GaussRat>& d) {
    Mat m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  GaussRat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const GaussRat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const GaussRat& x) { return x.is_zero(); });
  }
  bool is_identity() const { return square() && *this == identity(rows_); }

  // true iff the matrix is c*I; c is written out
  bool is_scalar(GaussRat* c = nullptr) const {
    if (!square()) return false;
    GaussRat v = rows_ ? (*this)(0, 0) : GaussRat(1);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k)
        if ((*this)(r, k) != (r == k ? v : GaussRat())) return false;
    if (c) *c = v;
    return true;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  friend Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionError("shape mismatch in +");
    Mat z = x;
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] += y.a_[k];
    return z;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw DimensionError("shape mismatch in -");
    Mat z = x;
    for (std::size_t k = 0; k < z.a_.size(); ++k) z.a_[k] -= y.a_[k];
    return z;
  }
  friend Mat operator*(const GaussRat& s, const Mat& x) {
    Mat z = x;
    for (auto& v : z.a_) v = s * v;
    return z;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw DimensionError("shape mismatch in *");
    Mat z(x.rows_, y.cols_);
    for (std::size_t r = 0; r < x.rows_; ++r)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const GaussRat& a = x(r, k);
        if (a.is_zero()) continue;
        for (std::size_t c = 0; c < y.cols_; ++c) {
          const GaussRat& b = y(k, c);
          if (!b.is_zero()) z(r, c) += a * b;
        }
      }
    return z;
  }

  Mat pow(unsigned k) const {
    if (!square()) throw DimensionError("pow of non-square matrix");
    Mat r = identity(rows_), b = *this;
    while (k) {
      if (k & 1) r = r * b;
      k >>= 1;
      if (k) b = b * b;
    }
    return r;
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  std::vector<GaussRat> apply(const std::vector<GaussRat>& v) const {
    if (v.size() != cols_) throw DimensionError("shape mismatch in apply");
    std::vector<GaussRat> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  const std::vector<GaussRat>& data() const { return a_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GaussRat> a_;
};

inline Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, a.cols() + c) = b(r, c);
  return m;
}

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<GaussRat> c) : c_(std::move(c)) { trim(); }
  static Poly x() { return Poly({GaussRat(0), GaussRat(1)}); }
  static Poly constant(const GaussRat& a) { return Poly({a}); }
  // prod (x - r)
  static Poly from_roots(const std::vector<GaussRat>& roots) {
    Poly p = constant(1);
    for (const auto& r : roots) p = p * Poly({-r, GaussRat(1)});
    return p;
  }

  const std::vector<GaussRat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool monic() const { return !c_.empty() && c_.back().is_one(); }
  GaussRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussRat(); }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<GaussRat> c(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) + q.coeff(k);
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    std::vector<GaussRat> c(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) - q.coeff(k);
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<GaussRat> c(p.c_.size() + q.c_.size() - 1);
    for (std::size_t a = 0; a < p.c_.size(); ++a)
      for (std::size_t b = 0; b < q.c_.size(); ++b) c[a + b] += p.c_[a] * q.c_[b];
    return Poly(std::move(c));
  }
  friend Poly operator*(const GaussRat& s, const Poly& p) {
    std::vector<GaussRat> c = p.c_;
    for (auto& v : c) v = s * v;
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  GaussRat operator()(const GaussRat& t) const {
    GaussRat r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
  }
  Mat operator()(const Mat& m) const {
    if (!m.square()) throw DimensionError("poly evaluated at non-square matrix");
    Mat r(m.rows(), m.cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * m + (*it) * Mat::identity(m.rows());
    return r;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[k].str() + ")";
      if (k >= 1) s += "*x";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<GaussRat> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// Hessenberg reduction followed by the standard recurrence on leading minors.
inline Poly charpoly(const Mat& m) {
  if (!m.square()) throw DimensionError("charpoly of non-square matrix");
  const std::size_t n = m.rows();
  Mat h = m;
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h(piv, col).is_zero()) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(piv, c), h(col + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, piv), h(r, col + 1));
    }
    GaussRat pinv = h(col + 1, col).inv();
    for (std::size_t r = col + 2; r < n; ++r) {
      if (h(r, col).is_zero()) continue;
      GaussRat u = h(r, col) * pinv;
      for (std::size_t c = 0; c < n; ++c)
        if (!h(col + 1, c).is_zero()) h(r, c) -= u * h(col + 1, c);
      for (std::size_t rr = 0; rr < n; ++rr)
        if (!h(rr, r).is_zero()) h(rr, col + 1) += u * h(rr, r);
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = Poly::constant(1);
  for (std::size_t k = 0; k < n; ++k) {
    p[k + 1] = Poly({-h(k, k), GaussRat(1)}) * p[k];
    GaussRat t(1);
    for (std::size_t i = k; i-- > 0;) {
      t *= h(i + 1, i);
      if (t.is_zero()) break;
      if (!h(i, k).is_zero()) p[k + 1] = p[k + 1] - (h(i, k) * t) * p[i];
    }
  }
  return p[n];
}

// Bareiss elimination; over a field every division is exact and the zero
// pattern matches ordinary elimination, so the pivot count is the rank.
inline std::size_t rank(const Mat& m) {
  Mat a = m;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  GaussRat prev(1);
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a(piv, c).is_zero()) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t k = 0; k < C; ++k) std::swap(a(piv, k), a(r, k));
    GaussRat pinv = prev.inv();
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t k = c + 1; k < C; ++k)
        a(i, k) = (a(r, c) * a(i, k) - a(i, c) * a(r, k)) * pinv;
      a(i, c) = GaussRat();
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

inline GaussRat det(const Mat& m) {
  if (!m.square()) throw DimensionError("det of non-square matrix");
  Mat a = m;
  const std::size_t n = a.rows();
  GaussRat d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return GaussRat();
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(c, k));
      d = -d;
    }
    d *= a(c, c);
    GaussRat pinv = a(c, c).inv();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      GaussRat u = a(r, c) * pinv;
      for (std::size_t k = c; k < n; ++k)
        if (!a(c, k).is_zero()) a(r, k) -= u * a(c, k);
    }
  }
  return d;
}

inline Mat inverse(const Mat& m) {
  if (!m.square()) throw DimensionError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat a = m, inv = Mat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) throw SingularError("singular matrix");
    if (piv != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(piv, k), a(c, k));
        std::swap(inv(piv, k), inv(c, k));
      }
    GaussRat pinv = a(c, c).inv();
    for (std::size_t k = 0; k < n; ++k) {
      if (!a(c, k).is_zero()) a(c, k) *= pinv;
      if (!inv(c, k).is_zero()) inv(c, k) *= pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      GaussRat u = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        if (!a(c, k).is_zero()) a(r, k) -= u * a(c, k);
        if (!inv(c, k).is_zero()) inv(r, k) -= u * inv(c, k);
      }
    }
  }
  return inv;
}

inline bool is_nilpotent(const Mat& n) {
  if (!n.square()) throw DimensionError("nilpotency of non-square matrix");
  return n.pow(static_cast<unsigned>(n.rows())).is_zero();
}

// Jordan block sizes of a unipotent matrix, largest first.
inline std::vector<int> jordan_partition(const Mat& u) {
  if (!u.square()) throw DimensionError("jordan_partition of non-square matrix");
  const std::size_t d = u.rows();
  Mat nil = u - Mat::identity(d);
  std::vector<std::size_t> rk{d};
  Mat p = Mat::identity(d);
  for (std::size_t k = 1; k <= d; ++k) {
    p = p * nil;
    rk.push_back(rank(p));
    if (rk.back() == 0) break;
  }
  if (rk.back() != 0) throw DomainError("jordan_partition: matrix is not unipotent");
  rk.push_back(0);
  std::vector<int> parts;
  for (std::size_t k = rk.size() - 2; k >= 1; --k) {
    std::size_t at_least_k = rk[k - 1] - rk[k];
    std::size_t at_least_k1 = rk[k] - rk[k + 1];
    for (std::size_t c = 0; c < at_least_k - at_least_k1; ++c) parts.push_back(static_cast<int>(k));
  }
  return parts;
}

inline Mat exp_nilpotent(const Mat& n) {
  if (!is_nilpotent(n)) throw DomainError("exp_nilpotent: matrix is not nilpotent");
  const std::size_t d = n.rows();
  Mat sum = Mat::identity(d), term = Mat::identity(d);
  for (std::size_t k = 1; k <= d; ++k) {
    term = GaussRat(rat(1, static_cast<long>(k))) * (term * n);
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return sum;
}

}  // namespace spinlab
