#include "ap/number_field.hpp"

namespace ap {

namespace {
const Rational kCachePrec(1, Int(1) << 220);

void check_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field == b.field) return;
  if (a.field && b.field && a.field->generator().minpoly == b.field->generator().minpoly &&
      a.field->generator().root_index == b.field->generator().root_index)
    return;
  throw std::invalid_argument("field element operands belong to different fields");
}
}  // namespace

FieldPtr NumberField::create(const ZPoly& minpoly, int root_index) {
  return create(make_algebraic_integer(minpoly, root_index));
}

FieldPtr NumberField::create(const AlgebraicInteger& beta) {
  if (!beta.selected().real)
    throw std::invalid_argument("number field generator must be a real root");
  auto f = std::shared_ptr<NumberField>(new NumberField());
  f->beta_ = beta;
  for (auto& r : f->beta_.roots) refine_enclosure(r, kCachePrec);
  int s = f->degree();
  // beta^s = -sum c_i beta^i, then multiply through by beta repeatedly.
  if (s > 1) {
    std::vector<Rational> pow(s);
    for (int i = 0; i < s; ++i) pow[i] = -Rational(beta.minpoly.c[i]);
    for (int k = 0; k + 1 < s; ++k) {
      f->reduction_.push_back(pow);
      std::vector<Rational> next(s, Rational(0));
      for (int i = 0; i + 1 < s; ++i) next[i + 1] = pow[i];
      Rational top = pow[s - 1];
      for (int i = 0; i < s; ++i) next[i] += top * f->reduction_[0][i];
      pow = std::move(next);
    }
  }
  return f;
}

FieldPtr NumberField::rationals() {
  static FieldPtr q = [] {
    auto f = std::shared_ptr<NumberField>(new NumberField());
    f->beta_ = make_algebraic_integer(ZPoly(std::vector<Int>{Int(0), Int(1)}), 0);
    return FieldPtr(f);
  }();
  return q;
}

FieldElem NumberField::elem(std::vector<Rational> coords) const {
  if ((int)coords.size() != degree())
    throw std::invalid_argument("field element coordinate length mismatch");
  return FieldElem{shared_from_this(), std::move(coords)};
}

FieldElem NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = q;
  return FieldElem{shared_from_this(), std::move(c)};
}

FieldElem NumberField::gen() const {
  int s = degree();
  if (s == 1) return from_rational(-Rational(beta_.minpoly.c[0]));
  std::vector<Rational> c(s, Rational(0));
  c[1] = 1;
  return FieldElem{shared_from_this(), std::move(c)};
}

QInterval FieldElem::value_interval(const Rational& tol) const {
  QPoly p{std::vector<Rational>(coords)};
  RootEnclosure enc = field->generator().selected();
  QInterval iv = eval_interval(p, enc.box.re);
  int guard = 0;
  while (iv.width() > tol) {
    refine_enclosure(enc, enc.box.width() / 16);
    iv = eval_interval(p, enc.box.re);
    if (++guard > 200) throw std::runtime_error("field evaluation: precision exhaustion");
  }
  return iv;
}

QBox FieldElem::embedding_box(int root_idx, const Rational& tol) const {
  RootEnclosure enc = field->embeddings().at(root_idx);
  QPoly p{std::vector<Rational>(coords)};
  auto eval = [&]() {
    QBox acc{QInterval(Rational(0)), QInterval(Rational(0))};
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
      acc = acc * enc.box;
      acc.re = acc.re + *it;
    }
    return acc;
  };
  QBox b = eval();
  int guard = 0;
  while (b.width() > tol) {
    refine_enclosure(enc, enc.box.width() / 16);
    b = eval();
    if (++guard > 200) throw std::runtime_error("field embedding: precision exhaustion");
  }
  return b;
}

double FieldElem::to_double() const {
  return ap::to_double(value_interval(Rational(1, Int(1) << 60)).mid());
}

int FieldElem::sign() const {
  if (is_zero()) return 0;
  // Nonzero elements have nonzero value: the power basis is free over Q.
  QPoly p{std::vector<Rational>(coords)};
  RootEnclosure enc = field->generator().selected();
  for (int guard = 0; guard < 400; ++guard) {
    QInterval iv = eval_interval(p, enc.box.re);
    if (iv.lo > 0) return +1;
    if (iv.hi < 0) return -1;
    refine_enclosure(enc, enc.box.width() / 16);
  }
  throw std::runtime_error("field element sign: precision exhaustion");
}

Int FieldElem::floor_exact() const {
  QPoly p{std::vector<Rational>(coords)};
  RootEnclosure enc = field->generator().selected();
  QInterval iv = eval_interval(p, enc.box.re);
  while (iv.width() >= Rational(1, 4)) {
    refine_enclosure(enc, enc.box.width() / 16);
    iv = eval_interval(p, enc.box.re);
  }
  Int flo = floor_rat(iv.lo), fhi = floor_rat(iv.hi);
  if (flo == fhi) return flo;  // value in [flo, flo+1)
  // The interval straddles the integer k = fhi: resolve exactly.
  Int k = fhi;
  FieldElem diff = *this - field->from_rational(Rational(k));
  int s = diff.sign();
  if (s == 0) return k;
  return s > 0 ? k : k - 1;
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  std::vector<Rational> c(a.coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return {a.field, std::move(c)};
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  std::vector<Rational> c(a.coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] - b.coords[i];
  return {a.field, std::move(c)};
}

FieldElem operator-(const FieldElem& a) {
  std::vector<Rational> c(a.coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = -a.coords[i];
  return {a.field, std::move(c)};
}

FieldElem operator*(const Rational& s, const FieldElem& a) {
  std::vector<Rational> c(a.coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = s * a.coords[i];
  return {a.field, std::move(c)};
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  check_same_field(a, b);
  int s = (int)a.coords.size();
  if (s == 1) return {a.field, {a.coords[0] * b.coords[0]}};
  std::vector<Rational> prod(2 * s - 1, Rational(0));
  for (int i = 0; i < s; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < s; ++j) prod[i + j] += a.coords[i] * b.coords[j];
  }
  const auto& red = a.field->reduction_table();
  std::vector<Rational> c(prod.begin(), prod.begin() + s);
  for (int k = s; k < 2 * s - 1; ++k) {
    if (prod[k] == 0) continue;
    for (int i = 0; i < s; ++i) c[i] += prod[k] * red[k - s][i];
  }
  return {a.field, std::move(c)};
}

FieldElem inverse(const FieldElem& a) {
  if (a.is_zero()) throw std::domain_error("field inverse of zero");
  int s = (int)a.coords.size();
  if (s == 1) return {a.field, {Rational(1) / a.coords[0]}};
  QPoly elem{std::vector<Rational>(a.coords)};
  QPoly mp = to_qpoly(a.field->generator().minpoly);
  auto [g, u, v] = extended_gcd(elem, mp);
  (void)v;
  if (g.degree() != 0) throw std::logic_error("field inverse: gcd not constant");
  auto [q, r] = divmod(u, mp);
  (void)q;
  std::vector<Rational> c(s, Rational(0));
  for (int i = 0; i <= r.degree(); ++i) c[i] = r.c[i];
  return {a.field, std::move(c)};
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * inverse(b); }

bool operator<(const FieldElem& a, const FieldElem& b) { return (a - b).sign() < 0; }

int compare(const FieldElem& a, const Rational& q) {
  return (a - a.field->from_rational(q)).sign();
}

FieldMatrix FieldMatrix::zero(const FieldPtr& f, int r, int c) {
  FieldMatrix m;
  m.field = f;
  m.rows = r;
  m.cols = c;
  m.data.assign((size_t)r * c, f->zero());
  return m;
}

FieldMatrix FieldMatrix::identity(const FieldPtr& f, int n) {
  FieldMatrix m = zero(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f->one();
  return m;
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t = zero(field, cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("field matrix product shape mismatch");
  FieldMatrix m = FieldMatrix::zero(a.field, a.rows, b.cols);
  for (int r = 0; r < a.rows; ++r)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (int c = 0; c < b.cols; ++c)
        m.at(r, c) = m.at(r, c) + a.at(r, k) * b.at(k, c);
    }
  return m;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix m = a;
  for (size_t i = 0; i < m.data.size(); ++i) m.data[i] = m.data[i] + b.data[i];
  return m;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix m = a;
  for (size_t i = 0; i < m.data.size(); ++i) m.data[i] = m.data[i] - b.data[i];
  return m;
}

FieldElem FieldMatrix::determinant() const {
  if (rows != cols) throw std::invalid_argument("determinant of non-square matrix");
  FieldMatrix w = *this;
  FieldElem det = field->one();
  for (int col = 0; col < cols; ++col) {
    int piv = -1;
    for (int r = col; r < rows; ++r)
      if (!w.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return field->zero();
    if (piv != col) {
      for (int c = 0; c < cols; ++c) std::swap(w.at(piv, c), w.at(col, c));
      det = -det;
    }
    det = det * w.at(col, col);
    FieldElem inv = ap::inverse(w.at(col, col));
    for (int r = col + 1; r < rows; ++r) {
      if (w.at(r, col).is_zero()) continue;
      FieldElem f = w.at(r, col) * inv;
      for (int c = col; c < cols; ++c) w.at(r, c) = w.at(r, c) - f * w.at(col, c);
    }
  }
  return det;
}

FieldMatrix FieldMatrix::inverse() const {
  if (rows != cols) throw std::invalid_argument("inverse of non-square matrix");
  FieldMatrix w = *this;
  FieldMatrix inv = identity(field, rows);
  for (int col = 0; col < cols; ++col) {
    int piv = -1;
    for (int r = col; r < rows; ++r)
      if (!w.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("field matrix is singular");
    if (piv != col)
      for (int c = 0; c < cols; ++c) {
        std::swap(w.at(piv, c), w.at(col, c));
        std::swap(inv.at(piv, c), inv.at(col, c));
      }
    FieldElem s = ap::inverse(w.at(col, col));
    for (int c = 0; c < cols; ++c) {
      w.at(col, c) = s * w.at(col, c);
      inv.at(col, c) = s * inv.at(col, c);
    }
    for (int r = 0; r < rows; ++r) {
      if (r == col || w.at(r, col).is_zero()) continue;
      FieldElem f = w.at(r, col);
      for (int c = 0; c < cols; ++c) {
        w.at(r, c) = w.at(r, c) - f * w.at(col, c);
        inv.at(r, c) = inv.at(r, c) - f * inv.at(col, c);
      }
    }
  }
  return inv;
}

std::vector<FieldElem> FieldMatrix::apply(const std::vector<FieldElem>& v) const {
  if ((int)v.size() != cols) throw std::invalid_argument("field matrix apply shape mismatch");
  std::vector<FieldElem> out(rows, field->zero());
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] = out[r] + at(r, c) * v[c];
  return out;
}

}  // namespace ap
