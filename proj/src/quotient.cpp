#include "trop/quotient.hpp"

#include <cassert>

#include "trop/errors.hpp"

namespace trop {

QuotientCtx::QuotientCtx(const UniPoly& modulus) {
  if (modulus.degree() < 1) throw ZeroInput("quotient modulus must have degree >= 1");
  if (modulus.coeff(0).is_zero()) throw ZeroConstantTerm();
  modulus_ = std::make_shared<const UniPoly>(modulus);
}

QElt::QElt(QuotientCtx ctx, const UniPoly& raw)
    : ctx_(std::move(ctx)), rep_(divrem(raw, ctx_.modulus()).second) {}

QElt operator+(const QElt& a, const QElt& b) {
  assert(a.ctx().same_ring(b.ctx()));
  return QElt(a.ctx_, a.rep_ + b.rep_);
}

QElt operator-(const QElt& a, const QElt& b) {
  assert(a.ctx().same_ring(b.ctx()));
  return QElt(a.ctx_, a.rep_ - b.rep_);
}

QElt operator*(const QElt& a, const QElt& b) {
  assert(a.ctx().same_ring(b.ctx()));
  return QElt(a.ctx_, a.rep_ * b.rep_);
}

bool QElt::operator==(const QElt& o) const {
  assert(ctx_.same_ring(o.ctx_));
  return rep_ == o.rep_;
}

QElt q_reduce(const UniPoly& f, const QuotientCtx& ctx) { return QElt(ctx, f); }

QElt q_one(const QuotientCtx& ctx) { return QElt(ctx, UniPoly::constant(Rat(1))); }

QElt q_gen(const QuotientCtx& ctx) { return QElt(ctx, UniPoly::x()); }

QElt q_inverse(const QElt& a) {
  if (a.is_zero()) throw NonInvertible("inverse of zero");
  Xgcd e = xgcd(a.rep(), a.ctx().modulus());
  if (e.g.degree() != 0) throw NonInvertible();
  return QElt(a.ctx(), e.s);  // e.g is monic, hence 1
}

QElt q_power(const QElt& a, long k) {
  assert(k >= 0);
  QElt acc = q_one(a.ctx());
  QElt base = a;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

namespace {

// rep of x * p mod the modulus, for deg p < d.
UniPoly mul_x_mod(const UniPoly& p, const UniPoly& modulus) {
  UniPoly q = p.shifted_up(1);
  if (q.degree() == modulus.degree()) {
    q -= modulus * (q.leading() / modulus.leading());
  }
  return q;
}

}  // namespace

RatMatrix mult_matrix(const QElt& a) {
  const int d = a.ctx().degree();
  RatMatrix m(d);
  UniPoly col = a.rep();
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i <= col.degree(); ++i) m.at(i, j) = col.coeff(i);
    if (j + 1 < d) col = mul_x_mod(col, a.ctx().modulus());
  }
  return m;
}

UniPoly eliminant(const QElt& a) {
  UniPoly e = char_poly(mult_matrix(a));
  assert(e.degree() == a.ctx().degree());
  return e;
}

UniPoly minimal_polynomial(const QElt& a) {
  const int d = a.ctx().degree();
  // echelon rows over the monomial basis, each with the combination of
  // powers of a that produced it
  struct Row {
    std::vector<Rat> v;
    std::vector<Rat> combo;
    int pivot;
  };
  std::vector<Row> rows;
  QElt pw = q_one(a.ctx());
  for (int k = 0;; ++k) {
    std::vector<Rat> v(d, Rat(0));
    for (int i = 0; i <= pw.rep().degree(); ++i) v[i] = pw.rep().coeff(i);
    std::vector<Rat> combo(k + 1, Rat(0));
    combo[k] = Rat(1);
    for (const Row& row : rows) {
      const Rat& f = v[row.pivot];
      if (f.is_zero()) continue;
      Rat fc = f;
      for (int i = 0; i < d; ++i) v[i] -= fc * row.v[i];
      for (std::size_t i = 0; i < row.combo.size(); ++i) combo[i] -= fc * row.combo[i];
    }
    int pivot = -1;
    for (int i = 0; i < d; ++i) {
      if (!v[i].is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return UniPoly(std::move(combo));  // first linear dependence, monic by construction
    Rat inv = Rat(1) / v[pivot];
    for (int i = 0; i < d; ++i) v[i] *= inv;
    for (Rat& c : combo) c *= inv;
    rows.push_back({std::move(v), std::move(combo), pivot});
    assert(k < d);
    pw = pw * a;
  }
}

UniPoly reversal_eliminant(const QElt& a) {
  UniPoly e = eliminant(a);
  if (e.coeff(0).is_zero()) throw NonInvertible("element is a zero divisor, eliminant has root 0");
  const int d = e.degree();
  std::vector<Rat> rev(d + 1);
  for (int i = 0; i <= d; ++i) rev[i] = e.coeff(d - i);
  return UniPoly(std::move(rev)).monic();
}

}  // namespace trop
