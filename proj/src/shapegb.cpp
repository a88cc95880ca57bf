#include "trop/shapegb.hpp"

#include <cassert>
#include <map>
#include <mutex>

#include "trop/errors.hpp"

namespace trop {

struct ShapeBasis::Cache {
  std::once_flag ring_once;
  std::optional<QuotientCtx> ring;
  std::mutex mu;
  std::map<int, QElt> inverses;
};

ShapeBasis::ShapeBasis(int n, UniPoly fn, std::vector<UniPoly> tail)
    : n_(n), fn_(std::move(fn)), tail_(std::move(tail)), cache_(std::make_shared<Cache>()) {
  if (n_ < 1 || tail_.size() != static_cast<std::size_t>(n_ - 1))
    throw InvalidInput("shape basis needs n >= 1 and exactly n-1 tail polynomials");
}

const UniPoly& ShapeBasis::tail(int k) const {
  assert(k >= 1 && k < n_);
  return tail_[static_cast<std::size_t>(k - 1)];
}

const QuotientCtx& ShapeBasis::ring() const {
  std::call_once(cache_->ring_once, [&] { cache_->ring.emplace(fn_); });
  return *cache_->ring;
}

const QElt& ShapeBasis::tail_inverse(int k) const {
  assert(k >= 1 && k < n_);
  const QuotientCtx& ctx = ring();
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->inverses.find(k);
  if (it == cache_->inverses.end()) {
    it = cache_->inverses.emplace(k, q_inverse(q_reduce(tail(k), ctx))).first;
  }
  return it->second;
}

std::vector<Diagnostic> validate_all(const ShapeBasis& b) {
  std::vector<Diagnostic> out;
  const UniPoly& fn = b.fn();
  if (fn.degree() < 1) {
    out.push_back({DiagKind::BadShape, 0, "f_n must have degree >= 1"});
    return out;  // the remaining checks presuppose a usable f_n
  }
  if (fn.coeff(0).is_zero())
    out.push_back({DiagKind::NotSaturated, 0, "f_n has constant term 0 (root at the origin)"});
  const int d = fn.degree();
  for (int k = 1; k < b.vars(); ++k) {
    const UniPoly& fk = b.tail(k);
    if (fk.degree() >= d)
      out.push_back({DiagKind::DegreeViolation, k,
                     "tail polynomial " + std::to_string(k) + " has degree >= deg f_n"});
  }
  for (int k = 1; k < b.vars(); ++k) {
    const UniPoly& fk = b.tail(k);
    // covers fk = 0: gcd(f_n, 0) = monic f_n, nonconstant
    UniPoly g = fk.is_zero() ? fn.monic() : gcd(fn, fk);
    if (g.degree() != 0)
      out.push_back({DiagKind::NotSaturated, k,
                     "gcd(f_n, tail " + std::to_string(k) + ") is nonconstant (coordinate " +
                         std::to_string(k) + " can vanish)"});
  }
  return out;
}

std::optional<Diagnostic> validate(const ShapeBasis& b) {
  std::vector<Diagnostic> all = validate_all(b);
  if (all.empty()) return std::nullopt;
  return all.front();
}

SlimVector SlimVector::minus_e(int ell, int n) {
  assert(ell >= 1 && ell < n);
  SlimVector v;
  v.u.assign(static_cast<std::size_t>(n), 0);
  v.u[static_cast<std::size_t>(ell - 1)] = -1;
  v.ell = ell;
  return v;
}

long SlimVector::l1() const {
  long s = 0;
  for (long x : u) s += x < 0 ? -x : x;
  return s;
}

namespace {

void check_slim(const ShapeBasis& b, const SlimVector& u) {
  const int n = b.vars();
  if (static_cast<int>(u.u.size()) != n || u.ell < 1 || u.ell >= n)
    throw InvalidInput("malformed transform exponent vector");
  for (int i = 1; i <= n; ++i) {
    long e = u.u[static_cast<std::size_t>(i - 1)];
    if (i == u.ell ? e != -1 : e < 0)
      throw InvalidInput("malformed transform exponent vector");
  }
}

}  // namespace

QElt transform_multiplier(const ShapeBasis& b, const SlimVector& u) {
  check_slim(b, u);
  const QuotientCtx& ctx = b.ring();
  const int n = b.vars();
  QElt h = q_power(q_gen(ctx), u.u[static_cast<std::size_t>(n - 1)]);
  for (int i = 1; i < n; ++i) {
    if (i == u.ell) continue;
    long e = u.u[static_cast<std::size_t>(i - 1)];
    if (e == 0) continue;
    h = h * q_power(q_reduce(b.tail(i), ctx), e);
  }
  return h;
}

ShapeBasis slim_transform(const ShapeBasis& b, const SlimVector& u) {
  QElt h = transform_multiplier(b, u);
  QElt fl = q_reduce(b.tail(u.ell), b.ring());
  QElt flp = q_inverse(h) * fl;
  std::vector<UniPoly> tail = b.tail_polys();
  tail[static_cast<std::size_t>(u.ell - 1)] = flp.rep();
  return ShapeBasis(b.vars(), b.fn(), std::move(tail));
}

UniPoly transform_eliminant(const ShapeBasis& b, const SlimVector& u) {
  QElt h = transform_multiplier(b, u);
  // h * tail(ell)^(-1) is the inverse of the transformed tail, so the
  // reversal of its eliminant is the eliminant we want; no fresh xgcd per u.
  return reversal_eliminant(h * b.tail_inverse(u.ell));
}

}  // namespace trop
