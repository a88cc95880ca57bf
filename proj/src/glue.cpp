#include "trop/glue.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "trop/errors.hpp"

namespace trop {

void Projection::sort_canonical() {
  std::sort(points.begin(), points.end(),
            [](const ProjPoint& a, const ProjPoint& b) { return a.w < b.w; });
}

int Projection::total_multiplicity() const {
  int s = 0;
  for (const ProjPoint& p : points) s += p.mult;
  return s;
}

namespace {

std::vector<Rat> restrict_to(const std::vector<Rat>& w, const std::vector<int>& from,
                             const std::vector<int>& to) {
  std::vector<Rat> out;
  out.reserve(to.size());
  for (int label : to) {
    auto it = std::lower_bound(from.begin(), from.end(), label);
    assert(it != from.end() && *it == label);
    out.push_back(w[static_cast<std::size_t>(it - from.begin())]);
  }
  return out;
}

}  // namespace

CandidateSet candidate_set(const std::vector<Projection>& ps) {
  if (ps.empty()) throw InvalidInput("candidate set of no projections");
  // joining smaller coordinate sets first keeps intermediate products small
  std::vector<const Projection*> order;
  for (const Projection& p : ps) order.push_back(&p);
  std::stable_sort(order.begin(), order.end(), [](const Projection* a, const Projection* b) {
    return a->coords.size() < b->coords.size();
  });

  CandidateSet acc;
  acc.coords = order.front()->coords;
  for (const ProjPoint& p : order.front()->points) acc.elems.push_back(p.w);

  for (std::size_t k = 1; k < order.size(); ++k) {
    const Projection& q = *order[k];
    std::vector<int> shared;
    std::set_intersection(acc.coords.begin(), acc.coords.end(), q.coords.begin(),
                          q.coords.end(), std::back_inserter(shared));
    std::vector<int> merged;
    std::set_union(acc.coords.begin(), acc.coords.end(), q.coords.begin(), q.coords.end(),
                   std::back_inserter(merged));

    std::map<std::vector<Rat>, std::vector<const ProjPoint*>> by_key;
    for (const ProjPoint& p : q.points) by_key[restrict_to(p.w, q.coords, shared)].push_back(&p);

    std::vector<std::vector<Rat>> next;
    for (const std::vector<Rat>& w : acc.elems) {
      auto it = by_key.find(restrict_to(w, acc.coords, shared));
      if (it == by_key.end()) continue;
      for (const ProjPoint* p : it->second) {
        std::vector<Rat> merged_w;
        merged_w.reserve(merged.size());
        std::size_t ia = 0, ib = 0;
        for (int label : merged) {
          if (ia < acc.coords.size() && acc.coords[ia] == label) {
            merged_w.push_back(w[ia]);
            ++ia;
            if (ib < q.coords.size() && q.coords[ib] == label) ++ib;
          } else {
            assert(ib < q.coords.size() && q.coords[ib] == label);
            merged_w.push_back(p->w[ib]);
            ++ib;
          }
        }
        next.push_back(std::move(merged_w));
      }
    }
    acc.coords = std::move(merged);
    acc.elems = std::move(next);
  }
  std::sort(acc.elems.begin(), acc.elems.end());
  return acc;
}

namespace {

// Candidate coordinates scaled to integers by the common denominator, one
// column per candidate, so the separation test is pure integer arithmetic.
struct ScaledGrid {
  // Modulus for the word-sized prefilter; Mersenne prime 2^61 - 1, so sums of
  // two reduced values never overflow 64 bits.
  static constexpr std::uint64_t kMod = (std::uint64_t(1) << 61) - 1;

  std::vector<std::vector<Int>> rows;  // rows[i][j]: coordinate i of candidate j
  std::vector<std::uint64_t> cols_mod;  // candidate-major residues mod kMod
  std::size_t count = 0;
  std::size_t ncoords = 0;

  // open-addressing scratch for separates(), epoch-tagged so trials skip clearing
  mutable std::vector<std::uint64_t> slot_res;
  mutable std::vector<std::uint32_t> slot_idx;
  mutable std::vector<std::uint32_t> slot_epoch;
  mutable std::uint32_t epoch = 0;
  std::size_t mask = 0;

  explicit ScaledGrid(const CandidateSet& t) {
    count = t.elems.size();
    ncoords = t.coords.size();
    Int den(1);
    for (const auto& w : t.elems)
      for (const Rat& c : w) {
        Int d = c.denominator();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
      }
    rows.assign(ncoords, std::vector<Int>(count));
    cols_mod.assign(count * ncoords, 0);
    for (std::size_t j = 0; j < count; ++j)
      for (std::size_t i = 0; i < ncoords; ++i) {
        Rat scaled = t.elems[j][i] * Rat(den);
        assert(scaled.is_integer());
        rows[i][j] = scaled.numerator();
        cols_mod[j * ncoords + i] = mpz_fdiv_ui(rows[i][j].get_mpz_t(), kMod);
      }
    std::size_t table = 4;
    while (table < 2 * count) table <<= 1;
    mask = table - 1;
    slot_res.assign(table, 0);
    slot_idx.assign(table, 0);
    slot_epoch.assign(table, 0);
  }

  Int exact_value(const std::vector<long>& u, std::size_t j) const {
    Int v(0);
    for (std::size_t i = 0; i < ncoords; ++i) {
      long e = u[i];
      if (e == 0) continue;
      if (e > 0)
        mpz_addmul_ui(v.get_mpz_t(), rows[i][j].get_mpz_t(), static_cast<unsigned long>(e));
      else
        mpz_submul_ui(v.get_mpz_t(), rows[i][j].get_mpz_t(), static_cast<unsigned long>(-e));
    }
    return v;
  }

  // Whether u (over the same coordinate order) separates all candidates.
  // Distinct residues mod kMod certify distinct exact values; residue
  // collisions are settled exactly, and the scan stops at the first genuine
  // duplicate, so failing trials cost only a prefix of the grid.
  bool separates(const std::vector<long>& u) const {
    std::uint64_t em[64];
    assert(ncoords <= 64);
    for (std::size_t i = 0; i < ncoords; ++i) {
      long e = u[i];
      em[i] = e >= 0 ? static_cast<std::uint64_t>(e) % kMod
                     : (kMod - static_cast<std::uint64_t>(-e) % kMod) % kMod;
    }
    if (++epoch == 0) {
      std::fill(slot_epoch.begin(), slot_epoch.end(), 0);
      epoch = 1;
    }
    for (std::size_t j = 0; j < count; ++j) {
      const std::uint64_t* col = cols_mod.data() + j * ncoords;
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < ncoords; ++i) {
        if (em[i] == 0) continue;
        auto prod = static_cast<unsigned __int128>(col[i]) * em[i];
        acc += static_cast<std::uint64_t>(prod % kMod);
        if (acc >= kMod) acc -= kMod;
      }
      // splitmix64 finalizer spreads residues over the table
      std::uint64_t hx = acc;
      hx ^= hx >> 30;
      hx *= 0xbf58476d1ce4e5b9ull;
      hx ^= hx >> 27;
      hx *= 0x94d049bb133111ebull;
      hx ^= hx >> 31;
      std::size_t pos = static_cast<std::size_t>(hx) & mask;
      while (slot_epoch[pos] == epoch) {
        if (slot_res[pos] == acc &&
            exact_value(u, slot_idx[pos]) == exact_value(u, j))
          return false;
        pos = (pos + 1) & mask;
      }
      slot_epoch[pos] = epoch;
      slot_res[pos] = acc;
      slot_idx[pos] = static_cast<std::uint32_t>(j);
    }
    return true;
  }
};

// Enumerates compositions of total into slots positions in lexicographically
// ascending order; returns true once the visitor accepts one.
bool compositions(std::vector<long>& parts, std::size_t pos, long total,
                  const std::function<bool(const std::vector<long>&)>& visit) {
  if (pos + 1 == parts.size()) {
    parts[pos] = total;
    return visit(parts);
  }
  for (long v = 0; v <= total; ++v) {
    parts[pos] = v;
    if (compositions(parts, pos + 1, total - v, visit)) return true;
  }
  return false;
}

}  // namespace

SlimVector find_injective_u_enum(const CandidateSet& t, int ell, int n) {
  assert(ell >= 1 && ell < n);
  assert(std::binary_search(t.coords.begin(), t.coords.end(), ell));
  SlimVector out = SlimVector::minus_e(ell, n);
  if (t.elems.size() <= 1) return out;

  ScaledGrid grid(t);
  // free positions: indices into t.coords other than ell's
  std::vector<std::size_t> free_pos;
  std::size_t ell_pos = 0;
  for (std::size_t i = 0; i < t.coords.size(); ++i) {
    if (t.coords[i] == ell)
      ell_pos = i;
    else
      free_pos.push_back(i);
  }
  std::vector<long> local(t.coords.size(), 0);
  local[ell_pos] = -1;
  if (free_pos.empty()) {
    if (grid.separates(local)) return out;
    throw GlueMismatch("candidates collide on a single coordinate");  // distinct points cannot
  }
  std::vector<long> parts(free_pos.size(), 0);
  for (long total = 0;; ++total) {
    bool found = compositions(parts, 0, total, [&](const std::vector<long>& c) {
      for (std::size_t i = 0; i < free_pos.size(); ++i) local[free_pos[i]] = c[i];
      return grid.separates(local);
    });
    if (found) break;
  }
  for (std::size_t i = 0; i < t.coords.size(); ++i)
    out.u[static_cast<std::size_t>(t.coords[i] - 1)] = local[i];
  return out;
}

long find_injective_m_slopes(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  if (xs.empty() || ys.empty()) throw InvalidInput("slope search over an empty set");
  std::set<long> excluded;
  for (std::size_t b1 = 0; b1 < ys.size(); ++b1) {
    for (std::size_t b2 = b1 + 1; b2 < ys.size(); ++b2) {
      Rat db = ys[b1] - ys[b2];
      for (const Rat& a1 : xs) {
        for (const Rat& a2 : xs) {
          Rat s = (a1 - a2) / db;
          if (s.sign() < 0 || !s.is_integer()) continue;
          // values beyond long cannot reach the least excluded gap
          if (!s.numerator().fits_slong_p()) continue;
          excluded.insert(s.numerator().get_si());
        }
      }
    }
  }
  long m = 0;
  while (excluded.count(m)) ++m;
  return m;
}

namespace {

Rat project_value(const SlimVector& u, const std::vector<int>& coords,
                  const std::vector<Rat>& w) {
  Rat s(0);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    long e = u.u[static_cast<std::size_t>(coords[i] - 1)];
    if (e == 0) continue;
    s += Rat(e) * w[i];
  }
  return -s;
}

bool supported_on(const SlimVector& u, const std::vector<int>& coords) {
  for (std::size_t i = 0; i < u.u.size(); ++i) {
    if (u.u[i] == 0) continue;
    if (!std::binary_search(coords.begin(), coords.end(), static_cast<int>(i) + 1)) return false;
  }
  return true;
}

bool injective_on(const SlimVector& u, const std::vector<int>& coords,
                  const std::vector<std::vector<Rat>>& elems) {
  std::set<Rat> seen;
  for (const auto& w : elems)
    if (!seen.insert(project_value(u, coords, w)).second) return false;
  return true;
}

}  // namespace

GlueResult glue(const ShapeBasis& b, const PrimeContext& prime,
                const std::vector<Projection>& ps, const GlueOptions& opt) {
  if (ps.empty()) throw InvalidInput("glue of no projections");
  const int n = b.vars();

  std::vector<int> merged;
  for (const Projection& p : ps) {
    std::vector<int> u;
    std::set_union(merged.begin(), merged.end(), p.coords.begin(), p.coords.end(),
                   std::back_inserter(u));
    merged = std::move(u);
  }
  for (const Projection& p : ps) {
    if (p.coords == merged)
      throw InvalidInput("glue inputs must each miss some coordinate of the union");
  }
  int ell = 0;
  for (int label : merged) {
    if (label != n) {
      ell = label;
      break;
    }
  }
  if (ell == 0) throw InvalidInput("glue needs a coordinate besides the last variable");

  CandidateSet t = candidate_set(ps);

  // Slope shortcut: a base projection containing ell plus one singleton
  // extra coordinate. The separating vector is then seed + m * e_k with m
  // found by slope exclusion instead of a fresh enumeration.
  SlimVector u;
  bool have_u = false;
  if (ps.size() == 2) {
    for (int which = 0; which < 2 && !have_u; ++which) {
      const Projection& base = ps[static_cast<std::size_t>(which)];
      const Projection& extra = ps[static_cast<std::size_t>(1 - which)];
      if (extra.coords.size() != 1) continue;
      if (!std::binary_search(base.coords.begin(), base.coords.end(), ell)) continue;
      const int k = extra.coords.front();
      if (std::binary_search(base.coords.begin(), base.coords.end(), k)) continue;

      std::vector<std::vector<Rat>> base_elems;
      for (const ProjPoint& p : base.points) base_elems.push_back(p.w);
      SlimVector v;
      if (opt.seed && opt.seed->ell == ell &&
          static_cast<int>(opt.seed->u.size()) == n &&
          supported_on(*opt.seed, base.coords) &&
          injective_on(*opt.seed, base.coords, base_elems)) {
        v = *opt.seed;
      } else if (base.coords.size() == 1) {
        v = SlimVector::minus_e(ell, n);
      } else {
        CandidateSet bt;
        bt.coords = base.coords;
        bt.elems = base_elems;
        std::sort(bt.elems.begin(), bt.elems.end());
        v = find_injective_u_enum(bt, ell, n);
      }
      std::vector<Rat> xs;
      for (const auto& w : base_elems) xs.push_back(project_value(v, base.coords, w));
      std::vector<Rat> ys;
      for (const ProjPoint& p : extra.points) ys.push_back(p.w.front());
      long m = find_injective_m_slopes(xs, ys);
      u = v;
      u.u[static_cast<std::size_t>(k - 1)] += m;
      have_u = true;
    }
  }
  if (!have_u) u = find_injective_u_enum(t, ell, n);

  UniPoly elim = transform_eliminant(b, u);
  TropUniv tv = trop_univariate(elim, prime);

  std::map<Rat, std::size_t> value_to_cand;
  for (std::size_t j = 0; j < t.elems.size(); ++j) {
    Rat val = project_value(u, t.coords, t.elems[j]);
    if (!value_to_cand.emplace(val, j).second)
      throw GlueMismatch("separating transform is not injective on the candidate set");
  }

  Projection out;
  out.coords = t.coords;
  for (const TropPoint1& pt : tv.points) {
    auto it = value_to_cand.find(pt.w);
    if (it == value_to_cand.end()) {
      std::ostringstream msg;
      msg << "eliminant point " << pt.w << " matches no candidate";
      throw GlueMismatch(msg.str());
    }
    out.points.push_back({t.elems[it->second], pt.mult});
  }
  if (out.total_multiplicity() != b.degree())
    throw GlueMismatch("glued multiplicities do not sum to the ideal degree");
  out.sort_canonical();
  return {std::move(out), std::move(u)};
}

}  // namespace trop
