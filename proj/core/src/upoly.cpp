#include "hwc/upoly.hpp"

#include <algorithm>
#include <map>

namespace hwc {

void upoly_trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, a[0].field().zero());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  upoly_trim(r);
  return r;
}

UPoly upoly_mod(const UPoly& a, const UPoly& m) {
  UPoly r = a;
  upoly_trim(r);
  const size_t dm = m.size() - 1;
  Scalar lead = m.back().inv();
  while (r.size() > dm && !r.empty()) {
    size_t shift = r.size() - 1 - dm;
    Scalar c = r.back() * lead;
    for (size_t i = 0; i <= dm; ++i) r[shift + i] -= c * m[i];
    upoly_trim(r);
  }
  return r;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    UPoly r = upoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Scalar inv = a.back().inv();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

Scalar upoly_eval(const UPoly& p, const Scalar& x) {
  Scalar r = x.field().zero();
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

namespace {

UPoly powmod_poly(UPoly base, mpz_class e, const UPoly& m) {
  const Field f = m[0].field();
  UPoly r{f.one()};
  base = upoly_mod(base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = upoly_mod(upoly_mul(r, base), m);
    base = upoly_mod(upoly_mul(base, base), m);
    e >>= 1;
  }
  return r;
}

// g is a product of distinct linear factors
void split_linear(const UPoly& g, std::mt19937_64& rng, std::vector<Scalar>& out) {
  const Field f = g[0].field();
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(-g[0] / g[1]);
    return;
  }
  mpz_class half = (mpz_class(static_cast<unsigned long>(f.characteristic())) - 1) / 2;
  std::uniform_int_distribution<uint64_t> dist(0, f.characteristic() - 1);
  for (;;) {
    Scalar a = f.from_int(0);
    a = f.from_mpq(mpq_class(mpz_class(static_cast<unsigned long>(dist(rng)))));
    UPoly h = powmod_poly({a, f.one()}, half, g);
    if (h.empty()) continue;
    h[0] -= f.one();
    upoly_trim(h);
    UPoly d = upoly_gcd(g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, rng, out);
      // g / d
      UPoly q(g.size() - d.size() + 1, f.zero()), r = g;
      for (size_t i = q.size(); i-- > 0;) {
        q[i] = r[i + d.size() - 1];
        for (size_t j = 0; j < d.size(); ++j) r[i + j] -= q[i] * d[j];
      }
      split_linear(q, rng, out);
      return;
    }
  }
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::map<mpz_class, int> fac;
  for (unsigned long q = 2; q < 1000000 && mpz_class(q) * q <= n; ++q)
    while (n % q == 0) {
      fac[mpz_class(q)]++;
      n /= q;
    }
  if (n > 1) fac[n]++;
  std::vector<mpz_class> ds{1};
  for (auto& [p, e] : fac) {
    size_t cur = ds.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pk);
    }
  }
  return ds;
}

}  // namespace

std::vector<Scalar> field_roots(const UPoly& poly, std::mt19937_64& rng) {
  UPoly p = poly;
  upoly_trim(p);
  std::vector<Scalar> out;
  if (p.size() <= 1) return out;
  const Field f = p[0].field();
  if (!f.is_rational()) {
    const uint64_t q = f.characteristic();
    if (q <= 100000) {
      for (uint64_t x = 0; x < q; ++x) {
        Scalar s = f.from_int(static_cast<long long>(x));
        if (upoly_eval(p, s).is_zero()) out.push_back(s);
      }
    } else {
      UPoly xp = powmod_poly({f.zero(), f.one()}, mpz_class(static_cast<unsigned long>(q)), p);
      xp.resize(std::max<size_t>(xp.size(), 2), f.zero());
      xp[1] -= f.one();
      upoly_trim(xp);
      UPoly g = upoly_gcd(p, xp);
      split_linear(g, rng, out);
    }
  } else {
    mpz_class l = 1;
    for (auto& c : p) {
      mpz_class den = c.to_mpq().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> z;
    for (auto& c : p) z.push_back(mpz_class(c.to_mpq() * l));
    size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) out.push_back(f.zero());
    if (z.size() - low > 1) {
      auto us = divisors(z[low]);
      auto vs = divisors(z.back());
      std::vector<mpq_class> seen;
      for (auto& u : us)
        for (auto& v : vs)
          for (int s : {1, -1}) {
            mpq_class r(u * s, v);
            r.canonicalize();
            if (std::find(seen.begin(), seen.end(), r) != seen.end()) continue;
            seen.push_back(r);
            Scalar x = f.from_mpq(r);
            if (upoly_eval(p, x).is_zero()) out.push_back(x);
          }
    }
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return a.to_mpq() < b.to_mpq(); });
  return out;
}

}  // namespace hwc
