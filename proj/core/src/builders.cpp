#include "hwc/builders.hpp"

#include <map>
#include <sstream>

namespace hwc {

namespace {

std::vector<std::vector<int>> exponent_vectors(const std::vector<TruncVar>& vars) {
  std::vector<std::vector<int>> out{{}};
  for (const auto& v : vars) {
    std::vector<std::vector<int>> next;
    for (const auto& e : out)
      for (int k = 0; k < v.exp; ++k) {
        auto x = e;
        x.push_back(k);
        next.push_back(std::move(x));
      }
    out = std::move(next);
  }
  return out;
}

std::string monomial_label(const std::vector<TruncVar>& vars, const std::vector<int>& e) {
  std::string s;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (!e[i]) continue;
    s += vars[i].name;
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

Subspace span_of(const Field& f, int n, const std::vector<int>& idx) {
  std::vector<Vec> v;
  for (int i : idx) v.push_back(unit_vec(f, n, i));
  return Subspace::span(f, n, v);
}

}  // namespace

BuiltAlgebra truncated_polynomial(const Field& f, const std::vector<TruncVar>& vars) {
  for (const auto& v : vars) {
    if (v.deg == 0) throw PreconditionError("variable " + v.name + " has degree 0");
    if (v.exp < 2) throw PreconditionError("variable " + v.name + " needs exponent at least 2");
  }
  auto ex = exponent_vectors(vars);
  const int n = static_cast<int>(ex.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[ex[i]] = i;
  auto A = std::make_shared<Algebra>(f, n);
  for (int i = 0; i < n; ++i) {
    A->labels.push_back(monomial_label(vars, ex[i]));
    int d = 0;
    for (size_t v = 0; v < vars.size(); ++v) d += vars[v].deg * ex[i][v];
    A->deg[i] = d;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> e(vars.size());
      bool zero = false;
      for (size_t v = 0; v < vars.size(); ++v) {
        e[v] = ex[i][v] + ex[j][v];
        if (e[v] >= vars[v].exp) zero = true;
      }
      if (!zero) A->set_prod(i, j, {{index[e], f.one()}});
    }
  A->unit = unit_vec(f, n, index[std::vector<int>(vars.size(), 0)]);
  std::vector<int> neg, pos;
  for (int i = 0; i < n; ++i) {
    bool onlyneg = true, onlypos = true;
    for (size_t v = 0; v < vars.size(); ++v)
      if (ex[i][v]) (vars[v].deg < 0 ? onlypos : onlyneg) = false;
    if (onlyneg) neg.push_back(i);
    if (onlypos) pos.push_back(i);
  }
  BuiltAlgebra out;
  out.A = A;
  out.tri = {span_of(f, n, neg), span_of(f, n, {index[std::vector<int>(vars.size(), 0)]}), span_of(f, n, pos)};
  // τ swaps paired negative and positive variables of matching shape
  std::vector<int> nv, pv;
  for (size_t v = 0; v < vars.size(); ++v) (vars[v].deg < 0 ? nv : pv).push_back(static_cast<int>(v));
  bool pairable = nv.size() == pv.size();
  for (size_t i = 0; pairable && i < nv.size(); ++i)
    if (vars[nv[i]].deg != -vars[pv[i]].deg || vars[nv[i]].exp != vars[pv[i]].exp) pairable = false;
  if (pairable) {
    std::vector<int> partner(vars.size());
    for (size_t i = 0; i < nv.size(); ++i) {
      partner[nv[i]] = pv[i];
      partner[pv[i]] = nv[i];
    }
    Matrix tau(f, n, n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(vars.size());
      for (size_t v = 0; v < vars.size(); ++v) e[partner[v]] = ex[i][v];
      tau(index[e], i) = f.one();
    }
    out.tau = tau;
  }
  std::vector<int> top(vars.size());
  for (size_t v = 0; v < vars.size(); ++v) top[v] = vars[v].exp - 1;
  if (A->deg[index[top]] == 0) out.trace = unit_vec(f, n, index[top]);
  std::ostringstream os;
  os << "trunc:";
  for (size_t v = 0; v < vars.size(); ++v) os << (v ? "," : "") << vars[v].name << ":" << vars[v].deg << ":" << vars[v].exp;
  out.description = os.str();
  return out;
}

namespace {

// elements of the restricted enveloping algebra: (a, c) -> polynomial in H mod H^p - H
struct Sl2 {
  uint64_t p;
  Field f;
  using Poly = std::vector<Scalar>;
  using Elem = std::map<std::pair<int, int>, Poly>;

  Poly zero() const { return Poly(p, f.zero()); }
  Poly mulp(const Poly& a, const Poly& b) const {
    Poly r = zero();
    for (uint64_t i = 0; i < p; ++i) {
      if (a[i].is_zero()) continue;
      for (uint64_t j = 0; j < p; ++j) {
        if (b[j].is_zero()) continue;
        uint64_t k = i + j;
        while (k >= p) k -= p - 1;
        r[k] += a[i] * b[j];
      }
    }
    return r;
  }
  Poly linear(long long c) const {  // H + c
    Poly r = zero();
    r[0] = f.from_int(c);
    r[1] = f.one();
    return r;
  }
  Poly subst(const Poly& g, long long c) const {  // g(H + c)
    Poly r = zero();
    Poly x = linear(c);
    for (uint64_t i = p; i-- > 0;) {
      r = mulp(r, x);
      r[0] += g[i];
    }
    return r;
  }
  static void acc(Elem& e, std::pair<int, int> key, const Poly& g) {
    auto it = e.find(key);
    if (it == e.end()) {
      e.emplace(key, g);
      return;
    }
    for (size_t i = 0; i < g.size(); ++i) it->second[i] += g[i];
  }
  Elem apply_E(const Elem& y) const {
    Elem r;
    for (const auto& [ac, g] : y) {
      auto [a, c] = ac;
      if (c + 1 < static_cast<int>(p)) acc(r, {a, c + 1}, subst(g, -2));
      if (a > 0) {
        Poly t = mulp(linear(1 - a), g);
        for (auto& x : t) x = f.from_int(a) * x;
        acc(r, {a - 1, c}, t);
      }
    }
    return r;
  }
  Elem apply_H(const Elem& y, int b) const {
    Elem r;
    for (const auto& [ac, g] : y) {
      Poly t = g;
      for (int i = 0; i < b; ++i) t = mulp(linear(-2LL * ac.first), t);
      acc(r, ac, t);
    }
    return r;
  }
  Elem apply_F(const Elem& y) const {
    Elem r;
    for (const auto& [ac, g] : y)
      if (ac.first + 1 < static_cast<int>(p)) acc(r, {ac.first + 1, ac.second}, g);
    return r;
  }
};

}  // namespace

BuiltAlgebra restricted_sl2(uint64_t p, bool force) {
  if (p == 2) throw PreconditionError("p = 2 is not supported for sl2");
  if (!is_prime_u64(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (p > 7 && !force) throw PreconditionError("sl2 with p > 7 exceeds the default cap");
  Field f = Field::prime(p);
  Sl2 S{p, f};
  const int P = static_cast<int>(p);
  const int n = P * P * P;
  auto idx = [P](int a, int b, int c) { return (a * P + b) * P + c; };
  auto A = std::make_shared<Algebra>(f, n);
  for (int a = 0; a < P; ++a)
    for (int b = 0; b < P; ++b)
      for (int c = 0; c < P; ++c) {
        std::string s;
        if (a) s += "F" + (a > 1 ? "^" + std::to_string(a) : "");
        if (b) s += "H" + (b > 1 ? "^" + std::to_string(b) : "");
        if (c) s += "E" + (c > 1 ? "^" + std::to_string(c) : "");
        A->labels.push_back(s.empty() ? "1" : s);
        A->deg[idx(a, b, c)] = c - a;
      }
  for (int a = 0; a < P; ++a)
    for (int b = 0; b < P; ++b)
      for (int c = 0; c < P; ++c)
        for (int a2 = 0; a2 < P; ++a2)
          for (int b2 = 0; b2 < P; ++b2)
            for (int c2 = 0; c2 < P; ++c2) {
              Sl2::Elem y;
              Sl2::Poly g = S.zero();
              g[b2] = f.one();
              y[{a2, c2}] = g;
              for (int i = 0; i < c; ++i) y = S.apply_E(y);
              y = S.apply_H(y, b);
              for (int i = 0; i < a; ++i) y = S.apply_F(y);
              std::vector<Term> t;
              for (const auto& [ac, poly] : y)
                for (int k = 0; k < P; ++k)
                  if (!poly[k].is_zero()) t.push_back({idx(ac.first, k, ac.second), poly[k]});
              A->set_prod(idx(a, b, c), idx(a2, b2, c2), std::move(t));
            }
  A->unit = unit_vec(f, n, idx(0, 0, 0));
  std::vector<int> am, tt, ap;
  for (int i = 0; i < P; ++i) {
    am.push_back(idx(i, 0, 0));
    tt.push_back(idx(0, i, 0));
    ap.push_back(idx(0, 0, i));
  }
  BuiltAlgebra out;
  out.A = A;
  out.tri = {span_of(f, n, am), span_of(f, n, tt), span_of(f, n, ap)};
  Matrix tau(f, n, n);
  for (int a = 0; a < P; ++a)
    for (int b = 0; b < P; ++b)
      for (int c = 0; c < P; ++c) tau(idx(c, b, a), idx(a, b, c)) = f.one();
  out.tau = tau;
  out.description = "sl2:" + std::to_string(p);
  // Ω = 4FE + (H+1)²
  Vec omega = zero_vec(f, n);
  omega[idx(1, 0, 1)] += f.from_int(4);
  omega[idx(0, 2, 0)] += f.one();
  omega[idx(0, 1, 0)] += f.from_int(2);
  omega[idx(0, 0, 0)] += f.one();
  out.named["Omega"] = omega;
  return out;
}

bool is_central(const Algebra& A, const Vec& a) {
  for (int k = 0; k < A.dim(); ++k) {
    Vec x = A.basis_vec(k);
    if (A.mul(a, x) != A.mul(x, a)) return false;
  }
  return true;
}

BuiltAlgebra matrix_algebra(const Field& f, int n) {
  const int d = n * n;
  auto A = std::make_shared<Algebra>(f, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      A->labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      for (int k = 0; k < n; ++k) A->set_prod(i * n + j, j * n + k, {{i * n + k, f.one()}});
    }
  for (int i = 0; i < n; ++i) A->unit[i * n + i] = f.one();
  BuiltAlgebra out;
  out.A = A;
  Subspace K1 = Subspace::span(f, d, {A->unit});
  out.tri = {K1, Subspace::whole(f, d), K1};
  Matrix tau(f, d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) tau(j * n + i, i * n + j) = f.one();
  out.tau = tau;
  out.trace = zero_vec(f, d);
  for (int i = 0; i < n; ++i) (*out.trace)[i * n + i] = f.one();
  out.description = "mat:" + std::to_string(n);
  return out;
}

std::vector<TruncVar> parse_trunc_vars(const std::string& text) {
  std::vector<TruncVar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream is(item);
    std::string name, deg, exp;
    if (!std::getline(is, name, ':') || !std::getline(is, deg, ':') || !std::getline(is, exp, ':'))
      throw std::invalid_argument("variable '" + item + "' must look like name:degree:exponent");
    try {
      out.push_back({name, std::stoi(deg), std::stoi(exp)});
    } catch (const std::exception&) {
      throw std::invalid_argument("variable '" + item + "' has a non-integer degree or exponent");
    }
  }
  if (out.empty()) throw std::invalid_argument("no variables given");
  return out;
}

BuiltAlgebra build_family(const std::string& family, const Field& f, bool force) {
  auto colon = family.find(':');
  std::string kind = family.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : family.substr(colon + 1);
  if (kind == "trunc") return truncated_polynomial(f, parse_trunc_vars(rest));
  if (kind == "sl2") {
    unsigned long long p = 0;
    try {
      p = std::stoull(rest);
    } catch (const std::exception&) {
      throw std::invalid_argument("sl2 family needs a prime, e.g. sl2:3");
    }
    return restricted_sl2(p, force);
  }
  if (kind == "mat") return matrix_algebra(f, std::stoi(rest));
  throw std::invalid_argument("unknown family '" + kind + "'");
}

}  // namespace hwc
