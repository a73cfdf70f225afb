#include "hwc/quiver.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace hwc {

namespace {

struct PathSpace {
  std::vector<Path> paths;  // lengths 2..max_len
  std::map<Path, int> index;
  std::vector<Vec> value;
  int max_len = 0;
};

int path_start(const QuiverPresentation& Q, const Path& p) { return Q.arrows[p.front()].from; }
int path_end(const QuiverPresentation& Q, const Path& p) { return Q.arrows[p.back()].to; }

PathSpace enumerate_paths(const BasicAlgebra& C, const QuiverPresentation& Q, int max_len) {
  PathSpace S;
  S.max_len = max_len;
  std::vector<std::pair<Path, Vec>> layer;
  for (int a = 0; a < static_cast<int>(Q.arrows.size()); ++a) layer.push_back({{a}, Q.arrows[a].elem});
  for (int len = 2; len <= max_len; ++len) {
    std::vector<std::pair<Path, Vec>> next;
    for (const auto& [p, v] : layer)
      for (int a = 0; a < static_cast<int>(Q.arrows.size()); ++a) {
        if (Q.arrows[a].from != path_end(Q, p)) continue;
        Path q = p;
        q.push_back(a);
        Vec w = C.alg->mul(v, Q.arrows[a].elem);
        S.index[q] = static_cast<int>(S.paths.size());
        S.paths.push_back(q);
        S.value.push_back(w);
        next.push_back({q, w});
      }
    layer = std::move(next);
  }
  return S;
}

// two-sided ideal span generated by vectors in path coordinates, truncated at max_len
class IdealSpan {
 public:
  IdealSpan(const Field& f, const QuiverPresentation& Q, const PathSpace& S) : Q_(Q), S_(S), span_(f, static_cast<int>(S.paths.size())) {}
  bool contains(const Vec& v) const { return span_.contains(v); }
  int dim() const { return span_.dim(); }
  void close_with(const Vec& r) {
    std::deque<Vec> queue;
    if (span_.add(r)) queue.push_back(r);
    while (!queue.empty()) {
      Vec x = std::move(queue.front());
      queue.pop_front();
      for (int a = 0; a < static_cast<int>(Q_.arrows.size()); ++a)
        for (int side = 0; side < 2; ++side) {
          Vec y = zero_vec(span_.field(), span_.ambient());
          bool any = false;
          for (size_t i = 0; i < x.size(); ++i) {
            if (x[i].is_zero()) continue;
            const Path& p = S_.paths[i];
            Path q;
            if (side == 0) {
              if (Q_.arrows[a].to != path_start(Q_, p)) continue;
              q.push_back(a);
              q.insert(q.end(), p.begin(), p.end());
            } else {
              if (Q_.arrows[a].from != path_end(Q_, p)) continue;
              q = p;
              q.push_back(a);
            }
            auto it = S_.index.find(q);
            if (it == S_.index.end()) continue;  // longer than max_len
            y[it->second] += x[i];
            any = true;
          }
          if (any && span_.add(y)) queue.push_back(std::move(y));
        }
    }
  }

 private:
  const QuiverPresentation& Q_;
  const PathSpace& S_;
  Subspace span_;
};

Relation to_relation(const PathSpace& S, const Vec& v) {
  Relation r;
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.push_back({S.paths[i], v[i]});
  return r;
}

Vec to_vec(const Field& f, const PathSpace& S, const Relation& r) {
  Vec v = zero_vec(f, static_cast<int>(S.paths.size()));
  for (const auto& t : r) {
    auto it = S.index.find(t.path);
    if (it != S.index.end()) v[it->second] += t.coeff;
  }
  return v;
}

}  // namespace

Vec eval_path(const BasicAlgebra& C, const QuiverPresentation& Q, const Path& p) {
  Vec v = Q.arrows.at(p.at(0)).elem;
  for (size_t i = 1; i < p.size(); ++i) v = C.alg->mul(v, Q.arrows[p[i]].elem);
  return v;
}

QuiverPresentation quiver_presentation(const BasicAlgebra& C) {
  QuiverPresentation Q;
  Q.vertices = C.names;
  const Field& f = C.field();
  const Algebra& B = *C.alg;
  Subspace rad2 = rad_power(C, 2);
  for (int i = 0; i < C.nvert(); ++i)
    for (int j = 0; j < C.nvert(); ++j) {
      Subspace S(f, C.dim());
      for (const Vec& r : rad2.basis()) {
        bool inside = true;
        for (int k = 0; k < C.dim() && inside; ++k)
          if (!r[k].is_zero() && (B.tgt[k] != i || B.src[k] != j)) inside = false;
        if (inside) S.add(r);
      }
      for (int k : C.rad)
        if (B.tgt[k] == i && B.src[k] == j && S.add(B.basis_vec(k)))
          Q.arrows.push_back({i, j, B.basis_vec(k), "a" + std::to_string(Q.arrows.size())});
    }
  Q.max_len = loewy_length(C);
  PathSpace S = enumerate_paths(C, Q, Q.max_len);
  IdealSpan I(f, Q, S);
  std::vector<Vec> rels;
  for (int len = 2; len <= Q.max_len; ++len) {
    std::vector<int> cols;
    for (size_t i = 0; i < S.paths.size(); ++i)
      if (static_cast<int>(S.paths[i].size()) <= len) cols.push_back(static_cast<int>(i));
    Matrix E(f, C.dim(), static_cast<int>(cols.size()));
    for (size_t c = 0; c < cols.size(); ++c) E.set_col(static_cast<int>(c), S.value[cols[c]]);
    Matrix K = kernel_basis(E);
    for (int r = 0; r < K.rows(); ++r) {
      Vec v = zero_vec(f, static_cast<int>(S.paths.size()));
      for (size_t c = 0; c < cols.size(); ++c) v[cols[c]] = K(r, static_cast<int>(c));
      if (I.contains(v)) continue;
      rels.push_back(v);
      I.close_with(v);
    }
  }
  // drop relations implied by the others
  for (size_t i = rels.size(); i-- > 0;) {
    IdealSpan J(f, Q, S);
    for (size_t j = 0; j < rels.size(); ++j)
      if (j != i) J.close_with(rels[j]);
    if (J.contains(rels[i])) rels.erase(rels.begin() + static_cast<long>(i));
  }
  for (const Vec& v : rels) Q.relations.push_back(to_relation(S, v));
  Q.quotient_dim = C.nvert() + static_cast<int>(Q.arrows.size()) + static_cast<int>(S.paths.size()) - I.dim();
  return Q;
}

std::string relation_str(const QuiverPresentation& Q, const Relation& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : r) {
    std::string c = t.coeff.str();
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (c != "1") os << c << "*";
    for (size_t i = 0; i < t.path.size(); ++i) os << (i ? "*" : "") << Q.arrows[t.path[i]].name;
    first = false;
  }
  os << " = 0";
  return os.str();
}

QuiverMatch match_quiver(const BasicAlgebra& C, const QuiverPresentation& Q, const std::vector<int>& vertex_map,
                         const std::vector<GoldenArrow>& arrows, const std::vector<GoldenRelation>& relations) {
  const Field& f = C.field();
  if (arrows.size() != Q.arrows.size()) return {false, "arrow count " + std::to_string(Q.arrows.size()) + " vs " + std::to_string(arrows.size())};
  std::map<std::string, int> ours;
  for (const auto& g : arrows) {
    int hit = -1, count = 0;
    for (int a = 0; a < static_cast<int>(Q.arrows.size()); ++a)
      if (Q.arrows[a].from == vertex_map.at(g.from) && Q.arrows[a].to == vertex_map.at(g.to)) {
        hit = a;
        ++count;
      }
    if (count != 1) return {false, "arrow " + g.name + " has no unique counterpart"};
    ours[g.name] = hit;
  }
  PathSpace S = enumerate_paths(C, Q, Q.max_len);
  IdealSpan mine(f, Q, S);
  for (const auto& r : Q.relations) mine.close_with(to_vec(f, S, r));

  std::vector<Scalar> factor(Q.arrows.size(), f.one());
  std::vector<bool> fixed(Q.arrows.size(), false);
  auto translate = [&](const GoldenTerm& t) {
    Path p;
    for (const auto& n : t.path) p.push_back(ours.at(n));
    return p;
  };
  auto path_scale = [&](const Path& p) {
    Scalar s = f.one();
    for (int a : p) s *= factor[a];
    return s;
  };
  // binomial relations fix arrow scalars
  for (const auto& g : relations) {
    if (g.size() != 2) continue;
    Path p1 = translate(g[0]), p2 = translate(g[1]);
    std::map<int, int> expo;
    for (int a : p2) ++expo[a];
    for (int a : p1) --expo[a];
    int free_arrow = -1;
    for (auto [a, e] : expo)
      if ((e == 1 || e == -1) && !fixed[a]) free_arrow = a;
    if (free_arrow < 0) continue;
    auto value = [&](const Path& p) { return S.index.count(p) ? S.value[S.index.at(p)] : zero_vec(f, C.dim()); };
    Vec e1 = value(p1), e2 = value(p2);
    // need c1 s1 e1 + c2 s2 e2 = 0 in C, with e1 = t0 e2
    int piv = -1;
    for (int k = 0; k < C.dim(); ++k)
      if (!e2[k].is_zero()) piv = k;
    if (piv < 0 || is_zero(e1)) continue;
    Scalar t0 = e1[piv] / e2[piv];
    if (sub(e1, scale(t0, e2)) != zero_vec(f, C.dim())) continue;
    Scalar c1 = f.from_int(g[0].coeff), c2 = f.from_int(g[1].coeff);
    Scalar rho = -(c1 * t0) / c2;  // required s2/s1
    // s2/s1 = Π scale^expo; solve for the free arrow
    Scalar rest = f.one();
    for (auto [a, e] : expo) {
      if (a == free_arrow || e == 0) continue;
      for (int i = 0; i < (e > 0 ? e : -e); ++i) rest = e > 0 ? rest * factor[a] : rest / factor[a];
    }
    Scalar need = rho / rest;
    factor[free_arrow] = expo[free_arrow] == 1 ? need : need.inv();
    for (const auto& kv : expo) fixed[kv.first] = true;
  }
  auto golden_vec = [&](const GoldenRelation& g) {
    Relation r;
    for (const auto& t : g) {
      Path p = translate(t);
      r.push_back({p, f.from_int(t.coeff) * path_scale(p)});
    }
    return to_vec(f, S, r);
  };
  IdealSpan theirs(f, Q, S);
  for (const auto& g : relations) {
    Vec v = golden_vec(g);
    if (!mine.contains(v)) return {false, "golden relation not in the computed ideal"};
    theirs.close_with(v);
  }
  for (const auto& r : Q.relations)
    if (!theirs.contains(to_vec(f, S, r))) return {false, "computed relation " + relation_str(Q, r) + " not in the golden ideal"};
  for (size_t i = 0; i < S.paths.size(); ++i)
    if (static_cast<int>(S.paths[i].size()) == Q.max_len && !theirs.contains(unit_vec(f, static_cast<int>(S.paths.size()), static_cast<int>(i))))
      return {false, "golden ideal misses a path of maximal length"};
  return {true, ""};
}

}  // namespace hwc
