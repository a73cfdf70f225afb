// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Usage: hwc_acceptance [criterion...]
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"

using namespace hwc;
using namespace hwc::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      notes.push_back(what);
    }
  }
};

std::string join(const std::vector<std::string>& v, size_t limit = 6) {
  std::string s;
  for (size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? "; " : "") + v[i];
  if (v.size() > limit) s += "; ... (" + std::to_string(v.size()) + " total)";
  return s;
}

bool local_square_zero(const Algebra& A0) {
  // A₀ ≅ K[ε]/(ε²): dim 2, a nonzero nilpotent element
  if (A0.dim() != 2) return false;
  for (int k = 0; k < 2; ++k) {
    Vec e = A0.basis_vec(k);
    Vec sq = A0.mul(e, e);
    bool zero = true;
    for (const auto& c : sq) zero = zero && c.is_zero();
    if (zero) return true;
  }
  return false;
}

Outcome golden_dimensions() {
  Outcome o;
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  o.expect(W.A0->dim() == 2, "dim A0 = " + std::to_string(W.A0->dim()));
  Truncation T(W, 1);
  o.expect(T.C.dim() == 5, "dim C1 = " + std::to_string(T.C.dim()));
  auto map = match_by_dims(T, {2, 3});
  o.expect(map[0] >= 0 && map[1] >= 0, "C1 vertices not identified by projective dimensions");
  if (map[0] >= 0 && map[1] >= 0) {
    auto Q = quiver_presentation(T.C);
    auto m = match_quiver(T.C, Q, map, {{0, 1, "a"}, {1, 0, "b"}}, {{{1, {"a", "b"}}}});
    o.expect(m.ok, "C1 quiver: " + m.detail);
    o.expect(Q.relations.size() == 1, "C1 has " + std::to_string(Q.relations.size()) + " relations");
  }
  Check z = bell_zero_check(W);
  o.expect(z.ok, "B0 vs A0^op: " + z.detail);
  o.expect(local_square_zero(*W.A0), "A0 is not K[e]/(e^2)");
  for (int ell = 0; ell <= 3; ++ell) {
    auto B = bell_algebra(W, ell);
    int want = 4 * ell + 2;
    o.expect(B.alg->dim() == want && bell_end_dim(W, ell) == want && bell_dim_formula(W, ell) == want,
             "dim B_" + std::to_string(ell) + " = " + std::to_string(B.alg->dim()) + " / End " + std::to_string(bell_end_dim(W, ell)));
    o.expect(validate_algebra(*B.alg).ok(), "B_" + std::to_string(ell) + " is not an algebra");
  }
  return o;
}

Outcome golden_dimensions_2() {
  Outcome o;
  Workspace W = workspace("trunc:x:-1:3,y:1:3");
  Truncation T(W, 2);
  o.expect(T.C.dim() == 14, "dim C2 = " + std::to_string(T.C.dim()));
  auto map = match_by_dims(T, {6, 5, 3});
  o.expect(std::all_of(map.begin(), map.end(), [](int v) { return v >= 0; }), "C2 vertices not identified");
  if (o.ok) {
    auto Q = quiver_presentation(T.C);
    // x₁y₂ = 0 and y₂x₁ = x₀y₁, composition right to left
    auto m = match_quiver(T.C, Q, map, {{2, 1, "y2"}, {1, 0, "y1"}, {0, 1, "x0"}, {1, 2, "x1"}},
                          {{{1, {"y2", "x1"}}}, {{1, {"x1", "y2"}}, {-1, {"y1", "x0"}}}});
    o.expect(m.ok, "C2 relations: " + m.detail);
  }
  return o;
}

Outcome ext_tables() {
  Outcome o;
  {
    Workspace W = workspace("trunc:x:-1:2,y:1:2");
    Truncation T(W, 1);
    auto map = match_by_dims(T, {2, 3});
    if (map[0] < 0 || map[1] < 0) {
      o.expect(false, "C1 vertices not identified");
      return o;
    }
    // (i, j, k) ↦ dim Ext^i(L(j), Δ(k)) in golden labels
    std::map<std::tuple<int, int, int>, int> want{{{0, 1, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 0}, 1}, {{2, 0, 0}, 1}};
    for (int j = 0; j < 2; ++j) {
      Resolution R = minimal_resolution(T.C, T.simple(map[j]), 3);
      for (int k = 0; k < 2; ++k) {
        auto e = ext_dims(T.C, R, T.image(W.standard(T.labels[map[k]])), 2);
        for (int i = 0; i <= 2; ++i) {
          int expect = want.count({i, j, k}) ? want[{i, j, k}] : 0;
          o.expect(e[i] == expect, "C1 Ext^" + std::to_string(i) + "(L" + std::to_string(j) + ",D" + std::to_string(k) + ") = " +
                                       std::to_string(e[i]) + ", expected " + std::to_string(expect));
        }
      }
    }
  }
  {
    Workspace W = workspace("trunc:x:-1:3,y:1:3");
    Truncation T(W, 2);
    auto map = match_by_dims(T, {6, 5, 3});
    for (int j : {1, 2}) {
      Resolution R = minimal_resolution(T.C, T.simple(map[j]), 2);
      for (int k = 0; k < 3; ++k) {
        auto e = ext_dims(T.C, R, basic_projective(T.C, map[k]), 1);
        o.expect(e[0] == 0 && e[1] == 0, "C2 Ext^{0,1}(L" + std::to_string(j) + ",Q" + std::to_string(k) + ") != 0");
      }
    }
  }
  return o;
}

Outcome cover_verdicts() {
  Outcome o;
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  Truncation T(W, 1);
  auto B = bell_algebra(W, 0);
  Check dc = double_centralizer_check(T, B);
  o.expect(dc.ok, "double centralizer: " + dc.detail);
  auto f = faithfulness_report(T);
  o.expect(f.minus_one_faithful, "(-1)-faithful false");
  o.expect(f.cover, "cover false");
  o.expect(!f.zero_faithful, "0-faithful true");
  o.expect(f.killed.size() == 1, "killed " + std::to_string(f.killed.size()) + " simples");
  return o;
}

Outcome sl2_core() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto B = build_family("sl2:3", Field::prime(3));
  Workspace W(B.A, B.tri, 0);
  o.expect(B.A->dim() == 27, "dim A = " + std::to_string(B.A->dim()));
  o.expect(W.A0->dim() == 9, "dim A0 = " + std::to_string(W.A0->dim()));
  std::multiset<int> profile;
  for (const auto& b : block_decomposition(*W.A0, W.idem.idem)) profile.insert(b.dim);
  // K^⊕p ⊕ (K[t]/(t²))^⊕p(p−1)/2 with p = 3
  std::multiset<int> want{1, 1, 1, 2, 2, 2};
  std::string got;
  for (int d : profile) got += std::to_string(d) + " ";
  o.expect(profile == want, "A0 block dims " + got);
  auto M = matrices(W);
  bool r1 = std::all_of(M.rank_one.begin(), M.rank_one.end(), [](bool b) { return b; });
  o.expect(r1, "rank-one property fails");
  bool two = std::any_of(M.blocks.begin(), M.blocks.end(), [](const std::vector<int>& b) { return b.size() == 2; });
  o.expect(two, "no block with 2 simples");
  o.expect(M.verdict == "NOT cellular", "verdict: " + M.verdict);
  o.expect(M.factorization, "C != DtD");
  o.expect(is_central(*B.A, B.named.at("Omega")), "Casimir not central");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(secs < 60, "runtime " + std::to_string(secs) + " s");
  return o;
}

Outcome xyz_example() {
  Outcome o;
  auto B = build_family("trunc:x:-1:2,y:1:2,z:1:2", Field::rationals());
  o.expect(B.A->dim() == 8, "dim A = " + std::to_string(B.A->dim()));
  std::mt19937_64 rng(0);
  o.expect(!find_graded_symmetric_form(*B.A, rng), "graded symmetric form found");
  Workspace W(B.A, B.tri, 0);
  o.expect(W.A0->dim() == 3, "dim A0 = " + std::to_string(W.A0->dim()));
  Subspace rad(W.A0->field(), W.A0->dim());
  for (int k = 0; k < B.A->dim(); ++k)
    if (B.A->label(k) == "xy" || B.A->label(k) == "xz") rad.add(W.to_A0(B.A->basis_vec(k)));
  o.expect(rad.dim() == 2, "xy, xz not found in A0");
  bool same = rad.dim() == W.rad_A0.dim();
  for (const Vec& v : W.rad_A0.basis()) same = same && rad.contains(v);
  o.expect(same, "rad A0 != <xy, xz>");
  Module R0 = regular_module(W.A0);
  int soc = total_dim(socle_of(R0, W.rad_A0.basis()));
  o.expect(soc == 2, "socle of the regular A0-module has dim " + std::to_string(soc));
  return o;
}

Outcome formula_suite() {
  Outcome o;
  std::mt19937_64 rng(2026);
  std::map<std::string, int> fails;
  std::vector<std::string> first;
  const int trials = 12;
  auto note = [&](const std::string& fam, const std::string& what) {
    if (fails[what]++ == 0) first.push_back(what + " [" + fam + "]");
  };
  for (int t = 0; t < trials; ++t) {
    std::string fam = random_trunc_family(rng);
    Workspace W = workspace(fam, Field::rationals(), t);
    const auto& tri = W.tri;
    auto P = datum_poset(W);
    if (P != datum_poset_formula(W)) note(fam, "P_A count formula");
    StandardDatum S = standard_datum(W);
    for (const auto& L : S.layers) {
      int s = L.lam.s, dl = W.tdim(L.lam.b);
      if (L.nF != dl * count_deg(tri.ap_deg, s)) note(fam, "|F| formula");
      if (L.nG != dl * count_deg(tri.am_deg, -s)) note(fam, "|G| formula");
    }
    if (S.size() != W.A0->dim()) note(fam, "sum |F||G| != dim A0");
    if (!verify_standard_datum(W, S).ok) note(fam, "datum verification");
    for (int b = 0; b < W.nblocks(); ++b)
      for (int s = -1; s <= 1; ++s)
        if (W.standard({b, s}).dim() != W.tdim(b) * static_cast<int>(tri.am.size())) note(fam, "dim Delta formula");
    if (!opposite_multiplicity_check(W).ok) note(fam, "[A:nabla] = [Aop:Delta*]");
    auto M = matrices(W);
    if (M.bgg && !M.factorization) note(fam, "C = DtD under BGG");
    for (const auto& c : cell_modules(W, S))
      if (c.underlined && c.rank != c.tilting_mult) note(fam, "dim L0 = [A:T]");
    if (!semisimplicity(W).agree()) note(fam, "semisimplicity equivalence");
    StandardDatum r1 = standard_datum(W, {true, 1000 + static_cast<uint64_t>(t)});
    StandardDatum r2 = standard_datum(W, {true, 2000 + static_cast<uint64_t>(t)});
    if (!verify_standard_datum(W, r1).ok || !verify_standard_datum(W, r2).ok || !same_filtration(r1, r2) || !same_filtration(S, r1))
      note(fam, "basis-choice independence");
  }
  for (const auto& [what, n] : fails) o.expect(false, what + " fails on " + std::to_string(n) + "/" + std::to_string(trials));
  if (!first.empty()) o.notes.push_back("first: " + join(first, 3));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(8);
  int modules = 0, bridged = 0;
  for (std::string fam : {"trunc:x:-1:2,y:1:2", "trunc:x:-1:3,y:1:3", "trunc:x:-1:2,y:1:2,z:1:2", "sl2:3"}) {
    Field f = fam.rfind("sl2", 0) == 0 ? Field::prime(3) : Field::rationals();
    Workspace W = workspace(fam, f);
    std::vector<Module> mods;
    for (int b = 0; b < W.nblocks(); ++b)
      for (int s = -1; s <= 1; ++s) {
        Label l{b, s};
        for (Module M : {W.standard(l), W.costandard(l), W.simple(l), W.projective(l), W.injective(l), W.tilting(l)}) mods.push_back(M);
      }
    for (int i = 0; i < 12; ++i) mods.push_back(random_quotient(W, rng));
    for (const Module& M : mods) {
      if (M.dim() == 0 || M.dim() > 20) continue;
      ++modules;
      if (W.multiplicities(M) != W.multiplicities_bruteforce(M)) o.expect(false, fam + ": peeling != radical series on a module of dim " + std::to_string(M.dim()));
      Check c = grading_bridge_check(W, M);
      ++bridged;
      if (!c.ok) o.expect(false, fam + ": bridge " + c.detail);
    }
  }
  o.notes.push_back(std::to_string(modules) + " modules, " + std::to_string(bridged) + " bridge checks");
  return o;
}

Outcome structural() {
  Outcome o;
  std::mt19937_64 rng(19);
  int trials = 0;
  for (std::string fam : {"trunc:x:-1:3", "trunc:y:1:2,z:1:2"}) {
    auto B = build_family(fam, Field::rationals());
    auto r = socle_support_test(B.A, 3, 100, rng);
    trials += r.trials;
    o.expect(r.ok, fam + ": " + r.witness);
  }
  o.expect(trials >= 200, "only " + std::to_string(trials) + " socle trials");
  for (std::string fam : {"trunc:x:-1:2,y:1:2", "trunc:x:-1:3,y:1:3"}) {
    Workspace W = workspace(fam);
    std::vector<std::unique_ptr<Truncation>> T;
    for (int d = 0; d <= 3; ++d) T.push_back(std::make_unique<Truncation>(W, d));
    for (int d = 0; d <= 3; ++d)
      for (int t = 0; t <= d; ++t) {
        Check c = corner_check(*T[d], *T[t]);
        o.expect(c.ok, fam + " corner t=" + std::to_string(t) + " d=" + std::to_string(d) + ": " + c.detail);
      }
    for (int d = W.N(); d <= 3; ++d) {
      auto B = bell_algebra(W, d - W.N());
      auto bs = basic_sets(*T[d], B);
      o.expect(bs.ok(), fam + " d=" + std::to_string(d) + " basic sets: " + join(bs.witnesses, 2));
      Check dc = double_centralizer_check(*T[d], B);
      o.expect(dc.ok, fam + " d=" + std::to_string(d) + ": " + dc.detail);
    }
  }
  {
    Workspace W = workspace("sl2:3", Field::prime(3));
    Truncation T(W, 3);
    auto B = bell_algebra(W, 3 - W.N());
    auto bs = basic_sets(T, B);
    o.expect(bs.ok(), "sl2:3 basic sets: " + join(bs.witnesses, 2));
    Check dc = double_centralizer_check(T, B);
    o.expect(dc.ok, "sl2:3 d=3: " + dc.detail);
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"golden dimensions (x^2,y^2)", golden_dimensions},
      {"golden dimensions II (x^3,y^3)", golden_dimensions_2},
      {"Ext tables", ext_tables},
      {"cover verdicts", cover_verdicts},
      {"core of restricted sl2, p=3", sl2_core},
      {"x,y,z example", xyz_example},
      {"formula suite", formula_suite},
      {"oracle equivalence", oracle_equivalence},
      {"structural property tests", structural},
  };
  std::set<int> pick;
  for (int i = 1; i < argc; ++i) pick.insert(std::stoi(argv[i]));
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    int n = static_cast<int>(i) + 1;
    if (!pick.empty() && !pick.count(n)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    line.precision(2);
    line << std::fixed << "  (" << secs << " s)";
    if (!o.notes.empty()) line << "  -- " << join(o.notes);
    std::cout << line.str() << std::endl;
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}
