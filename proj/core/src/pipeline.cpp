#include "hwc/pipeline.hpp"

#include <set>

#include "hwc/cover.hpp"
#include "hwc/datum.hpp"
#include "hwc/matrices.hpp"
#include "hwc/specfile.hpp"

namespace hwc {

namespace {

Json check_json(const Check& c) { return {{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}}; }

Json labels_json(const std::vector<Label>& ls) {
  Json j = Json::array();
  for (const auto& l : ls) j.push_back(label_str(l));
  return j;
}

std::vector<std::string> block_names(const Workspace& W) {
  std::vector<std::string> out;
  for (int b = 0; b < W.nblocks(); ++b) out.push_back("L" + std::to_string(b));
  return out;
}

template <class T>
Json int_table(const std::vector<std::vector<T>>& m) {
  Json rows = Json::array();
  for (const auto& r : m) rows.push_back(r);
  return rows;
}

int default_d(const Workspace& W, const PipelineOptions& o) {
  int d = o.d < 0 ? W.N() : o.d;
  if (d < W.N())
    throw PreconditionError("d = " + std::to_string(d) + " < N = " + std::to_string(W.N()) +
                            ": no natural functor from the truncated category to B_ℓ-modules exists for d < N");
  return d;
}

Workspace make_workspace(const BuiltAlgebra& B, const PipelineOptions& o) {
  for (const auto& c : validate_triangular(*B.A, B.tri))
    if (!c.ok) throw PreconditionError("triangular decomposition fails: " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  return Workspace(B.A, B.tri, o.seed);
}

}  // namespace

CommandResult run_validate(const BuiltAlgebra& B, const PipelineOptions& o) {
  CommandResult r;
  const Algebra& A = *B.A;
  auto rep = validate_algebra(A);
  r.results["algebra"] = {{"dim", A.dim()},
                          {"field", A.field().name()},
                          {"associative", rep.associative},
                          {"unital", rep.unital},
                          {"graded", rep.graded},
                          {"witness", rep.witness}};
  r.ok = rep.ok();
  if (!r.ok) return r;
  Json tri = Json::array();
  bool tri_ok = true;
  for (const auto& c : validate_triangular(A, B.tri)) {
    tri.push_back(check_json(c));
    tri_ok = tri_ok && c.ok;
  }
  r.results["triangular"] = tri;
  r.ok = tri_ok;
  if (!tri_ok) return r;
  auto Ap = std::make_shared<const Algebra>(A);
  Triangular T = Triangular::build(Ap, B.tri);
  r.results["properties"] = {{"N", T.N()},
                             {"N_minus", T.N_minus()},
                             {"ambidextrous", check_ambidextrous(T)},
                             {"well_generated", check_well_generated(T)}};
  std::mt19937_64 rng(o.seed);
  auto form = find_graded_symmetric_form(A, rng);
  r.results["properties"]["graded_symmetric"] = form ? "found" : (A.field().is_rational() || A.field().characteristic() >= 9 ? "none" : "not found");
  if (B.tau) {
    Json tj = Json::array();
    for (const auto& c : check_anti_involution(A, *B.tau, &B.tri)) {
      tj.push_back(check_json(c));
      r.ok = r.ok && c.ok;
    }
    r.results["anti_involution"] = tj;
  }
  if (B.trace) {
    bool sym = is_graded_symmetric_form(A, *B.trace);
    r.results["trace_form"] = sym;
    r.ok = r.ok && sym;
  }
  for (const auto& [name, v] : B.named) {
    bool c = is_central(A, v);
    r.results["named"][name] = {{"central", c}};
    r.ok = r.ok && c;
  }
  return r;
}

CommandResult run_core(const BuiltAlgebra& B, const PipelineOptions& o) {
  CommandResult r;
  Workspace W = make_workspace(B, o);
  Json& j = r.results;
  j["dim_A0"] = W.A0->dim();
  j["dim_rad_A0"] = W.rad_A0.dim();
  j["labels"] = labels_json(W.core_labels);
  j["simples"] = W.core_simples.size();
  j["primitive_idempotents"] = W.idem.idem.size();
  Json blocks = Json::array();
  for (const auto& b : block_decomposition(*W.A0, W.idem.idem)) {
    std::set<int> simples;
    for (int m : b.members) simples.insert(W.idem.simple_of[m]);
    blocks.push_back({{"dim", b.dim}, {"simples", simples.size()}});
  }
  j["blocks"] = blocks;
  Module R0 = regular_module(W.A0);
  PieceSpaces soc = socle_of(R0, W.rad_A0.basis());
  j["regular_socle_dim"] = total_dim(soc);
  j["self_injective"] = W.self_injective();
  j["datum_poset"] = labels_json(datum_poset(W));
  j["datum_poset_formula"] = labels_json(datum_poset_formula(W));
  auto qh = quasi_hereditary_core(W);
  j["quasi_hereditary"] = {{"verdict", qh.quasi_hereditary}, {"irr_A0", qh.irr_A0}, {"poset_size", qh.poset_size}, {"explanation", qh.explanation}};
  auto ss = semisimplicity(W);
  j["semisimple"] = {{"A0", ss.A0_semisimple}, {"A", ss.A_semisimple}};
  r.ok = ss.agree();
  return r;
}

CommandResult run_celldatum(const BuiltAlgebra& B, const PipelineOptions& o) {
  CommandResult r;
  Workspace W = make_workspace(B, o);
  StandardDatum S;
  if (B.tau) {
    auto cd = cell_datum(W, *B.tau, o.seed);
    r.results["kind"] = "cell";
    r.results["error"] = cd.error;
    if (!cd.ok) {
      r.results["kind"] = "standard";
      S = standard_datum(W, {false, o.seed});
    } else {
      S = cd.datum;
    }
  } else {
    r.results["kind"] = "standard";
    S = standard_datum(W, {false, o.seed});
  }
  Check v = verify_standard_datum(W, S);
  r.results["size"] = S.size();
  r.results["dim_A0"] = W.A0->dim();
  r.results["verification"] = check_json(v);
  Json layers = Json::array();
  for (const auto& l : S.layers) layers.push_back({{"label", label_str(l.lam)}, {"F", l.nF}, {"G", l.nG}});
  r.results["layers"] = layers;
  Json cells = Json::array();
  for (const auto& c : cell_modules(W, S))
    cells.push_back({{"label", label_str(c.lam)},
                     {"dim_delta0", c.dim_delta0},
                     {"dim_nabla0", c.dim_nabla0},
                     {"rank_beta", c.rank},
                     {"head", label_str(c.head)},
                     {"head_iso", c.head_iso},
                     {"tilting_mult", c.tilting_mult}});
  r.results["cell_modules"] = cells;
  r.ok = v.ok && S.size() == W.A0->dim();
  return r;
}

CommandResult run_matrices(const BuiltAlgebra& B, const PipelineOptions& o) {
  CommandResult r;
  Workspace W = make_workspace(B, o);
  auto M = matrices(W);
  auto names = block_names(W);
  std::vector<std::string> dn, ln;
  for (const auto& n : names) {
    dn.push_back("D(" + n + ")");
    ln.push_back(n);
  }
  Json dt = Json::array();
  for (const auto& row : M.Dt) {
    Json jr = Json::array();
    for (const auto& p : row) jr.push_back(laurent_json(p));
    dt.push_back(jr);
  }
  r.results["graded_decomposition"] = matrix_json(dn, ln, dt);
  r.results["decomposition"] = matrix_json(dn, ln, int_table(M.D));
  r.results["cartan"] = matrix_json(ln, ln, int_table(M.C));
  r.results["DtD"] = matrix_json(ln, ln, int_table(M.DtD));
  Json blocks = Json::array();
  for (size_t i = 0; i < M.blocks.size(); ++i)
    blocks.push_back({{"members", M.blocks[i]}, {"rank", M.block_rank[i]}, {"det", M.block_det[i].get_str()}, {"rank_one", static_cast<bool>(M.rank_one[i])}});
  r.results["blocks"] = blocks;
  r.results["bgg"] = M.bgg;
  r.results["factorization"] = M.factorization;
  bool all_rank_one = true;
  for (bool b : M.rank_one) all_rank_one = all_rank_one && b;
  r.results["rank_one"] = all_rank_one;
  r.results["verdict"] = M.verdict;
  r.ok = !M.bgg || M.factorization;
  return r;
}

CommandResult run_cover(const BuiltAlgebra& B, const PipelineOptions& o) {
  CommandResult r;
  Workspace W = make_workspace(B, o);
  const int d = default_d(W, o);
  const int ell = d - W.N();
  Truncation T(W, d);
  Json& j = r.results;
  j["d"] = d;
  j["N"] = W.N();
  j["ell"] = ell;
  j["vertices"] = T.C.names;
  j["dim_C"] = T.C.dim();
  Json qd = Json::array(), cartan = Json::array();
  for (const auto& q : T.Q) qd.push_back(q.dim());
  const int n = T.C.nvert();
  for (int v = 0; v < n; ++v) {
    std::vector<int> row(n, 0);
    for (int x = 0; x < T.C.dim(); ++x)
      if (T.C.alg->tgt[x] == v) ++row[T.C.alg->src[x]];
    cartan.push_back(row);
  }
  j["dim_Q"] = qd;
  j["hom_dims"] = matrix_json(T.C.names, T.C.names, cartan);
  Check basic = check_basic(T.C);
  j["basic"] = check_json(basic);
  auto Q = quiver_presentation(T.C);
  Json arrows = Json::array(), rels = Json::array();
  for (const auto& a : Q.arrows) arrows.push_back({{"name", a.name}, {"from", T.C.names[a.from]}, {"to", T.C.names[a.to]}});
  for (const auto& rel : Q.relations) rels.push_back(relation_str(Q, rel));
  j["quiver"] = {{"arrows", arrows}, {"relations", rels}, {"quotient_dim", Q.quotient_dim}};
  auto Bl = bell_algebra(W, ell);
  j["B_ell"] = {{"dim", Bl.alg->dim()}, {"formula", bell_dim_formula(W, ell)}};
  Check dc = double_centralizer_check(T, Bl);
  j["double_centralizer"] = check_json(dc);
  auto fr = faithfulness_report(T);
  j["faithfulness"] = {{"killed", labels_json(fr.killed)},
                       {"minus_one_faithful", fr.minus_one_faithful},
                       {"cover", fr.cover},
                       {"zero_faithful", fr.zero_faithful},
                       {"witnesses", fr.witnesses}};
  auto bs = basic_sets(T, Bl);
  std::vector<std::string> bnames;
  for (const auto& l : bs.basic) bnames.push_back(label_str(l));
  j["basic_sets"] = {{"basic", bnames},
                     {"decomposition", matrix_json(T.C.names, bnames, int_table(bs.decomposition))},
                     {"simples_ok", bs.simples_ok},
                     {"unitriangular", bs.unitriangular},
                     {"degrees_match", bs.degrees_match},
                     {"witnesses", bs.witnesses}};
  r.ok = basic.ok && dc.ok && bs.ok() && Bl.alg->dim() == bell_dim_formula(W, ell) && Q.quotient_dim == T.C.dim();
  return r;
}

CommandResult run_extable(const BuiltAlgebra& B, const PipelineOptions& o) {
  CommandResult r;
  Workspace W = make_workspace(B, o);
  const int d = default_d(W, o);
  Truncation T(W, d);
  const int n = T.C.nvert();
  std::vector<Module> delta, proj;
  for (int v = 0; v < n; ++v) {
    delta.push_back(T.image(W.standard(T.labels[v])));
    proj.push_back(basic_projective(T.C, v));
  }
  std::vector<std::string> L, D, Qn;
  for (const auto& nm : T.C.names) {
    L.push_back("L" + nm);
    D.push_back("Delta" + nm);
    Qn.push_back("Q" + nm);
  }
  Json ed[3], eq[2];
  for (auto& x : ed) x = Json::array();
  for (auto& x : eq) x = Json::array();
  for (int v = 0; v < n; ++v) {
    Resolution res = minimal_resolution(T.C, T.simple(v), 3);
    std::vector<int> rd[3], rq[2];
    for (int u = 0; u < n; ++u) {
      auto a = ext_dims(T.C, res, delta[u], 2);
      auto b = ext_dims(T.C, res, proj[u], 1);
      for (int i = 0; i < 3; ++i) rd[i].push_back(a[i]);
      for (int i = 0; i < 2; ++i) rq[i].push_back(b[i]);
    }
    for (int i = 0; i < 3; ++i) ed[i].push_back(rd[i]);
    for (int i = 0; i < 2; ++i) eq[i].push_back(rq[i]);
  }
  for (int i = 0; i < 3; ++i) r.results["ext" + std::to_string(i) + "_L_Delta"] = matrix_json(L, D, ed[i]);
  for (int i = 0; i < 2; ++i) r.results["ext" + std::to_string(i) + "_L_Q"] = matrix_json(L, Qn, eq[i]);
  // p.d. Δ(λ) ≤ d − deg λ
  Json pd = Json::array();
  for (int v = 0; v < n; ++v) {
    int bound = d - T.labels[v].s;
    int p = projective_dimension(T.C, delta[v], bound + 1);
    pd.push_back({{"label", T.C.names[v]}, {"pd", p}, {"bound", bound}});
    r.ok = r.ok && p >= 0 && p <= bound;
  }
  r.results["pd_Delta"] = pd;
  r.results["d"] = d;
  return r;
}

CommandResult run_all(const BuiltAlgebra& B, const PipelineOptions& o) {
  CommandResult r;
  for (const auto& name : command_names()) {
    if (name == "report-all") continue;
    CommandResult c = run_command(name, B, o);
    r.results[name] = {{"ok", c.ok}, {"results", c.results}};
    r.ok = r.ok && c.ok;
    if (name == "validate" && !c.ok) break;
  }
  return r;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"validate", "core", "celldatum", "matrices", "cover", "extable", "report-all"};
  return names;
}

CommandResult run_command(const std::string& name, const BuiltAlgebra& B, const PipelineOptions& o) {
  if (name == "validate") return run_validate(B, o);
  if (name == "core") return run_core(B, o);
  if (name == "celldatum") return run_celldatum(B, o);
  if (name == "matrices") return run_matrices(B, o);
  if (name == "cover") return run_cover(B, o);
  if (name == "extable") return run_extable(B, o);
  if (name == "report-all") return run_all(B, o);
  throw std::invalid_argument("unknown command '" + name + "'");
}

Json command_report(const std::string& name, const BuiltAlgebra& B, const std::string& source, const PipelineOptions& o) {
  CommandResult c = run_command(name, B, o);
  std::string input = write_spec(B) + "d " + std::to_string(o.d) + "\nseed " + std::to_string(o.seed) + "\n";
  Json opts = {{"d", o.d}, {"seed", o.seed}};
  c.results["options"] = opts;
  return make_report(name, source, input, c.ok, std::move(c.results));
}

}  // namespace hwc
