#include <doctest.h>

#include "support.hpp"

using namespace hwc;
using namespace hwc::testing;

TEST_CASE("standard and costandard modules of K[x,y]/(x^2,y^2)") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  Module D = W.standard({0, 0}), N = W.costandard({0, 0}), L = W.simple({0, 0});
  CHECK(D.dim() == 2);
  CHECK(D.dim_at(0) == 1);
  CHECK(D.dim_at(-1) == 1);
  // socle of ∇(λ) sits in deg λ, support [deg λ − N, deg λ]
  CHECK(N.dim() == 2);
  CHECK(N.dim_at(0) == 1);
  CHECK(N.dim_at(-1) == 1);
  CHECK(L.dim() == 1);
  CHECK(hom_dim(D, N, W.gens) == 1);
  CHECK(hom_dim(D, L, W.gens) == 1);
  // the socle of Δ(0) is L(0) shifted into degree -1
  CHECK(hom_dim(L, D, W.gens) == 0);
  CHECK(hom_dim(W.simple({0, -1}), D, W.gens) == 1);
  auto m = W.multiplicities(D);
  CHECK(m[0] == LaurentPoly::monomial(0) + LaurentPoly::monomial(-1));
}

TEST_CASE("hom spaces compose and respect the module structure") {
  Workspace W = workspace("trunc:x:-1:3,y:1:3");
  Module P = W.projective({0, 0}), D = W.standard({0, 1});
  auto H = hom(P, D, W.gens);
  CHECK(static_cast<int>(H.size()) == D.dim_at(0));
  for (const auto& f : H) CHECK(is_homomorphism(P, D, f));
}

TEST_CASE("duality over the opposite algebra keeps the pieces") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2,z:1:2");
  Module P = W.projective({0, 1});
  Module Dl = dual(P, W.Aop);
  CHECK(Dl.dim() == P.dim());
  CHECK(is_module(Dl));
  for (int p = 0; p < P.npieces(); ++p) CHECK(Dl.dim_at(P.key(p)) == P.piece_dim(p));
}

TEST_CASE("graded radical and socle layers of the regular module") {
  Workspace W = workspace("trunc:x:-1:2,y:1:2");
  Module R = W.regular();
  CHECK(R.dim() == 4);
  CHECK(total_dim(radical_of(R, W.J)) == 3);
  CHECK(total_dim(socle_of(R, W.J)) == 1);
}

TEST_CASE("peeling agrees with the radical series on restricted sl2") {
  Workspace W = workspace("sl2:3", Field::prime(3));
  CHECK(W.nblocks() == 3);
  for (int b = 0; b < 3; ++b) {
    Module D = W.standard({b, 0});
    CHECK(D.dim() == 3);
    CHECK(W.multiplicities(D) == W.multiplicities_bruteforce(D));
    CHECK(grading_bridge_check(W, D).ok);
  }
}

TEST_CASE("submodule and quotient dimensions add up") {
  Workspace W = workspace("trunc:x:-1:3,y:1:3");
  std::mt19937_64 rng(3);
  Module R = W.regular();
  for (int t = 0; t < 10; ++t) {
    Module Q = random_quotient(W, rng);
    CHECK(Q.dim() <= R.dim());
    CHECK(W.multiplicities(Q) == W.multiplicities_bruteforce(Q));
  }
}
