#pragma once

#include "hwc/module.hpp"

namespace hwc {

// Module map given piecewise: blocks[p] maps piece p of the source into the
// target piece with the same key (0 rows when the target lacks that key).
struct Morphism {
  std::vector<Matrix> blocks;
};

// basis of Hom_A(M, N); gens must generate A
std::vector<Morphism> hom(const Module& M, const Module& N, const std::vector<int>& gens);
int hom_dim(const Module& M, const Module& N, const std::vector<int>& gens);

Morphism zero_morphism(const Module& M, const Module& N);
Matrix to_dense(const Module& M, const Module& N, const Morphism& f);
Vec apply(const Module& M, const Module& N, const Morphism& f, const Vec& v);
Morphism compose(const Module& L, const Module& M, const Module& N, const Morphism& g, const Morphism& f);  // g∘f
Morphism combine(const std::vector<Morphism>& basis, const Vec& coeffs);
bool is_homomorphism(const Module& M, const Module& N, const Morphism& f);
bool is_zero(const Morphism& f);
// M ≅ N for simple modules, or generally via dimension counts of Hom both ways and an invertible map
bool isomorphic_simple(const Module& S, const Module& T, const std::vector<int>& gens);

}  // namespace hwc
