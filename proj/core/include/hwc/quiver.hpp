#pragma once

#include "hwc/basic.hpp"

namespace hwc {

struct Arrow {
  int from = 0, to = 0;  // arrow i → j lies in e_i C e_j
  Vec elem;
  std::string name;
};

// a path is a sequence of arrow indices in traversal order; it evaluates to the
// product of the arrow elements from left to right
using Path = std::vector<int>;
struct PathTerm {
  Path path;
  Scalar coeff;
};
using Relation = std::vector<PathTerm>;

struct QuiverPresentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  int max_len = 0;        // paths longer than this evaluate to zero
  int quotient_dim = 0;   // dim of the path algebra modulo the relations, truncated
};

QuiverPresentation quiver_presentation(const BasicAlgebra& C);
Vec eval_path(const BasicAlgebra& C, const QuiverPresentation& Q, const Path& p);
std::string relation_str(const QuiverPresentation& Q, const Relation& r);

// Golden quiver given by arrows (from, to, name) and relations over arrow names
// (paths in traversal order). vertex_map sends golden vertices to ours.
struct GoldenArrow {
  int from, to;
  std::string name;
};
struct GoldenTerm {
  long long coeff;
  std::vector<std::string> path;
};
using GoldenRelation = std::vector<GoldenTerm>;

struct QuiverMatch {
  bool ok = false;
  std::string detail;
};
QuiverMatch match_quiver(const BasicAlgebra& C, const QuiverPresentation& Q, const std::vector<int>& vertex_map,
                         const std::vector<GoldenArrow>& arrows, const std::vector<GoldenRelation>& relations);

}  // namespace hwc
