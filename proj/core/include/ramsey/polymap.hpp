#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "ramsey/matrix.hpp"

namespace ramsey {

// One term c * prod x_i^{e_i} over the flattened variables of all arguments.
struct Monomial {
  std::vector<int> exps;  // length arity*dim
  Int coeff;

  bool operator==(const Monomial& o) const { return exps == o.exps && coeff == o.coeff; }
};

// Integer polynomial map (Z^dim)^arity -> Z^out_dim with f(0) = 0, i.e. no
// constant term. Shape families use out_dim == dim; the IP probe uses maps
// into Z.
struct PolyMap {
  int arity = 1;
  int dim = 1;
  int out_dim = 1;
  std::vector<std::vector<Monomial>> coords;  // size out_dim

  static PolyMap zero(int arity, int dim, int out_dim = -1);
  // hom given by out_dim x (arity*dim) matrix
  static PolyMap from_matrix(int arity, int dim, const IntMatrix& m);
  // block projection (x_0,...,x_{arity-1}) -> x_block
  static PolyMap projection(int arity, int dim, int block);
  // d = 1 linear map with the given coefficients (one per argument)
  static PolyMap linear_form(const std::vector<Int>& coeffs);
  // d = 1 univariate monomial map x -> coeff * x^deg
  static PolyMap power(const Int& coeff, int deg);

  int vars() const { return arity * dim; }
  bool is_zero_map() const;
  bool is_homomorphism() const;  // every monomial has total degree 1
  std::optional<IntMatrix> matrix() const;

  // args flattened to length arity*dim
  std::vector<Int> eval(const std::vector<Int>& args) const;

  // same map viewed with extra ignored trailing arguments
  PolyMap arity_lift(int new_arity) const;
  // left composition g = c o f for a matrix c acting on the output
  PolyMap left_compose(const IntMatrix& c) const;
  // f o bold(b): apply the endomorphism b to every argument before f.
  // Homomorphisms only.
  PolyMap compose_each_arg(const IntMatrix& b) const;
  PolyMap plus(const PolyMap& other) const;

  // merge duplicate monomials, drop zeros, sort; rejects constant terms
  void canonicalize();

  bool operator==(const PolyMap& o) const = default;
  std::strong_ordering operator<=>(const PolyMap& o) const;
};

// sorted + deduplicated, the canonical family order used everywhere
void canonicalize_family(std::vector<PolyMap>& fam);

}  // namespace ramsey
