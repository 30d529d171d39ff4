#include "ramsey/polymap.hpp"

#include <algorithm>
#include <numeric>

namespace ramsey {

namespace {

int total_degree(const Monomial& m) {
  return std::accumulate(m.exps.begin(), m.exps.end(), 0);
}

// exps lexicographic, then coefficient; mpz has no <=> so spell it out
int cmp_mono(const Monomial& x, const Monomial& y) {
  if (x.exps != y.exps) return x.exps < y.exps ? -1 : 1;
  return cmp(x.coeff, y.coeff) < 0 ? -1 : (cmp(x.coeff, y.coeff) > 0 ? 1 : 0);
}

}  // namespace

PolyMap PolyMap::zero(int arity, int dim, int out_dim) {
  PolyMap f;
  f.arity = arity;
  f.dim = dim;
  f.out_dim = out_dim < 0 ? dim : out_dim;
  f.coords.resize(f.out_dim);
  return f;
}

PolyMap PolyMap::from_matrix(int arity, int dim, const IntMatrix& m) {
  RK_CHECK(m.cols == arity * dim, "from_matrix: column count != arity*dim");
  PolyMap f = zero(arity, dim, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (m.at(i, j) == 0) continue;
      Monomial mono;
      mono.exps.assign(f.vars(), 0);
      mono.exps[j] = 1;
      mono.coeff = m.at(i, j);
      f.coords[i].push_back(std::move(mono));
    }
  f.canonicalize();
  return f;
}

PolyMap PolyMap::projection(int arity, int dim, int block) {
  RK_CHECK(block >= 0 && block < arity, "projection: block out of range");
  IntMatrix m(dim, arity * dim);
  for (int i = 0; i < dim; ++i) m.at(i, block * dim + i) = 1;
  return from_matrix(arity, dim, m);
}

PolyMap PolyMap::linear_form(const std::vector<Int>& coeffs) {
  IntMatrix m(1, static_cast<int>(coeffs.size()));
  for (size_t j = 0; j < coeffs.size(); ++j) m.at(0, static_cast<int>(j)) = coeffs[j];
  return from_matrix(static_cast<int>(coeffs.size()), 1, m);
}

PolyMap PolyMap::power(const Int& coeff, int deg) {
  RK_CHECK(deg >= 1, "power: degree must be >= 1 (no constant terms)");
  PolyMap f = zero(1, 1, 1);
  if (coeff != 0) {
    Monomial mono;
    mono.exps = {deg};
    mono.coeff = coeff;
    f.coords[0].push_back(std::move(mono));
  }
  return f;
}

bool PolyMap::is_zero_map() const {
  for (const auto& c : coords)
    if (!c.empty()) return false;
  return true;
}

bool PolyMap::is_homomorphism() const {
  for (const auto& c : coords)
    for (const Monomial& m : c)
      if (total_degree(m) != 1) return false;
  return true;
}

std::optional<IntMatrix> PolyMap::matrix() const {
  if (!is_homomorphism()) return std::nullopt;
  IntMatrix m(out_dim, vars());
  for (int i = 0; i < out_dim; ++i)
    for (const Monomial& mono : coords[i])
      for (int j = 0; j < vars(); ++j)
        if (mono.exps[j] == 1) m.at(i, j) += mono.coeff;
  return m;
}

std::vector<Int> PolyMap::eval(const std::vector<Int>& args) const {
  RK_CHECK(static_cast<int>(args.size()) == vars(), "eval: argument count mismatch");
  std::vector<Int> out(out_dim, Int(0));
  for (int i = 0; i < out_dim; ++i)
    for (const Monomial& mono : coords[i]) {
      Int term = mono.coeff;
      for (int j = 0; j < vars(); ++j)
        for (int e = 0; e < mono.exps[j]; ++e) term *= args[j];
      out[i] += term;
    }
  return out;
}

PolyMap PolyMap::arity_lift(int new_arity) const {
  RK_CHECK(new_arity >= arity, "arity_lift: cannot shrink arity");
  PolyMap f = zero(new_arity, dim, out_dim);
  for (int i = 0; i < out_dim; ++i)
    for (const Monomial& mono : coords[i]) {
      Monomial m2;
      m2.exps = mono.exps;
      m2.exps.resize(static_cast<size_t>(new_arity) * dim, 0);
      m2.coeff = mono.coeff;
      f.coords[i].push_back(std::move(m2));
    }
  f.canonicalize();
  return f;
}

PolyMap PolyMap::left_compose(const IntMatrix& c) const {
  RK_CHECK(c.cols == out_dim, "left_compose: shape mismatch");
  PolyMap f = zero(arity, dim, c.rows);
  for (int i = 0; i < c.rows; ++i)
    for (int k = 0; k < out_dim; ++k) {
      if (c.at(i, k) == 0) continue;
      for (const Monomial& mono : coords[k]) {
        Monomial m2 = mono;
        m2.coeff *= c.at(i, k);
        f.coords[i].push_back(std::move(m2));
      }
    }
  f.canonicalize();
  return f;
}

PolyMap PolyMap::compose_each_arg(const IntMatrix& b) const {
  RK_CHECK(b.rows == dim && b.cols == dim, "compose_each_arg: b must be dim x dim");
  auto m = matrix();
  RK_CHECK(m.has_value(), "compose_each_arg: homomorphisms only");
  IntMatrix blk(arity * dim, arity * dim);
  for (int a = 0; a < arity; ++a)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) blk.at(a * dim + i, a * dim + j) = b.at(i, j);
  return from_matrix(arity, dim, *m * blk);
}

PolyMap PolyMap::plus(const PolyMap& other) const {
  RK_CHECK(arity == other.arity && dim == other.dim && out_dim == other.out_dim,
           "plus: signature mismatch");
  PolyMap f = *this;
  for (int i = 0; i < out_dim; ++i)
    f.coords[i].insert(f.coords[i].end(), other.coords[i].begin(), other.coords[i].end());
  f.canonicalize();
  return f;
}

void PolyMap::canonicalize() {
  RK_CHECK(static_cast<int>(coords.size()) == out_dim, "coords size != out_dim");
  for (auto& c : coords) {
    std::sort(c.begin(), c.end(),
              [](const Monomial& x, const Monomial& y) { return x.exps < y.exps; });
    std::vector<Monomial> merged;
    for (Monomial& m : c) {
      RK_CHECK(static_cast<int>(m.exps.size()) == vars(), "monomial variable count mismatch");
      if (!merged.empty() && merged.back().exps == m.exps)
        merged.back().coeff += m.coeff;
      else
        merged.push_back(std::move(m));
    }
    std::erase_if(merged, [](const Monomial& m) { return m.coeff == 0; });
    for (const Monomial& m : merged)
      RK_CHECK(total_degree(m) > 0, "constant term: maps must satisfy f(0) = 0");
    c = std::move(merged);
  }
}

std::strong_ordering PolyMap::operator<=>(const PolyMap& o) const {
  if (auto c = arity <=> o.arity; c != 0) return c;
  if (auto c = dim <=> o.dim; c != 0) return c;
  if (auto c = out_dim <=> o.out_dim; c != 0) return c;
  for (int i = 0; i < out_dim; ++i) {
    if (auto c = coords[i].size() <=> o.coords[i].size(); c != 0) return c;
    for (size_t j = 0; j < coords[i].size(); ++j) {
      int c = cmp_mono(coords[i][j], o.coords[i][j]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

void canonicalize_family(std::vector<PolyMap>& fam) {
  for (PolyMap& f : fam) f.canonicalize();
  std::sort(fam.begin(), fam.end(), [](const PolyMap& x, const PolyMap& y) { return (x <=> y) < 0; });
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

}  // namespace ramsey
