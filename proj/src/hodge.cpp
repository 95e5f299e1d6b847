#include "hbm/hodge.hpp"

#include "hbm/error.hpp"

namespace hbm {

std::vector<RatMatrix> codifferential(const GradedComplex& c) {
  std::vector<RatMatrix> out;
  for (int m = 0; m <= c.top_degree(); ++m) {
    if (m == 0) {
      out.emplace_back(0, c.dim(0));
      continue;
    }
    out.push_back(inverse(c.inner(m - 1)) * c.d(m - 1).transpose() * c.inner(m));
  }
  return out;
}

namespace {

RatMatrix assemble(const GradedComplex& c, const std::vector<RatMatrix>& blocks, int shift) {
  const std::size_t n = c.total_dim();
  RatMatrix total(n, n);
  for (int m = 0; m <= c.top_degree(); ++m) {
    const int to = m + shift;
    if (to < 0 || to > c.top_degree()) continue;
    const std::size_t r0 = c.offset(to), c0 = c.offset(m);
    blocks[static_cast<std::size_t>(m)].for_each(
        [&](std::size_t r, std::size_t col, const Rational& v) { total.set(r0 + r, c0 + col, v); });
  }
  return total;
}

bool is_unit(const RatVector& v, std::size_t& which) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1) return false;
    which = i;
    ++hits;
  }
  return hits == 1;
}

}  // namespace

HodgeData::HodgeData(GradedComplex complex) : complex_(std::move(complex)) {
  const GradedComplex& c = complex_;
  codiff_ = hbm::codifferential(c);
  const int top = c.top_degree();
  for (int m = 0; m <= top; ++m) {
    const std::size_t n = c.dim(m);
    const RatMatrix dm = c.d(m);
    const RatMatrix dprev = c.d(m - 1);
    const RatMatrix codiff_next = m < top ? codiff_[static_cast<std::size_t>(m + 1)] : RatMatrix(n, 0);
    const RatMatrix lap = dprev * codiff_[static_cast<std::size_t>(m)] + codiff_next * dm;

    std::vector<RatVector> harm = rank_kernel_image(lap).kernel_basis;
    const RatMatrix proj = orthogonal_projector(harm, c.inner(m), n);

    // G e_k: the solution of lap x = (I - H) e_k lying in the complement of ker lap.
    std::vector<RatVector> gcols;
    for (std::size_t k = 0; k < n; ++k) {
      const RatVector rhs = unit_vector(n, k) - proj.column(k);
      auto x = solve(lap, rhs);
      if (!x) throw Error(ErrorKind::InvalidComplex, "Laplacian is not self-adjoint in degree " + std::to_string(m));
      gcols.push_back(*x - proj * *x);
    }

    harmonic_.push_back(std::move(harm));
    boundary_.push_back(rank_kernel_image(dprev).image_basis);
    coexact_.push_back(rank_kernel_image(codiff_next).image_basis);
    laplacian_.push_back(lap);
    projector_.push_back(proj);
    greens_.push_back(RatMatrix::from_columns(n, gcols));
  }

  codiff_total_ = assemble(c, codiff_, -1);
  laplacian_total_ = assemble(c, laplacian_, 0);
  projector_total_ = assemble(c, projector_, 0);
  greens_total_ = assemble(c, greens_, 0);
  codiff_greens_total_ = codiff_total_ * greens_total_;

  std::vector<RatVector> rows;
  for (int m = 0; m <= top; ++m) {
    const auto& basis = harmonic_[static_cast<std::size_t>(m)];
    const RatMatrix inner = c.inner(m);
    RatMatrix k = RatMatrix::from_columns(c.dim(m), basis);
    // Left inverse (K^T A K)^{-1} K^T A, exact on span(K).
    const RatMatrix left = basis.empty() ? RatMatrix(0, c.dim(m)) : inverse(k.transpose() * inner * k) * k.transpose() * inner;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      HarmonicGenerator g;
      g.degree = m;
      g.vector = c.embed(m, basis[i]);
      std::size_t which = 0;
      g.label = is_unit(basis[i], which) ? c.labels()[static_cast<std::size_t>(m)][which]
                                         : "h" + std::to_string(m) + "_" + std::to_string(i);
      generators_.push_back(std::move(g));
      RatVector row = zero_vector(c.total_dim());
      for (std::size_t j = 0; j < c.dim(m); ++j) row[c.offset(m) + j] = left.at(i, j);
      rows.push_back(std::move(row));
    }
  }
  coordinate_map_ = RatMatrix::from_rows(rows, c.total_dim());
}

std::size_t HodgeData::idx(int m) const {
  if (m < 0 || m > complex_.top_degree())
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(m) + " is outside the complex");
  return static_cast<std::size_t>(m);
}

RatVector HodgeData::harmonic_coordinates(const RatVector& v) const {
  if (projector_total_ * v != v) throw Error(ErrorKind::InvalidArgument, "vector is not harmonic");
  return coordinate_map_ * v;
}

Decomposition decompose(const HodgeData& h, int m, const RatVector& v) {
  const GradedComplex& c = h.complex();
  if (m < 0 || m > c.top_degree() || v.size() != c.dim(m))
    throw Error(ErrorKind::DegreeOutOfRange, "no vector of length " + std::to_string(v.size()) + " in degree " + std::to_string(m));
  const RatVector gv = h.greens(m) * v;
  Decomposition out;
  out.harmonic = h.harmonic_projector(m) * v;
  out.exact = c.d(m - 1) * (h.codifferential(m) * gv);
  out.coexact = m < c.top_degree() ? h.codifferential(m + 1) * (c.d(m) * gv) : zero_vector(v.size());
  return out;
}

}  // namespace hbm
