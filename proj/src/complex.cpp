#include "hbm/complex.hpp"

#include "hbm/error.hpp"

#include <set>

namespace hbm {

GradedComplex::GradedComplex(std::vector<std::vector<std::string>> labels, RatMatrix differential, RatMatrix inner)
    : labels_(std::move(labels)), d_(std::move(differential)), inner_(std::move(inner)) {
  std::set<std::string> seen;
  for (std::size_t m = 0; m < labels_.size(); ++m) {
    offsets_.push_back(flat_labels_.size());
    for (const auto& l : labels_[m]) {
      if (l.empty()) throw Error(ErrorKind::InvalidComplex, "empty basis label in degree " + std::to_string(m));
      if (!seen.insert(l).second) throw Error(ErrorKind::InvalidComplex, "duplicate basis label '" + l + "'");
      flat_labels_.push_back(l);
      degree_of_.push_back(static_cast<int>(m));
    }
  }
  const std::size_t n = total_dim();
  if (d_.rows() != n || d_.cols() != n)
    throw Error(ErrorKind::InvalidComplex, "differential must be " + std::to_string(n) + "x" + std::to_string(n));
  if (inner_.rows() != n || inner_.cols() != n)
    throw Error(ErrorKind::InvalidComplex, "inner product must be " + std::to_string(n) + "x" + std::to_string(n));
  d_.for_each([&](std::size_t r, std::size_t c, const Rational&) {
    if (degree_of_[r] != degree_of_[c] + 1)
      throw Error(ErrorKind::InvalidComplex,
                  "differential entry " + flat_labels_[c] + " -> " + flat_labels_[r] + " does not raise degree by one");
  });
  inner_.for_each([&](std::size_t r, std::size_t c, const Rational&) {
    if (degree_of_[r] != degree_of_[c])
      throw Error(ErrorKind::InvalidComplex,
                  "inner product pairs " + flat_labels_[r] + " and " + flat_labels_[c] + " of different degrees");
  });
  for (int m = 0; m <= top_degree(); ++m) require_positive_definite(this->inner(m));
}

GradedComplex::GradedComplex(std::vector<std::vector<std::string>> labels, RatMatrix differential)
    : GradedComplex(labels, std::move(differential), [&] {
        std::size_t n = 0;
        for (const auto& l : labels) n += l.size();
        return RatMatrix::identity(n);
      }()) {}

std::size_t GradedComplex::dim(int m) const {
  if (m < 0 || m > top_degree()) return 0;
  return labels_[static_cast<std::size_t>(m)].size();
}

std::size_t GradedComplex::offset(int m) const {
  if (m < 0) return 0;
  if (m > top_degree()) return total_dim();
  return offsets_[static_cast<std::size_t>(m)];
}

std::optional<std::size_t> GradedComplex::find(std::string_view label) const {
  for (std::size_t i = 0; i < flat_labels_.size(); ++i)
    if (flat_labels_[i] == label) return i;
  return std::nullopt;
}

RatMatrix GradedComplex::block(const RatMatrix& total, int from, int to) const {
  return total.block(offset(to), dim(to), offset(from), dim(from));
}

RatMatrix GradedComplex::d(int m) const { return block(d_, m, m + 1); }

RatMatrix GradedComplex::inner(int m) const { return block(inner_, m, m); }

RatVector GradedComplex::embed(int m, const RatVector& local) const {
  if (local.size() != dim(m)) throw Error(ErrorKind::DegreeOutOfRange, "vector does not fit degree " + std::to_string(m));
  RatVector out = zero_vector(total_dim());
  for (std::size_t i = 0; i < local.size(); ++i) out[offset(m) + i] = local[i];
  return out;
}

RatVector GradedComplex::restrict(int m, const RatVector& total) const {
  return RatVector(total.begin() + static_cast<std::ptrdiff_t>(offset(m)),
                   total.begin() + static_cast<std::ptrdiff_t>(offset(m) + dim(m)));
}

bool GradedComplex::has_degree(const RatMatrix& op, int shift) const {
  if (op.rows() != total_dim() || op.cols() != total_dim()) return false;
  bool ok = true;
  op.for_each([&](std::size_t r, std::size_t c, const Rational&) {
    if (degree_of_[r] != degree_of_[c] + shift) ok = false;
  });
  return ok;
}

}  // namespace hbm
