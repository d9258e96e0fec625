#include "dwt/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/float128.hpp>

namespace dwt {

namespace {

using Quad = boost::multiprecision::float128;

constexpr double kSignTieTolerance = 1e-10;

double relative_epsilon(Precision precision) {
  if (precision == Precision::kExtended) {
    return static_cast<double>(std::numeric_limits<Quad>::epsilon()) /
           std::numeric_limits<double>::epsilon();
  }
  return 1.0;
}

template <typename Real>
SpectralDecomposition solve(std::vector<Real> diag, std::vector<Real> off, Precision precision,
                            double scale) {
  const std::size_t n = diag.size();
  std::vector<Real> vectors(n * n, Real(0));
  for (std::size_t i = 0; i < n; ++i) vectors[i * n + i] = Real(1);
  detail::tql2(diag, std::move(off), vectors);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });

  std::vector<double> values(n);
  std::vector<double> gaps(n > 0 ? n - 1 : 0);
  std::vector<double> columns(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    values[k] = static_cast<double>(diag[order[k]]);
    if (k + 1 < n) gaps[k] = static_cast<double>(diag[order[k + 1]] - diag[order[k]]);
    for (std::size_t row = 0; row < n; ++row) {
      columns[k * n + row] = static_cast<double>(vectors[order[k] * n + row]);
    }
  }
  return SpectralDecomposition(std::move(values), std::move(gaps), std::move(columns), precision, scale);
}

double min_gap(const SpectralDecomposition& d) {
  const auto gaps = d.gaps();
  if (gaps.empty()) return std::numeric_limits<double>::infinity();
  return *std::min_element(gaps.begin(), gaps.end());
}

}  // namespace

SpectralDecomposition::SpectralDecomposition(std::vector<double> eigenvalues, std::vector<double> gaps,
                                             std::vector<double> vectors, Precision precision,
                                             double matrix_scale)
    : eigenvalues_(std::move(eigenvalues)),
      gaps_(std::move(gaps)),
      vectors_(std::move(vectors)),
      precision_(precision),
      matrix_scale_(matrix_scale) {
  const std::size_t n = eigenvalues_.size();
  if (n == 0 || gaps_.size() + 1 != n || vectors_.size() != n * n) {
    throw std::invalid_argument("SpectralDecomposition: inconsistent sizes");
  }
  if (precision_ == Precision::kAuto) {
    throw std::invalid_argument("SpectralDecomposition: precision must be concrete");
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (gaps_[k] < 0.0) throw std::invalid_argument("SpectralDecomposition: eigenvalues not ascending");
  }
  // Largest-magnitude entry positive; near-ties go to the lowest index.
  for (std::size_t k = 0; k < n; ++k) {
    double* col = &vectors_[k * n];
    double largest = 0.0;
    for (std::size_t i = 0; i < n; ++i) largest = std::max(largest, std::fabs(col[i]));
    for (std::size_t i = 0; i < n; ++i) {
      if (std::fabs(col[i]) >= largest * (1.0 - kSignTieTolerance)) {
        if (col[i] < 0.0) {
          for (std::size_t j = 0; j < n; ++j) col[j] = -col[j];
        }
        break;
      }
    }
  }
}

std::span<const double> SpectralDecomposition::eigenvector(std::size_t k) const {
  const std::size_t n = dimension();
  return std::span<const double>(vectors_).subspan(k * n, n);
}

double SpectralDecomposition::energy_difference(std::size_t lower, std::size_t upper) const {
  if (lower > upper) return -energy_difference(upper, lower);
  double sum = 0.0;
  for (std::size_t k = lower; k < upper; ++k) sum += gaps_[k];
  return sum;
}

double resolution_floor(Precision precision, double matrix_scale) {
  if (precision == Precision::kAuto) precision = Precision::kExtended;
  return kDoubleGapFloor * matrix_scale * relative_epsilon(precision);
}

SpectralDecomposition eigendecompose(const TridiagonalMatrix& h) {
  if (h.size() == 0 || h.off_diagonal.size() + 1 != h.size()) {
    throw std::invalid_argument("eigendecompose: malformed tridiagonal matrix");
  }
  return solve<double>(h.diagonal, h.off_diagonal, Precision::kDouble, h.max_abs());
}

SpectralDecomposition eigendecompose(const ModelParams& params, Precision precision) {
  const TridiagonalMatrix h = build_hamiltonian(params);
  if (precision == Precision::kDouble) return eigendecompose(h);
  if (precision == Precision::kAuto) {
    SpectralDecomposition d = eigendecompose(h);
    if (min_gap(d) >= d.resolution_floor()) return d;
  }

  const int n_total = params.n_atoms;
  const std::size_t dim = params.dimension();
  std::vector<Quad> diag(dim);
  std::vector<Quad> off(dim - 1);
  const Quad hopping = params.hopping;
  const Quad interaction = params.interaction;
  const Quad tilt = params.tilt;
  for (int n = 0; n <= n_total; ++n) {
    const Quad left = n;
    const Quad right = n_total - n;
    diag[static_cast<std::size_t>(n)] = interaction * (left * (left - 1) + right * (right - 1)) + tilt * left;
    if (n < n_total) off[static_cast<std::size_t>(n)] = -hopping * sqrt((left + 1) * right);
  }
  return solve<Quad>(std::move(diag), std::move(off), Precision::kExtended, h.max_abs());
}

double splitting_top_pair(const SpectralDecomposition& decomp) {
  if (decomp.dimension() < 2) throw std::invalid_argument("splitting_top_pair: need N >= 1");
  return decomp.gap(decomp.dimension() - 2);
}

std::optional<ResonantPair> near_degenerate_pair_at_resonance(const SpectralDecomposition& decomp, int p) {
  const int n_total = decomp.n_atoms();
  if (p < 0 || p >= n_total) {
    throw std::invalid_argument("near_degenerate_pair_at_resonance: need 0 <= p < N");
  }
  const std::size_t a = 0;
  const std::size_t b = static_cast<std::size_t>(n_total - p);
  const std::size_t dim = decomp.dimension();

  std::vector<double> support(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double wa = decomp.component(a, k) * decomp.component(a, k);
    const double wb = decomp.component(b, k) * decomp.component(b, k);
    support[k] = wa + wb;
  }
  std::vector<std::size_t> order(dim);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + 2, order.end(),
                    [&](std::size_t x, std::size_t y) { return support[x] > support[y]; });

  ResonantPair pair;
  pair.lower = std::min(order[0], order[1]);
  pair.upper = std::max(order[0], order[1]);
  pair.branch_right = a;
  pair.branch_left = b;
  pair.branch_support = 0.5 * (support[order[0]] + support[order[1]]);
  for (std::size_t k : {pair.lower, pair.upper}) {
    const double wa = decomp.component(a, k) * decomp.component(a, k);
    const double wb = decomp.component(b, k) * decomp.component(b, k);
    pair.branch_asymmetry = std::max(pair.branch_asymmetry, std::fabs(wa - wb) / (wa + wb));
  }
  pair.gap = decomp.energy_difference(pair.lower, pair.upper);

  if (pair.branch_support < kResonanceMinSupport || pair.branch_asymmetry > kResonanceMaxAsymmetry) {
    return std::nullopt;
  }
  return pair;
}

}  // namespace dwt
