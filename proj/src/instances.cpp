#include "simonlab/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "simonlab/error.hpp"

namespace simonlab {

std::string_view to_string(PromiseLabel label) {
  switch (label) {
    case PromiseLabel::kOneToOne:
      return "ONE_TO_ONE";
    case PromiseLabel::kKernelP:
      return "KERNEL_P";
    case PromiseLabel::kUnrestricted:
      return "UNRESTRICTED";
  }
  return "UNRESTRICTED";
}

PromiseLabel label_for_kernel_dim(int kernel_dim) {
  if (kernel_dim == 0) return PromiseLabel::kOneToOne;
  if (kernel_dim == 1) return PromiseLabel::kKernelP;
  return PromiseLabel::kUnrestricted;
}

LinearInstance make_linear(const FpMatrix& matrix) {
  Subspace ker = kernel(matrix);
  const int h = ker.dim();
  return LinearInstance{matrix, std::move(ker), h, label_for_kernel_dim(h)};
}

// ---------------------------------------------------------------------------
// PartialFn

PartialFn::PartialFn(FieldSpec field, std::vector<Pair> pairs) : field_(field) {
  for (auto& [x, y] : pairs) insert(x, y);
}

void PartialFn::insert(const FpVector& x, const FpVector& y) {
  FpVector xn = field_.normalize(x);
  FpVector yn = field_.normalize(y);
  if (at(xn)) throw PreconditionError("partial function: duplicate domain point");
  pairs_.emplace_back(std::move(xn), std::move(yn));
}

std::optional<FpVector> PartialFn::at(const FpVector& x) const {
  for (const auto& [px, py] : pairs_) {
    if (px == x) return py;
  }
  return std::nullopt;
}

Subspace PartialFn::domain_span() const {
  FpRows rows(static_cast<Eigen::Index>(pairs_.size()), field_.n());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    rows.row(static_cast<Eigen::Index>(i)) = pairs_[i].first.transpose();
  }
  return Subspace::span(field_, rows);
}

bool PartialFn::extended_by(const FpMatrix& f) const {
  require_same_field(field_, f.field(), "extends");
  for (const auto& [x, y] : pairs_) {
    if (f.apply(x) != y) return false;
  }
  return true;
}

bool operator==(const PartialFn& a, const PartialFn& b) {
  if (a.field_ != b.field_ || a.pairs_.size() != b.pairs_.size()) return false;
  for (const auto& [x, y] : a.pairs_) {
    auto other = b.at(x);
    if (!other || *other != y) return false;
  }
  return true;
}

std::optional<LinearExtension> linear_consistency(const PartialFn& s) {
  const FieldSpec& field = s.field();
  const int n = field.n();
  const auto m = static_cast<Eigen::Index>(s.domain_size());

  // Row-reduce the graph [x | s(x)]. A pivot in the value half means some
  // combination of domain points vanishes while its values do not.
  FpRows graph(m, 2 * n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& [x, y] = s.pairs()[static_cast<std::size_t>(i)];
    graph.row(i).head(n) = x.transpose();
    graph.row(i).tail(n) = y.transpose();
  }
  RowEchelon e = rref(graph, field);
  for (int c : e.pivots) {
    if (c >= n) return std::nullopt;
  }

  const int k = e.rank;
  Subspace domain = Subspace::span(field, FpRows(e.rows.leftCols(n)));
  FpRows values = e.rows.rightCols(n);

  // Z = { sum c_i b_i : sum c_i s(b_i) = 0 }.
  FpRows coeffs = null_space(FpRows(values.transpose()), field);
  FpRows z_gens = FpRows::Zero(coeffs.rows(), n);
  for (Eigen::Index r = 0; r < coeffs.rows(); ++r) {
    for (int i = 0; i < k; ++i) {
      for (int c = 0; c < n; ++c) {
        z_gens(r, c) = field.add(z_gens(r, c), field.mul(coeffs(r, i), domain.basis()(i, c)));
      }
    }
  }
  return LinearExtension{std::move(domain), std::move(values), Subspace::span(field, z_gens)};
}

void for_each_partial_function(const FieldSpec& field, int max_domain,
                               const std::function<void(const PartialFn&)>& fn) {
  const std::uint64_t size = field.space_size();
  for (int d = 0; d <= max_domain && static_cast<std::uint64_t>(d) <= size; ++d) {
    std::vector<std::uint64_t> domain(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) domain[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i);
    const auto assignments = checked_pow(size, static_cast<std::uint64_t>(d));
    if (!assignments) throw DomainError("too many partial functions to enumerate");
    while (true) {
      for (std::uint64_t a = 0; a < *assignments; ++a) {
        PartialFn s(field);
        std::uint64_t digits = a;
        for (std::uint64_t x : domain) {
          s.insert(field.vector_at(x), field.vector_at(digits % size));
          digits /= size;
        }
        fn(s);
      }
      int i = d - 1;
      while (i >= 0 && domain[static_cast<std::size_t>(i)] == size - static_cast<std::uint64_t>(d - i)) --i;
      if (i < 0) break;
      ++domain[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < d; ++j) domain[static_cast<std::size_t>(j)] = domain[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

PartialFn restrict_to(const LinearInstance& f, const std::vector<FpVector>& queries) {
  PartialFn s(f.field());
  for (const FpVector& q : queries) {
    FpVector x = f.field().normalize(q);
    if (s.at(x)) continue;
    s.insert(x, f.matrix.apply(x));
  }
  return s;
}

// ---------------------------------------------------------------------------
// GeneralInstance

GeneralInstance make_general(int n, std::optional<std::uint32_t> hidden_shift, std::uint64_t seed) {
  if (n < 1 || n > kMaxGeneralBits) {
    throw DomainError("general instances need 1 <= n <= " + std::to_string(kMaxGeneralBits));
  }
  const std::uint32_t size = std::uint32_t{1} << n;
  if (hidden_shift && (*hidden_shift == 0 || *hidden_shift >= size)) {
    throw DomainError("hidden shift must be a nonzero n-bit string");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> outputs(size);
  std::iota(outputs.begin(), outputs.end(), 0u);
  std::shuffle(outputs.begin(), outputs.end(), rng);

  GeneralInstance g{n, std::vector<std::uint32_t>(size), hidden_shift};
  if (!hidden_shift) {
    g.table = outputs;
    return g;
  }
  // One fresh output per coset {x, x ^ s}, assigned in order of the smaller
  // representative.
  std::size_t next = 0;
  for (std::uint32_t x = 0; x < size; ++x) {
    const std::uint32_t mate = x ^ *hidden_shift;
    if (mate < x) continue;
    g.table[x] = outputs[next];
    g.table[mate] = outputs[next];
    ++next;
  }
  return g;
}

bool is_valid(const GeneralInstance& g) {
  if (g.n < 1 || g.n > kMaxGeneralBits) return false;
  const std::uint32_t size = std::uint32_t{1} << g.n;
  if (g.table.size() != size) return false;
  std::vector<std::vector<std::uint32_t>> preimages(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    if (g.table[x] >= size) return false;
    preimages[g.table[x]].push_back(x);
  }
  for (const auto& pre : preimages) {
    if (!g.hidden_shift) {
      if (pre.size() != 1) return false;
    } else if (!pre.empty()) {
      if (pre.size() != 2 || (pre[0] ^ pre[1]) != *g.hidden_shift) return false;
    }
  }
  return true;
}

}  // namespace simonlab
