#include "pcurve/jacobian.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pcurve/error.hpp"

namespace pcurve {

SingularityDatum SingularityDatum::ordinary(int branches, int count) {
  if (branches < 2) throw Error(ErrorCode::InvalidArgument, "an ordinary multiple point needs >= 2 branches");
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be positive");
  return {SingularityKind::ordinary_multiple_point, branches, count};
}

SingularityDatum SingularityDatum::cusp(int r, int count) {
  if (r < 3 || r % 2 == 0) throw Error(ErrorCode::InvalidArgument, "z^2 = x^r needs odd r >= 3");
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be positive");
  return {SingularityKind::cusp_z2_xr, r, count};
}

SingularityDatum SingularityDatum::diagonal(int m, int count) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "x^m = y^m needs m >= 2");
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be positive");
  return {SingularityKind::diagonal_xm_ym, m, count};
}

std::int64_t SingularityDatum::delta() const {
  const std::int64_t k = parameter;
  switch (kind) {
    case SingularityKind::ordinary_multiple_point:
    case SingularityKind::diagonal_xm_ym:
      return k * (k - 1) / 2;
    case SingularityKind::cusp_z2_xr:
      return (k - 1) / 2;
  }
  return 0;
}

std::int64_t SingularityDatum::branches() const {
  return kind == SingularityKind::cusp_z2_xr ? 1 : parameter;
}

std::string SingularityDatum::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case SingularityKind::ordinary_multiple_point:
      os << "ordinary:" << parameter;
      break;
    case SingularityKind::cusp_z2_xr:
      os << "cusp:" << parameter;
      break;
    case SingularityKind::diagonal_xm_ym:
      os << "diagonal:" << parameter;
      break;
  }
  os << ':' << count;
  return os.str();
}

namespace {

int parse_int(const std::string& s, const std::string& whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::SyntaxError, "bad integer '" + s + "' in singularity '" + whole + "'");
  return v;
}

}  // namespace

SingularityDatum parse_singularity(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 2 || parts.size() > 3)
    throw Error(ErrorCode::SyntaxError, "expected KIND:PARAM[:COUNT], got '" + text + "'");
  const int param = parse_int(parts[1], text);
  const int count = parts.size() == 3 ? parse_int(parts[2], text) : 1;
  if (parts[0] == "ordinary") return SingularityDatum::ordinary(param, count);
  if (parts[0] == "cusp") return SingularityDatum::cusp(param, count);
  if (parts[0] == "diagonal") return SingularityDatum::diagonal(param, count);
  throw Error(ErrorCode::SyntaxError, "unknown singularity kind '" + parts[0] + "'");
}

JacobianDecomposition decompose(const std::vector<SingularityDatum>& data) {
  JacobianDecomposition d;
  for (const auto& s : data) {
    d.dim_G += s.count * s.delta();
    d.toric_rank += s.count * (s.branches() - 1);
  }
  d.unipotent_dim = d.dim_G - d.toric_rank;
  return d;
}

SmoothModel smooth_model_invariants(std::int64_t pa, std::int64_t sigma_singular, std::int64_t a_singular,
                                    const JacobianDecomposition& d) {
  if (d.dim_G != d.toric_rank + d.unipotent_dim || d.toric_rank < 0 || d.unipotent_dim < 0)
    throw Error(ErrorCode::InconsistentInvariants, "decomposition does not add up");
  if (pa < d.dim_G)
    throw Error(ErrorCode::InconsistentInvariants,
                "arithmetic genus " + std::to_string(pa) + " is smaller than dim G = " + std::to_string(d.dim_G));
  if (sigma_singular < d.toric_rank)
    throw Error(ErrorCode::InconsistentInvariants, "p-rank " + std::to_string(sigma_singular) +
                                                       " is smaller than the toric rank " +
                                                       std::to_string(d.toric_rank));
  if (sigma_singular > pa || a_singular < 0 || a_singular > pa)
    throw Error(ErrorCode::InconsistentInvariants, "p-rank and a-number must lie in [0, pa]");
  SmoothModel out;
  out.g = pa - d.dim_G;
  out.sigma = sigma_singular - d.toric_rank;
  out.a_lower_bound = std::max<std::int64_t>(0, a_singular - d.unipotent_dim);
  out.ordinary = out.sigma == out.g;
  return out;
}

SingularFermatPreset singular_fermat_preset(int m, int n) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "m must be >= 2");
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be >= 3");
  SingularFermatPreset out;
  out.m = m;
  out.n = n;
  // P = [1 : mu_i : 0 : 0 : c_2 mu_{l(2)} : ... : c_{n-2} mu_{l(n-2)}], mu_j = gamma zeta^j,
  // c_j = (lambda_j - 1)^{1/m}; i and every l(j) range over 1..m.
  const int free_slots = n - 3;
  std::vector<int> choice(static_cast<std::size_t>(free_slots) + 1, 1);
  while (true) {
    SingularPoint pt{{"1", "mu_" + std::to_string(choice[0]), "0", "0"}, SingularityDatum::diagonal(m)};
    for (int j = 0; j < free_slots; ++j)
      pt.coordinates.push_back("c_" + std::to_string(j + 2) + "*mu_" +
                               std::to_string(choice[static_cast<std::size_t>(j) + 1]));
    out.points.push_back(std::move(pt));
    std::size_t pos = choice.size();
    while (pos > 0 && choice[pos - 1] == m) choice[--pos] = 1;
    if (pos == 0) break;
    ++choice[pos - 1];
  }
  std::vector<SingularityDatum> data;
  for (const auto& pt : out.points) data.push_back(pt.datum);
  out.decomposition = decompose(data);
  out.toric_rank_enumerated = out.decomposition.toric_rank;
  std::int64_t closed = m - 1;
  for (int i = 0; i < m; ++i) closed *= (n - 2);
  out.toric_rank_closed_form = closed;

  out.relations.push_back("a(X) = a(X')");
  out.relations.push_back("sigma(X) = sigma(X') - " + std::to_string(out.toric_rank_enumerated) +
                          " (branch count)");
  out.relations.push_back("sigma(X) = sigma(X') - " + std::to_string(out.toric_rank_closed_form) +
                          " (closed form (n-2)^m (m-1))");
  if (out.toric_rank_enumerated != out.toric_rank_closed_form)
    out.flags.push_back("toric rank from the point list is m^(n-2)(m-1) = " +
                        std::to_string(out.toric_rank_enumerated) + ", the closed form (n-2)^m(m-1) gives " +
                        std::to_string(out.toric_rank_closed_form));
  out.flags.push_back("each x^m = y^m point has " + std::to_string(m) + " branches and contributes " +
                      std::to_string(m - 1) + " factors of G_m, not " + std::to_string(m));
  if (out.decomposition.unipotent_dim > 0)
    out.flags.push_back("delta = m(m-1)/2 exceeds the toric part: G has a unipotent part of dimension " +
                        std::to_string(out.decomposition.unipotent_dim) +
                        ", so only a(X) >= a(X') - " + std::to_string(out.decomposition.unipotent_dim) +
                        " follows");
  return out;
}

}  // namespace pcurve
