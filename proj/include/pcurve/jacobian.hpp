#ifndef PCURVE_JACOBIAN_HPP
#define PCURVE_JACOBIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pcurve {

enum class SingularityKind { ordinary_multiple_point, cusp_z2_xr, diagonal_xm_ym };

/// `count` singular points of one analytic type. `parameter` is the number
/// of branches b, the exponent r of z^2 = x^r, or m of x^m = y^m.
struct SingularityDatum {
  SingularityKind kind = SingularityKind::ordinary_multiple_point;
  int parameter = 2;
  int count = 1;

  static SingularityDatum ordinary(int branches, int count = 1);
  static SingularityDatum cusp(int r, int count = 1);
  static SingularityDatum diagonal(int m, int count = 1);

  // Local genus drop of one point.
  std::int64_t delta() const;
  std::int64_t branches() const;
  std::string to_string() const;
};

// "ordinary:B[:COUNT]", "cusp:R[:COUNT]", "diagonal:M[:COUNT]"
SingularityDatum parse_singularity(const std::string& text);

struct JacobianDecomposition {
  std::int64_t dim_G = 0;
  std::int64_t toric_rank = 0;
  std::int64_t unipotent_dim = 0;
};

JacobianDecomposition decompose(const std::vector<SingularityDatum>& data);

struct SmoothModel {
  std::int64_t g = 0;
  std::int64_t sigma = 0;
  std::int64_t a_lower_bound = 0;
  bool ordinary = false;
};

// g = pa - dim G, sigma = sigma' - toric rank, a >= a' - dim G_u.
SmoothModel smooth_model_invariants(std::int64_t pa, std::int64_t sigma_singular, std::int64_t a_singular,
                                    const JacobianDecomposition& d);

struct SingularPoint {
  std::vector<std::string> coordinates;  // projective coordinates, symbolic in zeta and mu
  SingularityDatum datum;
};

struct SingularFermatPreset {
  int m = 0, n = 0;
  std::vector<SingularPoint> points;
  JacobianDecomposition decomposition;
  std::int64_t toric_rank_enumerated = 0;  // m^{n-2}(m-1)
  std::int64_t toric_rank_closed_form = 0;  // (n-2)^m (m-1)
  std::vector<std::string> relations;
  std::vector<std::string> flags;
};

// C^m(1, 1, lambda_2, ...): the first two equations coincide at x_2 = x_3
// and the curve acquires m^{n-2} singular points of type x^m = y^m.
SingularFermatPreset singular_fermat_preset(int m, int n);

}  // namespace pcurve

#endif  // PCURVE_JACOBIAN_HPP
