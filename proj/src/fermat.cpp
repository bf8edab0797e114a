#include "pcurve/fermat.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pcurve/error.hpp"
#include "pcurve/linalg.hpp"

namespace pcurve {

namespace {

BigInt pow_int(int base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Every k-element subset of {0..n-1} in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Sum over `size`-subsets of the products of the chosen values.
FieldElement elementary_symmetric(const std::vector<FieldElement>& values, int size, const Field& field) {
  FieldElement total = field->zero();
  for_each_subset(static_cast<int>(values.size()), size, [&](const std::vector<int>& idx) {
    FieldElement prod = field->one();
    for (int i : idx) prod *= values[static_cast<std::size_t>(i)];
    total += prod;
  });
  return total;
}

std::vector<Vector> dense_columns(const std::vector<CohomologyClass>& classes) {
  std::vector<Vector> cols;
  cols.reserve(classes.size());
  for (const auto& c : classes) cols.push_back(c.dense());
  return cols;
}

std::size_t rank_of(const Field& field, std::size_t rows, const std::vector<Vector>& cols) {
  return rank(Matrix::from_columns(field, rows, cols));
}

}  // namespace

BigInt genus(int m, int n) {
  const BigInt twice = 2 + pow_int(m, n - 1) * ((m - 1) * (n - 1) - 2);
  if (twice % 2 != 0) throw Error(ErrorCode::InvalidArgument, "genus formula is not an integer");
  return twice / 2;
}

BigInt h1_dim(int m, int n) {
  BigInt total = 0;
  for (int i = 0; i <= n - 1; ++i) {
    const BigInt term = binom(n - 1, i) * binom(static_cast<std::int64_t>(n - i - 1) * m - 1, n);
    total += (i % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

BigInt complete_intersection_h(int n, const std::vector<int>& degrees, int t, int r) {
  if (t < 1 || t > n) throw Error(ErrorCode::InvalidArgument, "t must lie in [1, n]");
  const int cut = n - t;
  if (static_cast<int>(degrees.size()) < cut)
    throw Error(ErrorCode::InvalidArgument, "need at least n - t hypersurface degrees");
  BigInt total = 0;
  for (int i = 0; i <= cut; ++i) {
    for_each_subset(cut, cut - i, [&](const std::vector<int>& idx) {
      std::int64_t M = r;
      for (int j : idx) M += degrees[static_cast<std::size_t>(j)];
      const BigInt term = binom(M - 1, n);
      total += (i % 2 == 0) ? term : BigInt(-term);
    });
  }
  return total;
}

BinomIdentity binom_identity(int n, int t) {
  BinomIdentity out;
  for (int i = 0; i <= t; ++i) {
    const BigInt term = binom(t + 1 - i, t - i) * binom(n + 1, i);
    out.lhs += (i % 2 == 0) ? term : BigInt(-term);
  }
  out.rhs = binom(n - 1, t);
  if (t % 2 != 0) out.rhs = -out.rhs;
  out.equal = out.lhs == out.rhs;
  return out;
}

BigInt card_S_t0_closed_form(int m, int n, int t) {
  BigInt total = 0;
  for (int i = 0; i <= n - t - 2; ++i) {
    const BigInt term = binom(n + 1, i) * binom(static_cast<std::int64_t>(n - t - i - 1) * m - 1, n);
    total += (i % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

TClosedForm card_T00_closed_form(int m, int n) {
  const BigInt s00 = card_S_t0_closed_form(m, n, 0);
  TClosedForm out{s00, s00};
  for (int i = n - 1; i <= n + 1; ++i) {
    const BigInt Ti = binom(n + 1, i) * binom(static_cast<std::int64_t>(n - 1) * m - i * (m - 1) / 2 - 1, n);
    // signs: -, +, - for i = n-1, n, n+1
    const bool minus = ((i - (n - 1)) % 2 == 0);
    const BigInt doubled = binom(n + 1, i) * Ti;
    out.with_binomial += minus ? BigInt(-doubled) : doubled;
    out.without_binomial += minus ? BigInt(-Ti) : Ti;
  }
  return out;
}

FermatSpec::FermatSpec(int m, int n, std::vector<FieldElement> lambdas)
    : m_(m), n_(n), lambdas_(std::move(lambdas)), smooth_(true) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "m must be >= 2");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
  if (lambdas_.size() != static_cast<std::size_t>(n - 1))
    throw Error(ErrorCode::ArityMismatch, "need n - 1 = " + std::to_string(n - 1) + " lambdas, got " +
                                              std::to_string(lambdas_.size()));
  field_ = lambdas_.front().field();
  for (const auto& l : lambdas_)
    if (!l.field()->same_as(*field_)) throw Error(ErrorCode::FieldMismatch, "lambdas from different fields");
  ring_ = PolyRing::create(field_, static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < lambdas_.size(); ++i) {
    if (lambdas_[i].is_zero()) smooth_ = false;
    for (std::size_t j = 0; j < i; ++j)
      if (lambdas_[i] == lambdas_[j]) smooth_ = false;
    ExponentVector e0(ring_->nvars(), 0), e1(ring_->nvars(), 0), e2(ring_->nvars(), 0);
    e0[0] = m;
    e1[1] = m;
    e2[i + 2] = m;
    MultiPoly f = MultiPoly::monomial(ring_, e0, lambdas_[i]);
    f.add_term(e1, field_->one());
    f.add_term(e2, field_->one());
    f_.push_back(std::move(f));
  }
  ambient_ = DualBasis::create(n, (n - 1) * m);
  relations_ = DualBasis::create(n, (n - 2) * m);
}

FermatSpec FermatSpec::sub_curve(const std::vector<std::size_t>& indices) const {
  std::vector<FieldElement> sub;
  for (std::size_t i : indices) sub.push_back(lambdas_.at(i));
  const int n = static_cast<int>(sub.size()) + 1;
  return FermatSpec(m_, n, std::move(sub));
}

IndexSet enumerate_S(const FermatSpec& spec, int r, int s) {
  const int n = spec.n(), m = spec.m();
  if (r < 0 || s < 0 || r + s > n - 2) throw Error(ErrorCode::InvalidArgument, "need r, s >= 0 and r + s <= n - 2");
  BoundedCompositionQuery q = BoundedCompositionQuery::uniform(static_cast<std::size_t>(n) + 1, 1, m,
                                                               static_cast<std::int64_t>(n - 1) * m);
  q.lower[0] = static_cast<std::int64_t>(r) * m + 1;
  q.upper[0] = static_cast<std::int64_t>(r + 1) * m;
  q.lower[1] = static_cast<std::int64_t>(s) * m + 1;
  q.upper[1] = static_cast<std::int64_t>(s + 1) * m;
  IndexSet out{r, s, {}};
  for_each_composition(q, [&](const std::vector<std::int64_t>& a) { out.tuples.emplace_back(a.begin(), a.end()); });
  return out;
}

namespace {

void require_T_domain(const FermatSpec& spec) {
  if (spec.p() != 2 || spec.m() % 2 == 0)
    throw Error(ErrorCode::UnsupportedCharacteristic, "T sets are defined only for p = 2 and odd m");
}

bool in_T_unchecked(const FermatSpec& spec, int r, int s, const Tuple& a) {
  const int n = spec.n(), m = spec.m();
  if (r + s == 0) {
    int small = 0;
    for (int x : a)
      if (x <= (m - 1) / 2) ++small;
    return small >= 3;
  }
  int small = 0;
  for (std::size_t t = 2; t < a.size(); ++t)
    if (2 * a[t] < m) ++small;
  const bool a0_low = 2 * a[0] <= (2 * r + 1) * m;  // rm < a0 <= (2r+1)m/2
  const bool a1_low = 2 * a[1] <= (2 * s + 1) * m;
  const int base = n - 2 * r - 2 * s;
  if (a0_low && a1_low) return small >= base;          // T1
  if (a0_low && !a1_low) return small >= base - 1;     // T2
  if (!a0_low && a1_low) return small >= base - 1;     // T3
  return small >= base - 2;                            // T4
}

}  // namespace

bool in_T(const FermatSpec& spec, int r, int s, const Tuple& a) {
  require_T_domain(spec);
  return in_T_unchecked(spec, r, s, a);
}

IndexSet enumerate_T(const FermatSpec& spec, int r, int s) {
  require_T_domain(spec);
  IndexSet S = enumerate_S(spec, r, s);
  IndexSet out{r, s, {}};
  for (auto& a : S.tuples)
    if (in_T_unchecked(spec, r, s, a)) out.tuples.push_back(std::move(a));
  return out;
}

namespace {

// Multisets of size `total` over `parts` slots, as multiplicity vectors.
void for_each_multiplicity(int parts, int total, bool squarefree,
                           const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> k(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int j, int remaining) {
    if (j == parts - 1) {
      if (squarefree && remaining > 1) return;
      k[static_cast<std::size_t>(j)] = remaining;
      visit(k);
      return;
    }
    const int cap = squarefree ? std::min(1, remaining) : remaining;
    for (int v = cap; v >= 0; --v) {
      k[static_cast<std::size_t>(j)] = v;
      rec(j + 1, remaining - v);
    }
  };
  if (parts == 0) {
    if (total == 0) visit(k);
    return;
  }
  rec(0, total);
}

BasisElement build_element(const FermatSpec& spec, int r, int s, const Tuple& a, BasisMode mode) {
  const int n = spec.n(), m = spec.m();
  const Field& field = spec.field();
  BasisElement el{r, s, a, CohomologyClass(spec.ambient(), field), {}};
  for (int l = 0; l <= r; ++l) {
    for (int q = 0; q <= s; ++q) {
      for_each_multiplicity(n - 1, l + q, mode == BasisMode::squarefree, [&](const std::vector<int>& k) {
        // coefficient of u^l v^q in prod_t (lambda_t u + v)^{k_t}
        std::vector<FieldElement> poly{field->one()};
        for (std::size_t t = 0; t < k.size(); ++t) {
          for (int rep = 0; rep < k[t]; ++rep) {
            poly.push_back(field->zero());
            for (std::size_t j = poly.size() - 1; j > 0; --j) poly[j] += spec.lambdas()[t] * poly[j - 1];
          }
        }
        const FieldElement c = poly[static_cast<std::size_t>(l)];
        if (l + q > 0) {
          BetaEntry entry{l, q, {}, c};
          for (std::size_t t = 0; t < k.size(); ++t)
            for (int rep = 0; rep < k[t]; ++rep) entry.indices.push_back(static_cast<int>(t) + 2);
          el.beta_table.push_back(std::move(entry));
        }
        if (c.is_zero()) return;
        ExponentVector e(static_cast<std::size_t>(n) + 1);
        e[0] = -a[0] + l * m;
        e[1] = -a[1] + q * m;
        for (std::size_t t = 0; t < k.size(); ++t) e[t + 2] = -a[t + 2] - k[t] * m;
        auto idx = spec.ambient()->index_of_exponents(e);
        if (!idx) throw Error(ErrorCode::BasisVerificationFailed, "correction term outside the dual basis");
        el.expansion.add(*idx, ((l + q) % 2 == 0) ? c : -c);
      });
    }
  }
  return el;
}

void require_smooth(const FermatSpec& spec) {
  if (!spec.smooth())
    throw Error(ErrorCode::InvalidArgument, "lambdas must be nonzero and pairwise distinct for a smooth curve");
}

}  // namespace

std::vector<BasisElement> basis_theorem2(const FermatSpec& spec, BasisMode mode) {
  require_smooth(spec);
  std::vector<BasisElement> basis;
  for (int t = 0; t <= spec.n() - 2; ++t)
    for (int r = t; r >= 0; --r)
      for (const auto& a : enumerate_S(spec, r, t - r).tuples) basis.push_back(build_element(spec, r, t - r, a, mode));

  const BigInt expected = h1_dim(spec.m(), spec.n());
  if (BigInt(basis.size()) != expected)
    throw Error(ErrorCode::BasisVerificationFailed, "basis has " + std::to_string(basis.size()) +
                                                        " elements, h1 is " + expected.str());
  for (const auto& el : basis) {
    const MultiPoly alpha = el.expansion.to_poly(spec.ring());
    for (std::size_t i = 0; i < spec.equations().size(); ++i) {
      if (!reduce(spec.equations()[i] * alpha, spec.relations()).is_zero()) {
        std::string tuple;
        for (int x : el.leading) tuple += (tuple.empty() ? "" : ",") + std::to_string(x);
        throw Error(ErrorCode::BasisVerificationFailed,
                    "f_" + std::to_string(i) + " * alpha(" + tuple + ") is not zero in cohomology");
      }
    }
  }
  std::vector<CohomologyClass> classes;
  for (const auto& el : basis) classes.push_back(el.expansion);
  if (rank_of(spec.field(), spec.ambient()->size(), dense_columns(classes)) != basis.size())
    throw Error(ErrorCode::BasisVerificationFailed, "basis elements are linearly dependent");
  return basis;
}

std::vector<CohomologyClass> kernel_basis(const FermatSpec& spec) {
  const auto& amb = spec.ambient();
  const auto& rel = spec.relations();
  const std::size_t blocks = spec.equations().size();
  Matrix mu(spec.field(), blocks * rel->size(), amb->size());
  for (std::size_t j = 0; j < amb->size(); ++j) {
    const MultiPoly beta = MultiPoly::monomial(spec.ring(), amb->exponents(j));
    for (std::size_t i = 0; i < blocks; ++i) {
      const CohomologyClass image = reduce(spec.equations()[i] * beta, rel);
      for (const auto& [row, c] : image.coords()) mu.at(i * rel->size() + row, j) = c;
    }
  }
  std::vector<CohomologyClass> out;
  for (const auto& v : nullspace(mu)) out.push_back(CohomologyClass::from_dense(amb, v));
  return out;
}

bool same_span(const std::vector<CohomologyClass>& a, const std::vector<CohomologyClass>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const Field& field = a.front().field();
  const std::size_t rows = a.front().basis()->size();
  auto ca = dense_columns(a), cb = dense_columns(b);
  const std::size_t ra = rank_of(field, rows, ca), rb = rank_of(field, rows, cb);
  auto both = ca;
  both.insert(both.end(), cb.begin(), cb.end());
  return ra == rb && rank_of(field, rows, both) == ra;
}

namespace {

MultiPoly frobenius_multiplier(const FermatSpec& spec) {
  MultiPoly prod = MultiPoly::constant(spec.ring(), spec.field()->one());
  for (const auto& f : spec.equations()) prod = prod * f;
  return prod.pow(spec.p() - 1);
}

CohomologyClass frobenius_image(const FermatSpec& spec, const MultiPoly& multiplier, const CohomologyClass& alpha) {
  return reduce(multiplier * alpha.to_poly(spec.ring()).frobenius(), spec.ambient());
}

}  // namespace

FermatFrobenius frobenius_matrix(const FermatSpec& spec, const std::vector<BasisElement>& basis) {
  const Field& field = spec.field();
  const MultiPoly multiplier = frobenius_multiplier(spec);
  std::map<std::size_t, std::size_t> lead_position;
  std::vector<CohomologyClass> classes;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    lead_position.emplace(*spec.ambient()->index_of_tuple(basis[b].leading), b);
    classes.push_back(basis[b].expansion);
  }
  std::optional<SpanSolver> solver;
  FermatFrobenius out;
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const CohomologyClass image = frobenius_image(spec, multiplier, basis[j].expansion);
    // Leading monomials appear only in their own basis element.
    Vector coords(basis.size(), field->zero());
    CohomologyClass residual = image;
    for (const auto& [idx, c] : image.coords()) {
      auto it = lead_position.find(idx);
      if (it != lead_position.end()) coords[it->second] = c;
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (coords[b].is_zero()) continue;
      for (const auto& [idx, c] : basis[b].expansion.coords()) residual.add(idx, -(coords[b] * c));
    }
    if (residual.is_zero()) {
      ++out.fast_path_columns;
    } else {
      if (!solver) solver.emplace(field, spec.ambient()->size(), dense_columns(classes));
      auto solved = solver->solve(image.dense());
      if (!solved)
        throw Error(ErrorCode::ImageEscapesSpan, "Frobenius image of basis element " + std::to_string(j + 1) +
                                                     " is outside the span of the basis");
      coords = std::move(*solved);
      ++out.solved_columns;
    }
    columns.push_back(std::move(coords));
  }
  out.map = {Matrix::from_columns(field, basis.size(), columns), Twist::p, "theorem2"};
  return out;
}

FermatFrobenius frobenius_matrix(const FermatSpec& spec, const std::vector<CohomologyClass>& basis) {
  const Field& field = spec.field();
  const MultiPoly multiplier = frobenius_multiplier(spec);
  SpanSolver solver(field, spec.ambient()->size(), dense_columns(basis));
  FermatFrobenius out;
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto solved = solver.solve(frobenius_image(spec, multiplier, basis[j]).dense());
    if (!solved)
      throw Error(ErrorCode::ImageEscapesSpan, "Frobenius image of kernel vector " + std::to_string(j + 1) +
                                                   " is outside the kernel");
    columns.push_back(std::move(*solved));
    ++out.solved_columns;
  }
  out.map = {Matrix::from_columns(field, basis.size(), columns), Twist::p, "kernel"};
  return out;
}

FermatFrobenius frobenius_matrix(const FermatSpec& spec, BasisChoice choice, BasisMode mode) {
  if (choice == BasisChoice::theorem2) return frobenius_matrix(spec, basis_theorem2(spec, mode));
  return frobenius_matrix(spec, kernel_basis(spec));
}

GenericityCertificate genericity(const FermatSpec& spec) {
  const int n = spec.n();
  const Field& field = spec.field();
  const auto& lambdas = spec.lambdas();
  GenericityCertificate cert;
  for (const auto& l : lambdas)
    if (l.is_zero()) cert.all_nonzero = false;

  for (int total = (n - 1 + 1) / 2; total <= n - 2; ++total) {
    for (int r = total; r >= 0; --r) {
      const int s = total - r;
      GenericityCertificate::AValue a{r, s, std::min(2 * r, n - 1), 0, std::nullopt};
      a.q = n - 1 - a.l;
      if (r == 0) {
        if (a.q <= 2 * s) a.value = field->one();
      } else if (a.q <= 2 * s) {
        a.value = elementary_symmetric(lambdas, a.l, field);
      }
      if (a.value && a.value->is_zero()) cert.all_nonzero = false;
      cert.a_values.push_back(std::move(a));
    }
  }

  std::set<std::pair<std::pair<int, int>, std::vector<int>>> seen;
  for (int total = 1; total <= (n - 2) / 2; ++total) {
    for (int r = total; r >= 0; --r) {
      const int s = total - r;
      for (int b = 1; b <= 2 * r + 1; ++b) {
        for (int c = 0; c <= 2 * s + 1 && b + c <= n - 1; ++c) {
          for_each_subset(n - 1, b + c, [&](const std::vector<int>& idx) {
            std::vector<int> subset;
            std::vector<FieldElement> vals;
            for (int i : idx) {
              subset.push_back(i + 2);
              vals.push_back(lambdas[static_cast<std::size_t>(i)]);
            }
            if (!seen.insert({{b, c}, subset}).second) return;
            FieldElement v = elementary_symmetric(vals, b, field);
            if (v.is_zero()) cert.all_nonzero = false;
            cert.b_values.push_back({b, c, std::move(subset), std::move(v)});
          });
        }
      }
    }
  }
  return cert;
}

PrankBound prank_lower_bound(const FermatSpec& spec) {
  const int n = spec.n();
  PrankBound out;
  for (int t = 2; t <= n - 1; ++t) {
    for_each_subset(n - 1, t - 1, [&](const std::vector<int>& idx) {
      PrankBoundTerm term{t, {}, std::nullopt};
      for (int i : idx) term.lambda_indices.push_back(static_cast<std::size_t>(i));
      const FermatSpec sub = spec.sub_curve(term.lambda_indices);
      if (sub.smooth()) {
        term.sigma = stable_rank(frobenius_matrix(sub, BasisChoice::theorem2).map);
        const long long v = static_cast<long long>(*term.sigma);
        out.value += (t % 2 == 0) ? v : -v;
      } else {
        out.complete = false;
      }
      out.terms.push_back(std::move(term));
    });
  }
  return out;
}

FermatReport fermat_invariants(const FermatSpec& spec) {
  require_smooth(spec);
  const int m = spec.m(), n = spec.n();
  FermatReport rep;
  rep.m = m;
  rep.n = n;
  rep.p = spec.p();
  rep.k = spec.field()->degree();
  for (const auto& l : spec.lambdas()) rep.lambdas.push_back(l.to_string());
  rep.genus = genus(m, n);
  rep.h1 = h1_dim(m, n);

  const auto basis = basis_theorem2(spec);
  rep.g = basis.size();
  std::vector<CohomologyClass> classes;
  for (const auto& el : basis) classes.push_back(el.expansion);
  rep.span_matches_kernel = same_span(classes, kernel_basis(spec));
  if (!rep.span_matches_kernel) rep.flags.push_back("theorem-2 basis and direct kernel span different spaces");

  const FermatFrobenius frob = frobenius_matrix(spec, basis);
  rep.sigma = stable_rank(frob.map);
  rep.a_number = a_number(frob.map);

  for (int t = 0; t <= n - 2; ++t)
    for (int r = t; r >= 0; --r) rep.S_cardinalities[{r, t - r}] = enumerate_S(spec, r, t - r).tuples.size();

  rep.certificate = genericity(spec);
  const bool t_domain = spec.p() == 2 && m % 2 == 1;
  if (t_domain) {
    std::size_t total = 0;
    for (int t = 0; t <= (n - 2) / 2; ++t) {
      for (int r = t; r >= 0; --r) {
        const std::size_t c = enumerate_T(spec, r, t - r).tuples.size();
        rep.T_cardinalities[{r, t - r}] = c;
        total += c;
      }
    }
    rep.anum_formula = total;
    if (total != rep.a_number)
      rep.flags.push_back("a-number " + std::to_string(rep.a_number) + " differs from the T-set count " +
                          std::to_string(total) +
                          (rep.certificate.all_nonzero ? "" : " (genericity certificate fails)"));

    std::size_t mismatched = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      ColumnCheck col{basis[j].r, basis[j].s, basis[j].leading, true, false};
      for (std::size_t i = 0; i < rep.g; ++i)
        if (!frob.map.matrix.at(i, j).is_zero()) col.zero_column = false;
      if (col.r + col.s <= (n - 2) / 2) col.in_T = in_T_unchecked(spec, col.r, col.s, col.tuple);
      if (col.zero_column != col.in_T) ++mismatched;
      rep.columns.push_back(std::move(col));
    }
    if (mismatched)
      rep.flags.push_back("T-set column criterion disagrees with the Frobenius matrix on " +
                          std::to_string(mismatched) + " of " + std::to_string(basis.size()) + " columns");

    const TClosedForm cf = card_T00_closed_form(m, n);
    rep.T00_closed_form = cf;
    const BigInt direct = rep.T_cardinalities.at({0, 0});
    if (cf.with_binomial != direct && cf.without_binomial != direct)
      rep.flags.push_back("neither reading of the |T(0,0)| closed form matches the enumeration " + direct.str());
  }

  rep.prank = prank_lower_bound(spec);
  if (!rep.prank.complete) rep.flags.push_back("p-rank bound skipped a degenerate sub-curve");
  if (spec.p() == 2 && static_cast<long long>(rep.sigma) < rep.prank.value)
    rep.flags.push_back("p-rank " + std::to_string(rep.sigma) + " is below the inclusion-exclusion bound " +
                        std::to_string(rep.prank.value));
  return rep;
}

}  // namespace pcurve
