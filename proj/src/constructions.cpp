#include "maxdet/constructions.hpp"

#include <array>
#include <memory>
#include <string>

#include "maxdet/errors.hpp"
#include "maxdet/finite_field.hpp"
#include "maxdet/linalg.hpp"

namespace maxdet {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilyNames{{
    {Family::Sylvester, "sylvester"},
    {Family::PaleyI, "paley1"},
    {Family::CohnBorder, "cohn"},
    {Family::ExcessBorder, "excess-border"},
    {Family::AffineOrtho, "affine-ortho"},
    {Family::BWOrtho, "bw-ortho"},
    {Family::BrouwerWhiteman, "brouwer-whiteman"},
    {Family::Doubling, "doubling"},
    {Family::TwoCirculantBorder, "two-circulant"},
    {Family::OSDS, "osds"},
    {Family::EhlichBlock, "ehlich-block"},
}};

PrimeModulus prime_3mod4(std::uint64_t p, std::string_view what) {
  PrimeModulus m(p);
  if (m.residue_mod4() != 3) {
    throw InvalidArgument(std::string(what) + " needs a prime p = 3 mod 4, got " + std::to_string(p));
  }
  return m;
}

long as_long(std::uint64_t v) { return static_cast<long>(v); }

// Dense copy of a circulant core, for cheap indexed access in generators.
struct Core {
  std::size_t p;
  std::vector<std::int8_t> q;  // Paley core Q, zero diagonal
  int Q(std::size_t i, std::size_t j) const { return q[i * p + j]; }
  int C(std::size_t i, std::size_t j) const { return i == j ? -1 : q[i * p + j]; }
};

Core dense_core(const PrimeModulus& m) {
  const CoreMatrix core = paley_core(m);
  Core out{core.order(), std::vector<std::int8_t>(core.order() * core.order())};
  for (std::size_t i = 0; i < out.p; ++i)
    for (std::size_t j = 0; j < out.p; ++j) out.q[i * out.p + j] = static_cast<std::int8_t>(core(i, j));
  return out;
}

using Gen = std::function<int(std::size_t, std::size_t)>;

SignMatrix block(std::size_t rows, std::size_t cols, Gen fn) { return SignMatrix::generate(rows, cols, fn); }

std::function<long(std::size_t, std::size_t)> scalar_identity(long diag) {
  return [diag](std::size_t i, std::size_t j) { return i == j ? diag : 0L; };
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames)
    if (f == family) return name;
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames)
    if (n == name) return f;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const auto& entry : kFamilyNames) out.push_back(entry.first);
    return out;
  }();
  return families;
}

Construction sylvester(unsigned t) {
  if (t >= 31) throw SizeGuardExceeded("sylvester: exponent too large");
  const std::size_t n = std::size_t{1} << t;
  check_size_guard(n, "sylvester");
  const SignMatrix h2 = SignMatrix::from_rows({{1, 1}, {1, -1}});
  SignMatrix h = SignMatrix::filled(1, 1, 1);
  for (unsigned i = 0; i < t; ++i) h = tensor(h, h2);

  Certificate cert{Family::Sylvester, n, n, ipow(as_long(n), n), std::to_string(n) + "I",
                   {{"t", static_cast<long>(t)}}, scalar_identity(as_long(n))};
  return {std::move(h), std::move(cert)};
}

Construction paley_I(std::uint64_t p) {
  const PrimeModulus m = prime_3mod4(p, "paley1");
  check_size_guard(p + 1, "paley1");
  const Core core = dense_core(m);
  const std::size_t n = p + 1;
  SignMatrix h = SignMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    if (i == p) return 1;
    if (j == p) return -1;
    return i == j ? 1 : core.Q(i, j);
  });
  Certificate cert{Family::PaleyI, n, n, ipow(as_long(n), n), std::to_string(n) + "I",
                   {{"p", as_long(p)}}, scalar_identity(as_long(n))};
  return {std::move(h), std::move(cert)};
}

Construction cohn_border(std::uint64_t q) {
  const PrimeModulus m(q);
  if (m.residue_mod4() != 1) {
    throw InvalidArgument("cohn needs a prime q = 1 mod 4, got " + std::to_string(q));
  }
  check_size_guard(q + 1, "cohn");
  auto core = std::make_shared<Core>(dense_core(m));
  const std::size_t n = q + 1;
  SignMatrix h = SignMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
    if (i == q) return 1;
    if (j == q) return -1;
    return i == j ? 1 : core->Q(i, j);
  });
  const long lq = as_long(q);
  Certificate cert{Family::CohnBorder, n, n, ipow(lq + 1, 2) * ipow(lq - 1, q - 1),
                   "diag((q+1)I + 2Q, q+1)", {{"q", lq}},
                   [core, lq](std::size_t i, std::size_t j) -> long {
                     const auto qs = static_cast<std::size_t>(lq);
                     if (i == j) return lq + 1;
                     if (i == qs || j == qs) return 0;
                     return 2L * core->Q(i, j);
                   }};
  return {std::move(h), std::move(cert)};
}

Construction excess_border(const SignMatrix& h) {
  if (!h.is_square()) throw InvalidArgument("excess-border needs a square Hadamard matrix");
  const std::size_t order = h.rows();
  check_size_guard(order + 1, "excess-border");
  const ZMatrix g = gram(h);
  if (!(g == ZMatrix::identity(order).scaled(as_long(order)))) {
    throw InvalidArgument("excess-border needs a Hadamard matrix (H H^T = hI)");
  }
  auto sums = std::make_shared<std::vector<long>>(row_sums(h));
  const long hl = as_long(order);
  const Integer e = excess(h);

  SignMatrix m = SignMatrix::generate(order + 1, order + 1, [&](std::size_t i, std::size_t j) {
    if (i == order) return j == order ? 1 : -1;
    if (j == order) return 1;
    return h(i, j);
  });
  // det(M) = det(H)(1 + e/h), so det(M M^T) = h^(h-2) (h + e)^2.
  Integer predicted = order >= 2 ? Integer(ipow(hl, order - 2) * (hl + e) * (hl + e))
                                 : Integer(Integer((hl + e) * (hl + e)) / (hl * hl));
  Certificate cert{Family::ExcessBorder, order + 1, order + 1, predicted, "[[hI + J, 1 - rowsum(H)], [., h + 1]]",
                   {{"h", hl}, {"excess", e.get_si()}},
                   [sums, order, hl](std::size_t i, std::size_t j) -> long {
                     if (i == order && j == order) return hl + 1;
                     if (i == order) return 1 - (*sums)[j];
                     if (j == order) return 1 - (*sums)[i];
                     return i == j ? hl + 1 : 1;
                   }};
  return {std::move(m), std::move(cert)};
}

ZMatrix affine_plane(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("affine plane needs a prime order, got " + std::to_string(p));
  check_size_guard(p * p + p, "affine plane");
  const std::size_t pp = p;
  return ZMatrix::generate(pp * pp, pp * pp + pp, [&](std::size_t pt, std::size_t col) {
    const std::size_t x = pt / pp, y = pt % pp;
    const std::size_t cls = col / pp, line = col % pp;
    const std::size_t on = cls == 0 ? x : (y + pp * pp - ((cls - 1) * x) % pp) % pp;
    return Integer(on == line ? 1 : 0);
  });
}

namespace {

// Line through point (x, y) in parallel class cls, as in affine_plane.
std::size_t line_of(std::size_t pt, std::size_t cls, std::size_t p) {
  const std::size_t x = pt / p, y = pt % p;
  return cls == 0 ? x : (y + p * p - ((cls - 1) * x) % p) % p;
}

SignMatrix affine_sign(const Core& c) {
  const std::size_t p = c.p;
  return SignMatrix::generate(p * p, p * p + p, [&](std::size_t pt, std::size_t col) {
    return c.C(line_of(pt, col / p, p), col % p);
  });
}

// The three block rows of N (without W's leading column).
std::array<BlockGrid<SignMatrix>::value_type, 3> n_block_rows(const Core& c) {
  const std::size_t p = c.p, p2 = p * p;
  auto J = [](std::size_t, std::size_t) { return 1; };
  auto negJ = [](std::size_t, std::size_t) { return -1; };
  // C (x) j_p and (C + 2I) (x) j_p, p x p^2
  auto c_kron_j = [&c, p](int sign) {
    return [&c, p, sign](std::size_t i, std::size_t col) { return sign * c.C(i, col / p); };
  };
  auto c2_kron_j = [&c, p](std::size_t i, std::size_t col) { return i == col / p ? 1 : c.C(i, col / p); };
  // j_p^T (x) C, p^2 x p
  auto jt_kron_c = [&c, p](int sign) {
    return [&c, p, sign](std::size_t row, std::size_t j) { return sign * c.C(row % p, j); };
  };
  // j_p (x) C, p x p^2
  auto j_kron_c = [&c, p](int sign) {
    return [&c, p, sign](std::size_t i, std::size_t col) { return sign * c.C(i, col % p); };
  };
  // +-(C + I) (x) C + I (x) J, p^2 x p^2
  auto qc_plus_ij = [&c, p](int sign) {
    return [&c, p, sign](std::size_t row, std::size_t col) {
      const std::size_t a = row / p, b = row % p, a2 = col / p, b2 = col % p;
      return a == a2 ? 1 : sign * c.Q(a, a2) * c.C(b, b2);
    };
  };

  std::array<BlockGrid<SignMatrix>::value_type, 3> rows;
  rows[0] = {block(p, p, negJ), block(p, p2, c_kron_j(-1)), block(p, p, J), block(p, p2, c2_kron_j)};
  rows[1] = {block(p2, p, jt_kron_c(-1)), block(p2, p2, qc_plus_ij(-1)), block(p2, p, jt_kron_c(1)),
             block(p2, p2, qc_plus_ij(1))};
  // Printed as [J, j(x)C, -J, j(x)C]; the orthogonal form is [J, -j(x)C, J, j(x)C].
  rows[2] = {block(p, p, J), block(p, p2, j_kron_c(-1)), block(p, p, J), block(p, p2, j_kron_c(1))};
  return rows;
}

}  // namespace

Construction bw_ortho_M(std::uint64_t p) {
  const PrimeModulus m = prime_3mod4(p, "affine-ortho");
  check_size_guard(p * p + p, "affine-ortho");
  const Core core = dense_core(m);
  const std::size_t rows = p * p;
  const long d = as_long(p * p + p);
  Certificate cert{Family::AffineOrtho, rows, p * p + p, ipow(d, rows), "(p^2+p)I", {{"p", as_long(p)}},
                   scalar_identity(d)};
  return {affine_sign(core), std::move(cert)};
}

Construction bw_N(std::uint64_t p) {
  const PrimeModulus m = prime_3mod4(p, "bw-ortho");
  check_size_guard(2 * p * p + 2 * p, "bw-ortho");
  const Core core = dense_core(m);
  auto rows = n_block_rows(core);
  SignMatrix n = block_assemble(BlockGrid<SignMatrix>{rows[0], rows[1], rows[2]});
  const long d = as_long(2 * p * p + 2 * p);
  Certificate cert{Family::BWOrtho, n.rows(), n.cols(), ipow(d, n.rows()), "(2p^2+2p)I", {{"p", as_long(p)}},
                   scalar_identity(d)};
  return {std::move(n), std::move(cert)};
}

Construction brouwer_whiteman(std::uint64_t p) {
  const PrimeModulus m = prime_3mod4(p, "brouwer-whiteman");
  const std::size_t order = 2 * p * p + 2 * p + 1;
  check_size_guard(order, "brouwer-whiteman");
  const Core core = dense_core(m);
  const std::size_t p2 = p * p;
  const SignMatrix aff = affine_sign(core);
  const SignMatrix neg_m0 = aff.submatrix(0, 0, p2, p).negated();
  const SignMatrix neg_m1 = aff.submatrix(0, p, p2, p2).negated();
  auto rows = n_block_rows(core);

  auto ones = [](std::size_t r, std::size_t c) { return SignMatrix::filled(r, c, 1); };
  auto minus = [](std::size_t r, std::size_t c) { return SignMatrix::filled(r, c, -1); };
  BlockGrid<SignMatrix> grid;
  grid.push_back({ones(1, 1), ones(1, p), minus(1, p2), ones(1, p), ones(1, p2)});
  const std::size_t heights[3] = {p, p2, p};
  for (int b = 0; b < 3; ++b) {
    auto row = rows[b];
    row.insert(row.begin(), ones(heights[b], 1));
    grid.push_back(std::move(row));
  }
  grid.push_back({minus(p2, 1), neg_m0, neg_m1, neg_m0, neg_m1});
  SignMatrix w = block_assemble(grid);

  const long n = as_long(order);
  Certificate cert{Family::BrouwerWhiteman, order, order, Integer(2 * n - 1) * ipow(n - 1, order - 1),
                   "(n-1)I + J", {{"p", as_long(p)}},
                   [n](std::size_t i, std::size_t j) { return i == j ? n : 1L; }};
  return {std::move(w), std::move(cert)};
}

Construction doubling(const SignMatrix& w) {
  if (!w.is_square()) throw InvalidArgument("doubling needs a square matrix");
  const std::size_t n = w.rows();
  check_size_guard(2 * n, "doubling");
  const ZMatrix g = gram(w);
  const long ln = as_long(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g(i, j) != (i == j ? ln : 1L)) {
        throw InvalidArgument("doubling needs W W^T = (n-1)I + J; entry (" + std::to_string(i) + ", " +
                              std::to_string(j) + ") is " + g(i, j).get_str());
      }
  SignMatrix out = block_assemble(BlockGrid<SignMatrix>{{w, w}, {w, w.negated()}});
  const Integer half = ipow(2 * ln - 2, n - 1) * (4 * ln - 2);
  Certificate cert{Family::Doubling, 2 * n, 2 * n, half * half, "diag((2n-2)I + 2J, (2n-2)I + 2J)",
                   {{"n", ln}},
                   [n](std::size_t i, std::size_t j) -> long {
                     if (i / n != j / n) return 0;
                     return i == j ? 2L * static_cast<long>(n) : 2L;
                   }};
  return {std::move(out), std::move(cert)};
}

std::string_view variant_name(Variant v) { return v == Variant::M1 ? "m1" : "m2"; }

std::string_view lead_name(Lead lead) {
  switch (lead) {
    case Lead::PlusR: return "r";
    case Lead::MinusR: return "-r";
    case Lead::PlusS: return "s";
    case Lead::MinusS: return "-s";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "m1") return Variant::M1;
  if (name == "m2") return Variant::M2;
  return std::nullopt;
}

std::optional<Lead> parse_lead(std::string_view name) {
  for (Lead l : {Lead::PlusR, Lead::MinusR, Lead::PlusS, Lead::MinusS})
    if (lead_name(l) == name) return l;
  return std::nullopt;
}

Integer border_gram_det(long k, long r) {
  if (k < 1) throw InvalidArgument("border_gram_det: k must be positive");
  const Integer kk = k, rr = r;
  const Integer poly = 4 * kk * kk * rr * rr - 16 * kk * kk * rr + 16 * kk * kk - 16 * kk + 8 * kk * rr + 4;
  return poly * ipow(2 * k - 2, static_cast<unsigned long>(2 * k - 2));
}

namespace {

long lead_sum(const CirculantPair& pair, Lead lead) {
  switch (lead) {
    case Lead::PlusR: return pair.r();
    case Lead::MinusR: return -pair.r();
    case Lead::PlusS: return pair.s();
    case Lead::MinusS: return -pair.s();
  }
  return 0;
}

}  // namespace

Lead default_lead(const CirculantPair& pair) {
  Lead best = Lead::PlusR;
  for (Lead l : {Lead::MinusR, Lead::PlusS, Lead::MinusS})
    if (lead_sum(pair, l) < lead_sum(pair, best)) best = l;
  return best;
}

BorderConstruction two_circulant_border(const CirculantPair& pair, Variant variant, std::optional<Lead> lead) {
  const std::size_t k = pair.k();
  check_size_guard(2 * k + 1, "two-circulant");
  const Lead chosen = lead.value_or(default_lead(pair));
  const bool s_leads = chosen == Lead::PlusS || chosen == Lead::MinusS;
  const int sign = (chosen == Lead::MinusR || chosen == Lead::MinusS) ? -1 : 1;
  SignVector x = s_leads ? pair.first_row_s() : pair.first_row_r();
  const SignVector y = s_leads ? pair.first_row_r() : pair.first_row_s();
  for (auto& v : x) v = static_cast<std::int8_t>(sign * v);

  const SignMatrix X = circulant(x);
  const SignMatrix Y = circulant(y);
  if (variant == Variant::M1) {
    // Needs X Y^T = Y X^T.
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        long a = 0, b = 0;
        for (std::size_t l = 0; l < k; ++l) {
          a += X(i, l) * Y(j, l);
          b += Y(i, l) * X(j, l);
        }
        if (a != b) throw InvalidArgument("variant m1 needs R S^T = S R^T for the pair");
      }
  }
  const SignMatrix lower_left = variant == Variant::M1 ? Y : Y.transposed();
  const SignMatrix lower_mid = variant == Variant::M1 ? X.negated() : X.transposed().negated();
  auto col = [](std::size_t r, int v) { return SignMatrix::filled(r, 1, v); };
  SignMatrix m = block_assemble(BlockGrid<SignMatrix>{
      {X, Y, col(k, 1)},
      {lower_left, lower_mid, col(k, -1)},
      {SignMatrix::filled(1, k, 1), SignMatrix::filled(1, k, 1), SignMatrix::filled(1, 1, 1)}});

  const long lk = as_long(k);
  const long xs = vector_sum(x), ys = vector_sum(y);
  BorderConstruction out{
      {std::move(m),
       Certificate{Family::TwoCirculantBorder, 2 * k + 1, 2 * k + 1, border_gram_det(lk, xs),
                   "[[(2k-2)I + 3J, -J, (1+r+s)j], [-J, (2k-2)I + 3J, (-1-r+s)j], [., ., 2k+1]]",
                   {{"k", lk}, {"r", pair.r()}, {"s", pair.s()}, {"lead_row_sum", xs}},
                   [k, xs, ys](std::size_t i, std::size_t j) -> long {
                     const std::size_t bi = i / k, bj = j / k;  // block 2 is the border
                     const long kk = static_cast<long>(k);
                     if (bi == 2 && bj == 2) return 2 * kk + 1;
                     if (bi == 2 || bj == 2) return (bi == 0 || bj == 0) ? 1 + xs + ys : -1 - xs + ys;
                     if (bi != bj) return -1;
                     return i == j ? 2 * kk + 1 : 3;
                   }}},
      variant,
      chosen,
      {}};
  for (Lead l : {Lead::PlusR, Lead::MinusR, Lead::PlusS, Lead::MinusS}) {
    out.options.push_back({l, lead_sum(pair, l), border_gram_det(lk, lead_sum(pair, l))});
  }
  return out;
}

namespace {

Construction osds_from_core(const Core& core, long q, bool from_file) {
  const std::size_t qs = core.p;
  const std::size_t order = 4 * qs + 3;
  check_size_guard(order, "osds");
  static constexpr int h4[4][4] = {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
  static constexpr int b3[3][4] = {{1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  // M = [[P, R^T], [R, J_3]], P = Q (x) H_4 - I (x) J_4, R = j_q (x) B.
  SignMatrix m = SignMatrix::generate(order, order, [&](std::size_t i, std::size_t j) {
    const std::size_t top = 4 * qs;
    if (i >= top && j >= top) return 1;
    if (i >= top) return b3[i - top][j % 4];
    if (j >= top) return b3[j - top][i % 4];
    const std::size_t a = i / 4, b = j / 4;
    return a == b ? -1 : core.Q(a, b) * h4[i % 4][j % 4];
  });
  const long n4q = 4 * q;
  Integer predicted = 16 * ipow(n4q, static_cast<unsigned long>(3 * q + 3)) *
                      ipow(n4q + 16, static_cast<unsigned long>(q - 1));
  std::map<std::string, long> params{{"q", q}};
  if (from_file) params["external_core"] = 1;
  Certificate cert{Family::OSDS, order, order, predicted, "[[T, v^T x3], [v x3, 4qI + 3J]]", params,
                   [top = 4 * qs, n4q](std::size_t i, std::size_t j) -> long {
                     if (i >= top && j >= top) return i == j ? n4q + 3 : 3;
                     if (i >= top) return j % 4 == 0 ? 3 : -1;
                     if (j >= top) return i % 4 == 0 ? 3 : -1;
                     return (i == j ? n4q : 0) + (i / 4 == j / 4 ? 4 : 0) - 1;
                   }};
  return {std::move(m), std::move(cert)};
}

}  // namespace

Construction osds(std::uint64_t q) {
  const PrimeModulus m = prime_3mod4(q, "osds");
  check_size_guard(4 * q + 3, "osds");
  return osds_from_core(dense_core(m), as_long(q), false);
}

Construction osds_from_shifted_core(const SignMatrix& c) {
  if (!c.is_square()) throw InvalidArgument("osds core must be square");
  const std::size_t q = c.rows();
  check_size_guard(4 * q + 3, "osds");
  const ZMatrix g = gram(c);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      const long want_sum = i == j ? -2 : 0;
      if (c(i, j) + c(j, i) != want_sum) throw InvalidArgument("osds core must satisfy C + C^T = -2I");
      const long want_gram = i == j ? static_cast<long>(q) : -1;
      if (g(i, j) != want_gram) throw InvalidArgument("osds core must satisfy C C^T = (q+1)I - J");
    }
  }
  Core core{q, std::vector<std::int8_t>(q * q)};
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) core.q[i * q + j] = static_cast<std::int8_t>(i == j ? 0 : c(i, j));
  return osds_from_core(core, as_long(q), true);
}

ZMatrix ehlich_block_form(long n, const Partition& partition) {
  const std::size_t m = static_cast<std::size_t>(partition.total());
  std::vector<std::size_t> block_of;
  block_of.reserve(m);
  for (std::size_t b = 0; b < partition.size(); ++b)
    block_of.insert(block_of.end(), static_cast<std::size_t>(partition.parts()[b]), b);
  return ZMatrix::generate(m, m, [&](std::size_t i, std::size_t j) {
    if (i == j) return Integer(n);
    return Integer(block_of[i] == block_of[j] ? 3 : -1);
  });
}

ZMatrix ehlich_block_matrix(long n, const Partition& partition) {
  if (n < 3 || n % 4 != 3) throw InvalidArgument("Ehlich-block matrices need n = 3 mod 4");
  if (partition.total() != n) {
    throw InvalidArgument("partition " + partition.to_string() + " does not sum to " + std::to_string(n));
  }
  check_size_guard(static_cast<std::size_t>(n), "ehlich-block");
  return ehlich_block_form(n, partition);
}

}  // namespace maxdet
