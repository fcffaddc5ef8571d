#include "maxdet/verification.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "maxdet/errors.hpp"
#include "maxdet/kernels.hpp"
#include "maxdet/linalg.hpp"

namespace maxdet {

NormalizedRows normalize_rows(const SignMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("normalize_rows needs a square matrix");
  if (m.rows() % 2 == 0) throw InvalidArgument("normalize_rows needs odd order");
  const std::size_t n = m.rows();
  std::vector<std::int8_t> signs(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t negatives = 0;
    for (std::int8_t v : m.row(i)) negatives += v < 0;
    if (negatives % 2 == 1) signs[i] = -1;
  }
  SignMatrix out = SignMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return signs[i] * m(i, j); });
  return {std::move(out), std::move(signs)};
}

bool is_hadamard(const SignMatrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (kernels::sign_dot(m.row(i).data(), m.row(j).data(), n) != 0) return false;
  return true;
}

std::string_view gram_tag_name(GramTag tag) {
  switch (tag) {
    case GramTag::HadamardDiagonal: return "hadamard-diagonal";
    case GramTag::BarbaOptimal: return "barba-optimal";
    case GramTag::TwoMod4Optimal: return "two-mod-4-optimal";
    case GramTag::EhlichBlock: return "ehlich-block";
    case GramTag::Unclassified: return "unclassified";
  }
  return "unknown";
}

namespace {

long mod4(const Integer& v) { return static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), 4)); }

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

GramClass unclassified(std::size_t n, std::string detail) {
  GramClass c;
  c.signs.assign(n, 1);
  c.order = identity_order(n);
  c.detail = std::move(detail);
  return c;
}

// Conjugated entry s_i s_j g_ij.
Integer signed_entry(const ZMatrix& g, const std::vector<std::int8_t>& s, std::size_t i, std::size_t j) {
  Integer v = g(i, j);
  if (s[i] * s[j] < 0) v = -v;
  return v;
}

GramClass classify_ehlich(const ZMatrix& g, std::vector<std::int8_t> signs) {
  const std::size_t n = g.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Integer v = signed_entry(g, signs, i, j);
      if (v != 3 && v != -1) return unclassified(n, "off-diagonal entry outside {-1, 3} after normalization");
    }
  // Components of the entry-3 relation.
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    if (comp[i] != n) continue;
    groups.emplace_back();
    std::vector<std::size_t> stack{i};
    comp[i] = groups.size() - 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      groups.back().push_back(u);
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] == n && v != u && signed_entry(g, signs, u, v) == 3) {
          comp[v] = comp[i];
          stack.push_back(v);
        }
    }
    std::sort(groups.back().begin(), groups.back().end());
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || signed_entry(g, signs, i, k) != 3) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == k || signed_entry(g, signs, j, k) != 3) continue;
        if (signed_entry(g, signs, i, j) != 3) {
          GramClass c = unclassified(n, "entry-3 relation is not transitive");
          c.violating_triple = {i, k, j};
          return c;
        }
      }
    }
  }
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  GramClass c;
  c.tag = GramTag::EhlichBlock;
  std::vector<long> parts;
  for (const auto& grp : groups) {
    parts.push_back(static_cast<long>(grp.size()));
    c.order.insert(c.order.end(), grp.begin(), grp.end());
  }
  c.partition = Partition(std::move(parts));
  c.signs = std::move(signs);
  return c;
}

GramClass classify_two_mod4(const ZMatrix& g) {
  const std::size_t n = g.rows();
  const long ln = static_cast<long>(n);
  std::vector<std::size_t> a, b;
  for (std::size_t j = 0; j < n; ++j) {
    const long r = mod4(g(0, j));
    if (r % 2) return unclassified(n, "odd Gram entry");
    (r == 2 ? a : b).push_back(j);
  }
  if (a.size() != n / 2 || b.size() != n / 2) return unclassified(n, "2 mod 4 relation does not split rows evenly");
  for (std::size_t i : a)
    for (std::size_t j : b)
      if (g(i, j) != 0) return unclassified(n, "nonzero entry between the two blocks");

  std::vector<std::int8_t> signs(n, 1);
  for (const auto* blk : {&a, &b}) {
    const std::size_t ref = blk->front();
    for (std::size_t j : *blk) {
      if (j == ref) continue;
      if (g(ref, j) == 2) signs[j] = 1;
      else if (g(ref, j) == -2) signs[j] = -1;
      else return unclassified(n, "block entry is not +-2");
    }
    for (std::size_t i : *blk)
      for (std::size_t j : *blk)
        if (signed_entry(g, signs, i, j) != (i == j ? ln : 2L))
          return unclassified(n, "block Gram is not (n-2)I + 2J");
  }
  GramClass c;
  c.tag = GramTag::TwoMod4Optimal;
  c.signs = std::move(signs);
  c.order = a;
  c.order.insert(c.order.end(), b.begin(), b.end());
  c.partition = Partition({static_cast<long>(a.size()), static_cast<long>(b.size())});
  return c;
}

}  // namespace

GramClass classify_gram_matrix(const ZMatrix& g) {
  if (!g.is_square()) throw InvalidArgument("classify_gram needs a square matrix");
  const std::size_t n = g.rows();
  const long ln = static_cast<long>(n);
  if (!g.is_symmetric()) return unclassified(n, "not symmetric");
  for (std::size_t i = 0; i < n; ++i)
    if (g(i, i) != ln) return unclassified(n, "diagonal differs from the order");

  bool diagonal = true;
  for (std::size_t i = 0; i < n && diagonal; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g(i, j) != 0) {
        diagonal = false;
        break;
      }
  if (diagonal) {
    GramClass c = unclassified(n, {});
    c.tag = GramTag::HadamardDiagonal;
    return c;
  }

  if (n % 2 == 1) {
    // Sign pattern that makes row 0 congruent to n mod 4; unique up to a global sign.
    std::vector<std::int8_t> signs(n, 1);
    for (std::size_t j = 1; j < n; ++j) {
      const long r = mod4(g(0, j));
      if (r % 2 == 0) return unclassified(n, "even Gram entry at odd order");
      signs[j] = r == static_cast<long>(n % 4) ? 1 : -1;
    }
    bool barba = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Integer v = signed_entry(g, signs, i, j);
        if (mod4(v) != static_cast<long>(n % 4)) return unclassified(n, "entries not congruent to n mod 4 after normalization");
        if (v != 1) barba = false;
      }
    if (barba) {
      GramClass c;
      c.tag = GramTag::BarbaOptimal;
      c.signs = std::move(signs);
      c.order = identity_order(n);
      return c;
    }
    if (n % 4 == 3) return classify_ehlich(g, std::move(signs));
    return unclassified(n, "not (n-1)I + J after normalization");
  }
  if (n % 4 == 2) return classify_two_mod4(g);
  return unclassified(n, "not nI");
}

GramClass classify_gram(const SignMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("classify_gram needs a square matrix");
  if (m.rows() % 2 == 0) return classify_gram_matrix(gram(m));
  NormalizedRows norm = normalize_rows(m);
  GramClass c = classify_gram_matrix(gram(norm.matrix));
  for (std::size_t i = 0; i < c.signs.size(); ++i) c.signs[i] = static_cast<std::int8_t>(c.signs[i] * norm.signs[i]);
  return c;
}

ZMatrix apply_trace(const ZMatrix& g, const GramClass& cls) {
  const std::size_t n = g.rows();
  if (cls.order.size() != n || cls.signs.size() != n) throw DimensionMismatch("trace does not match the matrix");
  return ZMatrix::generate(n, n, [&](std::size_t t, std::size_t u) {
    return signed_entry(g, cls.signs, cls.order[t], cls.order[u]);
  });
}

std::optional<ZMatrix> canonical_gram(const GramClass& cls, std::size_t n) {
  const long ln = static_cast<long>(n);
  switch (cls.tag) {
    case GramTag::HadamardDiagonal: return ZMatrix::identity(n).scaled(ln);
    case GramTag::BarbaOptimal:
      return ZMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return Integer(i == j ? ln : 1); });
    case GramTag::TwoMod4Optimal:
      return ZMatrix::generate(n, n, [&](std::size_t i, std::size_t j) {
        if ((i < n / 2) != (j < n / 2)) return Integer(0);
        return Integer(i == j ? ln : 2);
      });
    case GramTag::EhlichBlock: return ehlich_block_form(ln, *cls.partition);
    case GramTag::Unclassified: return std::nullopt;
  }
  return std::nullopt;
}

void check_certificate(const SignMatrix& m, const Certificate& cert, bool check_det) {
  const std::string fam(family_name(cert.family));
  if (m.rows() != cert.order || m.cols() != cert.cols) {
    throw VerificationMismatch("shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " differs from the " +
                               fam + " certificate " + std::to_string(cert.order) + "x" + std::to_string(cert.cols));
  }
  if (cert.predicted_gram_entry) {
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const long got = static_cast<long>(kernels::sign_dot(m.row(i).data(), m.row(j).data(), m.cols()));
        const long want = cert.predicted_gram_entry(i, j);
        if (got != want) {
          throw VerificationMismatch(i, j, "Gram entry (" + std::to_string(i) + ", " + std::to_string(j) + ") is " +
                                               std::to_string(got) + ", the " + fam + " certificate predicts " +
                                               std::to_string(want));
        }
      }
    }
  }
  if (check_det) {
    const Integer d = det_exact(gram(m));
    if (d != cert.predicted_gram_det) {
      throw VerificationMismatch("det(M M^T) = " + d.get_str() + ", the " + fam + " certificate predicts " +
                                 cert.predicted_gram_det.get_str());
    }
  }
}

namespace {

std::optional<unsigned long> exact_root(std::size_t v) {
  auto r = exact_sqrt(Integer(static_cast<unsigned long>(v)));
  if (!r) return std::nullopt;
  return r->get_ui();
}

[[noreturn]] void not_member(Family f, const std::string& why) {
  throw VerificationMismatch("matrix is not a " + std::string(family_name(f)) + " matrix: " + why);
}

SignVector row_segment(const SignMatrix& m, std::size_t row, std::size_t col0, std::size_t len) {
  auto r = m.row(row);
  return SignVector(r.begin() + static_cast<std::ptrdiff_t>(col0), r.begin() + static_cast<std::ptrdiff_t>(col0 + len));
}

Certificate rebuild(Family f, const SignMatrix& m) {
  const std::size_t n = m.rows();
  const bool square = m.is_square();
  switch (f) {
    case Family::Sylvester: {
      if (!square || (n & (n - 1)) != 0) not_member(f, "order is not a power of two");
      unsigned t = 0;
      while ((std::size_t{1} << t) < n) ++t;
      return sylvester(t).certificate;
    }
    case Family::PaleyI:
      if (!square || n < 4) not_member(f, "bad order");
      return paley_I(n - 1).certificate;
    case Family::CohnBorder:
      if (!square || n < 6) not_member(f, "bad order");
      return cohn_border(n - 1).certificate;
    case Family::ExcessBorder:
      if (!square || n < 2) not_member(f, "bad order");
      return excess_border(m.submatrix(0, 0, n - 1, n - 1)).certificate;
    case Family::AffineOrtho: {
      auto p = exact_root(n);
      if (!p || m.cols() != n + *p) not_member(f, "shape is not p^2 x (p^2 + p)");
      return bw_ortho_M(*p).certificate;
    }
    case Family::BWOrtho: {
      auto root = exact_root(n + 1);
      if (!root || *root < 2) not_member(f, "rows are not p^2 + 2p");
      return bw_N(*root - 1).certificate;
    }
    case Family::BrouwerWhiteman: {
      auto root = exact_root(2 * n - 1);
      if (!square || !root || *root % 2 == 0) not_member(f, "order is not 2p^2 + 2p + 1");
      return brouwer_whiteman((*root - 1) / 2).certificate;
    }
    case Family::Doubling:
      if (!square || n % 2) not_member(f, "order is odd");
      return doubling(m.submatrix(0, 0, n / 2, n / 2)).certificate;
    case Family::TwoCirculantBorder: {
      if (!square || n % 2 == 0 || n < 3) not_member(f, "order is even");
      const std::size_t k = (n - 1) / 2;
      const SignVector x = row_segment(m, 0, 0, k);
      const SignVector y = row_segment(m, 0, k, k);
      const SignMatrix cy = circulant(y);
      // Row k opens the lower block: Y's first row (M1) or Y^T's (M2).
      std::size_t d1 = 0, d2 = 0;
      for (std::size_t j = 0; j < k; ++j) {
        d1 += m(k, j) != cy(0, j);
        d2 += m(k, j) != cy(j, 0);
      }
      const Variant v = d1 < d2 ? Variant::M1 : Variant::M2;
      return two_circulant_border(CirculantPair(x, y), v, Lead::PlusR).construction.certificate;
    }
    case Family::OSDS:
      if (!square || n < 15 || (n - 3) % 4) not_member(f, "order is not 4q + 3");
      return osds((n - 3) / 4).certificate;
    case Family::EhlichBlock: not_member(f, "Ehlich-block matrices are Gram candidates, not sign matrices");
  }
  not_member(f, "unknown family");
}

}  // namespace

Certificate expected_certificate(Family family, const SignMatrix& m) {
  try {
    return rebuild(family, m);
  } catch (const VerificationMismatch&) {
    throw;
  } catch (const InvalidArgument& e) {
    not_member(family, e.what());
  }
}

VerificationReport verify(const SignMatrix& m, unsigned digits) {
  if (!m.is_square()) throw InvalidArgument("verify needs a square matrix");
  VerificationReport r;
  r.order = m.rows();
  r.det = det_exact(m);
  r.det_sq = r.det * r.det;
  const Integer gram_det = det_exact(gram(m));
  if (gram_det != r.det_sq) {
    throw CertificateFailure("det(M)^2 = " + r.det_sq.get_str() + " but det(M M^T) = " + gram_det.get_str());
  }
  r.gram_class = classify_gram(m);
  const long n = static_cast<long>(r.order);
  r.bound = bound_for(n);
  r.ratio = ratio_decimal(r.det_sq, r.bound.gram_bound, digits);
  r.row_sums = row_sums(m);
  r.excess = excess(m);
  r.feasibility = feasibility(n);
  return r;
}

VerificationReport verify(const SignMatrix& m, const Certificate& expected, unsigned digits) {
  check_certificate(m, expected, true);
  VerificationReport r = verify(m, digits);
  r.family = expected.family;
  r.parameters = expected.parameters;
  return r;
}

VerificationReport verify(const SignMatrix& m, Family expected, unsigned digits) {
  return verify(m, expected_certificate(expected, m), digits);
}

}  // namespace maxdet
