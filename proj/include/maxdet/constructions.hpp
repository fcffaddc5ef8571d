#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxdet/circulant.hpp"
#include "maxdet/numeric.hpp"
#include "maxdet/partition.hpp"
#include "maxdet/sign_matrix.hpp"
#include "maxdet/zmatrix.hpp"

namespace maxdet {

enum class Family {
  Sylvester,
  PaleyI,
  CohnBorder,
  ExcessBorder,
  AffineOrtho,
  BWOrtho,
  BrouwerWhiteman,
  Doubling,
  TwoCirculantBorder,
  OSDS,
  EhlichBlock,
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();

// What a construction promises about its output.
struct Certificate {
  Family family;
  std::size_t order = 0;  // number of rows
  std::size_t cols = 0;
  Integer predicted_gram_det;
  std::string predicted_gram_shape;
  std::map<std::string, long> parameters;
  // Entry (i, j) of the predicted Gram matrix, when the construction pins it down.
  std::function<long(std::size_t, std::size_t)> predicted_gram_entry;
};

struct Construction {
  SignMatrix matrix;
  Certificate certificate;
};

Construction sylvester(unsigned t);
Construction paley_I(std::uint64_t p);
Construction cohn_border(std::uint64_t q);
Construction excess_border(const SignMatrix& h);

// 0/1 incidence of the affine plane over F_p: rows are points (x, y) at index
// x p + y, columns are lines in p + 1 parallel classes. Class 0 holds the
// vertical lines x = c; class a + 1 holds the lines y = a x + b.
ZMatrix affine_plane(std::uint64_t p);

// M = M_p (I_{p+1} (x) C), p^2 x (p^2 + p). Its Gram matrix is (p^2 + p) I.
Construction bw_ortho_M(std::uint64_t p);
// (p^2 + 2p) x (2p^2 + 2p) with Gram (2p^2 + 2p) I.
Construction bw_N(std::uint64_t p);
// Order 2p^2 + 2p + 1 with Gram (n - 1) I + J.
Construction brouwer_whiteman(std::uint64_t p);
// [[W, W], [W, -W]] for W with Gram (n - 1) I + J.
Construction doubling(const SignMatrix& w);

enum class Variant { M1, M2 };
// Which signed circulant occupies the leading block.
enum class Lead { PlusR, MinusR, PlusS, MinusS };

std::string_view variant_name(Variant v);
std::string_view lead_name(Lead lead);
std::optional<Variant> parse_variant(std::string_view name);
std::optional<Lead> parse_lead(std::string_view name);

struct LeadOption {
  Lead lead;
  long lead_row_sum = 0;
  Integer predicted_gram_det;
};

struct BorderConstruction {
  Construction construction;
  Variant variant = Variant::M2;
  Lead chosen = Lead::PlusR;
  std::vector<LeadOption> options;  // all four leads, in enum order
};

// (4k^2 r^2 - 16k^2 r + 16k^2 - 16k + 8kr + 4)(2k - 2)^(2k - 2).
Integer border_gram_det(long k, long r);
Lead default_lead(const CirculantPair& pair);
BorderConstruction two_circulant_border(const CirculantPair& pair, Variant variant = Variant::M2,
                                        std::optional<Lead> lead = std::nullopt);

// Order 4q + 3 from the Paley core of a prime q = 3 mod 4.
Construction osds(std::uint64_t q);
// Same, from a supplied shifted skew core C = Q - I.
Construction osds_from_shifted_core(const SignMatrix& c);

// (n - 3) I + 3 J blocks of the given sizes on the diagonal, -1 elsewhere.
// The block sizes may sum to any m; the result is m x m.
ZMatrix ehlich_block_form(long n, const Partition& partition);
// Same with n = 3 mod 4 and the sizes summing to n.
ZMatrix ehlich_block_matrix(long n, const Partition& partition);

}  // namespace maxdet
