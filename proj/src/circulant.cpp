#include "maxdet/circulant.hpp"

#include <string>

#include "maxdet/errors.hpp"

namespace maxdet {

long periodic_autocorrelation(const SignVector& x, std::size_t j) {
  const std::size_t k = x.size();
  long sum = 0;
  for (std::size_t i = 0; i < k; ++i) sum += x[i] * x[(i + j) % k];
  return sum;
}

long vector_sum(const SignVector& x) {
  long sum = 0;
  for (std::int8_t v : x) sum += v;
  return sum;
}

SignMatrix circulant(const SignVector& x) {
  const std::size_t k = x.size();
  return SignMatrix::generate(k, k, [&](std::size_t i, std::size_t j) { return x[(j + k - i) % k]; });
}

std::string pair_identity_violation(const SignVector& x, const SignVector& y) {
  if (x.empty() || x.size() != y.size()) return "first rows must be non-empty and of equal length";
  for (std::size_t j = 1; j < x.size(); ++j) {
    const long total = periodic_autocorrelation(x, j) + periodic_autocorrelation(y, j);
    if (total != 2) {
      return "PAF_R(" + std::to_string(j) + ") + PAF_S(" + std::to_string(j) + ") = " +
             std::to_string(total) + ", expected 2";
    }
  }
  return {};
}

CirculantPair::CirculantPair(SignVector first_row_r, SignVector first_row_s)
    : r_row_(std::move(first_row_r)), s_row_(std::move(first_row_s)) {
  for (const SignVector* v : {&r_row_, &s_row_})
    for (std::int8_t e : *v)
      if (e != 1 && e != -1) throw InvalidArgument("circulant first rows must be +-1");
  if (std::string why = pair_identity_violation(r_row_, s_row_); !why.empty()) {
    throw InvalidArgument("not a circulant pair: " + why);
  }
  r_ = vector_sum(r_row_);
  s_ = vector_sum(s_row_);
}

SignMatrix CirculantPair::as_rows() const {
  std::vector<std::int8_t> data(r_row_);
  data.insert(data.end(), s_row_.begin(), s_row_.end());
  return SignMatrix(2, k(), std::move(data));
}

CirculantPair CirculantPair::from_rows(const SignMatrix& rows) {
  if (rows.rows() != 2) throw DimensionMismatch("a circulant pair file holds exactly two rows");
  auto r = rows.row(0);
  auto s = rows.row(1);
  return CirculantPair(SignVector(r.begin(), r.end()), SignVector(s.begin(), s.end()));
}

bool CirculantPair::operator<(const CirculantPair& other) const {
  if (r_row_ != other.r_row_) return r_row_ < other.r_row_;
  return s_row_ < other.s_row_;
}

}  // namespace maxdet
