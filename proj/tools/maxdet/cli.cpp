#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "maxdet/bounds.hpp"
#include "maxdet/constructions.hpp"
#include "maxdet/errors.hpp"
#include "maxdet/feasibility.hpp"
#include "maxdet/kernels.hpp"
#include "maxdet/linalg.hpp"
#include "maxdet/matrix_file.hpp"
#include "maxdet/search.hpp"
#include "maxdet/verification.hpp"
#include "report_json.hpp"
#include "table.hpp"

namespace maxdet::cli {

namespace {

// Orders above this skip the determinant half of the construct self-check.
constexpr std::size_t kSelfCheckDetLimit = 160;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Long integers are shortened for terminal output.
std::string brief(const Integer& v) {
  std::string s = v.get_str();
  if (s.size() <= 72) return s;
  const std::size_t digits = s.size() - (s[0] == '-' ? 1 : 0);
  return s.substr(0, 30) + "..." + s.substr(s.size() - 30) + " (" + std::to_string(digits) + " digits)";
}

std::string params_text(const std::map<std::string, long>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ", ";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string row_sums_text(const std::vector<long>& sums) {
  std::string out;
  for (long s : sums) {
    if (!out.empty()) out += " ";
    out += std::to_string(s);
  }
  return out;
}

struct Globals {
  std::size_t size_guard = 0;
  std::string isa;
};

struct ConstructArgs {
  std::string family;
  std::optional<long> p, q, t, k;
  std::string pair_file, core_file, in_file, out_file;
  std::string variant = "m2";
  std::string lead;
};

struct VerifyArgs {
  std::string in_file;
  std::string expect;
  bool json = false;
  unsigned digits = 4;
};

struct BoundArgs {
  long n = 0;
  std::string which = "auto";
  unsigned digits = 4;
  bool json = false;
};

struct DetArgs {
  std::string in_file;
  bool json = false;
};

struct MaxdetArgs {
  int n = 0;
  std::string out_file;
  bool json = false;
  unsigned threads = 1;
};

struct PairArgs {
  std::size_t k = 0;
  bool all = false;
  bool per_class = false;
  bool allow_large = false;
  std::string out_file;
  bool json = false;
  unsigned threads = 1;
};

struct FeasibleArgs {
  long n = 0;
  bool json = false;
};

struct TableArgs {
  long min = 23;
  long max = 47;
  bool search_pairs = false;
  std::size_t max_pair_k = kDefaultPairLimit;
  unsigned digits = 4;
  bool json = false;
  unsigned threads = 1;
};

std::uint64_t require_param(const std::optional<long>& v, const char* flag, std::string_view family) {
  if (!v) throw InvalidArgument("family " + std::string(family) + " needs " + flag);
  if (*v < 0) throw InvalidArgument(std::string(flag) + " must be non-negative");
  return static_cast<std::uint64_t>(*v);
}

Construction build(const ConstructArgs& a, std::ostream& out) {
  const auto family = parse_family(a.family);
  if (!family) throw InvalidArgument("unknown family '" + a.family + "'");
  const auto variant = parse_variant(a.variant);
  if (!variant) throw InvalidArgument("unknown variant '" + a.variant + "' (expected m1 or m2)");
  std::optional<Lead> lead;
  if (!a.lead.empty()) {
    lead = parse_lead(a.lead);
    if (!lead) throw InvalidArgument("unknown lead '" + a.lead + "' (expected r, -r, s or -s)");
  }
  switch (*family) {
    case Family::Sylvester: return sylvester(static_cast<unsigned>(require_param(a.t, "--t", a.family)));
    case Family::PaleyI: return paley_I(require_param(a.p, "--p", a.family));
    case Family::CohnBorder: return cohn_border(require_param(a.q, "--q", a.family));
    case Family::ExcessBorder:
      if (a.in_file.empty()) throw InvalidArgument("excess-border needs --in with a Hadamard matrix");
      return excess_border(read_matrix_file(a.in_file));
    case Family::AffineOrtho: return bw_ortho_M(require_param(a.p, "--p", a.family));
    case Family::BWOrtho: return bw_N(require_param(a.p, "--p", a.family));
    case Family::BrouwerWhiteman: return brouwer_whiteman(require_param(a.p, "--p", a.family));
    case Family::Doubling:
      if (!a.in_file.empty()) return doubling(read_matrix_file(a.in_file));
      return doubling(brouwer_whiteman(require_param(a.p, "--p", a.family)).matrix);
    case Family::TwoCirculantBorder: {
      std::optional<CirculantPair> pair;
      if (!a.pair_file.empty()) {
        pair = CirculantPair::from_rows(read_matrix_file(a.pair_file));
      } else {
        const std::size_t k = require_param(a.k, "--k or --pair", a.family);
        const auto found = circulant_pair_search(k, PairMode::First);
        if (found.pairs.empty()) throw InvalidArgument("no circulant pair found at k = " + std::to_string(k));
        pair = found.pairs.front();
      }
      BorderConstruction b = two_circulant_border(*pair, *variant, lead);
      out << "lead block: " << lead_name(b.chosen) << " (row sums r=" << pair->r() << ", s=" << pair->s() << ")\n";
      for (const auto& opt : b.options) {
        out << "  lead " << lead_name(opt.lead) << ": row sum " << opt.lead_row_sum << ", det(M M^T) = "
            << brief(opt.predicted_gram_det) << "\n";
      }
      return std::move(b.construction);
    }
    case Family::OSDS:
      if (!a.core_file.empty()) return osds_from_shifted_core(read_matrix_file(a.core_file));
      return osds(require_param(a.q, "--q", a.family));
    case Family::EhlichBlock:
      throw InvalidArgument("ehlich-block matrices are Gram candidates, not sign matrices; see 'bound --which ehlich-partition'");
  }
  throw InvalidArgument("unsupported family");
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  Construction c = build(a, out);
  const Certificate& cert = c.certificate;
  try {
    check_certificate(c.matrix, cert, c.matrix.rows() <= kSelfCheckDetLimit);
  } catch (const VerificationMismatch& e) {
    throw CertificateFailure(std::string("construction failed its own certificate: ") + e.what());
  }
  std::vector<std::string> comments{"family " + std::string(family_name(cert.family)) +
                                    (cert.parameters.empty() ? "" : " " + params_text(cert.parameters))};
  write_matrix_file(a.out_file, c.matrix, comments);
  out << "wrote " << a.out_file << ": " << family_name(cert.family) << ", " << c.matrix.rows() << " x "
      << c.matrix.cols() << "\n";
  if (!cert.parameters.empty()) out << "parameters: " << params_text(cert.parameters) << "\n";
  out << "certificate: M M^T = " << cert.predicted_gram_shape << "\n";
  out << "predicted det(M M^T) = " << brief(cert.predicted_gram_det) << "\n";
  out << "self-check: Gram entries ok"
      << (c.matrix.rows() <= kSelfCheckDetLimit ? ", determinant ok" : ", determinant skipped at this order") << "\n";
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const SignMatrix m = read_matrix_file(a.in_file);
  VerificationReport r;
  if (!a.expect.empty()) {
    const auto family = parse_family(a.expect);
    if (!family) throw InvalidArgument("unknown family '" + a.expect + "'");
    r = verify(m, *family, a.digits);
  } else {
    r = verify(m, a.digits);
  }
  if (a.json) {
    out << report_json(r, elapsed_ms(start)).dump(2) << "\n";
    return kExitOk;
  }
  out << "order: " << r.order << "\n";
  if (r.family) {
    out << "family: " << family_name(*r.family);
    if (!r.parameters.empty()) out << " (" << params_text(r.parameters) << ")";
    out << ", certificate ok\n";
  }
  out << "det: " << brief(r.det) << "\n";
  out << "det^2: " << brief(r.det_sq) << "\n";
  out << "gram class: " << gram_tag_name(r.gram_class.tag);
  if (r.gram_class.partition) out << " " << r.gram_class.partition->to_string();
  if (!r.gram_class.detail.empty()) out << " (" << r.gram_class.detail << ")";
  out << "\n";
  out << "bound: " << bound_kind_name(r.bound.kind) << " " << bound_root_text(r.bound) << "\n";
  out << "ratio: " << r.ratio << "\n";
  out << "excess: " << r.excess.get_str() << "\n";
  out << "row sums: " << row_sums_text(r.row_sums) << "\n";
  out << "feasibility: " << (r.feasibility.not_obstructed() ? "bound not obstructed" : "bound not attainable");
  for (const auto& t : r.feasibility.obstructions)
    if (!t.pass) out << "; " << t.witness;
  out << "\n";
  return kExitOk;
}

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  BoundValue b;
  if (a.which == "auto") {
    b = bound_for(a.n);
  } else {
    const auto kind = parse_bound_kind(a.which);
    if (!kind) throw InvalidArgument("unknown bound '" + a.which + "'");
    b = bound_of_kind(a.n, *kind);
  }
  if (a.json) {
    out << bound_json(b, a.digits, elapsed_ms(start)).dump(2) << "\n";
    return kExitOk;
  }
  out << "bound: " << bound_kind_name(b.kind) << "\n";
  if (b.partition) out << "partition: " << b.partition->to_string() << "\n";
  out << "squared: " << bound_sq_text(b) << "\n";
  out << "squared exact: " << to_string(b.gram_bound) << "\n";
  out << "root: " << bound_root_text(b) << "\n";
  out << "decimal: " << sqrt_decimal(b.gram_bound, a.digits) << "\n";
  out << "note: " << b.attainable_note << "\n";
  return kExitOk;
}

int cmd_det(const DetArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const SignMatrix m = read_matrix_file(a.in_file);
  if (!m.is_square()) throw DimensionMismatch("det needs a square matrix");
  const Integer d = det_exact(m);
  if (a.json) out << det_json(m.rows(), d, elapsed_ms(start)).dump(2) << "\n";
  else out << d.get_str() << "\n";
  return kExitOk;
}

int cmd_search_maxdet(const MaxdetArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  SearchOptions opts;
  opts.threads = a.threads;
  const SearchResult r = exhaustive_maxdet(a.n, opts);
  if (!a.out_file.empty() && !r.witnesses.empty()) {
    write_matrix_file(a.out_file, r.witnesses.front(), {"maximal |det| = " + r.max_det.get_str()});
  }
  if (a.json) {
    out << maxdet_search_json(a.n, r, elapsed_ms(start)).dump(2) << "\n";
    return kExitOk;
  }
  out << "n: " << a.n << "\n";
  out << "max |det|: " << r.max_det.get_str() << "\n";
  out << "witnesses: " << r.witnesses.size() << "\n";
  if (!a.out_file.empty()) out << "wrote " << a.out_file << "\n";
  return kExitOk;
}

std::string sign_text(const SignVector& v) {
  std::string s;
  for (auto x : v) s.push_back(x > 0 ? '+' : '-');
  return s;
}

int cmd_search_pairs(const PairArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  PairSearchOptions opts;
  opts.threads = a.threads;
  opts.allow_large = a.allow_large;
  const PairMode mode = a.all ? PairMode::All : a.per_class ? PairMode::FirstPerClass : PairMode::First;
  const PairSearchResult r = circulant_pair_search(a.k, mode, opts);
  if (!a.out_file.empty() && !r.pairs.empty()) {
    const auto& p = r.pairs.front();
    write_matrix_file(a.out_file, p.as_rows(),
                      {"circulant pair k=" + std::to_string(a.k) + " r=" + std::to_string(p.r()) + " s=" + std::to_string(p.s())});
  }
  if (a.json) {
    out << pair_search_json(r, elapsed_ms(start)).dump(2) << "\n";
    return kExitOk;
  }
  out << "k: " << a.k << "\n";
  out << "classes:";
  for (const auto& [x, y] : r.classes) out << " (" << x << "," << y << ")";
  out << "\n";
  out << "pairs: " << r.pairs.size() << "\n";
  for (const auto& p : r.pairs) {
    out << "r=" << p.r() << " s=" << p.s() << " R=" << sign_text(p.first_row_r()) << " S=" << sign_text(p.first_row_s())
        << "\n";
  }
  if (!a.out_file.empty() && !r.pairs.empty()) out << "wrote " << a.out_file << "\n";
  return kExitOk;
}

int cmd_feasible(const FeasibleArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const FeasibilityReport r = feasibility(a.n);
  if (a.json) {
    json j = feasibility_json(r);
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "feasible";
    j["runtime_ms"] = elapsed_ms(start);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "n: " << r.n << " (n mod 4 = " << r.residue_class << "), bound: " << bound_kind_name(r.applicable_bound) << "\n";
  for (const auto& t : r.obstructions) out << (t.pass ? "pass  " : "fail  ") << t.name << ": " << t.witness << "\n";
  out << (r.not_obstructed() ? "equality in the bound is not ruled out\n" : "equality in the bound is ruled out\n");
  return kExitOk;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  TableOptions opts;
  opts.search_pairs = a.search_pairs;
  opts.max_pair_k = a.max_pair_k;
  opts.digits = a.digits;
  opts.threads = a.threads;
  const auto rows = compute_table(a.min, a.max, opts);
  if (a.json) {
    out << table_json(rows, elapsed_ms(start)).dump(2) << "\n";
    return kExitOk;
  }
  // The bound text holds multibyte characters; pad by code points.
  auto display = [](const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) n += (c & 0xC0) != 0x80;
    return n;
  };
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, display(r.bound_text));
  width = std::max<std::size_t>(width, 11);
  auto pad = [&](const std::string& s) { return s + std::string(width - display(s), ' '); };
  out << "n    " << pad("upper bound") << "  osds    border\n";
  for (const auto& r : rows) {
    std::ostringstream line;
    line << std::left << std::setw(5) << r.n << pad(r.bound_text) << "  " << std::setw(8) << (r.osds ? *r.osds : "-")
         << (r.border ? r.border->best.ratio : "-");
    out << line.str() << "\n";
  }
  return kExitOk;
}

void apply_globals(const Globals& g) {
  if (g.size_guard) set_size_guard(g.size_guard);
  if (!g.isa.empty()) {
    if (g.isa == "scalar") kernels::set_active_isa(kernels::Isa::Scalar);
    else if (g.isa == "avx2") kernels::set_active_isa(kernels::Isa::Avx2);
    else throw InvalidArgument("unknown instruction set '" + g.isa + "'");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions, bounds and verification for maximal-determinant sign matrices", "maxdet"};
  app.require_subcommand(1);
  app.fallthrough();
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  Globals g;
  app.add_option("--size-guard", g.size_guard, "Largest matrix order to materialize (default 4096)");
  app.add_option("--isa", g.isa, "Kernel variant: scalar or avx2 (default: best available)");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a matrix of a named family and write it to a file");
  construct->add_option("--family", ca.family, "Family name")->required();
  construct->add_option("--p", ca.p, "Prime parameter p");
  construct->add_option("--q", ca.q, "Prime parameter q");
  construct->add_option("--t", ca.t, "Sylvester exponent t");
  construct->add_option("--k", ca.k, "Circulant block order k (searches for a pair)");
  construct->add_option("--pair", ca.pair_file, "Two-row matrix file holding a circulant pair");
  construct->add_option("--core", ca.core_file, "Matrix file holding a shifted skew core C for osds");
  construct->add_option("--in", ca.in_file, "Base matrix file for doubling or excess-border");
  construct->add_option("--variant", ca.variant, "Two-circulant variant m1 or m2");
  construct->add_option("--lead", ca.lead, "Two-circulant leading block r, -r, s or -s");
  construct->add_option("--out", ca.out_file, "Output matrix file")->required();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Exact determinant, Gram class, bound ratio and feasibility");
  verify_cmd->add_option("--in", va.in_file, "Matrix file")->required();
  verify_cmd->add_option("--expect", va.expect, "Family the matrix must belong to");
  verify_cmd->add_option("--digits", va.digits, "Ratio digits");
  verify_cmd->add_flag("--json", va.json, "Emit JSON");

  BoundArgs ba;
  auto* bound_cmd = app.add_subcommand("bound", "Upper bound on |det| at order n");
  bound_cmd->add_option("--n", ba.n, "Order")->required();
  bound_cmd->add_option("--which", ba.which, "auto, hadamard, barba, ew, ehlich or ehlich-partition");
  bound_cmd->add_option("--digits", ba.digits, "Decimal digits");
  bound_cmd->add_flag("--json", ba.json, "Emit JSON");

  DetArgs da;
  auto* det_cmd = app.add_subcommand("det", "Exact determinant of a matrix file");
  det_cmd->add_option("--in", da.in_file, "Matrix file")->required();
  det_cmd->add_flag("--json", da.json, "Emit JSON");

  auto* search_cmd = app.add_subcommand("search", "Brute-force searches");
  search_cmd->require_subcommand(1);
  MaxdetArgs ma;
  ma.threads = hw;
  auto* maxdet_cmd = search_cmd->add_subcommand("maxdet", "Exhaustive maximal determinant, n <= 7");
  maxdet_cmd->add_option("--n", ma.n, "Order")->required();
  maxdet_cmd->add_option("--out", ma.out_file, "Write the first witness here");
  maxdet_cmd->add_option("--threads", ma.threads, "Worker threads");
  maxdet_cmd->add_flag("--json", ma.json, "Emit JSON");
  PairArgs pa;
  pa.threads = hw;
  auto* pairs_cmd = search_cmd->add_subcommand("pairs", "Circulant pairs with PAF_R + PAF_S = 2");
  pairs_cmd->add_option("--k", pa.k, "Block order")->required();
  pairs_cmd->add_flag("--all", pa.all, "List every pair");
  pairs_cmd->add_flag("--per-class", pa.per_class, "Smallest pair in each row-sum class");
  pairs_cmd->add_flag("--allow-large", pa.allow_large, "Permit 15 < k <= 31");
  pairs_cmd->add_option("--out", pa.out_file, "Write the first pair here");
  pairs_cmd->add_option("--threads", pa.threads, "Worker threads");
  pairs_cmd->add_flag("--json", pa.json, "Emit JSON");

  FeasibleArgs fa;
  auto* feasible_cmd = app.add_subcommand("feasible", "Number-theoretic tests for equality in the bound");
  feasible_cmd->add_option("--n", fa.n, "Order")->required();
  feasible_cmd->add_flag("--json", fa.json, "Emit JSON");

  TableArgs ta;
  ta.threads = hw;
  auto* table_cmd = app.add_subcommand("table", "Large determinants at n = 3 mod 4");
  table_cmd->add_option("--min", ta.min, "Smallest order");
  table_cmd->add_option("--max", ta.max, "Largest order");
  table_cmd->add_flag("--search-pairs", ta.search_pairs, "Search circulant pairs for the border column");
  table_cmd->add_option("--max-pair-k", ta.max_pair_k, "Largest block order searched (default 15)");
  table_cmd->add_option("--digits", ta.digits, "Ratio digits");
  table_cmd->add_option("--threads", ta.threads, "Worker threads");
  table_cmd->add_flag("--json", ta.json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_globals(g);
    if (*construct) return cmd_construct(ca, out);
    if (*verify_cmd) return cmd_verify(va, out);
    if (*bound_cmd) return cmd_bound(ba, out);
    if (*det_cmd) return cmd_det(da, out);
    if (*maxdet_cmd) return cmd_search_maxdet(ma, out);
    if (*pairs_cmd) return cmd_search_pairs(pa, out);
    if (*feasible_cmd) return cmd_feasible(fa, out);
    if (*table_cmd) return cmd_table(ta, out);
  } catch (const VerificationMismatch& e) {
    err << "verification mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const CertificateFailure& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace maxdet::cli
