// Command-line front end for the braidlef library: conjugacy normal forms,
// generalized Lefschetz representatives by two independent routes, Nielsen
// bounds, reduced Burau matrices, dynamical certificates, and partition
// listings, emitted as plain text or JSON.
//
// Exit codes: 0 success, 1 parse error (bad flags or braid syntax),
// 2 precondition violation (a hypothesis of the computation fails),
// 3 internal error.

#include <cstddef>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "braidlef/braid.hpp"
#include "braidlef/burau.hpp"
#include "braidlef/dynamics.hpp"
#include "braidlef/errors.hpp"
#include "braidlef/groupring.hpp"
#include "braidlef/lefschetz.hpp"
#include "braidlef/normalize.hpp"
#include "braidlef/serialize.hpp"

namespace {

using nlohmann::ordered_json;
using namespace braidlef;

constexpr const char* kCaveat = "reidemeister-classes-not-distinguished";
constexpr int kMergeBoundCap = 4;

std::string slurp_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

bool parse_ll(const std::string& s, long long& out) {
  if (s.empty()) return false;
  try {
    std::size_t pos = 0;
    out = std::stoll(s, &pos);
    return pos == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

// "s3" -> generator 3 once, "s1^-2" -> generator 1 with exponent -2.
bool sigma_token(const std::string& tok, long long& gen, long long& exp) {
  if (tok.size() < 2 || tok[0] != 's') return false;
  const auto caret = tok.find('^');
  const std::string gen_part =
      caret == std::string::npos ? tok.substr(1) : tok.substr(1, caret - 1);
  const std::string exp_part =
      caret == std::string::npos ? "1" : tok.substr(caret + 1);
  return parse_ll(gen_part, gen) && parse_ll(exp_part, exp);
}

// Braid input accepts signed-integer tokens ("1 -2") and sigma-style tokens
// ("s1 s2^-1"); sigma tokens are expanded into repeated signed letters and
// everything else is handed to the signed-integer parser unchanged.
std::string expand_braid_text(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string tok;
  while (in >> tok) {
    long long gen = 0;
    long long exp = 0;
    if (sigma_token(tok, gen, exp)) {
      if (exp > 10000 || exp < -10000)
        throw ParseError("token '" + tok + "' expands beyond 10000 letters");
      const long long letter = exp < 0 ? -gen : gen;
      const long long count = exp < 0 ? -exp : exp;
      for (long long r = 0; r < count; ++r) out << letter << ' ';
    } else {
      out << tok << ' ';
    }
  }
  return out.str();
}

BraidWord input_braid(const std::string& arg, int n) {
  const std::string text = arg == "-" ? slurp_stdin() : arg;
  return parse_braid(expand_braid_text(text), n);
}

void require_n(int n) {
  if (n < 3) throw UsageError("--n must be at least 3");
}

std::string fmt_I(const std::vector<long long>& I) {
  std::string s = "[";
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(I[i]);
  }
  return s + "]";
}

std::string normal_form_line(const NormalForm& nf) {
  std::ostringstream out;
  out << "mu=" << nf.mu << " I=" << fmt_I(nf.I) << " gamma=\""
      << braid_str(nf.gamma) << "\" n=" << nf.n;
  return out.str();
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int run_normalize(int n, const std::string& format,
                  const std::string& braid_arg) {
  require_n(n);
  const BraidWord b = input_braid(braid_arg, n);
  const NormalForm nf = normalize(b);
  if (!verify(nf, b))
    throw std::runtime_error("normal form failed verification against input");
  if (format == "json") {
    emit(normal_form_to_json(nf));
  } else {
    std::cout << normal_form_line(nf) << "\n";
  }
  return 0;
}

int run_lefschetz(int n, const std::string& format, const std::string& route,
                  int merge_bound, const std::string& braid_arg) {
  require_n(n);
  if (merge_bound < 0 || merge_bound > kMergeBoundCap)
    throw UsageError("--merge-bound must be between 0 and 4");
  const BraidWord b = input_braid(braid_arg, n);

  std::optional<LefschetzResult> part_route;
  std::optional<LefschetzResult> fox_route;
  if (route != "foxtrace") {
    const NormalForm nf = normalize(b);
    try {
      part_route = theorem1(nf);
    } catch (const UsageError& e) {
      throw UsageError(std::string(e.what()) +
                       "; --route foxtrace handles central braids");
    }
  }
  if (route != "theorem1") fox_route = foxtrace(b);

  if (merge_bound > 0) {
    if (part_route)
      part_route->representative =
          merge_classes(part_route->representative, b, merge_bound);
    if (fox_route)
      fox_route->representative =
          merge_classes(fox_route->representative, b, merge_bound);
  }

  const RingElem& primary =
      fox_route ? fox_route->representative : part_route->representative;
  const LaurentPoly ab = abelianize(primary);
  if (part_route && fox_route &&
      !(abelianize(part_route->representative) == ab))
    throw std::runtime_error(
        "route disagreement: the partition formula and the Fox trace "
        "abelianize differently");

  if (format == "json") {
    ordered_json out;
    out["route"] = route;
    if (route == "both") {
      out["theorem1"] = ring_to_json(part_route->representative);
      out["foxtrace"] = ring_to_json(fox_route->representative);
    } else {
      out["representative"] = ring_to_json(primary);
    }
    if (part_route)
      out["normal_form"] = normal_form_to_json(*part_route->normal_form);
    out["abelianized"] = ab.str_compact();
    if (route == "both") out["agreement"] = true;
    out["caveat"] = kCaveat;
    emit(out);
  } else {
    std::cout << "route: " << route << "\n";
    if (part_route)
      std::cout << "normal form: " << normal_form_line(*part_route->normal_form)
                << "\n";
    if (route == "both") {
      std::cout << "theorem1 representative: "
                << part_route->representative.str() << "\n";
      std::cout << "foxtrace representative: "
                << fox_route->representative.str() << "\n";
    } else {
      std::cout << "representative: " << primary.str() << "\n";
    }
    std::cout << "abelianized: " << ab.str_compact() << "\n";
    if (route == "both") std::cout << "agreement: yes\n";
    std::cout << "caveat: " << kCaveat << "\n";
  }
  return 0;
}

int run_nielsen(int n, const std::string& format,
                const std::string& braid_arg) {
  require_n(n);
  const BraidWord b = input_braid(braid_arg, n);
  const NormalForm nf = normalize(b);
  if (nf.central_only)
    throw UsageError(
        "nielsen: the braid is a pure full-twist power; the partition bound "
        "needs a nonempty exponent sequence");
  const Int upper = nielsen_upper(nf.I, nf.n);

  std::optional<Theorem2Bounds> t2;
  std::string t2_reason;
  try {
    t2 = theorem2_bounds(nf.I, nf.n);
  } catch (const UsageError& e) {
    t2_reason = e.what();
  }

  if (format == "json") {
    ordered_json out;
    out["n"] = nf.n;
    out["mu"] = nf.mu;
    out["I"] = nf.I;
    out["nielsen_upper"] = upper.str();
    if (t2) {
      out["theorem2"] = ordered_json{{"lower", t2->lower.str()},
                                     {"upper", t2->upper.str()},
                                     {"refined_sum", t2->refined_sum.str()},
                                     {"t_distinct", t2->t_distinct.str()}};
    } else {
      out["theorem2_unavailable"] = t2_reason;
    }
    emit(out);
  } else {
    std::cout << "normal form: " << normal_form_line(nf) << "\n";
    std::cout << "nielsen_upper: " << upper.str() << "\n";
    if (t2) {
      std::cout << "theorem2: lower=" << t2->lower.str()
                << " upper=" << t2->upper.str()
                << " (refined_sum=" << t2->refined_sum.str()
                << ", t_distinct=" << t2->t_distinct.str() << ")\n";
    } else {
      std::cout << "theorem2: unavailable (" << t2_reason << ")\n";
    }
  }
  return 0;
}

int run_burau(int n, const std::string& format, const std::string& braid_arg) {
  require_n(n);
  const BraidWord b = input_braid(braid_arg, n);
  const LaurentMatrix m = reduced_burau(b);
  const LaurentPoly tr = m.trace();
  if (format == "json") {
    ordered_json out;
    out["n"] = n;
    out["dim"] = m.dim;
    out["matrix"] = laurent_matrix_to_json(m);
    out["trace"] = laurent_to_json(tr);
    emit(out);
  } else {
    std::cout << "reduced Burau matrix, " << m.dim << " x " << m.dim << ":\n";
    for (std::size_t i = 0; i < m.dim; ++i) {
      std::cout << "  [ ";
      for (std::size_t j = 0; j < m.dim; ++j) {
        if (j) std::cout << ", ";
        std::cout << m.at(i, j).str();
      }
      std::cout << " ]\n";
    }
    std::cout << "trace: " << tr.str() << "\n";
  }
  return 0;
}

int run_classify(int n, const std::string& format,
                 const std::string& braid_arg) {
  require_n(n);
  const BraidWord b = input_braid(braid_arg, n);
  const NormalForm nf = normalize(b);

  bool rotation_ok = true;
  RotationData rd;
  std::string rot_error;
  try {
    rd = rotation_data(nf);
  } catch (const UsageError& e) {
    rotation_ok = false;
    rot_error = e.what();
  }
  const PseudoAnosovCertificate cert = pseudo_anosov_certificate(nf.I, nf.n);
  const CyclicityReport cyc = cyclicity_report(b);

  if (format == "json") {
    ordered_json out;
    out["normal_form"] = normal_form_to_json(nf);
    if (rotation_ok) {
      out["rotation"] = ordered_json{
          {"m", rd.m},
          {"nu", rd.nu},
          {"rotation_number",
           std::to_string(rd.rot_num) + "/" + std::to_string(rd.rot_den)}};
    } else {
      out["rotation"] = ordered_json{{"error", rot_error}};
    }
    ordered_json jcert;
    jcert["certified"] = cert.certified;
    jcert["reasons"] = cert.reasons;
    if (cert.certified) jcert["statement"] = cert.statement;
    out["pseudo_anosov"] = jcert;
    out["cyclicity"] =
        ordered_json{{"permutation", cyc.permutation},
                     {"is_n_cycle", cyc.is_n_cycle},
                     {"n_prime", cyc.n_prime},
                     {"exponent_sum", cyc.exponent_sum},
                     {"divisible_by_n_minus_1", cyc.divisible_by_n_minus_1},
                     {"irreducible_flag", cyc.irreducible_flag},
                     {"pseudo_anosov_flag", cyc.pseudo_anosov_flag},
                     {"notes", cyc.notes}};
    emit(out);
  } else {
    std::cout << "normal form: " << normal_form_line(nf) << "\n";
    if (rotation_ok) {
      std::cout << "rotation: m=" << rd.m << " nu=" << rd.nu
                << " rotation_number=" << rd.rot_num << "/" << rd.rot_den
                << "\n";
    } else {
      std::cout << "rotation: unavailable (" << rot_error << ")\n";
    }
    std::cout << "pseudo_anosov certified: " << (cert.certified ? "yes" : "no")
              << "\n";
    for (const auto& r : cert.reasons)
      std::cout << "  reason: " << r << "\n";
    if (cert.certified) std::cout << "  statement: " << cert.statement << "\n";
    std::cout << "cyclicity: n_cycle=" << (cyc.is_n_cycle ? "yes" : "no")
              << " n_prime=" << (cyc.n_prime ? "yes" : "no")
              << " exponent_sum=" << cyc.exponent_sum
              << " divisible_by_n_minus_1="
              << (cyc.divisible_by_n_minus_1 ? "yes" : "no")
              << " irreducible_flag=" << (cyc.irreducible_flag ? "yes" : "no")
              << " pseudo_anosov_flag="
              << (cyc.pseudo_anosov_flag ? "yes" : "no") << "\n";
    for (const auto& note : cyc.notes)
      std::cout << "  note: " << note << "\n";
  }
  return rotation_ok ? 0 : 2;
}

int run_partitions(int d, int n, const std::string& format) {
  require_n(n);
  if (d < 1) throw UsageError("--d must be at least 1");
  if (d > 16)
    throw UsageError("--d larger than 16 is not supported by the listing");
  const auto full = enumerate_partitions(d, n);
  const auto refined = enumerate_partitions_prime(d, n);
  if (format == "json") {
    ordered_json out;
    out["d"] = d;
    out["n"] = n;
    out["count"] = full.size();
    ordered_json jfull = ordered_json::array();
    for (const auto& p : full) jfull.push_back(partition_str(p));
    out["partitions"] = jfull;
    out["refined_count"] = refined.size();
    ordered_json jref = ordered_json::array();
    for (const auto& p : refined) jref.push_back(partition_str(p));
    out["refined"] = jref;
    emit(out);
  } else {
    std::cout << "partitions of Z_" << d << " into blocks of length <= "
              << (n - 1) << ": count " << full.size() << "\n";
    for (const auto& p : full) std::cout << "  " << partition_str(p) << "\n";
    std::cout << "refined partitions (no block of length 1 cyclically "
              << "followed by one of length " << (n - 2)
              << "): count " << refined.size() << "\n";
    for (const auto& p : refined)
      std::cout << "  " << partition_str(p) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "braidlef: symbolic fixed-point data for braid-induced homeomorphisms "
      "of the punctured disk"};
  app.require_subcommand(1);

  const std::string braid_help =
      "braid word: whitespace-separated signed generator indices (\"1 -2\") "
      "or sigma tokens (\"s1 s2^-1\"); \"-\" reads stdin";
  const std::vector<std::string> formats{"text", "json"};

  int norm_n = 3;
  std::string norm_format = "text";
  std::string norm_braid;
  auto* norm = app.add_subcommand(
      "normalize", "Conjugacy normal form theta^mu beta(I) with conjugator");
  norm->add_option("--n", norm_n, "strand count (>= 3)")->required();
  norm->add_option("--format", norm_format, "output format")
      ->check(CLI::IsMember(formats));
  norm->add_option("braid", norm_braid, braid_help)->required();

  int lef_n = 3;
  std::string lef_format = "text";
  std::string lef_route = "both";
  int lef_merge = 0;
  std::string lef_braid;
  auto* lef = app.add_subcommand(
      "lefschetz",
      "Generalized Lefschetz number representative and its abelianization");
  lef->add_option("--n", lef_n, "strand count (>= 3)")->required();
  lef->add_option("--format", lef_format, "output format")
      ->check(CLI::IsMember(formats));
  lef->add_option("--route", lef_route,
                  "computation route: partition formula, Fox trace, or both")
      ->check(CLI::IsMember(std::vector<std::string>{"theorem1", "foxtrace",
                                                     "both"}));
  lef->add_option("--merge-bound", lef_merge,
                  "twisted-conjugacy search bound for merging terms (0-4)");
  lef->add_option("braid", lef_braid, braid_help)->required();

  int nie_n = 3;
  std::string nie_format = "text";
  std::string nie_braid;
  auto* nie = app.add_subcommand(
      "nielsen", "Nielsen number bounds from the exponent sequence");
  nie->add_option("--n", nie_n, "strand count (>= 3)")->required();
  nie->add_option("--format", nie_format, "output format")
      ->check(CLI::IsMember(formats));
  nie->add_option("braid", nie_braid, braid_help)->required();

  int bur_n = 3;
  std::string bur_format = "text";
  std::string bur_braid;
  auto* bur = app.add_subcommand(
      "burau", "Reduced Burau matrix at the abelianized level");
  bur->add_option("--n", bur_n, "strand count (>= 3)")->required();
  bur->add_option("--format", bur_format, "output format")
      ->check(CLI::IsMember(formats));
  bur->add_option("braid", bur_braid, braid_help)->required();

  int cls_n = 3;
  std::string cls_format = "text";
  std::string cls_braid;
  auto* cls = app.add_subcommand(
      "classify",
      "Rotation data, pseudo-Anosov certificate, and cyclicity report");
  cls->add_option("--n", cls_n, "strand count (>= 3)")->required();
  cls->add_option("--format", cls_format, "output format")
      ->check(CLI::IsMember(formats));
  cls->add_option("braid", cls_braid, braid_help)->required();

  int par_d = 1;
  int par_n = 3;
  std::string par_format = "text";
  auto* par = app.add_subcommand(
      "partitions", "Cyclic block partitions of Z_d and the refined subset");
  par->add_option("--d", par_d, "number of points on the cycle")->required();
  par->add_option("--n", par_n, "strand count (block length cap n-1)")
      ->required();
  par->add_option("--format", par_format, "output format")
      ->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (norm->parsed()) return run_normalize(norm_n, norm_format, norm_braid);
    if (lef->parsed())
      return run_lefschetz(lef_n, lef_format, lef_route, lef_merge, lef_braid);
    if (nie->parsed()) return run_nielsen(nie_n, nie_format, nie_braid);
    if (bur->parsed()) return run_burau(bur_n, bur_format, bur_braid);
    if (cls->parsed()) return run_classify(cls_n, cls_format, cls_braid);
    if (par->parsed()) return run_partitions(par_d, par_n, par_format);
  } catch (const braidlef::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const braidlef::UsageError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
