#include "braidlef/dynamics.hpp"

#include <numeric>
#include <sstream>

#include "braidlef/errors.hpp"

namespace braidlef {

namespace {

void check_rotation_hypothesis(const std::vector<long long>& I, int n,
                               const char* where) {
  if (n < 3) throw UsageError(std::string(where) + ": n must be at least 3");
  if (I.empty())
    throw UsageError(std::string(where) +
                     ": empty exponent sequence (pure full-twist power)");
  if (n >= 4) {
    for (long long i : I)
      if (i < 2)
        throw UsageError(std::string(where) +
                         ": for n >= 4 every exponent must be at least 2");
  } else {
    for (long long i : I)
      if (i < 3)
        throw UsageError(std::string(where) +
                         ": for n = 3 every exponent must be at least 3");
  }
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace

RotationData rotation_data(const NormalForm& nf) {
  check_rotation_hypothesis(nf.I, nf.n, "rotation_data");
  const long long d = static_cast<long long>(nf.I.size());
  const long long lcm = std::lcm(d, static_cast<long long>(nf.n - 2));
  RotationData out;
  out.m = lcm / d;
  out.nu = out.m * nf.mu + lcm / (nf.n - 2);
  const long long residue = ((out.nu % out.m) + out.m) % out.m;
  const long long g = std::gcd(residue, out.m);
  out.rot_num = g == 0 ? 0 : residue / g;
  out.rot_den = g == 0 ? 1 : out.m / g;
  return out;
}

PseudoAnosovCertificate pseudo_anosov_certificate(
    const std::vector<long long>& I, int n) {
  PseudoAnosovCertificate out;
  bool ok = true;

  if (n >= 5) {
    out.reasons.push_back("n >= 5");
  } else {
    out.reasons.push_back("n < 5");
    ok = false;
  }

  if (I.empty()) {
    out.reasons.push_back("empty exponent sequence");
    ok = false;
  } else {
    bool all_ge2 = true;
    for (long long i : I) all_ge2 = all_ge2 && i >= 2;
    if (all_ge2) {
      out.reasons.push_back("all exponents >= 2");
    } else {
      out.reasons.push_back("some exponent < 2");
      ok = false;
    }

    bool uniform = true;
    for (long long i : I) uniform = uniform && (i % 2 == I.front() % 2);
    if (uniform) {
      out.reasons.push_back("uniform parity");
    } else {
      out.reasons.push_back("mixed parity");
      ok = false;
    }

    const long long g =
        std::gcd(static_cast<long long>(n - 2),
                 static_cast<long long>(I.size()));
    std::ostringstream note;
    if (g == 1) {
      note << "gcd(n-2, d) = 1";
      out.reasons.push_back(note.str());
    } else {
      note << "gcd(n-2, d) = " << g << " > 1";
      out.reasons.push_back(note.str());
      ok = false;
    }
  }

  out.certified = ok;
  if (ok)
    out.statement = "pseudo-Anosov, foliations with no interior singularities";
  return out;
}

CyclicityReport cyclicity_report(const BraidWord& b) {
  CyclicityReport out;
  out.permutation = induced_permutation(b);
  const int n = b.n;

  // Walk the orbit of 1; the permutation is an n-cycle iff the orbit closes
  // only after n steps.
  int pos = 1;
  int steps = 0;
  do {
    pos = out.permutation[static_cast<std::size_t>(pos - 1)];
    ++steps;
  } while (pos != 1 && steps <= n);
  out.is_n_cycle = (steps == n);

  out.n_prime = is_prime(n);
  for (int letter : b.letters) out.exponent_sum += letter > 0 ? 1 : -1;
  out.divisible_by_n_minus_1 = (out.exponent_sum % (n - 1) == 0);

  out.irreducible_flag = out.n_prime && out.is_n_cycle;
  out.pseudo_anosov_flag =
      out.irreducible_flag && !out.divisible_by_n_minus_1;

  out.notes.push_back(out.is_n_cycle
                          ? "induced permutation is an n-cycle"
                          : "induced permutation is not an n-cycle");
  out.notes.push_back(out.n_prime ? "n is prime" : "n is not prime");
  {
    std::ostringstream note;
    note << "exponent sum " << out.exponent_sum
         << (out.divisible_by_n_minus_1 ? " is divisible by "
                                        : " is not divisible by ")
         << "n-1 = " << (n - 1);
    out.notes.push_back(note.str());
  }
  if (out.irreducible_flag)
    out.notes.push_back("irreducible (prime n, cyclic permutation)");
  if (out.pseudo_anosov_flag)
    out.notes.push_back(
        "pseudo-Anosov (cyclic, prime n, exponent sum not divisible by n-1)");
  return out;
}

}  // namespace braidlef
