#include "braidlef/freeword.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace braidlef {

FreeWord::FreeWord(int n, Basis basis) : n_(n), basis_(basis) {
  if (n < 0) throw UsageError("free group rank must be nonnegative");
}

FreeWord FreeWord::identity(int n, Basis basis) { return FreeWord(n, basis); }

FreeWord FreeWord::generator(int n, Basis basis, int gen, long long exp) {
  FreeWord w(n, basis);
  w.append(gen, exp);
  return w;
}

long long FreeWord::letter_length() const {
  long long total = 0;
  for (const auto& s : syl_) total += s.exp < 0 ? -s.exp : s.exp;
  return total;
}

void FreeWord::append(int gen, long long exp) {
  if (exp == 0) return;
  if (gen < 1 || gen > n_)
    throw UsageError("generator index " + std::to_string(gen) +
                     " out of range for rank " + std::to_string(n_));
  if (!syl_.empty() && syl_.back().gen == gen) {
    syl_.back().exp += exp;
    if (syl_.back().exp == 0) syl_.pop_back();
    return;
  }
  syl_.push_back({gen, exp});
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  if (rhs.is_identity()) return *this;
  if (is_identity() && n_ == 0) {
    *this = rhs;
    return *this;
  }
  if (n_ != rhs.n_ || basis_ != rhs.basis_)
    throw UsageError("cannot concatenate words of different rank or basis");
  // Appending syllable by syllable keeps the result reduced: a cancellation
  // at the seam can cascade, and append() handles each step.
  for (const auto& s : rhs.syl_) append(s.gen, s.exp);
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord w(n_, basis_);
  w.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it)
    w.syl_.push_back({it->gen, -it->exp});
  return w;
}

FreeWord FreeWord::pow(long long k) const {
  if (k == 0 || is_identity()) return FreeWord(n_, basis_);
  if (syl_.size() == 1) {
    // Single-syllable fast path; avoids O(k) appends for g^(e*k).
    return generator(n_, basis_, syl_[0].gen, syl_[0].exp * k);
  }
  const FreeWord base = k > 0 ? *this : inverse();
  const long long reps = k > 0 ? k : -k;
  FreeWord w(n_, basis_);
  for (long long r = 0; r < reps; ++r) w *= base;
  return w;
}

long long FreeWord::exponent_sum() const {
  long long e = 0;
  for (const auto& s : syl_) e += basis_ == Basis::a ? s.exp * s.gen : s.exp;
  return e;
}

FreeWord FreeWord::to_basis(Basis target) const {
  if (target == basis_) return *this;
  FreeWord w(n_, target);
  for (const auto& s : syl_) {
    long long reps = s.exp < 0 ? -s.exp : s.exp;
    for (long long r = 0; r < reps; ++r) {
      if (target == Basis::a) {
        // xi_i = a_{i-1}^{-1} a_i, with the a_0 factor dropped.
        if (s.exp > 0) {
          if (s.gen > 1) w.append(s.gen - 1, -1);
          w.append(s.gen, 1);
        } else {
          w.append(s.gen, -1);
          if (s.gen > 1) w.append(s.gen - 1, 1);
        }
      } else {
        // a_i = xi_1 ... xi_i.
        if (s.exp > 0) {
          for (int g = 1; g <= s.gen; ++g) w.append(g, 1);
        } else {
          for (int g = s.gen; g >= 1; --g) w.append(g, -1);
        }
      }
    }
  }
  return w;
}

bool operator<(const FreeWord& a, const FreeWord& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  if (a.basis_ != b.basis_) return a.basis_ < b.basis_;
  if (a.syl_.size() != b.syl_.size()) return a.syl_.size() < b.syl_.size();
  for (std::size_t i = 0; i < a.syl_.size(); ++i) {
    if (a.syl_[i].gen != b.syl_[i].gen) return a.syl_[i].gen < b.syl_[i].gen;
    if (a.syl_[i].exp != b.syl_[i].exp) return a.syl_[i].exp < b.syl_[i].exp;
  }
  return false;
}

bool operator==(const FreeWord& a, const FreeWord& b) {
  return a.n_ == b.n_ && a.basis_ == b.basis_ && a.syl_ == b.syl_;
}

std::string FreeWord::str() const {
  if (syl_.empty()) return "e";
  std::ostringstream out;
  const char prefix = basis_ == Basis::a ? 'a' : 'x';
  bool first = true;
  for (const auto& s : syl_) {
    if (!first) out << ' ';
    first = false;
    out << prefix << s.gen;
    if (s.exp != 1) out << '^' << s.exp;
  }
  return out.str();
}

FreeWord FreeWord::parse(const std::string& text, int n, Basis basis) {
  FreeWord w(n, basis);
  std::istringstream in(text);
  std::string tok;
  bool any = false;
  while (in >> tok) {
    any = true;
    if (tok == "e") continue;
    const char prefix = basis == Basis::a ? 'a' : 'x';
    if (tok[0] != prefix)
      throw ParseError("word token '" + tok + "' does not match basis '" +
                       std::string(1, prefix) + "'");
    std::size_t pos = 1;
    if (pos >= tok.size() || !std::isdigit(static_cast<unsigned char>(tok[pos])))
      throw ParseError("malformed word token '" + tok + "'");
    long long gen = 0;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos])))
      gen = gen * 10 + (tok[pos++] - '0');
    long long exp = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^') throw ParseError("malformed word token '" + tok + "'");
      const std::string tail = tok.substr(pos + 1);
      char* end = nullptr;
      exp = std::strtoll(tail.c_str(), &end, 10);
      if (tail.empty() || end == nullptr || *end != '\0')
        throw ParseError("malformed exponent in token '" + tok + "'");
    }
    if (gen < 1 || gen > n)
      throw ParseError("generator index in '" + tok + "' out of range for rank " +
                       std::to_string(n));
    w.append(static_cast<int>(gen), exp);
  }
  if (!any) throw ParseError("empty word text; use 'e' for the identity");
  return w;
}

}  // namespace braidlef
