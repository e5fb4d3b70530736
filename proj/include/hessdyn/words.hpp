#pragma once
/// \file words.hpp
/// The free semigroup on the letters {h, c}, its reduced {h, i} presentation
/// (i an involution, c = h i), the evaluation homomorphism onto exact maps,
/// normal forms, the leading-coefficient law at infinity, the exact
/// ends-with-h detector, and the exhaustive collision scan.
///
/// Convention: letters act right to left — psi(uv) = psi(u) after psi(v),
/// so the LAST letter of a word is the first map applied to a point.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hessdyn/canonical.hpp"
#include "hessdyn/snumber.hpp"

namespace hessdyn {

struct Word {
  std::string letters;  ///< over {h, c}, nonempty

  explicit Word(std::string s) : letters(std::move(s)) {
    if (letters.empty()) throw std::invalid_argument("empty word");
    for (char ch : letters)
      if (ch != 'h' && ch != 'c') throw std::invalid_argument("letters must be h or c");
  }

  int length() const { return static_cast<int>(letters.size()); }
  int count_c() const {
    int n = 0;
    for (char ch : letters) n += (ch == 'c');
    return n;
  }
  int count_h() const { return length() - count_c(); }
};

struct WordHI {
  std::string letters;  ///< over {h, i}, reduced (no "ii" substring)

  explicit WordHI(std::string s) : letters(std::move(s)) {
    if (letters.empty()) throw std::invalid_argument("empty word");
    for (size_t k = 0; k < letters.size(); ++k) {
      if (letters[k] != 'h' && letters[k] != 'i')
        throw std::invalid_argument("letters must be h or i");
      if (k > 0 && letters[k] == 'i' && letters[k - 1] == 'i')
        throw std::invalid_argument("word is not reduced");
    }
  }
};

/// Exponents (a0, ..., a_{e(c)}) of the normal form h^{a0} c h^{a1} ... c h^{a_ec}.
struct NormalForm {
  std::vector<long> exponents;

  int count_c() const { return static_cast<int>(exponents.size()) - 1; }
  long count_h() const {
    long n = 0;
    for (long a : exponents) n += a;
    return n;
  }
};

inline NormalForm normal_form(const Word& w) {
  NormalForm nf;
  long run = 0;
  for (char ch : w.letters) {
    if (ch == 'h') {
      ++run;
    } else {
      nf.exponents.push_back(run);
      run = 0;
    }
  }
  nf.exponents.push_back(run);
  return nf;
}

inline Word word_from_normal_form(const NormalForm& nf) {
  std::string s;
  for (size_t i = 0; i < nf.exponents.size(); ++i) {
    if (i) s.push_back('c');
    s.append(static_cast<size_t>(nf.exponents[i]), 'h');
  }
  return Word(std::move(s));
}

/// Evaluation homomorphism: the exact integer-pair map of degree 3^length.
inline ZMap psi(const Word& w) {
  const ZMap h = canonical_hessian();
  const ZMap c = canonical_cayleyan();
  ZMap acc = (w.letters.back() == 'h') ? h : c;
  for (size_t k = w.letters.size() - 1; k-- > 0;)
    acc = compose(w.letters[k] == 'h' ? h : c, acc);
  return acc;
}

/// Predicted behaviour of psi(w) at infinity: vanishing order 2^{e(c)} and
/// absolute leading coefficient (3/2)^(2^{e(c)} - 1) * 3^(sum_i 2^i a_i).
/// The formula is total: e(c) = 0 gives order 1 and magnitude 3^{e(h)}.
struct LeadingPrediction {
  long order = 1;
  BigRat magnitude;
};

inline LeadingPrediction predicted_leading(const Word& w) {
  NormalForm nf = normal_form(w);
  const int ec = nf.count_c();
  if (ec > 40) throw std::invalid_argument("word has too many c letters");
  LeadingPrediction p;
  p.order = 1L << ec;
  unsigned long wsum = 0;
  for (size_t i = 0; i < nf.exponents.size(); ++i)
    wsum += static_cast<unsigned long>(nf.exponents[i]) << i;
  p.magnitude = pow_ui(make_rat(3, 2), static_cast<unsigned long>(p.order - 1)) *
                BigRat(pow_ui(BigInt(3), wsum));
  return p;
}

/// Substitute c = h i and reduce i i -> (empty).
inline WordHI to_hi(const Word& w) {
  std::string s;
  for (char ch : w.letters) {
    auto push = [&s](char x) {
      if (x == 'i' && !s.empty() && s.back() == 'i')
        s.pop_back();
      else
        s.push_back(x);
    };
    if (ch == 'h') {
      push('h');
    } else {
      push('h');
      push('i');
    }
  }
  return WordHI(std::move(s));
}

/// Inverse of to_hi on words that do not start with i: greedy "h i" -> c.
inline Word from_hi(const WordHI& w) {
  if (w.letters.front() == 'i')
    throw std::invalid_argument("word starts with i; not in the image of to_hi");
  std::string s;
  for (size_t k = 0; k < w.letters.size(); ++k) {
    if (w.letters[k] == 'h' && k + 1 < w.letters.size() && w.letters[k + 1] == 'i') {
      s.push_back('c');
      ++k;
    } else if (w.letters[k] == 'h') {
      s.push_back('h');
    } else {
      throw std::invalid_argument("stray i; not in the image of to_hi");
    }
  }
  return Word(std::move(s));
}

/// Exact last-letter detector: evaluate the word at -2^(-1/3) letter by letter
/// in S-number arithmetic (rightmost letter first).  The trajectory lands in
/// {0, infinity} exactly when the rightmost letter is h.
inline bool ends_with_h(const WordHI& w) {
  SNumber s = SNumber::minus_cbrt_inv2();
  for (size_t k = w.letters.size(); k-- > 0;)
    s = (w.letters[k] == 'h') ? snum_hessian(s) : snum_iota(s);
  return s.is_zero_v() || s.is_infinity();
}

/// All words of the given length in lexicographic order (c before h).
inline std::vector<Word> enumerate_words(int length) {
  std::vector<Word> out;
  out.reserve(1ull << length);
  std::string s(static_cast<size_t>(length), 'c');
  for (std::uint64_t mask = 0; mask < (1ull << length); ++mask) {
    for (int k = 0; k < length; ++k)
      s[static_cast<size_t>(k)] = (mask >> (length - 1 - k)) & 1 ? 'h' : 'c';
    out.push_back(Word(s));
  }
  return out;
}

struct CollisionReport {
  long words_scanned = 0;
  std::vector<std::pair<std::string, std::string>> collisions;  ///< expected empty
};

/// Evaluate psi on every word of length 1..max_len and group the normalized
/// pairs: hash buckets first, exact comparison inside buckets.  Keeps one
/// level (fixed length) of maps in memory at a time; maps of distinct degree
/// can never collide.
inline CollisionReport collision_scan(int max_len) {
  if (max_len < 1 || max_len > 8) throw std::invalid_argument("scan bound out of range");
  CollisionReport rep;
  const ZMap h = canonical_hessian();
  const ZMap c = canonical_cayleyan();
  std::vector<std::pair<std::string, ZMap>> level;
  level.emplace_back("h", h);
  level.emplace_back("c", c);
  for (int len = 1; len <= max_len; ++len) {
    if (len > 1) {
      std::vector<std::pair<std::string, ZMap>> next;
      next.reserve(level.size() * 2);
      for (const auto& [word, m] : level) {
        next.emplace_back("h" + word, compose(h, m));
        next.emplace_back("c" + word, compose(c, m));
      }
      level = std::move(next);
    }
    rep.words_scanned += static_cast<long>(level.size());
    std::map<std::uint64_t, std::vector<size_t>> buckets;
    for (size_t i = 0; i < level.size(); ++i)
      buckets[map_hash(level[i].second)].push_back(i);
    for (const auto& [hashv, idx] : buckets) {
      (void)hashv;
      for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a + 1; b < idx.size(); ++b)
          if (level[idx[a]].second == level[idx[b]].second)
            rep.collisions.emplace_back(level[idx[a]].first, level[idx[b]].first);
    }
  }
  return rep;
}

}  // namespace hessdyn
