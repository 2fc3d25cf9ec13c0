#ifndef KOSZUL_WORDS_HPP
#define KOSZUL_WORDS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

// A monomial of the free algebra T(V): a sequence of generator indices.
// Degree equals length; the empty word is the unit.
using Word = std::vector<std::uint8_t>;

// Per-degree basis size cap for d^n.
inline constexpr std::uint64_t kWordSizeCap = std::uint64_t(1) << 22;

// d^n, guarded by the size cap.
inline std::uint64_t word_count(std::uint32_t d, std::uint32_t n,
                                std::uint64_t cap = kWordSizeCap) {
  std::uint64_t c = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    c *= d;
    if (c > cap) throw SizeCapExceeded(d, n, cap);
  }
  return c;
}

// Position of w among the degree-|w| words of d letters in lexicographic
// order: the base-d numeral of the letter sequence.
inline std::uint32_t tensor_index(const Word& w, std::uint32_t d) {
  std::uint64_t idx = 0;
  for (std::uint8_t letter : w) {
    if (letter >= d) throw InvariantViolation("word letter out of range");
    idx = idx * d + letter;
  }
  return static_cast<std::uint32_t>(idx);
}

inline Word word_from_index(std::uint64_t idx, std::uint32_t d, std::uint32_t n) {
  Word w(n);
  for (std::uint32_t i = n; i-- > 0;) {
    w[i] = static_cast<std::uint8_t>(idx % d);
    idx /= d;
  }
  return w;
}

// All d^n words of degree n in lexicographic order. The position of a word in
// this list is its tensor index.
inline std::vector<Word> enumerate_words(std::uint32_t d, std::uint32_t n,
                                         std::uint64_t cap = kWordSizeCap) {
  if (d < 1) throw InputError("enumerate_words requires d >= 1");
  std::uint64_t count = word_count(d, n, cap);
  std::vector<Word> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx)
    out.push_back(word_from_index(idx, d, n));
  return out;
}

inline Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

// A homogeneous element of T(V) with integer coefficients. Zero coefficients
// are never stored. Presentation relations live here; field coefficients only
// appear once relations are embedded into matrices.
struct NCPoly {
  std::uint32_t degree = 0;
  std::map<Word, long long> terms;

  static NCPoly monomial(Word w, long long c = 1) {
    NCPoly p;
    p.degree = static_cast<std::uint32_t>(w.size());
    if (c != 0) p.terms[std::move(w)] = c;
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(Word w, long long c) {
    if (w.size() != degree && !terms.empty())
      throw InvariantViolation("NCPoly must stay homogeneous");
    degree = static_cast<std::uint32_t>(w.size());
    auto [it, fresh] = terms.emplace(std::move(w), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    } else if (c == 0) {
      terms.erase(it);
    }
  }

  bool operator==(const NCPoly& o) const {
    return (is_zero() && o.is_zero()) || (degree == o.degree && terms == o.terms);
  }
};

// Bilinear extension of word concatenation.
inline NCPoly concat(const NCPoly& p, const NCPoly& q) {
  NCPoly out;
  out.degree = p.degree + q.degree;
  for (const auto& [u, a] : p.terms)
    for (const auto& [v, b] : q.terms) out.add_term(concat(u, v), a * b);
  return out;
}

// Integer sparse vector in the word basis of V^{\otimes n}.
using IntVec = std::vector<std::pair<std::uint32_t, long long>>;

// Stream the generating vectors u (x) q (x) v of the degree-n component of
// the two-sided ideal, for one relation q and one fixed position `left`:
// u runs over all words of degree `left`, v over degree n-left-2.
inline void embed_relation(const NCPoly& q, std::uint32_t left, std::uint32_t n,
                           std::uint32_t d,
                           const std::function<void(const IntVec&)>& emit,
                           std::uint64_t cap = kWordSizeCap) {
  if (q.degree != 2) throw InvariantViolation("embed_relation expects degree 2");
  if (left + 2 > n) throw InvariantViolation("embed_relation: left + 2 > n");
  word_count(d, n, cap);
  const std::uint32_t right = n - left - 2;
  const std::uint64_t ucount = word_count(d, left, cap);
  const std::uint64_t vcount = word_count(d, right, cap);
  const std::uint64_t vshift = vcount;           // d^right
  const std::uint64_t qshift = vcount * d * d;   // d^(right+2)

  IntVec base;
  base.reserve(q.terms.size());
  for (const auto& [w, c] : q.terms)
    base.emplace_back(tensor_index(w, d), c);
  // indices within a fixed (u, v) differ only in the middle block, and the
  // map below is monotone in the middle index, so `base` stays sorted
  std::sort(base.begin(), base.end());

  IntVec row(base.size());
  for (std::uint64_t ui = 0; ui < ucount; ++ui)
    for (std::uint64_t vi = 0; vi < vcount; ++vi) {
      for (std::size_t t = 0; t < base.size(); ++t)
        row[t] = {static_cast<std::uint32_t>(ui * qshift + base[t].first * vshift + vi),
                  base[t].second};
      emit(row);
    }
}

}  // namespace koszul

#endif  // KOSZUL_WORDS_HPP
