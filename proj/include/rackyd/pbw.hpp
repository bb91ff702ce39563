#pragma once

// Degree-truncated universal enveloping algebra of a finite-dimensional Lie
// algebra in its PBW basis. Products are straightened with [a,b] = ab - ba in
// the fixed input basis order and then projected onto monomials of degree <= d.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rackyd/algebra.hpp"

namespace rackyd {

/// A product or coaction needed a PBW monomial above the representable degree.
struct DegreeOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Monomial = std::vector<int>;  // nondecreasing generator indices

template <class S>
struct CoproductTerm {
  Index left;
  Index right;
  S coeff;
};

template <class S>
class TruncatedPBW {
public:
  TruncatedPBW(LeibnizAlgebra<S> lie, int degree) : lie_(std::move(lie)), degree_(degree) {
    if (degree_ < 0) throw std::invalid_argument("truncation degree must be nonnegative");
    if (!check_lie(lie_).ok()) throw ValidationError("enveloping algebra requires a Lie algebra");
    enumerate();
    build_tables();
  }

  const LeibnizAlgebra<S>& lie() const { return lie_; }
  int degree() const { return degree_; }
  Index dim() const { return static_cast<Index>(monomials_.size()); }
  Index unit() const { return 0; }
  const Monomial& monomial(Index b) const { return monomials_[static_cast<std::size_t>(b)]; }
  int monomial_degree(Index b) const { return static_cast<int>(monomial(b).size()); }

  /// Basis index of the degree-one monomial e_i; requires degree >= 1.
  Index generator(Index i) const { return index_of({static_cast<int>(i)}); }

  Index index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw DegreeOverflow("monomial outside the truncated basis");
    return it->second;
  }

  std::string label(Index b) const {
    if (monomial(b).empty()) return "1";
    std::string out;
    for (int g : monomial(b)) {
      if (!out.empty()) out += "*";
      out += lie_.basis()[static_cast<std::size_t>(g)];
    }
    return out;
  }

  Vector<S> basis_vector(Index b) const { return unit_vector<S>(dim(), b); }

  /// Truncated product of basis monomials.
  const Vector<S>& multiply_basis(Index a, Index b) const { return products_[pair(a, b)]; }
  /// Whether the untruncated product of two basis monomials has a nonzero
  /// component above the truncation degree.
  bool overflows(Index a, Index b) const { return overflow_[pair(a, b)]; }

  Vector<S> multiply(const Vector<S>& u, const Vector<S>& v) const { return multiply_impl(u, v, false); }

  /// Product that throws DegreeOverflow instead of truncating.
  Vector<S> multiply_exact(const Vector<S>& u, const Vector<S>& v) const { return multiply_impl(u, v, true); }

  /// Delta on a basis monomial: product of (x (x) 1 + 1 (x) x) over its letters.
  const std::vector<CoproductTerm<S>>& coproduct_basis(Index b) const { return coproducts_[static_cast<std::size_t>(b)]; }

  S counit_basis(Index b) const { return monomial(b).empty() ? S(1) : S(0); }

  /// S(x1...xk) = (-1)^k xk...x1, straightened.
  const Vector<S>& antipode_basis(Index b) const { return antipodes_[static_cast<std::size_t>(b)]; }

  /// Straightened normal form of an arbitrary word, truncated; `overflow` is
  /// set when a nonzero component above the degree was dropped.
  Vector<S> normal_form(const std::vector<int>& word, bool* overflow = nullptr) const {
    std::map<Monomial, S> terms;
    straighten(word, S(1), terms);
    Vector<S> out = Vector<S>::Zero(dim());
    for (const auto& [m, c] : terms) {
      if (is_zero(c)) continue;
      if (static_cast<int>(m.size()) > degree_) {
        if (overflow) *overflow = true;
        continue;
      }
      out(index_.at(m)) += c;
    }
    return out;
  }

private:
  std::size_t pair(Index a, Index b) const { return static_cast<std::size_t>(a + dim() * b); }

  void enumerate() {
    const int n = static_cast<int>(lie_.dim());
    for (int d = 0; d <= degree_; ++d) {
      Monomial m(static_cast<std::size_t>(d), 0);
      if (d > 0 && n == 0) break;
      while (true) {
        index_[m] = static_cast<Index>(monomials_.size());
        monomials_.push_back(m);
        // next nondecreasing sequence in lexicographic order
        int pos = d - 1;
        while (pos >= 0 && m[static_cast<std::size_t>(pos)] == n - 1) --pos;
        if (pos < 0) break;
        const int v = m[static_cast<std::size_t>(pos)] + 1;
        for (int k = pos; k < d; ++k) m[static_cast<std::size_t>(k)] = v;
      }
    }
  }

  void straighten(const std::vector<int>& word, const S& coeff, std::map<Monomial, S>& out) const {
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] <= word[i + 1]) continue;
      std::vector<int> swapped = word;
      std::swap(swapped[i], swapped[i + 1]);
      straighten(swapped, coeff, out);
      const auto br = lie_.bracket(word[i], word[i + 1]);
      for (Index k = 0; k < lie_.dim(); ++k) {
        if (is_zero(br(k))) continue;
        std::vector<int> shorter(word.begin(), word.begin() + static_cast<long>(i));
        shorter.push_back(static_cast<int>(k));
        shorter.insert(shorter.end(), word.begin() + static_cast<long>(i) + 2, word.end());
        straighten(shorter, coeff * br(k), out);
      }
      return;
    }
    auto [it, inserted] = out.try_emplace(word, coeff);
    if (!inserted) it->second += coeff;
  }

  void build_tables() {
    const Index n = dim();
    products_.resize(static_cast<std::size_t>(n * n));
    overflow_.assign(static_cast<std::size_t>(n * n), false);
    for (Index b = 0; b < n; ++b)
      for (Index a = 0; a < n; ++a) {
        std::vector<int> word = monomial(a);
        word.insert(word.end(), monomial(b).begin(), monomial(b).end());
        bool over = false;
        products_[pair(a, b)] = normal_form(word, &over);
        overflow_[pair(a, b)] = over;
      }
    for (Index b = 0; b < n; ++b) {
      const Monomial& m = monomial(b);
      std::map<std::pair<Monomial, Monomial>, S> terms;
      const std::size_t k = m.size();
      for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
        Monomial left, right;
        for (std::size_t i = 0; i < k; ++i) ((mask >> i) & 1 ? left : right).push_back(m[i]);
        auto [it, inserted] = terms.try_emplace({left, right}, S(1));
        if (!inserted) it->second += S(1);
      }
      std::vector<CoproductTerm<S>> list;
      for (const auto& [lr, c] : terms) list.push_back({index_.at(lr.first), index_.at(lr.second), c});
      coproducts_.push_back(std::move(list));

      std::vector<int> reversed(m.rbegin(), m.rend());
      Vector<S> s = normal_form(reversed);
      if (k % 2 == 1) s = -s;
      antipodes_.push_back(std::move(s));
    }
  }

  Vector<S> multiply_impl(const Vector<S>& u, const Vector<S>& v, bool exact) const {
    Vector<S> out = Vector<S>::Zero(dim());
    for (Index b = 0; b < dim(); ++b) {
      if (is_zero(v(b))) continue;
      for (Index a = 0; a < dim(); ++a) {
        if (is_zero(u(a))) continue;
        if (exact && overflows(a, b))
          throw DegreeOverflow("product " + label(a) + " * " + label(b) + " exceeds degree " + std::to_string(degree_));
        out += (u(a) * v(b)) * products_[pair(a, b)];
      }
    }
    return out;
  }

  LeibnizAlgebra<S> lie_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, Index> index_;
  std::vector<Vector<S>> products_;
  std::vector<bool> overflow_;
  std::vector<std::vector<CoproductTerm<S>>> coproducts_;
  std::vector<Vector<S>> antipodes_;
};

}  // namespace rackyd
