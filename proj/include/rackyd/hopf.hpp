#pragma once

// Hopf algebras acting on Yetter-Drinfel'd modules: the group algebra kG and
// the first-order part of an enveloping algebra U(g). Elements are dense
// coefficient vectors over the descriptor's basis.

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rackyd/pbw.hpp"
#include "rackyd/rack.hpp"

namespace rackyd {

template <class S>
struct CoproductTerm3 {
  Index first;
  Index second;
  Index third;
  S coeff;
};

/// Linear combination of generator words that must act as zero on any module.
template <class S>
struct ModuleRelation {
  std::vector<std::pair<S, std::vector<Index>>> terms;  // (coefficient, word of generator positions)
};

struct HopfAxiomReport {
  bool coassociative = false;
  bool counital = false;
  bool coproduct_multiplicative = false;
  bool counit_antipode = false;  // eps o S = eps
  bool antipode_convolution = false;  // S(h1) h2 = eps(h) 1 = h1 S(h2)
  bool ok() const {
    return coassociative && counital && coproduct_multiplicative && counit_antipode && antipode_convolution;
  }
  std::vector<Witness> witnesses;
};

template <class S>
class HopfDescriptor {
public:
  enum class Kind { GroupAlgebra, FirstOrderEnveloping };

  static std::shared_ptr<const HopfDescriptor> group_algebra(FiniteGroup g) {
    return std::shared_ptr<const HopfDescriptor>(new HopfDescriptor(std::move(g)));
  }

  /// U(lie) truncated at `degree`; coactions over it may use degree < `degree`
  /// so that products with one generator stay representable.
  static std::shared_ptr<const HopfDescriptor> first_order_enveloping(LeibnizAlgebra<S> lie, int degree = 2) {
    if (degree < 1) throw std::invalid_argument("first-order enveloping descriptor needs degree >= 1");
    return std::shared_ptr<const HopfDescriptor>(new HopfDescriptor(TruncatedPBW<S>(std::move(lie), degree)));
  }

  Kind kind() const { return std::holds_alternative<FiniteGroup>(data_) ? Kind::GroupAlgebra : Kind::FirstOrderEnveloping; }
  const FiniteGroup* group() const { return std::get_if<FiniteGroup>(&data_); }
  const TruncatedPBW<S>* pbw() const { return std::get_if<TruncatedPBW<S>>(&data_); }

  Index dim() const { return group() ? group()->size() : pbw()->dim(); }
  Index unit() const { return group() ? group()->identity() : pbw()->unit(); }
  std::string label(Index b) const { return group() ? group()->label(static_cast<int>(b)) : pbw()->label(b); }
  Vector<S> basis(Index b) const { return unit_vector<S>(dim(), b); }
  Vector<S> one() const { return basis(unit()); }

  /// Basis indices of the algebra generators used for module tables.
  const std::vector<Index>& generators() const { return generators_; }
  /// Basis element b as a product of generators (positions into generators()).
  const std::vector<Index>& word(Index b) const { return words_[static_cast<std::size_t>(b)]; }
  const std::vector<ModuleRelation<S>>& relations() const { return relations_; }

  /// Degree of a basis element (0 for every group element).
  int degree(Index b) const { return group() ? 0 : pbw()->monomial_degree(b); }
  /// Largest degree allowed inside coaction tables; -1 means unbounded.
  int coaction_degree_bound() const { return group() ? -1 : pbw()->degree() - 1; }
  /// Largest degree of a nonzero component of h (0 for group algebras).
  int degree_of(const Vector<S>& h) const {
    int d = 0;
    for (Index b = 0; b < dim(); ++b)
      if (!is_zero(h(b))) d = std::max(d, degree(b));
    return d;
  }

  /// Exact product; throws DegreeOverflow when an enveloping product leaves the
  /// representable range.
  Vector<S> mul(const Vector<S>& u, const Vector<S>& v) const {
    if (const auto* p = pbw()) return p->multiply_exact(u, v);
    const FiniteGroup& g = *group();
    Vector<S> out = Vector<S>::Zero(dim());
    for (Index b = 0; b < dim(); ++b) {
      if (is_zero(v(b))) continue;
      for (Index a = 0; a < dim(); ++a)
        if (!is_zero(u(a))) out(g.mul(static_cast<int>(a), static_cast<int>(b))) += u(a) * v(b);
    }
    return out;
  }

  /// Product of two basis elements, with the same overflow rule as mul().
  Vector<S> mul_basis(Index a, Index b) const {
    if (const auto* p = pbw()) {
      if (p->overflows(a, b))
        throw DegreeOverflow("product " + p->label(a) + " * " + p->label(b) + " exceeds degree " +
                             std::to_string(p->degree()));
      return p->multiply_basis(a, b);
    }
    return basis(group()->mul(static_cast<int>(a), static_cast<int>(b)));
  }

  using Terms = std::vector<std::pair<Index, S>>;

  /// Nonzero components of the product of two basis elements; throws
  /// DegreeOverflow like mul_basis().
  const Terms& product_terms(Index a, Index b) const {
    const std::size_t k = static_cast<std::size_t>(a + dim() * b);
    if (product_overflow_[k]) mul_basis(a, b);
    return product_terms_[k];
  }

  /// Nonzero components of S(b).
  const Terms& antipode_terms(Index b) const { return antipode_terms_[static_cast<std::size_t>(b)]; }

  std::vector<CoproductTerm<S>> coproduct_basis(Index b) const {
    if (const auto* p = pbw()) return p->coproduct_basis(b);
    return {{b, b, S(1)}};
  }

  /// (Delta (x) id) Delta on a basis element.
  std::vector<CoproductTerm3<S>> coproduct2_basis(Index b) const {
    std::vector<CoproductTerm3<S>> out;
    for (const auto& t : coproduct_basis(b))
      for (const auto& u : coproduct_basis(t.left)) out.push_back({u.left, u.right, t.right, t.coeff * u.coeff});
    return out;
  }

  /// Delta(h) as a vector in H (x) H, flat index i + dim * j.
  Vector<S> coproduct(const Vector<S>& h) const {
    Vector<S> out = Vector<S>::Zero(dim() * dim());
    for (Index b = 0; b < dim(); ++b) {
      if (is_zero(h(b))) continue;
      for (const auto& t : coproduct_basis(b)) out(flat2(t.left, t.right, dim())) += h(b) * t.coeff;
    }
    return out;
  }

  S counit_basis(Index b) const { return group() ? S(1) : pbw()->counit_basis(b); }
  S counit(const Vector<S>& h) const {
    S out(0);
    for (Index b = 0; b < dim(); ++b)
      if (!is_zero(h(b))) out += h(b) * counit_basis(b);
    return out;
  }

  Vector<S> antipode_basis(Index b) const {
    if (const auto* p = pbw()) return p->antipode_basis(b);
    return basis(group()->inv(static_cast<int>(b)));
  }
  Vector<S> antipode(const Vector<S>& h) const {
    Vector<S> out = Vector<S>::Zero(dim());
    for (Index b = 0; b < dim(); ++b)
      if (!is_zero(h(b))) out += h(b) * antipode_basis(b);
    return out;
  }

  /// Bialgebra and antipode axioms on basis elements. For truncated enveloping
  /// algebras, only pairs whose product stays within the degree bound are used.
  HopfAxiomReport check_axioms(const CheckOptions& opts = {}) const {
    HopfAxiomReport r;
    const Index n = dim();
    WitnessLog coassoc(opts), counital(opts), mult(opts), eps_s(opts), conv(opts);
    for (Index b = 0; b < n; ++b) {
      // (Delta (x) id) Delta = (id (x) Delta) Delta
      Vector<S> lhs = Vector<S>::Zero(n * n * n), rhs = Vector<S>::Zero(n * n * n);
      for (const auto& t : coproduct2_basis(b)) lhs(flat3(t.first, t.second, t.third, n)) += t.coeff;
      for (const auto& t : coproduct_basis(b))
        for (const auto& u : coproduct_basis(t.right)) rhs(flat3(t.left, u.left, u.right, n)) += t.coeff * u.coeff;
      if (!exactly_equal(lhs, rhs)) coassoc.add("coassociativity", {long(b)});
      // (eps (x) id) Delta = id = (id (x) eps) Delta
      Vector<S> left = Vector<S>::Zero(n), right = Vector<S>::Zero(n);
      for (const auto& t : coproduct_basis(b)) {
        left(t.right) += t.coeff * counit_basis(t.left);
        right(t.left) += t.coeff * counit_basis(t.right);
      }
      if (!exactly_equal(left, basis(b)) || !exactly_equal(right, basis(b))) counital.add("counit", {long(b)});
      if (counit(antipode_basis(b)) != counit_basis(b)) eps_s.add("counit_antipode", {long(b)});
      Vector<S> s_id = Vector<S>::Zero(n), id_s = Vector<S>::Zero(n);
      for (const auto& t : coproduct_basis(b)) {
        s_id += t.coeff * mul_truncated(antipode_basis(t.left), basis(t.right));
        id_s += t.coeff * mul_truncated(basis(t.left), antipode_basis(t.right));
      }
      const Vector<S> expect = counit_basis(b) * one();
      if (!exactly_equal(s_id, expect) || !exactly_equal(id_s, expect)) conv.add("antipode_convolution", {long(b)});
    }
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        if (degree(a) + degree(b) > max_degree()) continue;
        // Delta(ab) = Delta(a) Delta(b)
        const Vector<S> lhs = coproduct(mul(basis(a), basis(b)));
        Vector<S> rhs = Vector<S>::Zero(n * n);
        for (const auto& t : coproduct_basis(a))
          for (const auto& u : coproduct_basis(b)) {
            const Vector<S> l = mul(basis(t.left), basis(u.left)), rr = mul(basis(t.right), basis(u.right));
            for (Index j = 0; j < n; ++j) {
              if (is_zero(rr(j))) continue;
              for (Index i = 0; i < n; ++i)
                if (!is_zero(l(i))) rhs(flat2(i, j, n)) += t.coeff * u.coeff * l(i) * rr(j);
            }
          }
        if (!exactly_equal(lhs, rhs)) mult.add("coproduct_multiplicative", {long(a), long(b)});
      }
    r.coassociative = !coassoc.failed();
    r.counital = !counital.failed();
    r.coproduct_multiplicative = !mult.failed();
    r.counit_antipode = !eps_s.failed();
    r.antipode_convolution = !conv.failed();
    for (WitnessLog* log : {&coassoc, &counital, &mult, &eps_s, &conv})
      for (auto& w : log->take())
        if (r.witnesses.size() < std::max<std::size_t>(1, opts.witness_limit)) r.witnesses.push_back(std::move(w));
    return r;
  }

  friend bool operator==(const HopfDescriptor& a, const HopfDescriptor& b) {
    if (a.kind() != b.kind()) return false;
    if (a.group()) return *a.group() == *b.group();
    return a.pbw()->lie() == b.pbw()->lie() && a.pbw()->degree() == b.pbw()->degree();
  }

private:
  explicit HopfDescriptor(FiniteGroup g) : data_(std::move(g)) {
    const FiniteGroup& grp = *group();
    for (int a = 0; a < grp.size(); ++a) {
      generators_.push_back(a);
      words_.push_back({Index(a)});
    }
    for (int a = 0; a < grp.size(); ++a)
      for (int b = 0; b < grp.size(); ++b)
        relations_.push_back({{{S(1), {Index(a), Index(b)}}, {S(-1), {Index(grp.mul(a, b))}}}});
    relations_.push_back({{{S(1), {}}, {S(-1), {Index(grp.identity())}}}});
    build_sparse_tables();
  }

  explicit HopfDescriptor(TruncatedPBW<S> p) : data_(std::move(p)) {
    const TruncatedPBW<S>& u = *pbw();
    const Index n = u.lie().dim();
    for (Index i = 0; i < n; ++i) generators_.push_back(u.generator(i));
    for (Index b = 0; b < u.dim(); ++b) {
      std::vector<Index> w;
      for (int letter : u.monomial(b)) w.push_back(letter);
      words_.push_back(std::move(w));
    }
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        ModuleRelation<S> rel{{{S(1), {a, b}}, {S(-1), {b, a}}}};
        const auto br = u.lie().bracket(a, b);
        for (Index k = 0; k < n; ++k)
          if (!is_zero(br(k))) rel.terms.push_back({-br(k), {k}});
        relations_.push_back(std::move(rel));
      }
    build_sparse_tables();
  }

  int max_degree() const { return group() ? 0 : pbw()->degree(); }

  static Terms sparse(const Vector<S>& v) {
    Terms out;
    for (Index i = 0; i < v.size(); ++i)
      if (!is_zero(v(i))) out.emplace_back(i, v(i));
    return out;
  }

  void build_sparse_tables() {
    const Index n = dim();
    product_terms_.resize(static_cast<std::size_t>(n * n));
    product_overflow_.assign(static_cast<std::size_t>(n * n), false);
    for (Index b = 0; b < n; ++b)
      for (Index a = 0; a < n; ++a) {
        const std::size_t k = static_cast<std::size_t>(a + n * b);
        if (const auto* p = pbw()) {
          product_overflow_[k] = p->overflows(a, b);
          product_terms_[k] = sparse(p->multiply_basis(a, b));
        } else {
          product_terms_[k] = {{group()->mul(static_cast<int>(a), static_cast<int>(b)), S(1)}};
        }
      }
    for (Index b = 0; b < n; ++b) antipode_terms_.push_back(sparse(antipode_basis(b)));
  }

  Vector<S> mul_truncated(const Vector<S>& u, const Vector<S>& v) const {
    if (const auto* p = pbw()) return p->multiply(u, v);
    return mul(u, v);
  }

  std::variant<FiniteGroup, TruncatedPBW<S>> data_;
  std::vector<Index> generators_;
  std::vector<std::vector<Index>> words_;
  std::vector<ModuleRelation<S>> relations_;
  std::vector<Terms> product_terms_;
  std::vector<bool> product_overflow_;
  std::vector<Terms> antipode_terms_;
};

}  // namespace rackyd
