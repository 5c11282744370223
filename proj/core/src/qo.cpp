#include "wqo/qo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "qo_impl.hpp"
#include "wqo/error.hpp"

namespace wqo {

// ---- Element -------------------------------------------------------------

Element Element::named(std::uint32_t index) {
  Element e;
  e.kind_ = Kind::Named;
  e.a_ = index;
  return e;
}

Element Element::natural(std::uint64_t n) {
  Element e;
  e.kind_ = Kind::Natural;
  e.a_ = n;
  return e;
}

Element Element::pair(std::uint64_t i, std::uint64_t j) {
  Element e;
  e.kind_ = Kind::Pair;
  e.a_ = i;
  e.b_ = j;
  return e;
}

Element Element::product(const Element& l, const Element& r) {
  Element e;
  e.kind_ = Kind::Product;
  e.boxed_ = std::make_shared<const Boxed>(Boxed{l, r, nullptr});
  return e;
}

Element Element::set(std::shared_ptr<const CoUpset> d) {
  Element e;
  e.kind_ = Kind::Set;
  e.boxed_ = std::make_shared<const Boxed>(Boxed{Element(), Element(), std::move(d)});
  return e;
}

const Element& Element::left() const {
  if (kind_ != Kind::Product) throw InputError("element is not a product pair");
  return boxed_->left;
}

const Element& Element::right() const {
  if (kind_ != Kind::Product) throw InputError("element is not a product pair");
  return boxed_->right;
}

const CoUpset& Element::downset() const {
  if (kind_ != Kind::Set) throw InputError("element is not a downset");
  return *boxed_->set;
}

std::strong_ordering Element::operator<=>(const Element& o) const {
  if (auto c = kind_ <=> o.kind_; c != 0) return c;
  switch (kind_) {
    case Kind::Named:
    case Kind::Natural:
      return a_ <=> o.a_;
    case Kind::Pair:
      if (auto c = a_ <=> o.a_; c != 0) return c;
      return b_ <=> o.b_;
    case Kind::Product:
      if (boxed_ == o.boxed_) return std::strong_ordering::equal;
      if (auto c = boxed_->left <=> o.boxed_->left; c != 0) return c;
      return boxed_->right <=> o.boxed_->right;
    case Kind::Set:
      if (boxed_ == o.boxed_) return std::strong_ordering::equal;
      return *boxed_->set <=> *o.boxed_->set;
  }
  return std::strong_ordering::equal;
}

std::size_t Element::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b97f4a7c15ull;
  switch (kind_) {
    case Kind::Named:
    case Kind::Natural:
      return h ^ std::hash<std::uint64_t>{}(a_);
    case Kind::Pair:
      return h ^ std::hash<std::uint64_t>{}(a_ * 1000003u + b_);
    case Kind::Product:
      return h ^ (boxed_->left.hash() * 31 + boxed_->right.hash());
    case Kind::Set:
      for (const auto& g : boxed_->set->generators()) h = h * 1000003u ^ g.hash();
      return h;
  }
  return h;
}

// ---- QoHandle ------------------------------------------------------------

QoHandle::Kind QoHandle::kind() const { return impl_->kind; }

const std::vector<std::string>& QoHandle::names() const {
  if (kind() != Kind::Finite) throw InputError("not a finite qo");
  return impl_->names;
}

std::optional<std::uint32_t> QoHandle::find_name(const std::string& name) const {
  const auto& ns = names();
  auto it = std::find(ns.begin(), ns.end(), name);
  if (it == ns.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - ns.begin());
}

const QoHandle& QoHandle::left() const {
  if (kind() != Kind::Product) throw InputError("not a product qo");
  return impl_->left;
}

const QoHandle& QoHandle::right() const {
  if (kind() != Kind::Product) throw InputError("not a product qo");
  return impl_->right;
}

const QoHandle& QoHandle::base() const {
  if (kind() != Kind::Level) throw InputError("not a level qo");
  return impl_->base;
}

const QoHandle& QoHandle::previous() const {
  if (kind() != Kind::Level) throw InputError("not a level qo");
  return impl_->prev;
}

unsigned QoHandle::level() const { return kind() == Kind::Level ? impl_->level : 0; }

std::optional<std::uint64_t> QoHandle::size() const {
  switch (kind()) {
    case Kind::Finite:
      return impl_->names.size();
    case Kind::Omega:
    case Kind::Rado:
      return std::nullopt;
    case Kind::Product: {
      auto l = left().size(), r = right().size();
      if (l && r) return *l * *r;
      return std::nullopt;
    }
    case Kind::Level: {
      auto c = finite_carrier(*this);
      if (c) return c->size();
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool QoHandle::operator==(const QoHandle& o) const {
  if (impl_ == o.impl_) return true;
  if (!impl_ || !o.impl_ || kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Finite:
      return impl_->names == o.impl_->names && impl_->leq == o.impl_->leq;
    case Kind::Omega:
    case Kind::Rado:
      return true;
    case Kind::Product:
      return impl_->left == o.impl_->left && impl_->right == o.impl_->right;
    case Kind::Level:
      return impl_->level == o.impl_->level && impl_->base == o.impl_->base;
  }
  return false;
}

// ---- constructors --------------------------------------------------------

namespace {

std::shared_ptr<QoImpl> make_impl(QoHandle::Kind k) {
  auto p = std::make_shared<QoImpl>();
  p->kind = k;
  return p;
}

}  // namespace

QoHandle finite_qo(std::vector<std::string> names, std::vector<std::vector<bool>> m) {
  const std::size_t n = names.size();
  if (n == 0) throw InputError("finite qo needs at least one element");
  if (m.size() != n) throw InputError("leq matrix has wrong number of rows");
  for (const auto& row : m)
    if (row.size() != n) throw InputError("leq matrix has wrong number of columns");
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != n) throw InputError("duplicate element names");
  for (std::size_t i = 0; i < n; ++i)
    if (!m[i][i]) throw InputError("leq matrix not reflexive at " + names[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j])
        for (std::size_t k = 0; k < n; ++k)
          if (m[j][k] && !m[i][k])
            throw InputError("leq matrix not transitive: " + names[i] + "," + names[j] + "," + names[k]);
  auto p = make_impl(QoHandle::Kind::Finite);
  p->names = std::move(names);
  p->leq_flat.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p->leq_flat[i * n + j] = m[i][j];
  p->leq = std::move(m);
  return QoHandle(p);
}

QoHandle omega_qo() {
  static const QoHandle h(make_impl(QoHandle::Kind::Omega));
  return h;
}

QoHandle rado_qo() {
  static const QoHandle h(make_impl(QoHandle::Kind::Rado));
  return h;
}

QoHandle product(const QoHandle& p, const QoHandle& q) {
  auto impl = make_impl(QoHandle::Kind::Product);
  impl->left = p;
  impl->right = q;
  return QoHandle(impl);
}

namespace {

std::vector<std::string> letter_names(unsigned n) {
  std::vector<std::string> v;
  for (unsigned i = 0; i < n; ++i) v.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i));
  return v;
}

}  // namespace

QoHandle chain_qo(unsigned n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i; j < n; ++j) m[i][j] = true;
  return finite_qo(letter_names(n), m);
}

QoHandle antichain_qo(unsigned n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n));
  for (unsigned i = 0; i < n; ++i) m[i][i] = true;
  return finite_qo(letter_names(n), m);
}

QoHandle point_qo(const std::string& name) { return finite_qo({name}, {{true}}); }

QoHandle next_level(const QoHandle& base, unsigned k) {
  QoHandle cur = base;
  QoHandle root = base.kind() == QoHandle::Kind::Level ? base.base() : base;
  for (unsigned i = 0; i < k; ++i) {
    auto impl = make_impl(QoHandle::Kind::Level);
    impl->base = root;
    impl->prev = cur;
    impl->level = cur.level() + 1;
    cur = QoHandle(impl);
  }
  return cur;
}

// ---- membership and order ------------------------------------------------

bool belongs(const QoHandle& qo, const Element& e) {
  using K = Element::Kind;
  switch (qo.kind()) {
    case QoHandle::Kind::Finite:
      return e.kind() == K::Named && e.index() < qo.names().size();
    case QoHandle::Kind::Omega:
      return e.kind() == K::Natural;
    case QoHandle::Kind::Rado:
      return e.kind() == K::Pair && e.first() < e.second();
    case QoHandle::Kind::Product:
      return e.kind() == K::Product && belongs(qo.left(), e.left()) && belongs(qo.right(), e.right());
    case QoHandle::Kind::Level:
      if (e.kind() == K::Set) return e.downset().base() == qo.previous();
      return belongs(qo.base(), e);
  }
  return false;
}

void check_member(const QoHandle& qo, const Element& e) {
  if (!belongs(qo, e)) throw InputError("element " + element_str(qo, e) + " does not belong to " + qo_str(qo));
}

bool leq(const QoHandle& qo, const Element& a, const Element& b) {
  using K = Element::Kind;
  switch (qo.kind()) {
    case QoHandle::Kind::Finite: {
      const auto& im = qo.impl();
      const std::size_t n = im.names.size();
      if (a.kind() != K::Named || b.kind() != K::Named || a.index() >= n || b.index() >= n)
        throw InputError("element/qo mismatch");
      return im.leq_flat[a.index() * n + b.index()];
    }
    case QoHandle::Kind::Omega:
      if (a.kind() != K::Natural || b.kind() != K::Natural) throw InputError("element/qo mismatch");
      return a.index() <= b.index();
    case QoHandle::Kind::Rado:
      if (a.kind() != K::Pair || b.kind() != K::Pair) throw InputError("element/qo mismatch");
      return (a.first() == b.first() && a.second() <= b.second()) || a.second() < b.first();
    case QoHandle::Kind::Product:
      if (a.kind() != K::Product || b.kind() != K::Product) throw InputError("element/qo mismatch");
      return leq(qo.left(), a.left(), b.left()) && leq(qo.right(), a.right(), b.right());
    case QoHandle::Kind::Level: {
      bool as = a.kind() == K::Set, bs = b.kind() == K::Set;
      if (as && !bs) return false;
      if (!as && !bs) return leq(qo.base(), a, b);
      if (!as) return b.downset().contains(a);
      return couset_subset(a.downset(), b.downset());
    }
  }
  return false;
}

// ---- enumeration ---------------------------------------------------------

namespace {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Largest w with w(w+1)/2 <= n.
std::uint64_t tri_root(std::uint64_t n) { return (isqrt(8 * n + 1) - 1) / 2; }

}  // namespace

std::uint64_t rado_count_upto(std::uint64_t max_j) { return max_j * (max_j + 1) / 2; }

Element enumerate(const QoHandle& qo, std::uint64_t n) {
  switch (qo.kind()) {
    case QoHandle::Kind::Finite:
      return Element::named(static_cast<std::uint32_t>(n % qo.names().size()));
    case QoHandle::Kind::Omega:
      return Element::natural(n);
    case QoHandle::Kind::Rado: {
      // Group j holds (0,j)..(j-1,j) and starts at j(j-1)/2.
      std::uint64_t j = tri_root(n) + 1;
      return Element::pair(n - j * (j - 1) / 2, j);
    }
    case QoHandle::Kind::Product: {
      auto ls = qo.left().size(), rs = qo.right().size();
      std::uint64_t a, b;
      if (ls && rs) {
        n %= *ls * *rs;
        a = n % *ls;
        b = n / *ls;
      } else if (ls) {
        a = n % *ls;
        b = n / *ls;
      } else if (rs) {
        a = n / *rs;
        b = n % *rs;
      } else {
        std::uint64_t w = tri_root(n);
        b = n - w * (w + 1) / 2;
        a = w - b;
      }
      return Element::product(enumerate(qo.left(), a), enumerate(qo.right(), b));
    }
    case QoHandle::Kind::Level: {
      if (auto c = finite_carrier(qo)) return (*c)[n % c->size()];
      if (n % 2 == 0) return enumerate(qo.base(), n / 2);
      std::uint64_t m = (n - 1) / 2;
      std::vector<Element> gens;
      for (std::uint64_t i = 0; (m >> i) != 0; ++i)
        if ((m >> i) & 1u) gens.push_back(enumerate(qo.previous(), i));
      if (auto d = try_couset(qo.previous(), gens)) return Element::set(std::make_shared<const CoUpset>(*d));
      return enumerate(qo.base(), m);
    }
  }
  return Element();
}

std::optional<std::uint64_t> enumeration_index(const QoHandle& qo, const Element& e) {
  if (!belongs(qo, e)) return std::nullopt;
  switch (qo.kind()) {
    case QoHandle::Kind::Finite:
    case QoHandle::Kind::Omega:
      return e.index();
    case QoHandle::Kind::Rado:
      return e.second() * (e.second() - 1) / 2 + e.first();
    case QoHandle::Kind::Product: {
      auto a = enumeration_index(qo.left(), e.left());
      auto b = enumeration_index(qo.right(), e.right());
      if (!a || !b) return std::nullopt;
      auto ls = qo.left().size(), rs = qo.right().size();
      if (ls) return *b * *ls + *a;
      if (rs) return *a * *rs + *b;
      std::uint64_t w = *a + *b;
      return w * (w + 1) / 2 + *b;
    }
    case QoHandle::Kind::Level: {
      auto c = finite_carrier(qo);
      if (!c) return std::nullopt;
      auto it = std::find(c->begin(), c->end(), e);
      if (it == c->end()) return std::nullopt;
      return static_cast<std::uint64_t>(it - c->begin());
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Element>> finite_carrier(const QoHandle& qo, std::size_t limit) {
  switch (qo.kind()) {
    case QoHandle::Kind::Finite: {
      std::vector<Element> v;
      for (std::uint32_t i = 0; i < qo.names().size(); ++i) v.push_back(Element::named(i));
      return v;
    }
    case QoHandle::Kind::Omega:
    case QoHandle::Kind::Rado:
      return std::nullopt;
    case QoHandle::Kind::Product: {
      auto l = finite_carrier(qo.left(), limit), r = finite_carrier(qo.right(), limit);
      if (!l || !r || l->size() * r->size() > limit) return std::nullopt;
      std::vector<Element> v;
      for (const auto& y : *r)
        for (const auto& x : *l) v.push_back(Element::product(x, y));
      return v;
    }
    case QoHandle::Kind::Level: {
      const QoImpl& impl = qo.impl();
      std::call_once(impl.carrier_once, [&] {
        auto urs = finite_carrier(impl.base, limit);
        auto prev = finite_carrier(impl.prev, limit);
        if (!urs || !prev || prev->size() >= 63 || (std::uint64_t{1} << prev->size()) > limit) return;
        std::set<CoUpset> sets;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << prev->size()); ++mask) {
          std::vector<Element> gens;
          for (std::size_t i = 0; i < prev->size(); ++i)
            if ((mask >> i) & 1u) gens.push_back((*prev)[i]);
          if (auto d = try_couset(impl.prev, gens)) sets.insert(*d);
        }
        std::vector<Element> out = *urs;
        for (const auto& d : sets) out.push_back(Element::set(std::make_shared<const CoUpset>(d)));
        impl.carrier = std::move(out);
      });
      if (impl.carrier && impl.carrier->size() <= limit) return impl.carrier;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---- printing ------------------------------------------------------------

std::string element_str(const QoHandle& qo, const Element& e) {
  using K = Element::Kind;
  switch (e.kind()) {
    case K::Named:
      if (qo.valid() && qo.kind() == QoHandle::Kind::Finite && e.index() < qo.names().size())
        return qo.names()[e.index()];
      if (qo.valid() && qo.kind() == QoHandle::Kind::Level) return element_str(qo.base(), e);
      return "#" + std::to_string(e.index());
    case K::Natural:
      return std::to_string(e.index());
    case K::Pair:
      return "(" + std::to_string(e.first()) + "," + std::to_string(e.second()) + ")";
    case K::Product: {
      bool p = qo.valid() && qo.kind() == QoHandle::Kind::Product;
      return "(" + element_str(p ? qo.left() : QoHandle(), e.left()) + "," +
             element_str(p ? qo.right() : QoHandle(), e.right()) + ")";
    }
    case K::Set: {
      const auto& d = e.downset();
      std::string s = "D{";
      for (std::size_t i = 0; i < d.generators().size(); ++i) {
        if (i) s += ",";
        s += element_str(d.base(), d.generators()[i]);
      }
      return s + "}";
    }
  }
  return "?";
}

std::string qo_str(const QoHandle& qo) {
  switch (qo.kind()) {
    case QoHandle::Kind::Finite: {
      std::string s = "finite{";
      for (std::size_t i = 0; i < qo.names().size(); ++i) s += (i ? "," : "") + qo.names()[i];
      return s + "}";
    }
    case QoHandle::Kind::Omega:
      return "omega";
    case QoHandle::Kind::Rado:
      return "rado";
    case QoHandle::Kind::Product:
      return "(" + qo_str(qo.left()) + " x " + qo_str(qo.right()) + ")";
    case QoHandle::Kind::Level:
      return "level" + std::to_string(qo.level()) + "(" + qo_str(qo.base()) + ")";
  }
  return "?";
}

}  // namespace wqo
