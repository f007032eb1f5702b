#include "snideal/ring.hpp"

#include <atomic>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "snideal/errors.hpp"
#include "snideal/limits.hpp"

namespace snideal {

namespace {

std::atomic<std::uint64_t> next_ring_id{1};

void require_order(std::size_t order, std::size_t cap, const char* what) {
  if (order < 2) throw InvalidSpec(std::string(what) + ": ring order must be at least 2");
  if (order > cap)
    throw CapExceeded(std::string(what) + ": order " + std::to_string(order) +
                      " exceeds cap " + std::to_string(cap));
}

}  // namespace

RingPtr FiniteRing::modular(std::uint64_t n) {
  require_order(n, limits().formula_order_cap, "Z_n");
  std::shared_ptr<FiniteRing> r(new FiniteRing);
  r->id_ = next_ring_id++;
  r->spec_ = RingSpec::zn(n);
  r->kind_ = Kind::Modular;
  r->formula_backed_ = true;
  r->order_ = n;
  r->n_ = n;
  r->zero_ = 0;
  r->one_ = 1;
  return r;
}

RingPtr FiniteRing::product(std::vector<RingPtr> factors) {
  if (factors.empty()) throw InvalidSpec("product needs at least one factor");
  std::size_t order = 1;
  bool formula = true;
  std::vector<RingSpec> specs;
  std::vector<std::size_t> strides;
  for (const auto& f : factors) {
    strides.push_back(order);
    if (order > limits().formula_order_cap / f->order() + 1)
      throw CapExceeded("product order exceeds cap");
    order *= f->order();
    formula = formula && f->is_formula_backed();
    specs.push_back(f->spec());
  }
  require_order(order, formula ? limits().formula_order_cap : limits().table_order_cap,
                "product");

  std::shared_ptr<FiniteRing> r(new FiniteRing);
  r->id_ = next_ring_id++;
  r->spec_ = RingSpec::product(std::move(specs));
  r->kind_ = Kind::Product;
  r->formula_backed_ = formula;
  r->order_ = order;
  r->factors_ = std::move(factors);
  r->strides_ = std::move(strides);
  std::vector<Elem> zeros, ones;
  for (const auto& f : r->factors_) {
    zeros.push_back(f->zero());
    ones.push_back(f->one());
  }
  r->zero_ = r->compose(zeros);
  r->one_ = r->compose(ones);

  if (order <= limits().dense_table_max) {
    r->add_tab_.resize(order * order);
    r->mul_tab_.resize(order * order);
    r->neg_tab_.resize(order);
    for (Elem a = 0; a < order; ++a) {
      r->neg_tab_[a] = static_cast<std::uint16_t>(r->neg(a));
      for (Elem b = 0; b < order; ++b) {
        r->add_tab_[std::size_t{a} * order + b] = static_cast<std::uint16_t>(r->add_slow(a, b));
        r->mul_tab_[std::size_t{a} * order + b] = static_cast<std::uint16_t>(r->mul_slow(a, b));
      }
    }
    r->kind_ = Kind::Table;
  }
  return r;
}

RingPtr FiniteRing::derived(RingSpec spec, std::size_t order, Elem zero, Elem one,
                            BinaryFn add, BinaryFn mul, UnaryFn neg) {
  require_order(order, limits().table_order_cap, "derived ring");
  if (order > 65'536) throw CapExceeded("derived rings are limited to 65536 elements");
  if (zero == one) throw PreconditionViolated("zero ring is not a FiniteRing");
  std::shared_ptr<FiniteRing> r(new FiniteRing);
  r->id_ = next_ring_id++;
  r->spec_ = std::move(spec);
  r->order_ = order;
  r->zero_ = zero;
  r->one_ = one;
  if (order <= limits().dense_table_max) {
    r->kind_ = Kind::Table;
    r->add_tab_.resize(order * order);
    r->mul_tab_.resize(order * order);
    r->neg_tab_.resize(order);
    for (Elem a = 0; a < order; ++a) {
      r->neg_tab_[a] = static_cast<std::uint16_t>(neg(a));
      for (Elem b = 0; b < order; ++b) {
        r->add_tab_[std::size_t{a} * order + b] = static_cast<std::uint16_t>(add(a, b));
        r->mul_tab_[std::size_t{a} * order + b] = static_cast<std::uint16_t>(mul(a, b));
      }
    }
  } else {
    r->kind_ = Kind::Computed;
    r->add_fn_ = std::move(add);
    r->mul_fn_ = std::move(mul);
    r->neg_fn_ = std::move(neg);
  }
  return r;
}

std::vector<Elem> FiniteRing::components(Elem x) const {
  std::vector<Elem> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out[i] = static_cast<Elem>((x / strides_[i]) % factors_[i]->order());
  return out;
}

Elem FiniteRing::compose(std::span<const Elem> parts) const {
  std::size_t x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) x += parts[i] * strides_[i];
  return static_cast<Elem>(x);
}

Elem FiniteRing::add_slow(Elem a, Elem b) const {
  if (kind_ == Kind::Computed) return add_fn_(a, b);
  std::size_t x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = *factors_[i];
    auto ai = static_cast<Elem>((a / strides_[i]) % f.order());
    auto bi = static_cast<Elem>((b / strides_[i]) % f.order());
    x += f.add(ai, bi) * strides_[i];
  }
  return static_cast<Elem>(x);
}

Elem FiniteRing::mul_slow(Elem a, Elem b) const {
  if (kind_ == Kind::Computed) return mul_fn_(a, b);
  std::size_t x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = *factors_[i];
    auto ai = static_cast<Elem>((a / strides_[i]) % f.order());
    auto bi = static_cast<Elem>((b / strides_[i]) % f.order());
    x += f.mul(ai, bi) * strides_[i];
  }
  return static_cast<Elem>(x);
}

Elem FiniteRing::neg(Elem a) const {
  switch (kind_) {
    case Kind::Modular: return a == 0 ? 0 : static_cast<Elem>(n_ - a);
    case Kind::Table: return neg_tab_[a];
    case Kind::Computed: return neg_fn_(a);
    case Kind::Product: {
      std::size_t x = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& f = *factors_[i];
        x += f.neg(static_cast<Elem>((a / strides_[i]) % f.order())) * strides_[i];
      }
      return static_cast<Elem>(x);
    }
  }
  return 0;
}

Elem FiniteRing::pow(Elem a, std::uint64_t e) const {
  Elem result = one_, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

void FiniteRing::mul_row(Elem a, std::span<Elem> out) const {
  switch (kind_) {
    case Kind::Modular: {
      // a*b by repeated addition avoids one division per entry.
      std::uint64_t acc = 0;
      for (std::size_t b = 0; b < order_; ++b) {
        out[b] = static_cast<Elem>(acc);
        acc += a;
        if (acc >= n_) acc -= n_;
      }
      return;
    }
    case Kind::Table: {
      const auto* row = &mul_tab_[std::size_t{a} * order_];
      for (std::size_t b = 0; b < order_; ++b) out[b] = row[b];
      return;
    }
    default:
      for (std::size_t b = 0; b < order_; ++b) out[b] = mul_slow(a, static_cast<Elem>(b));
  }
}

bool FiniteRing::is_nilpotent(Elem x) const {
  // Any nilpotent has index <= order, so x^(2^k) with 2^k >= order decides.
  Elem y = x;
  for (std::size_t reach = 1; reach < order_; reach *= 2) y = mul(y, y);
  return y == zero_;
}

const ElementSet& FiniteRing::nilradical_set() const {
  std::call_once(nil_once_, [this] {
    nil_ = ElementSet(order_);
    if (kind_ == Kind::Modular) {
      std::uint64_t rad = 1, m = n_;
      for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
          rad *= p;
          while (m % p == 0) m /= p;
        }
      }
      if (m > 1) rad *= m;
      for (std::uint64_t x = 0; x < n_; x += rad) nil_.insert(static_cast<Elem>(x));
      return;
    }
    for (Elem x = 0; x < order_; ++x)
      if (is_nilpotent(x)) nil_.insert(x);
  });
  return nil_;
}

const ElementSet& FiniteRing::unit_set() const {
  std::call_once(unit_once_, [this] {
    units_ = ElementSet(order_);
    if (kind_ == Kind::Modular) {
      for (Elem x = 0; x < order_; ++x)
        if (std::gcd<std::uint64_t, std::uint64_t>(x, n_) == 1) units_.insert(x);
      return;
    }
    if (!factors_.empty()) {
      for (Elem x = 0; x < order_; ++x) {
        bool unit = true;
        for (std::size_t i = 0; i < factors_.size() && unit; ++i)
          unit = factors_[i]->unit_set().contains(
              static_cast<Elem>((x / strides_[i]) % factors_[i]->order()));
        if (unit) units_.insert(x);
      }
      return;
    }
    std::vector<Elem> row(order_);
    for (Elem x = 0; x < order_; ++x) {
      mul_row(x, row);
      for (Elem y : row)
        if (y == one_) {
          units_.insert(x);
          break;
        }
    }
  });
  return units_;
}

const ElementSet& FiniteRing::zero_divisor_set() const {
  std::call_once(zd_once_, [this] {
    zero_divisors_ = ElementSet(order_);
    if (kind_ == Kind::Modular) {
      for (Elem x = 0; x < order_; ++x)
        if (std::gcd<std::uint64_t, std::uint64_t>(x, n_) != 1) zero_divisors_.insert(x);
      return;
    }
    std::vector<Elem> row(order_);
    for (Elem x = 0; x < order_; ++x) {
      mul_row(x, row);
      for (Elem y = 0; y < order_; ++y)
        if (y != zero_ && row[y] == zero_) {
          zero_divisors_.insert(x);
          break;
        }
    }
  });
  return zero_divisors_;
}

const PrincipalIdeals& FiniteRing::principal_ideals() const {
  std::call_once(principal_once_, [this] {
    principal_.class_of.assign(order_, 0);
    if (kind_ == Kind::Modular) {
      // <a> = <gcd(a, n)>.
      std::vector<std::uint32_t> by_divisor(n_ + 1, UINT32_MAX);
      for (std::uint64_t a = 0; a < n_; ++a) {
        std::uint64_t d = std::gcd<std::uint64_t, std::uint64_t>(a, n_);
        if (by_divisor[d] == UINT32_MAX) {
          by_divisor[d] = static_cast<std::uint32_t>(principal_.representative.size());
          principal_.representative.push_back(static_cast<Elem>(a));
          ElementSet s(n_);
          for (std::uint64_t x = 0; x < n_; x += d) s.insert(static_cast<Elem>(x));
          principal_.ideal.push_back(std::move(s));
        }
        principal_.class_of[a] = by_divisor[d];
      }
      return;
    }
    std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> seen;
    std::vector<Elem> row(order_);
    for (Elem a = 0; a < order_; ++a) {
      mul_row(a, row);
      ElementSet s(order_);
      for (Elem y : row) s.insert(y);
      auto [it, fresh] = seen.try_emplace(std::move(s), static_cast<std::uint32_t>(seen.size()));
      if (fresh) {
        principal_.representative.push_back(a);
        principal_.ideal.push_back(it->first);
      }
      principal_.class_of[a] = it->second;
    }
  });
  return principal_;
}

Elem elem_arith(const FiniteRing& r, ArithOp op, Elem a, std::uint64_t b) {
  auto check = [&](std::uint64_t x) {
    if (x >= r.order())
      throw IndexOutOfRange("element " + std::to_string(x) + " out of range for " + r.name() +
                            " (order " + std::to_string(r.order()) + ")");
  };
  check(a);
  switch (op) {
    case ArithOp::Add: check(b); return r.add(a, static_cast<Elem>(b));
    case ArithOp::Mul: check(b); return r.mul(a, static_cast<Elem>(b));
    case ArithOp::Neg: return r.neg(a);
    case ArithOp::Pow: return r.pow(a, b);
  }
  return 0;
}

ElementClass element_class(const FiniteRing& r, Elem x) {
  if (!r.valid(x)) throw IndexOutOfRange("element " + std::to_string(x) + " out of range");
  ElementClass c;
  c.is_unit = r.unit_set().contains(x);
  c.is_zero_divisor = r.zero_divisor_set().contains(x);
  c.is_regular = !c.is_zero_divisor;
  c.is_nilpotent = r.nilradical_set().contains(x);
  if (c.is_nilpotent) {
    Elem y = x;
    std::uint32_t k = 1;
    while (y != r.zero()) {
      y = r.mul(y, x);
      ++k;
    }
    c.nilpotency_index = k;
  }
  return c;
}

RingPredicates ring_predicates(const FiniteRing& r) {
  RingPredicates p;
  const auto& units = r.unit_set();
  p.is_field = units.count() == r.order() - 1 && !units.contains(r.zero());

  p.is_von_neumann_regular = true;
  for (Elem a = 0; a < r.order() && p.is_von_neumann_regular; ++a) {
    Elem a2 = r.mul(a, a);
    bool found = false;
    for (Elem b = 0; b < r.order() && !found; ++b) found = r.mul(a2, b) == a;
    p.is_von_neumann_regular = found;
  }

  ElementSet products(r.order());
  const auto& nil = r.nilradical_set();
  units.for_each([&](Elem u) { nil.for_each([&](Elem z) { products.insert(r.mul(u, z)); }); });
  p.is_un_ring = units.complement().is_subset_of(products);
  return p;
}

bool is_reduced(const FiniteRing& r) { return r.nilradical_set().count() == 1; }

bool is_integral_domain(const FiniteRing& r) {
  return r.zero_divisor_set().count() == 1;
}

AxiomReport verify_axioms(const FiniteRing& r, std::size_t exhaustive_limit,
                          std::size_t samples) {
  AxiomReport rep;
  const std::size_t n = r.order();
  auto fail = [&](const std::string& what, Elem a, Elem b, Elem c) {
    std::ostringstream os;
    os << what << " fails at (" << a << ", " << b << ", " << c << ") in " << r.name();
    rep.ok = false;
    rep.failure = os.str();
  };
  if (r.zero() == r.one()) {
    rep.ok = false;
    rep.failure = "zero equals one";
    return rep;
  }
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a) return fail("additive identity", a, 0, 0), rep;
    if (r.mul(a, r.one()) != a) return fail("multiplicative identity", a, 0, 0), rep;
    if (r.neg(a) >= n || r.add(a, r.neg(a)) != r.zero())
      return fail("additive inverse", a, 0, 0), rep;
  }
  auto triple = [&](Elem a, Elem b, Elem c) {
    Elem ab = r.add(a, b), mab = r.mul(a, b);
    if (ab >= n || mab >= n) return fail("closure", a, b, c), false;
    if (ab != r.add(b, a)) return fail("additive commutativity", a, b, c), false;
    if (mab != r.mul(b, a)) return fail("multiplicative commutativity", a, b, c), false;
    if (r.add(ab, c) != r.add(a, r.add(b, c))) return fail("additive associativity", a, b, c), false;
    if (r.mul(mab, c) != r.mul(a, r.mul(b, c)))
      return fail("multiplicative associativity", a, b, c), false;
    if (r.mul(a, r.add(b, c)) != r.add(mab, r.mul(a, c)))
      return fail("distributivity", a, b, c), false;
    ++rep.triples_checked;
    return true;
  };
  if (n <= exhaustive_limit) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!triple(a, b, c)) return rep;
    return rep;
  }
  rep.exhaustive = false;
  std::mt19937_64 rng(0x5eed5eedULL ^ n);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (std::size_t i = 0; i < samples; ++i)
    if (!triple(pick(rng), pick(rng), pick(rng))) return rep;
  return rep;
}

}  // namespace snideal
