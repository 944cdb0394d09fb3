#include "cycloknot/ring_maps.hpp"

#include <map>
#include <stdexcept>

namespace cycloknot {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

// Accumulates c * zeta_target^shift into a length-target residue vector, where c
// has order dividing target.
void accumulate_rotated(std::vector<Integer>& acc, const CycNumber& c, std::int64_t target,
                        std::int64_t shift) {
  const std::int64_t scale = target / c.order();
  const auto coeffs = c.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    acc[static_cast<std::size_t>(mod(static_cast<std::int64_t>(i) * scale + shift, target))] +=
        coeffs[i];
  }
}

std::int64_t root_shift(std::int64_t m, std::int64_t k, std::int64_t doubled, std::int64_t target) {
  // zeta_m^{k * doubled / 2} expressed as a power of zeta_target.
  const std::int64_t num = (target / m) * k * doubled;
  if (num % 2 != 0) {
    throw std::domain_error("half-integer power of zeta_" + std::to_string(m) +
                            " is not defined in Z[zeta_" + std::to_string(target) +
                            "]; request an even lift");
  }
  return num / 2;
}

struct SlotPlan {
  Variables vars;
  std::size_t source = 0;
  std::optional<std::size_t> target_slot;
  std::array<std::optional<std::size_t>, 2> keep{};  // old slot -> new slot
};

SlotPlan plan_slots(const Variables& old, const std::string& var, const std::string& target) {
  SlotPlan plan;
  plan.source = old.require(var);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < old.size(); ++i) {
    if (i == plan.source) {
      if (!target.empty() && (!old.index_of(target) || *old.index_of(target) == i)) {
        plan.target_slot = names.size();
        names.push_back(target);
      }
      continue;
    }
    plan.keep[i] = names.size();
    if (!target.empty() && old[i] == target) plan.target_slot = names.size();
    names.push_back(old[i]);
  }
  plan.vars = Variables(std::move(names));
  return plan;
}

Exponent remap(const SlotPlan& plan, const Exponent& e, std::size_t nold) {
  Exponent out{0, 0};
  for (std::size_t i = 0; i < nold; ++i) {
    if (plan.keep[i]) out[*plan.keep[i]] += e[i];
  }
  return out;
}

}  // namespace

IntPoly cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");
  const auto& c = cyclotomic_coefficients(m);
  std::vector<IntPoly::Term> t;
  for (std::size_t i = 0; i < c.size(); ++i) {
    t.push_back({Exponent{2 * static_cast<std::int64_t>(i), 0}, c[i]});
  }
  return IntPoly::from_terms(Variables{"t"}, {}, std::move(t));
}

CycNumber eval_at_root(const IntPoly& f, std::int64_t m, std::int64_t k,
                       std::optional<std::int64_t> target) {
  return eval_at_root(lift(f, 1), m, k, target);
}

CycNumber eval_at_root(const CycPoly& f, std::int64_t m, std::int64_t k,
                       std::optional<std::int64_t> target) {
  if (m < 1) throw std::invalid_argument("eval_at_root: root order must be >= 1");
  if (f.vars().size() != 1) throw std::invalid_argument("eval_at_root: univariate input required");
  const std::int64_t order = target.value_or(m);
  if (order % m != 0 || order % f.ring().order != 0) {
    throw std::invalid_argument("eval_at_root: target order " + std::to_string(order) +
                                " is not a common multiple of the input orders");
  }
  std::vector<Integer> acc(static_cast<std::size_t>(order), Integer(0));
  for (const auto& t : f.terms()) {
    accumulate_rotated(acc, t.coeff, order, root_shift(m, k, t.exp[0], order));
  }
  return CycNumber::from_coeffs(order, std::move(acc));
}

Integer eval_at_one(const IntPoly& f) {
  Integer s(0);
  for (const auto& t : f.terms()) s += t.coeff;
  return s;
}

CycPoly embed_coeffs(const CycPoly& f, std::int64_t m) {
  std::vector<CycPoly::Term> t;
  t.reserve(f.size());
  for (const auto& term : f.terms()) t.push_back({term.exp, term.coeff.embed(m)});
  return CycPoly::from_terms(f.vars(), CyclotomicRing{m}, std::move(t));
}

CycPoly galois_coeffs(const CycPoly& f, std::int64_t j) {
  std::vector<CycPoly::Term> t;
  t.reserve(f.size());
  for (const auto& term : f.terms()) t.push_back({term.exp, term.coeff.galois(j)});
  return CycPoly::from_terms(f.vars(), f.ring(), std::move(t));
}

std::optional<IntPoly> to_int_poly(const CycPoly& f) {
  std::vector<IntPoly::Term> t;
  t.reserve(f.size());
  for (const auto& term : f.terms()) {
    auto v = term.coeff.as_integer();
    if (!v) return std::nullopt;
    t.push_back({term.exp, *v});
  }
  return IntPoly::from_terms(f.vars(), {}, std::move(t));
}

CycPoly substitute(const CycPoly& f, const std::string& var, const MonomialImage& image,
                   std::int64_t order) {
  if (order % f.ring().order != 0 || order % image.root_order != 0) {
    throw std::invalid_argument("substitute: result order " + std::to_string(order) +
                                " must be a multiple of the coefficient and root orders");
  }
  const SlotPlan plan = plan_slots(f.vars(), var, image.target);
  std::map<Exponent, std::vector<Integer>> buckets;
  for (const auto& t : f.terms()) {
    const std::int64_t a2 = t.exp[plan.source];
    Exponent e = remap(plan, t.exp, f.vars().size());
    if (plan.target_slot) {
      if ((image.target_doubled * a2) % 2 != 0) {
        throw std::domain_error("substitute: exponent leaves (1/2)Z");
      }
      e[*plan.target_slot] += image.target_doubled * a2 / 2;
    }
    auto [it, inserted] = buckets.try_emplace(e);
    if (inserted) it->second.assign(static_cast<std::size_t>(order), Integer(0));
    accumulate_rotated(it->second, t.coeff, order,
                       root_shift(image.root_order, image.root_power, a2, order));
  }
  std::vector<CycPoly::Term> out;
  out.reserve(buckets.size());
  for (auto& [e, acc] : buckets) out.push_back({e, CycNumber::from_coeffs(order, std::move(acc))});
  return CycPoly::from_terms(plan.vars, CyclotomicRing{order}, std::move(out));
}

CycPoly substitute(const IntPoly& f, const std::string& var, const MonomialImage& image,
                   std::int64_t order) {
  return substitute(lift(f, 1), var, image, order);
}

template <class C>
LaurentPoly<C> substitute_variable(const LaurentPoly<C>& f, const std::string& var,
                                   const std::string& target, std::int64_t target_doubled) {
  if (target.empty()) throw std::invalid_argument("substitute_variable: empty target");
  const SlotPlan plan = plan_slots(f.vars(), var, target);
  std::vector<typename LaurentPoly<C>::Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    const std::int64_t a2 = t.exp[plan.source];
    if ((target_doubled * a2) % 2 != 0) {
      throw std::domain_error("substitute_variable: exponent leaves (1/2)Z");
    }
    Exponent e = remap(plan, t.exp, f.vars().size());
    e[*plan.target_slot] += target_doubled * a2 / 2;
    out.push_back({e, t.coeff});
  }
  return LaurentPoly<C>::from_terms(plan.vars, f.ring(), std::move(out));
}

template IntPoly substitute_variable(const IntPoly&, const std::string&, const std::string&,
                                     std::int64_t);
template CycPoly substitute_variable(const CycPoly&, const std::string&, const std::string&,
                                     std::int64_t);

}  // namespace cycloknot
