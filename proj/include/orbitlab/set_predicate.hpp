#pragma once

#include "orbitlab/bounds.hpp"
#include "orbitlab/group.hpp"

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace orbitlab {

using GroupPtr = std::shared_ptr<const GroupSpec>;

// Membership test over Q. Group-based sets never contain 0. The C set can
// carry the schedule eps = theta_N(N, rank), fixed by instantiate(N).
class SetPredicate {
 public:
  struct Gamma { GroupPtr group; };
  struct Division { GroupPtr group; };
  struct BSet { GroupPtr group; double E = 0; long radius = 0; };
  struct CSet {
    GroupPtr group;
    double eps = 0;
    bool theta_schedule = false;
    long radius = 0;
  };
  struct HeightBall { double H = 0; };
  struct Preimage {
    Polynomial g;
    std::shared_ptr<const SetPredicate> inner;
  };
  struct FiniteList { std::set<Rational> values; };
  using Variant = std::variant<Gamma, Division, BSet, CSet, HeightBall, Preimage, FiniteList>;

  SetPredicate() : v_(FiniteList{}) {}
  explicit SetPredicate(Variant v) : v_(std::move(v)) {}

  static SetPredicate gamma(GroupPtr g) { return SetPredicate(Gamma{std::move(g)}); }
  static SetPredicate division(GroupPtr g) { return SetPredicate(Division{std::move(g)}); }
  static SetPredicate b_set(GroupPtr g, double E, long radius) { return SetPredicate(BSet{std::move(g), E, radius}); }
  static SetPredicate c_set(GroupPtr g, double eps, long radius) {
    return SetPredicate(CSet{std::move(g), eps, false, radius});
  }
  static SetPredicate c_set_theta(GroupPtr g, long radius) {
    return SetPredicate(CSet{std::move(g), 0, true, radius});
  }
  static SetPredicate height_ball(double H) { return SetPredicate(HeightBall{H}); }
  static SetPredicate preimage(Polynomial g, SetPredicate inner) {
    return SetPredicate(Preimage{std::move(g), std::make_shared<const SetPredicate>(std::move(inner))});
  }
  static SetPredicate finite_list(std::vector<Rational> values) {
    return SetPredicate(FiniteList{std::set<Rational>(values.begin(), values.end())});
  }

  [[nodiscard]] const Variant& variant() const { return v_; }

  [[nodiscard]] std::string kind() const {
    static constexpr const char* names[] = {"gamma", "division", "B", "C", "height_ball", "preimage", "finite_list"};
    return names[v_.index()];
  }

  /// True if a schedule is still waiting for N.
  [[nodiscard]] bool needs_instantiation() const {
    if (auto* c = std::get_if<CSet>(&v_)) return c->theta_schedule;
    if (auto* p = std::get_if<Preimage>(&v_)) return p->inner->needs_instantiation();
    return false;
  }

  /// Fixes an N-dependent eps schedule at depth N.
  [[nodiscard]] SetPredicate instantiate(long N) const {
    if (auto* c = std::get_if<CSet>(&v_); c && c->theta_schedule)
      return c_set(c->group, theta_N(static_cast<double>(N), static_cast<long>(c->group->rank())), c->radius);
    if (auto* p = std::get_if<Preimage>(&v_)) return preimage(p->g, p->inner->instantiate(N));
    return *this;
  }

  [[nodiscard]] bool contains(const Rational& x) const {
    return std::visit([&](const auto& s) { return test(s, x); }, v_);
  }

  /// Certificate for group-based sets; nullopt for the others.
  [[nodiscard]] std::optional<MembershipCertificate> certify(const Rational& x) const {
    if (x.is_zero()) return std::nullopt;
    if (auto* s = std::get_if<Gamma>(&v_)) return member_gamma(x, *s->group);
    if (auto* s = std::get_if<Division>(&v_)) return member_division_group(x, *s->group);
    if (auto* s = std::get_if<BSet>(&v_)) return member_B(x, *s->group, s->E, s->radius);
    if (auto* s = std::get_if<CSet>(&v_)) return member_C(x, *s->group, checked_eps(*s), s->radius);
    return std::nullopt;
  }

 private:
  static double checked_eps(const CSet& s) {
    if (s.theta_schedule) throw std::logic_error("C set with theta schedule used before instantiate(N)");
    return s.eps;
  }
  static bool test(const Gamma& s, const Rational& x) { return !x.is_zero() && member_gamma(x, *s.group).positive(); }
  static bool test(const Division& s, const Rational& x) {
    return !x.is_zero() && member_division_group(x, *s.group).positive();
  }
  static bool test(const BSet& s, const Rational& x) {
    return !x.is_zero() && member_B(x, *s.group, s.E, s.radius).positive();
  }
  static bool test(const CSet& s, const Rational& x) {
    return !x.is_zero() && member_C(x, *s.group, checked_eps(s), s.radius).positive();
  }
  static bool test(const HeightBall& s, const Rational& x) {
    return !x.is_zero() && height_within(height_rational(x), s.H);
  }
  static bool test(const Preimage& s, const Rational& x) { return s.inner->contains(s.g(x)); }
  static bool test(const FiniteList& s, const Rational& x) { return s.values.count(x) != 0; }

  Variant v_;
};

}  // namespace orbitlab
