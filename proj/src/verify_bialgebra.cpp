#include <chrono>
#include <tuple>

#include "scd/hopf.hpp"
#include "scd/verify.hpp"

namespace scd {

namespace {

using Triple = std::map<std::tuple<LabelledPartition, LabelledPartition, LabelledPartition>, mpq_class>;

void add_to(Triple& t, const LabelledPartition& a, const LabelledPartition& b, const LabelledPartition& c,
            const mpq_class& coef) {
  auto [it, inserted] = t.emplace(std::make_tuple(a, b, c), coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) t.erase(it);
  }
}

class Timer {
 public:
  explicit Timer(CheckResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  CheckResult& r_;
  std::chrono::steady_clock::time_point start_;
};

bool nonneg_integers(const SCElement& x) {
  for (const auto& [lambda, c] : x.terms())
    if (c.get_den() != 1 || c < 0) return false;
  return true;
}

bool nonneg_integers(const TensorElement& t) {
  for (const auto& [key, c] : t.terms())
    if (c.get_den() != 1 || c < 0) return false;
  return true;
}

std::string sym(Basis b, const LabelledPartition& l) { return std::string(to_string(b)) + l.to_string(); }

}  // namespace

Report verify_bialgebra(Family family, int n_max, const FieldPtr& field) {
  HopfAlgebra H(family, field);
  std::vector<std::vector<LabelledPartition>> by_grade;
  for (int g = 0; g <= n_max; ++g) by_grade.push_back(enumerate_partitions(family, g, field));
  std::vector<LabelledPartition> all;
  for (const auto& g : by_grade) all.insert(all.end(), g.begin(), g.end());
  const std::string tag = std::string(" [") + to_string(family) + ", n<=" + std::to_string(n_max) + ", q=" +
                          std::to_string(field->q()) + "]";
  const Basis bases[] = {Basis::P, Basis::kappa};

  auto pairs = [&](auto&& body) {
    for (const auto& a : all)
      for (const auto& b : all)
        if (a.n() + b.n() <= n_max) body(a, b);
  };
  auto triples = [&](auto&& body) {
    for (const auto& a : all)
      for (const auto& b : all)
        for (const auto& c : all)
          if (a.n() + b.n() + c.n() <= n_max) body(a, b, c);
  };

  Report report;
  auto check = [&](const std::string& name) -> CheckResult& {
    report.checks.push_back(CheckResult{name + tag});
    return report.checks.back();
  };

  for (Basis B : bases) {
    const std::string bn = to_string(B);
    {
      CheckResult& r = check("associativity (" + bn + ")");
      Timer t(r);
      triples([&](const auto& a, const auto& b, const auto& c) {
        const SCElement x = SCElement::symbol(B, a), y = SCElement::symbol(B, b), z = SCElement::symbol(B, c);
        r.expect(H.product(H.product(x, y), z) == H.product(x, H.product(y, z)),
                 "(" + sym(B, a) + " " + sym(B, b) + ") " + sym(B, c));
      });
    }
    {
      CheckResult& r = check("unit laws (" + bn + ")");
      Timer t(r);
      const SCElement one = SCElement::unit(family, field, B);
      for (const auto& a : all) {
        const SCElement x = SCElement::symbol(B, a);
        r.expect(H.product(one, x) == x && H.product(x, one) == x, sym(B, a));
      }
    }
    {
      CheckResult& r = check("coassociativity (" + bn + ")");
      Timer t(r);
      for (const auto& a : all) {
        Triple left, right;
        for (const auto delta = H.coproduct(SCElement::symbol(B, a)); const auto& [k, c] : delta.terms()) {
          for (const auto inner = H.coproduct(SCElement::symbol(B, k.first)); const auto& [k2, c2] : inner.terms())
            add_to(left, k2.first, k2.second, k.second, c * c2);
          for (const auto inner = H.coproduct(SCElement::symbol(B, k.second)); const auto& [k2, c2] : inner.terms())
            add_to(right, k.first, k2.first, k2.second, c * c2);
        }
        r.expect(left == right, sym(B, a));
      }
    }
    {
      CheckResult& r = check("counit laws (" + bn + ")");
      Timer t(r);
      for (const auto& a : all) {
        const SCElement x = SCElement::symbol(B, a);
        SCElement left(family, field, B), right(family, field, B);
        for (const auto delta = H.coproduct(x); const auto& [k, c] : delta.terms()) {
          left += SCElement::symbol(B, k.second, c * H.counit(SCElement::symbol(B, k.first)));
          right += SCElement::symbol(B, k.first, c * H.counit(SCElement::symbol(B, k.second)));
        }
        r.expect(left == x && right == x, sym(B, a));
      }
    }
    {
      CheckResult& r = check("compatibility Delta(xy) = Delta(x)Delta(y) (" + bn + ")");
      Timer t(r);
      pairs([&](const auto& a, const auto& b) {
        const SCElement x = SCElement::symbol(B, a), y = SCElement::symbol(B, b);
        r.expect(H.coproduct(H.product(x, y)) == H.multiply(H.coproduct(x), H.coproduct(y)),
                 sym(B, a) + " * " + sym(B, b));
      });
    }
    {
      CheckResult& r = check("antipode identities (" + bn + ")");
      Timer t(r);
      for (const auto& a : all) {
        const SCElement x = SCElement::symbol(B, a);
        SCElement left(family, field, B), right(family, field, B);
        for (const auto delta = H.coproduct(x); const auto& [k, c] : delta.terms()) {
          left += H.product(H.antipode(SCElement::symbol(B, k.first)), SCElement::symbol(B, k.second)).scaled(c);
          right += H.product(SCElement::symbol(B, k.first), H.antipode(SCElement::symbol(B, k.second))).scaled(c);
        }
        const SCElement expected = SCElement::unit(family, field, B).scaled(H.counit(x));
        r.expect(left == expected && right == expected, sym(B, a));
      }
    }
    {
      CheckResult& r = check("nonnegative integer structure constants (" + bn + ")");
      Timer t(r);
      pairs([&](const auto& a, const auto& b) {
        r.expect(nonneg_integers(H.product(SCElement::symbol(B, a), SCElement::symbol(B, b))),
                 sym(B, a) + " * " + sym(B, b));
      });
      for (const auto& a : all) r.expect(nonneg_integers(H.coproduct(SCElement::symbol(B, a))), "Delta " + sym(B, a));
    }
    {
      CheckResult& r = check("grading (" + bn + ")");
      Timer t(r);
      pairs([&](const auto& a, const auto& b) {
        bool ok = true;
        for (const auto prod = H.product(SCElement::symbol(B, a), SCElement::symbol(B, b)); const auto& [nu, c] : prod.terms())
          ok = ok && nu.n() == a.n() + b.n();
        r.expect(ok, sym(B, a) + " * " + sym(B, b));
      });
      for (const auto& a : all) {
        bool ok = true;
        for (const auto delta = H.coproduct(SCElement::symbol(B, a)); const auto& [k, c] : delta.terms())
          ok = ok && k.first.n() + k.second.n() == a.n();
        r.expect(ok, "Delta " + sym(B, a));
      }
    }
  }
  {
    CheckResult& r = check("kappa product equals the P-basis route");
    Timer t(r);
    pairs([&](const auto& a, const auto& b) {
      const SCElement direct = H.kappa_product(a, b);
      const SCElement routed =
          H.to_kappa(H.product(H.to_P(SCElement::symbol(Basis::kappa, a)), H.to_P(SCElement::symbol(Basis::kappa, b))));
      r.expect(direct == routed, sym(Basis::kappa, a) + " * " + sym(Basis::kappa, b));
    });
  }
  {
    CheckResult& r = check("coproduct commutes with the basis change");
    Timer t(r);
    for (const auto& a : all) {
      const SCElement x = SCElement::symbol(Basis::kappa, a);
      r.expect(H.in_basis(H.coproduct(x), Basis::P) == H.coproduct(H.to_P(x)), sym(Basis::kappa, a));
    }
  }
  {
    CheckResult& r = check("basis changes are mutually inverse");
    Timer t(r);
    for (const auto& a : all) {
      const SCElement k = SCElement::symbol(Basis::kappa, a), p = SCElement::symbol(Basis::P, a);
      r.expect(H.to_kappa(H.to_P(k)) == k && H.to_P(H.to_kappa(p)) == p, a.to_string());
    }
  }
  return report;
}

}  // namespace scd
