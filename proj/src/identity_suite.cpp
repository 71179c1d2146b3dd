#include "tangent/identity_suite.hpp"

#include <random>
#include <sstream>

#include "tangent/algebra.hpp"
#include "tangent/corpus.hpp"
#include "tangent/fourier.hpp"

namespace tangent {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { check_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++check_.checks;
    if (!ok) {
      if (check_.failures == 0) check_.first_failure = what;
      ++check_.failures;
    }
  }

  // Runs fn; an exception counts as one failed check.
  template <class Fn>
  void guarded(const std::string& what, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      expect(false, what + ": " + e.what());
    }
  }

  IdentityCheck done() { return std::move(check_); }

 private:
  IdentityCheck check_;
};

std::string label(int m, const std::string& extra = "") {
  std::ostringstream out;
  out << "m=" << m;
  if (!extra.empty()) out << " " << extra;
  return out.str();
}

// Coefficients of (λ − s)^m, lowest degree first, by repeated multiplication.
std::vector<Rational> shifted_power(const Rational& s, int m) {
  std::vector<Rational> poly{Rational(1)};
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e + 1] += poly[e];
      next[e] -= s * poly[e];
    }
    poly = std::move(next);
  }
  return poly;
}

IdentityCheck binomial_differences(const IdentitySuiteOptions& o) {
  Tally t("binomial difference identities");
  for (int m = 1; m <= o.max_m; ++m)
    for (int r = 0; r <= o.max_r; ++r)
      for (int j = 0; j < m; ++j)
        t.guarded(label(m), [&] {
          t.expect(sgn(binomial_difference_residual(m, r, j, o.c)) == 0,
                   label(m, "r=" + std::to_string(r) + " j=" + std::to_string(j)));
        });
  return t.done();
}

// Σ r_k t^k − t^m + (t − s)^m vanishes on an (m+1) × (m+1) grid of (t, s).
IdentityCheck recurrence_polynomial(const IdentitySuiteOptions& o) {
  Tally t("recurrence polynomial -(t - rho^2)^m");
  for (int m = 1; m <= o.max_m; ++m) {
    const auto rec = build_recurrence(m);
    for (int a = 0; a <= m; ++a)
      for (int b = 0; b <= m; ++b) {
        const Rational tt(a - 1, 2);
        const Rational s(2 * b + 1, 3);
        const auto r = rec.at(s);
        Rational sum = -ipow(tt, static_cast<unsigned>(m)) + ipow(Rational(tt - s), static_cast<unsigned>(m));
        for (int k = 0; k < m; ++k) sum += r[k] * ipow(tt, static_cast<unsigned>(k));
        t.expect(is_zero(sum), label(m, "t=" + to_string(tt) + " rho2=" + to_string(s)));
      }
  }
  return t.done();
}

void companion_checks(const IdentitySuiteOptions& o, std::mt19937_64& rng, Tally& det_tally,
                      Tally& char_tally, Tally& nil_tally) {
  for (int m = 1; m <= o.max_m; ++m)
    for (int i = 0; i < o.random_rho; ++i) {
      const Rational rho2 = random_rational(rng, 1, 60, 25);
      const ExactMatrix s = companion_matrix<Rational>(m, rho2);
      const std::string where = label(m, "rho2=" + to_string(rho2));
      det_tally.expect(determinant(s) == ipow(rho2, static_cast<unsigned>(m)), where);
      char_tally.expect(characteristic_polynomial(s) == shifted_power(rho2, m), where);
      const ExactMatrix shifted = s - ExactMatrix::identity(m) * rho2;
      nil_tally.expect(power(shifted, static_cast<unsigned>(m)).is_zero_matrix(), where);
    }
}

const std::vector<Rational>& sample_rhos() {
  static const std::vector<Rational> rhos{Rational(1, 2), Rational(1), Rational(3), Rational(7, 5)};
  return rhos;
}

IdentityCheck basis_nonsingular(const IdentitySuiteOptions& o) {
  Tally t("B_0 non-singular");
  for (int m = 1; m <= o.max_m; ++m)
    for (const auto& rho : sample_rhos())
      t.expect(!is_zero(determinant(moment_basis_matrix<Rational>(m, rho, o.c))),
               label(m, "rho=" + to_string(rho)));
  return t.done();
}

IdentityCheck conjugation(const IdentitySuiteOptions& o) {
  Tally t("B_0^-1 S B_0 = rho^2 I + N");
  for (int m = 1; m <= o.max_m; ++m)
    for (const auto& rho : sample_rhos()) {
      const std::string where = label(m, "rho=" + to_string(rho));
      t.guarded(where, [&] {
        conjugate_companion(m, rho, o.c);
        t.expect(true, where);
      });
    }
  return t.done();
}

IdentityCheck krylov(const IdentitySuiteOptions& o, std::mt19937_64& rng) {
  Tally t("Krylov rank vs (A - lambda I)^(m-1) z");
  std::uniform_int_distribution<int> pick_m(1, o.max_m);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int i = 0; i < o.krylov_instances; ++i) {
    const int m = pick_m(rng);
    const Rational rho = random_rational(rng, 1, 9, 4);
    std::vector<Rational> z(m);
    // A third of the instances get a zero last coordinate, so both outcomes occur.
    const bool drop_last = coin(rng) == 0;
    for (int k = 0; k < m; ++k) z[k] = random_rational(rng, -5, 5, 3);
    if (drop_last) z[m - 1] = 0;
    const std::string where = label(m, "instance " + std::to_string(i));
    t.guarded(where, [&] {
      const ExactMatrix a = conjugate_companion(m, rho, o.c);
      const bool spans = krylov_spans(a, z, rho * rho);
      // With a single Jordan block the answer is whether z has a nonzero last coordinate.
      t.expect(spans == !is_zero(z[m - 1]), where);
    });
  }
  return t.done();
}

IdentityCheck hankel_shift(const IdentitySuiteOptions& o, std::mt19937_64& rng) {
  Tally t("A_k = S^k A_0");
  const int n = 16;
  for (int m = 1; m <= o.max_m; ++m) {
    const auto data = random_tangential_data(rng, m, n);
    for (int i = 0; i < n; i += 3) {
      const auto point = data.exact_at(grid_angle(i, n));
      std::vector<Rational> p;
      for (int k = 0; k <= 2 * m + 1; ++k) p.push_back(moment_at(point, 2 * k));
      const ExactMatrix s = companion_matrix<Rational>(m, point.rho * point.rho);
      const ExactMatrix a0 = hankel_moments<Rational>(p, m, 0);
      for (int k = 1; k <= 3; ++k)
        t.expect(hankel_moments<Rational>(p, m, k) == power(s, static_cast<unsigned>(k)) * a0,
                 label(m, "k=" + std::to_string(k) + " theta index " + std::to_string(i)));
    }
  }
  return t.done();
}

IdentityCheck certificate(const IdentitySuiteOptions& o, std::mt19937_64& rng) {
  Tally t("non-singularity certificate");
  const int n = 16;
  std::vector<double> thetas;
  for (int i = 0; i < n; i += 2) thetas.push_back(grid_angle(i, n));

  if (o.max_m >= 2) {
    const TangentialData disk(make_ellipse(Rational(1), Rational(1), n),
                              {CircleFunction(TrigPoly<Rational>()),
                               CircleFunction(TrigPoly<Rational>::constant(Rational(-1)))});
    t.guarded("disk q_1 = -1", [&] {
      const auto cert = certify_nonsingular(disk, thetas);
      t.expect(cert.verdict, "disk q_1 = -1 verdict");
      for (const auto& pt : cert.points) t.expect(pt.determinant == Rational(-16), "disk det A_0 = -16");
    });
  }
  for (int m = 1; m <= o.max_m; ++m) {
    const auto data = random_tangential_data(rng, m, n);
    t.guarded(label(m), [&] {
      const auto cert = certify_nonsingular(data, thetas);
      t.expect(cert.verdict, label(m, "verdict"));
      for (const auto& pt : cert.points) {
        t.expect(pt.leading_identity, label(m, "N^(m-1) Q"));
        t.expect(pt.basis_identity, label(m, "B_0 Q = P_0"));
        t.expect(pt.krylov_consistent, label(m, "Krylov"));
      }
    });
  }
  return t.done();
}

}  // namespace

std::vector<IdentityCheck> run_identity_suite(const IdentitySuiteOptions& options) {
  if (options.max_m < 1) throw InvalidParameter("identity suite needs max_m >= 1");
  std::mt19937_64 rng(options.seed);
  std::vector<IdentityCheck> out;
  out.push_back(binomial_differences(options));
  out.push_back(recurrence_polynomial(options));
  Tally det("det S = rho^(2m)");
  Tally chr("char poly of S = (lambda - rho^2)^m");
  Tally nil("(S - rho^2 I)^m = 0");
  companion_checks(options, rng, det, chr, nil);
  out.push_back(det.done());
  out.push_back(chr.done());
  out.push_back(nil.done());
  out.push_back(basis_nonsingular(options));
  out.push_back(conjugation(options));
  out.push_back(krylov(options, rng));
  out.push_back(hankel_shift(options, rng));
  out.push_back(certificate(options, rng));
  return out;
}

}  // namespace tangent
