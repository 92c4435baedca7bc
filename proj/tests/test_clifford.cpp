#include <doctest.h>

#include <map>

#include "generators.hpp"
#include "wres/clifford/subbundle.hpp"
#include "wres/clifford/trace_identities.hpp"

using namespace wres;
namespace tg = wres::testgen;

namespace {

using Gens = CliffordGenerators<GaussianRational>;

const Gens& gens4() {
  static const Gens g = build_generators<GaussianRational>(4);
  return g;
}

// letter 0..n-1 is c_j, n..2n-1 is chat_j
ExactMatrix word(const Gens& g, const std::vector<int>& letters) {
  ExactMatrix m = g.identity();
  for (int l : letters) m = multiply(m, l < g.n ? g.c[l] : g.c_hat[l - g.n]);
  return m;
}

bool relations_hold(const Gens& g) {
  ExactMatrix id = g.identity();
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) {
      GaussianRational d = i == j ? 2 : 0;
      if (multiply(g.c[i], g.c[j]) + multiply(g.c[j], g.c[i]) != id * (-d)) return false;
      if (multiply(g.c_hat[i], g.c_hat[j]) + multiply(g.c_hat[j], g.c_hat[i]) != id * d) return false;
      if (!is_zero(multiply(g.c[i], g.c_hat[j]) + multiply(g.c_hat[j], g.c[i]))) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("generator relations") {
  for (int n : {1, 2, 4, 6}) {
    CAPTURE(n);
    CHECK(relations_hold(build_generators<GaussianRational>(n)));
  }
  CHECK_THROWS_AS(build_generators<GaussianRational>(0), std::out_of_range);
  CHECK_THROWS_AS(build_generators<GaussianRational>(9), std::out_of_range);
}

TEST_CASE("generator examples") {
  const Gens& g = gens4();
  CHECK(trace(g.identity()) == GaussianRational(16));
  CHECK(is_zero(multiply(g.c[0], g.c[1]) + multiply(g.c[1], g.c[0])));
  CHECK(multiply(g.c[0], g.c[0]) == g.identity() * GaussianRational(-1));
  CHECK(trace_product(g.c[0], g.c[1]).is_zero());
  CHECK(trace_product(g.c[0], g.c[0]) == GaussianRational(-16));
  CHECK(trace(word(g, {4, 5, 2, 3})).is_zero());
}

TEST_CASE("numeric and exact realizations agree") {
  auto gn = build_generators<std::complex<double>>(4);
  const Gens& g = gens4();
  for (int j = 0; j < 4; ++j) {
    CHECK((to_numeric(g.c[j]) - gn.c[j]).norm() == 0.0);
    CHECK((to_numeric(g.c_hat[j]) - gn.c_hat[j]).norm() == 0.0);
  }
}

TEST_CASE("trace cyclicity on random words") {
  const Gens& g = gens4();
  for (int t = 0; t < 100; ++t) {
    std::vector<int> a(tg::uniform(1, 5)), b(tg::uniform(1, 5));
    for (int& l : a) l = tg::uniform(0, 7);
    for (int& l : b) l = tg::uniform(0, 7);
    ExactMatrix ma = word(g, a) * tg::gaussian(), mb = word(g, b) + g.identity() * tg::gaussian();
    CHECK(trace(multiply(ma, mb)) == trace(multiply(mb, ma)));
    CHECK(trace_product(ma, mb) == trace(multiply(ma, mb)));
  }
}

TEST_CASE("words with an unpaired index are traceless") {
  const Gens& g = gens4();
  std::vector<int> letters;
  int checked = 0;
  auto visit = [&](auto&& self, int len) -> void {
    if (int(letters.size()) == len) {
      // each frame index must occur an even number of times across c and chat letters
      std::map<int, int> count;
      for (int l : letters) count[l % 4]++;
      bool unpaired = false;
      for (auto [k, c] : count) unpaired |= (c % 2) != 0;
      if (unpaired) {
        CHECK(trace(word(g, letters)).is_zero());
        ++checked;
      }
      return;
    }
    for (int l = 0; l < 8; ++l) {
      letters.push_back(l);
      self(self, len);
      letters.pop_back();
    }
  };
  for (int len = 1; len <= 4; ++len) visit(visit, len);
  CHECK(checked > 0);
}

TEST_CASE("twist operator") {
  const Gens& g = gens4();
  CHECK(is_zero(build_A(g, SubbundleData::zero(4, {3}))));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    SubbundleData d = SubbundleData::random(4, seed);
    ExactMatrix A = build_A(g, d);
    CHECK(trace(A).is_zero());
    for (int b = 0; b < 4; ++b) CHECK(trace_product(g.c[b], A).is_zero());
    for (int j = 0; j < 3; ++j) CHECK(trace_product(A, g.c[j]).is_zero());
  }
  SubbundleData bad = SubbundleData::zero(4, {1});
  bad.f_basis = {1, 1};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("numeric twist operator matches exact") {
  const Gens& g = gens4();
  auto gn = build_generators<std::complex<double>>(4);
  SubbundleData d = SubbundleData::random(4, 7);
  CHECK((to_numeric(build_A(g, d)) - build_A(gn, d)).norm() < 1e-12);
}

TEST_CASE("boundary connection against finite-difference Christoffel symbols") {
  const Gens& g = gens4();
  BoundaryConnection bc = build_boundary_connection(g);
  auto numeric = connection_from_metric(4, 1.0);
  for (int i = 0; i < 4; ++i)
    for (int s = 0; s < 4; ++s)
      for (int t = 0; t < 4; ++t) {
        CAPTURE(i);
        CAPTURE(s);
        CAPTURE(t);
        CHECK(std::abs(numeric[i][s][t] - bc.omega[i][s][t].get_d()) < 1e-8);
      }
  // scaling in h'
  auto numeric2 = connection_from_metric(4, 0.5);
  CHECK(std::abs(numeric2[0][3][0] - 0.25) < 1e-8);
  CHECK(bc.c0 == Rational(-3, 4));
  CHECK(trace_product(bc.P2, g.c[3]) == GaussianRational(12));
  CHECK(bc.gamma[3] == Rational(3, 2));
}

TEST_CASE("trace identity suite") {
  const Gens& g = gens4();
  BoundaryConnection bc = build_boundary_connection(g);
  for (std::uint64_t seed : {0u, 3u, 4u}) {
    ExactMatrix A = build_A(g, SubbundleData::random(4, seed));
    for (const auto& r : trace_identity_suite(g, bc, A)) {
      CAPTURE(r.name);
      CHECK(r.pass);
    }
  }
}
