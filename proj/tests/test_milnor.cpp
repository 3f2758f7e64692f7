#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "hv/milnor.hpp"

using namespace hv;

TEST_CASE("generic hilbert function of the jacobian ring") {
  CHECK(milnor_hilbert(3, 3) == std::vector<BigInt>{1, 4, 6, 4, 1});
  CHECK(milnor_hilbert(2, 2) == std::vector<BigInt>{1});
  auto quintic = milnor_hilbert(4, 5);
  CHECK(quintic.size() == 16);  // rho = 15
  CHECK(quintic[5] == 101);
  CHECK(quintic.back() == 1);
}

TEST_CASE("macaulay symmetry of the generic hilbert function") {
  for (Int n = 2; n <= 5; ++n)
    for (Int d = 2; d <= 6; ++d) {
      auto h = milnor_hilbert(n, d);
      Int rho = (n + 1) * (d - 2);
      REQUIRE(static_cast<Int>(h.size()) == rho + 1);
      CHECK(h[static_cast<std::size_t>(rho)] == 1);
      for (Int k = 0; k <= rho; ++k)
        CHECK(h[static_cast<std::size_t>(k)] == h[static_cast<std::size_t>(rho - k)]);
    }
}

TEST_CASE("jacobian partials") {
  auto fermat = SparsePolynomial::fermat(3, 3);
  auto parts = jacobian_partials(fermat);
  REQUIRE(parts.size() == 4);
  for (Int i = 0; i < 4; ++i) {
    REQUIRE(parts[static_cast<std::size_t>(i)].terms().size() == 1);
    const auto& t = parts[static_cast<std::size_t>(i)].terms()[0];
    CHECK(t.coeff == 3);
    CHECK(t.exps[static_cast<std::size_t>(i)] == 2);
  }

  auto xy = SparsePolynomial::parse("1 2 101\n1 1 1\n");
  auto dxy = jacobian_partials(xy);
  REQUIRE(dxy.size() == 2);
  CHECK(dxy[0].terms() == std::vector<PolyTerm>{{1, {0, 1}}});
  CHECK(dxy[1].terms() == std::vector<PolyTerm>{{1, {1, 0}}});

  auto mixed = SparsePolynomial::parse("2 3 101\n1 2 1 0\n1 0 0 3\n");
  auto dm = jacobian_partials(mixed);
  CHECK(dm[0].terms() == std::vector<PolyTerm>{{2, {1, 1, 0}}});
  CHECK(dm[1].terms() == std::vector<PolyTerm>{{1, {2, 0, 0}}});
  CHECK(dm[2].terms() == std::vector<PolyTerm>{{3, {0, 0, 2}}});
}

TEST_CASE("polynomial parsing validates its contract") {
  CHECK_THROWS_AS(SparsePolynomial::parse("2 3 101\n1 1 1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(SparsePolynomial::parse("2 3 101\n1 2 1\n"), std::invalid_argument);
  // duplicate exponent vectors merge, zero coefficients drop
  auto merged = SparsePolynomial::parse("1 2 7\n3 1 1\n4 1 1\n");
  CHECK(merged.is_zero());
}

TEST_CASE("polynomial file format round-trips bit-exactly") {
  std::string text = "3 3 2147483647\n1 3 0 0 0\n1 0 3 0 0\n1 0 0 3 0\n1 0 0 0 3\n";
  auto f = SparsePolynomial::parse(text);
  CHECK(f.to_text() == text);
  CHECK(f == SparsePolynomial::fermat(3, 3));
  // unsorted, negative-coefficient input normalizes once and is stable after
  auto g = SparsePolynomial::parse("1 2 101\n-1 0 2\n5 2 0\n");
  auto once = g.to_text();
  CHECK(SparsePolynomial::parse(once).to_text() == once);
  CHECK(once == "1 2 101\n5 2 0\n100 0 2\n");
}

TEST_CASE("ideal dimensions match the generic hilbert function for fermat") {
  auto d33 = ideal_dims(SparsePolynomial::fermat(3, 3), 4);
  CHECK(d33.dims == std::vector<Int>{1, 4, 6, 4, 1});
  CHECK(d33.matches_generic);

  auto d22 = ideal_dims(SparsePolynomial::fermat(2, 2), 2);
  CHECK(d22.dims == std::vector<Int>{1, 0, 0});
  CHECK(d22.matches_generic);

  auto d43 = ideal_dims(SparsePolynomial::fermat(4, 3), 6);
  CHECK(d43.dims == std::vector<Int>{1, 5, 10, 10, 5, 1, 0});
  CHECK(d43.matches_generic);
}

TEST_CASE("fermat oracle matches the generic hilbert function on the full desk grid") {
  for (Int n = 2; n <= 4; ++n)
    for (Int d = 2; d <= 5; ++d) {
      Int rho = (n + 1) * (d - 2);
      auto dims = ideal_dims(SparsePolynomial::fermat(n, d), rho);
      auto generic = milnor_hilbert(n, d);
      REQUIRE(dims.matches_generic);
      for (Int k = 0; k <= rho; ++k)
        CHECK(BigInt(dims.dims[static_cast<std::size_t>(k)]) ==
              generic[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("a non-smooth polynomial is reported as divergent") {
  // x0^3 has a two-dimensional singular locus in P^2
  auto cusp = SparsePolynomial::parse("2 3 2147483647\n1 3 0 0\n");
  auto dims = ideal_dims(cusp, 3);
  CHECK_FALSE(dims.matches_generic);
  CHECK(dims.note.find("singular or unlucky prime") != std::string::npos);
}

TEST_CASE("perturbed fermat stays smooth at two primes") {
  for (std::uint32_t p : {kOraclePrime, kOracleCheckPrime}) {
    std::ostringstream text;
    text << "3 3 " << p << "\n";
    for (auto line : {"1 3 0 0 0", "1 0 3 0 0", "1 0 0 3 0", "1 0 0 0 3", "1 1 1 1 0"})
      text << line << "\n";
    auto f = SparsePolynomial::parse(text.str());
    auto dims = ideal_dims(f, 4);
    CHECK(dims.matches_generic);
    CHECK(dims.dims == std::vector<Int>{1, 4, 6, 4, 1});
  }
}

TEST_CASE("jacobian map rank hits the macaulay cutoff") {
  auto f = SparsePolynomial::fermat(3, 4);
  auto h = milnor_hilbert(3, 4);
  Int rho = 8;
  // coker dim equals dim R_{d+r}; the graded dimensions are unimodal, so it
  // is non-increasing from the symmetry midpoint on and zero exactly past rho
  Int prev = -1;
  for (Int r = -1; r <= 6; ++r) {
    auto mr = jacobian_map_rank(f, r);
    Int k = 4 + r;
    BigInt expected = k <= rho ? h[static_cast<std::size_t>(k)] : BigInt(0);
    CHECK(BigInt(mr.coker_dim) == expected);
    if (2 * k > rho) {
      if (prev >= 0) CHECK(mr.coker_dim <= prev);
      prev = mr.coker_dim;
    }
    CHECK((mr.coker_dim == 0) == (k > rho));
  }
  CHECK(jacobian_map_rank(f, 5).coker_dim == 0);   // r = n(d-2)-1
  CHECK(jacobian_map_rank(f, 4).coker_dim == 1);   // dim R_8 = 1
  CHECK_THROWS_AS(jacobian_map_rank(f, -2), std::invalid_argument);
}

TEST_CASE("dense and sparse elimination agree") {
  using detail::SparseRow;
  std::vector<SparseRow> rows = {
      {{0, 1}, {2, 3}},
      {{1, 5}},
      {{0, 2}, {2, 6}},          // scalar multiple of the first row
      {{0, 1}, {1, 5}, {2, 3}},  // sum of the first two
      {{3, 7}, {4, 1}},
  };
  CHECK(detail::rank_dense(rows, 5, 101) == 3);
  CHECK(detail::rank_sparse(rows, 5, 101) == 3);
  CHECK(detail::rank_dense({}, 5, 101) == 0);
}

TEST_CASE("degrees past the dense column limit route through sparse elimination") {
  auto f = SparsePolynomial::fermat(4, 5);
  // C(28,4) = 20475 columns in degree 24, past the dense limit; R_24 = 0
  Int rank = detail::jacobian_ideal_rank(f, 24);
  CHECK(BigInt(rank) == binom(24 + 4, 4));
}

TEST_CASE("a dense cubic with generic coefficients matches the generic dimensions") {
  std::vector<PolyTerm> terms;
  auto monos = detail::monomials_of_degree(4, 3);
  REQUIRE(monos.size() == 20);
  for (std::size_t idx = 0; idx < monos.size(); ++idx)
    terms.push_back(PolyTerm{static_cast<std::uint32_t>(idx + 1), monos[idx]});
  SparsePolynomial f(kOraclePrime, 4, 3, std::move(terms));
  auto dims = ideal_dims(f, 4);
  CHECK(dims.matches_generic);
  CHECK(dims.dims == std::vector<Int>{1, 4, 6, 4, 1});
}

TEST_CASE("oracle dimension function serves the window queries") {
  auto fn = milnor_dim_fn(SparsePolynomial::fermat(4, 3));
  CHECK(fn(3) == 10);
  CHECK(fn(-1) == 0);
  CHECK(fn(6) == 0);  // past rho = 5
}
