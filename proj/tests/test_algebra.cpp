#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "partsemi/algebra.hpp"
#include "partsemi/enumerate.hpp"

using namespace partsemi;

namespace {
  Partition P(char const* text) {
    return parse_partition(text);
  }
}  // namespace

TEST_CASE("in_T", "[algebra]") {
  CHECK(in_T(Transformation({1, 0, 0}), P("1|2,3")));
  CHECK(in_T(Transformation::identity(3), P("1|2,3")));
  CHECK_FALSE(in_T(Transformation({1, 2, 0}), P("1|2,3")));
  CHECK_THROWS_AS(in_T(Transformation::identity(4), P("1|2,3")),
                  SizeMismatch);
}

TEST_CASE("in_Sigma", "[algebra]") {
  CHECK(in_Sigma(Transformation({1, 0, 0}), P("1|2,3")));
  CHECK_FALSE(in_Sigma(Transformation({0, 0, 0}), P("1|2,3")));
  CHECK(in_Sigma(Transformation::identity(3), P("1|2,3")));
  CHECK_FALSE(in_Sigma(Transformation({1, 2, 0}), P("1|2,3")));
  CHECK_THROWS_AS(in_Sigma(Transformation::identity(2), P("1|2,3")),
                  SizeMismatch);
}

TEST_CASE("in_Gamma", "[algebra]") {
  CHECK(in_Gamma(Transformation({0, 0, 1, 1}), P("1|2|3,4")));
  CHECK_FALSE(in_Gamma(Transformation({0, 1, 1}), P("1|2,3")));
  CHECK(in_Gamma(Transformation::identity(3), P("1|2,3")));
  CHECK(in_Gamma(Transformation({0, 0, 0}), P("1|2,3")));
  CHECK_THROWS_AS(in_Gamma(Transformation::identity(2), P("1|2,3")),
                  SizeMismatch);
}

TEST_CASE("in_S", "[algebra]") {
  CHECK(in_S(Transformation({0, 2, 1}), P("1|2,3")));
  CHECK_FALSE(in_S(Transformation({1, 0, 0}), P("1|2,3")));
  // A bijection, but {3,4} goes onto {1,2} which straddles two blocks.
  CHECK_FALSE(in_S(Transformation({2, 3, 0, 1}), P("1|2|3,4")));
  CHECK(in_S(Transformation({2, 3, 0, 1}), P("1,2|3,4")));
  CHECK_THROWS_AS(in_S(Transformation::identity(2), P("1|2,3")),
                  SizeMismatch);
}

TEST_CASE("membership agrees with set-wise definitions, n <= 5",
          "[algebra][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const maps = oracle::all_maps(n);
    for (auto const& p : all_partitions(n)) {
      auto const t_members = oracle::filter_all(
          n, [&](auto const& f) { return oracle::t_by_definition(f, p); });
      for (auto const& f : maps) {
        REQUIRE(in_T(f, p) == oracle::t_by_definition(f, p));
        REQUIRE(in_Gamma(f, p) == oracle::gamma_by_definition(f, p));
      }
      if (n <= 4) {
        // S(X, P) is the group of units of the monoid T(X, P).
        for (auto const& f : t_members) {
          REQUIRE(in_S(f, p) == oracle::is_unit(f, t_members));
        }
      }
    }
  }
}

TEST_CASE("character", "[algebra]") {
  CHECK(character(Transformation({1, 0, 0}), P("1|2,3")).targets()
        == std::vector<std::size_t>{1, 0});
  CHECK(character(Transformation::identity(4), P("1|2|3,4")).targets()
        == std::vector<std::size_t>{0, 1, 2});
  CHECK(character(Transformation({0, 0, 1, 1}), P("1|2|3,4")).targets()
        == std::vector<std::size_t>{0, 0, 1});
  CHECK_THROWS_AS(character(Transformation({1, 2, 0}), P("1|2,3")),
                  DomainError);
}

TEST_CASE("character rank and bijectivity", "[algebra]") {
  Character const swap({1, 0});
  CHECK(character_rank(swap) == 2);
  CHECK(character_is_bijective(swap));
  Character const collapse({0, 0, 1});
  CHECK(character_rank(collapse) == 2);
  CHECK_FALSE(character_is_bijective(collapse));
  Character const one({0});
  CHECK(character_rank(one) == 1);
  CHECK(character_is_bijective(one));
  CHECK_THROWS_AS(Character({0, 2}), DomainError);
}

TEST_CASE("block_map_family", "[algebra]") {
  auto const fam = block_map_family(Transformation({1, 0, 0}), P("1|2,3"));
  REQUIRE(fam.size() == 2);
  CHECK(fam[0].codomain == 1);
  CHECK(fam[0].images == std::vector<point_type>{1});
  CHECK(fam[0].injective);
  CHECK_FALSE(fam[0].surjective);
  CHECK(fam[1].codomain == 0);
  CHECK(fam[1].images == std::vector<point_type>{0, 0});
  CHECK_FALSE(fam[1].injective);
  CHECK(fam[1].surjective);

  auto const p  = P("1|2|3,4");
  auto const id = block_map_family(Transformation::identity(4), p);
  for (std::size_t i = 0; i < id.size(); ++i) {
    CHECK(id[i].is_identity(p));
    CHECK(id[i].injective);
    CHECK(id[i].surjective);
  }

  auto const irr = block_map_family(Transformation({0, 0, 1, 1}), p);
  CHECK(irr[2].codomain == 1);
  CHECK(irr[2].images == std::vector<point_type>{1, 1});
  CHECK(irr[2].surjective);
  CHECK_FALSE(irr[2].injective);

  CHECK_THROWS_AS(block_map_family(Transformation({1, 2, 0}), P("1|2,3")),
                  DomainError);
}

TEST_CASE("structural facts about Gamma, n <= 5", "[algebra][property]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const maps = oracle::all_maps(n);
    for (auto const& p : all_partitions(n)) {
      std::size_t gamma_sigma = 0;
      std::size_t units       = 0;
      for (auto const& f : maps) {
        bool const g = in_Gamma(f, p);
        bool const s = in_S(f, p);
        REQUIRE((!s || g));
        REQUIRE((g && in_Sigma(f, p)) == s);
        gamma_sigma += (g && in_Sigma(f, p)) ? 1 : 0;
        units += s ? 1 : 0;
        if (in_T(f, p)) {
          auto const fam = block_map_family(f, p);
          for (std::size_t i = 0; i < fam.size(); ++i) {
            // |ran f_i| <= |dom f_i| always; surjective onto X_j in Gamma.
            std::vector<point_type> ran = fam[i].images;
            std::sort(ran.begin(), ran.end());
            ran.erase(std::unique(ran.begin(), ran.end()), ran.end());
            REQUIRE(ran.size() <= p.block_size(i));
            if (g) {
              REQUIRE(fam[i].surjective);
            }
          }
        }
        if (!g) {
          continue;
        }
        auto const chi = character(f, p);
        if (chi.is_bijective()) {
          REQUIRE(s);
        }
        auto const fam = block_map_family(f, p);
        for (std::size_t i = 0; i < fam.size(); ++i) {
          if (p.block_size(i) == p.smallest_block_size()) {
            REQUIRE(fam[i].injective);
          }
        }
      }
      REQUIRE(gamma_sigma == units);
    }
  }
}

TEST_CASE("trivial partitions", "[algebra]") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<std::size_t> discrete(n), single(n, 0);
    std::iota(discrete.begin(), discrete.end(), std::size_t(0));
    auto const singletons = Partition::from_rgs(discrete);
    auto const one_block  = Partition::from_rgs(single);
    std::size_t all = 0, perms = 0, gamma_one = 0;
    for (auto const& f : oracle::all_maps(n)) {
      ++all;
      REQUIRE(in_T(f, singletons));
      REQUIRE(in_Gamma(f, singletons));
      perms += f.is_permutation() ? 1 : 0;
      REQUIRE(in_Gamma(f, one_block) == f.is_permutation());
      gamma_one += in_Gamma(f, one_block) ? 1 : 0;
    }
    REQUIRE(gamma_one == perms);
  }
}
