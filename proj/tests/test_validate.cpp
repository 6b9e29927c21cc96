#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "zonogon/enumerate.hpp"
#include "zonogon/irreducible.hpp"
#include "zonogon/validate.hpp"

using namespace zonogon;
using zonogon::testhelp::all_tilings;
using zonogon::testhelp::build_from_moves;
using zonogon::testhelp::mk;

namespace {

bool has_failed_check(const ValidationReport& r, const std::string& name) {
  for (const auto& f : r.findings)
    if (f.check == name && !f.pass) return true;
  return false;
}

}  // namespace

TEST_CASE("enumerator outputs validate cleanly") {
  SearchConfig cfg;
  for (int k : {2, 3}) {
    ClassSet set = enumerate_irreducible_classes(k, cfg);
    for (const auto& [code, entry] : set.by_code) {
      ValidationReport r = validate_complex(entry.rep);
      if (!r.ok())
        for (const auto& f : r.findings)
          if (!f.pass) MESSAGE(f.check, ": ", f.detail);
      CHECK(r.ok());
    }
  }
  ClassSet base = enumerate_irreducible_classes(mk(4, {1, 1, 1, 1}), cfg);
  for (const auto& [code, entry] : base.by_code)
    CHECK(validate_complex(entry.rep).ok());
}

TEST_CASE("single-tile complexes fail only irreducibility") {
  TilingComplex whole = build_from_moves(mk(3, {1, 1, 1}), {Move{0, 3}});
  ValidationReport r = validate_complex(whole);
  CHECK_FALSE(r.ok());
  CHECK(has_failed_check(r, "irreducible"));
  int failures = 0;
  for (const auto& f : r.findings)
    if (!f.pass) ++failures;
  CHECK(failures == 1);
}

TEST_CASE("reducible tilings are flagged") {
  // Pick any multi-tile tiling of the doubled-direction hexagon that the
  // sweep itself marks reducible and make sure the validator agrees.
  int flagged = 0;
  for (const TilingComplex& c : all_tilings(mk(3, {2, 1, 1}))) {
    if (is_irreducible(c).first) continue;
    ValidationReport r = validate_complex(c);
    CHECK(has_failed_check(r, "irreducible"));
    CHECK_FALSE(r.ok());
    ++flagged;
  }
  CHECK(flagged > 0);
}

TEST_CASE("broken incidence gates the remaining checks") {
  SearchConfig cfg;
  ClassSet set = enumerate_irreducible_classes(3, cfg);
  TilingComplex c = set.by_code.begin()->second.rep;
  c.edges[0].head = c.vertex_count + 5;
  ValidationReport r = validate_complex(c);
  CHECK(has_failed_check(r, "integrity"));
  for (const auto& f : r.findings) CHECK_FALSE(f.pass);
}

TEST_CASE("angle tampering is caught") {
  SearchConfig cfg;
  ClassSet set = enumerate_irreducible_classes(3, cfg);
  TilingComplex c = set.by_code.begin()->second.rep;
  c.faces[0].angle_units[0] += 1;
  ValidationReport r = validate_complex(c);
  CHECK(has_failed_check(r, "face-zonogon"));
}

TEST_CASE("boundary tampering is caught") {
  SearchConfig cfg;
  ClassSet set = enumerate_irreducible_classes(3, cfg);
  TilingComplex c = set.by_code.begin()->second.rep;
  REQUIRE_FALSE(c.boundary_sides[0].empty());
  c.boundary_sides[0].pop_back();
  ValidationReport r = validate_complex(c);
  CHECK_FALSE(r.ok());
}

TEST_CASE("merge and split mutants never validate") {
  std::mt19937_64 rng(2026);
  SearchConfig cfg;
  std::vector<TilingComplex> reps;
  ClassSet set = enumerate_irreducible_classes(3, cfg);
  for (const auto& [code, entry] : set.by_code) reps.push_back(entry.rep);
  REQUIRE_FALSE(reps.empty());
  int rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const TilingComplex& base = reps[trial % reps.size()];
    TilingComplex mutant = trial % 2 == 0 ? oracles::merge_mutant(base, rng)
                                          : oracles::split_mutant(base, rng);
    ValidationReport r = validate_complex(mutant);
    if (!r.ok()) ++rejected;
  }
  CHECK(rejected == 300);
}

TEST_CASE("role tampering is caught") {
  SearchConfig cfg;
  ClassSet set = enumerate_irreducible_classes(3, cfg);
  TilingComplex c = set.by_code.begin()->second.rep;
  for (int v = 0; v < c.vertex_count; ++v)
    if (c.roles[v] == VertexRole::interior) {
      c.roles[v] = VertexRole::side;
      break;
    }
  ValidationReport r = validate_complex(c);
  CHECK(has_failed_check(r, "vertex-angles"));
}
