#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "tkk/functor.hpp"

using namespace tkk;

TEST_CASE("standard morphisms verify as triple isomorphisms") {
  Rng rng(51);
  const TripleSpace m23 = TripleSpace::make(Descriptor::cartan1(2, 3));
  const TripleSpace m32 = TripleSpace::make(Descriptor::cartan1(3, 2));
  const TripleSpace spin = TripleSpace::make(Descriptor::spin(4));

  TripleMap id = triple_map_identity(spin);
  CHECK(verify_triple_map(id, 20, 1).overall_pass());

  TripleMap rot = triple_map_scalar(m23, Complex(0, 1));
  CHECK(verify_triple_map(rot, 20, 2).overall_pass());

  TripleMap uni = triple_map_unitary(m23, m23, rng.unitary(2), rng.unitary(3));
  CHECK(verify_triple_map(uni, 20, 3).overall_pass());

  TripleMap tr = triple_map_transpose(m23, m32);
  CHECK(verify_triple_map(tr, 20, 4).overall_pass());

  TripleMap conj = triple_map_conjugation(spin);
  CHECK(verify_triple_map(conj, 20, 5).overall_pass());
  CHECK(conj.op.kind == OpKind::conjugate_linear);
}

TEST_CASE("non-isomorphisms are rejected") {
  const TripleSpace s = TripleSpace::make(Descriptor::cartan1(2, 2));
  // scalar of modulus != 1 scales the product by |lambda|^2
  TripleMap bad = triple_map_scalar(s, Complex(2, 0));
  CHECK_FALSE(verify_triple_map(bad, 20, 6).overall_pass());
  CHECK_FALSE(bad.verified);

  TripleMap noisy = triple_map_identity(s);
  Rng rng(52);
  noisy.op.real_matrix += 1e-3 * RMatrix::NullaryExpr(8, 8, [&](int, int) { return rng.normal(); });
  CHECK_FALSE(verify_triple_map(noisy, 20, 7).overall_pass());

  TripleMap flat = triple_map_identity(s);
  flat.op.real_matrix.setZero();
  CHECK_FALSE(verify_triple_map(flat, 20, 8).overall_pass());
}

TEST_CASE("functor laws on composable morphisms") {
  Rng rng(53);
  const TripleSpace m23 = TripleSpace::make(Descriptor::cartan1(2, 3));
  const TripleSpace m32 = TripleSpace::make(Descriptor::cartan1(3, 2));
  const TKKAlgebra a23(m23), a32(m32);

  TripleMap tr = triple_map_transpose(m23, m32);
  TripleMap uni = triple_map_unitary(m32, m32, rng.unitary(3), rng.unitary(2));
  REQUIRE(verify_triple_map(tr, 20, 9).overall_pass());
  REQUIRE(verify_triple_map(uni, 20, 10).overall_pass());

  const Report rep = functor_laws(tr, uni, a23, a32, a32);
  for (const auto& r : rep.records) {
    INFO(r.name, " residual ", r.max_residual);
    CHECK(r.pass);
  }
}

TEST_CASE("functor image is a graded isometric isomorphism and recovers phi") {
  Rng rng(54);
  const TripleSpace s = TripleSpace::make(Descriptor::cartan1(2, 2));
  const TKKAlgebra alg(s);
  TripleMap phi = triple_map_unitary(s, s, rng.unitary(2), rng.unitary(2));
  REQUIRE(verify_triple_map(phi, 30, 11).overall_pass());

  GradedMap t = f_morphism(phi, alg, alg);
  CHECK(verify_graded_iso(t, 30, 12).overall_pass());
  CHECK(t.verified);
  CHECK(isometry_residual(t, 30, 13) < 1e-8);

  const TripleMap back = recover_triple_map(t);
  CHECK(op_equal(back.op, phi.op));

  // scaling the degree blocks breaks the isometry but not the grading
  GradedMap scaled = t;
  scaled.t_m1.real_matrix *= 2.0;
  scaled.t_p1.real_matrix *= 2.0;
  CHECK(isometry_residual(scaled, 30, 14) > 0.5);

  // perturbing a block breaks the bracket law
  GradedMap broken = t;
  broken.t_p1.real_matrix(0, 0) += 1e-3;
  broken.verified = false;
  CHECK_FALSE(verify_graded_iso(broken, 30, 15).overall_pass());
  CHECK_THROWS(recover_triple_map(broken));
}

TEST_CASE("degree-0 action transports generators and matches conjugation") {
  Rng rng(55);
  const TripleSpace s = TripleSpace::make(Descriptor::cartan2(4));
  const TKKAlgebra alg(s);
  TripleMap phi = triple_map_scalar(s, std::polar(1.0, 0.7));
  REQUIRE(verify_triple_map(phi, 20, 16).overall_pass());
  GradedMap t = f_morphism(phi, alg, alg);

  const CVector a = random_element(s, rng), b = random_element(s, rng);
  const V0Element h = box(s, a, b);
  const V0Element witness = t.apply_v0(h);
  V0Element stripped = h;
  stripped.generators.clear();
  stripped.has_generators = false;
  const V0Element conjugated = t.apply_v0(stripped);
  CHECK((witness.op - conjugated.op).norm() < 1e-10 * (1 + witness.op.norm()));
  CHECK((witness.op - box(s, phi.apply(a), phi.apply(b)).op).norm() <
        1e-10 * (1 + witness.op.norm()));
}

TEST_CASE("conjugate-linear variant") {
  const TripleSpace s = TripleSpace::make(Descriptor::cartan1(2, 2));
  const TKKAlgebra alg(s);
  TripleMap conj = triple_map_conjugation(s);
  REQUIRE(verify_triple_map(conj, 20, 17).overall_pass());
  GradedMap t = f_morphism(conj, alg, alg);
  REQUIRE(verify_graded_iso(t, 20, 18).overall_pass());
  const Report rep = conjugate_variant_check(t, 30, 19);
  for (const auto& r : rep.records) {
    INFO(r.name, " residual ", r.max_residual);
    CHECK(r.pass);
  }

  TripleMap id = triple_map_identity(s);
  REQUIRE(verify_triple_map(id, 20, 20).overall_pass());
  GradedMap tid = f_morphism(id, alg, alg);
  REQUIRE(verify_graded_iso(tid, 20, 21).overall_pass());
  CHECK_THROWS_AS((void)conjugate_variant_check(tid, 10, 22), std::invalid_argument);
}

TEST_CASE("direct sums of morphisms and JSON round trip") {
  Rng rng(56);
  const TripleSpace part = TripleSpace::make(Descriptor::cartan1(2, 2));
  const TripleSpace s =
      TripleSpace::make(Descriptor::sum({Descriptor::cartan1(2, 2), Descriptor::cartan1(2, 2)}));
  const CMatrix u = rng.unitary(2), v = rng.unitary(2);
  TripleMap blocks = triple_map_direct_sum(
      s, s, {triple_map_unitary(part, part, u, v), triple_map_transpose(part, part)});
  CHECK(verify_triple_map(blocks, 30, 23).overall_pass());

  const TripleMap decoded = triple_map_from_json(triple_map_to_json(blocks), s, s);
  CHECK_FALSE(decoded.verified);  // deserialized maps must re-verify
  CHECK(op_equal(decoded.op, blocks.op));
}
