#include "tkk/functor.hpp"

#include <functional>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace tkk {

namespace {

TripleMap map_from_basis_action(const TripleSpace& domain, const TripleSpace& codomain,
                                const std::function<CVector(const CVector&)>& action,
                                OpKind kind) {
  const int n = domain.complex_dim();
  const int m = codomain.complex_dim();
  CMatrix a(m, n);
  for (int k = 0; k < n; ++k) a.col(k) = action(domain.basis_element(k));
  TripleMap phi;
  phi.domain = &domain;
  phi.codomain = &codomain;
  phi.op = kind == OpKind::conjugate_linear ? RealLinearOp::from_conjugate(a)
                                            : RealLinearOp::from_complex(a);
  return phi;
}

}  // namespace

TripleMap triple_map_identity(const TripleSpace& s) {
  TripleMap phi;
  phi.domain = &s;
  phi.codomain = &s;
  phi.op = RealLinearOp::identity(s.complex_dim());
  return phi;
}

TripleMap triple_map_scalar(const TripleSpace& s, Complex lambda) {
  TripleMap phi;
  phi.domain = &s;
  phi.codomain = &s;
  phi.op = RealLinearOp::from_complex(
      CMatrix(lambda * CMatrix::Identity(s.complex_dim(), s.complex_dim())));
  return phi;
}

TripleMap triple_map_unitary(const TripleSpace& s, const TripleSpace& codomain, const CMatrix& u,
                             const CMatrix& v) {
  if (s.descriptor().type != Factor::cartan1)
    throw std::invalid_argument("triple_map_unitary: type I factor required");
  return map_from_basis_action(
      s, codomain, [&](const CVector& e) { return codomain.from_matrix(u * s.to_matrix(e) * v); },
      OpKind::complex_linear);
}

TripleMap triple_map_transpose(const TripleSpace& domain, const TripleSpace& codomain) {
  return map_from_basis_action(
      domain, codomain,
      [&](const CVector& e) { return codomain.from_matrix(domain.to_matrix(e).transpose()); },
      OpKind::complex_linear);
}

TripleMap triple_map_conjugation(const TripleSpace& s) {
  return map_from_basis_action(
      s, s, [&](const CVector& e) { return e; }, OpKind::conjugate_linear);
}

TripleMap triple_map_direct_sum(const TripleSpace& domain, const TripleSpace& codomain,
                                const std::vector<TripleMap>& parts) {
  if (!domain.is_sum() || !codomain.is_sum() || parts.size() != domain.parts().size() ||
      parts.size() != codomain.parts().size())
    throw std::invalid_argument("triple_map_direct_sum: shape mismatch");
  const int n = domain.complex_dim(), m = codomain.complex_dim();
  RMatrix rm = RMatrix::Zero(2 * m, 2 * n);
  OpKind kind = parts.empty() ? OpKind::general : parts[0].op.kind;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int dn = domain.parts()[i].complex_dim();
    const int dm = codomain.parts()[i].complex_dim();
    if (parts[i].op.domain_dim != dn || parts[i].op.codomain_dim != dm)
      throw std::invalid_argument("triple_map_direct_sum: part dimension mismatch");
    const int on = domain.part_offset(i), om = codomain.part_offset(i);
    const RMatrix& p = parts[i].op.real_matrix;
    rm.block(om, on, dm, dn) = p.block(0, 0, dm, dn);
    rm.block(om, n + on, dm, dn) = p.block(0, dn, dm, dn);
    rm.block(m + om, on, dm, dn) = p.block(dm, 0, dm, dn);
    rm.block(m + om, n + on, dm, dn) = p.block(dm, dn, dm, dn);
    if (parts[i].op.kind != kind) kind = OpKind::general;
  }
  TripleMap phi;
  phi.domain = &domain;
  phi.codomain = &codomain;
  phi.op = RealLinearOp(n, m, std::move(rm), kind);
  return phi;
}

TripleMap compose_triple_maps(const TripleMap& psi, const TripleMap& phi) {
  if (phi.codomain != psi.domain && !phi.codomain->same_shape(*psi.domain))
    throw std::invalid_argument("compose_triple_maps: not composable");
  TripleMap r;
  r.domain = phi.domain;
  r.codomain = psi.codomain;
  r.op = op_compose(psi.op, phi.op);
  return r;
}

TripleMap inverse_triple_map(const TripleMap& phi) {
  if (!phi.op.is_bijective()) throw std::invalid_argument("inverse_triple_map: not bijective");
  TripleMap r;
  r.domain = phi.codomain;
  r.codomain = phi.domain;
  r.op = phi.op.inverse();
  return r;
}

Report verify_triple_map(TripleMap& phi, int samples, std::uint64_t seed, const Tolerance& tol) {
  Report rep;
  const TripleSpace& v = *phi.domain;
  const TripleSpace& w = *phi.codomain;
  const bool bij = v.complex_dim() == w.complex_dim() && phi.op.is_bijective(tol);
  rep.add("bijective", "phi is a linear bijection", 1, bij ? 0.0 : 1.0, bij);

  auto product_residual = [&](const CVector& a, const CVector& b, const CVector& c) {
    return w.norm(phi.apply(v.triple(a, b, c)) -
                  w.triple(phi.apply(a), phi.apply(b), phi.apply(c)));
  };

  double basis_res = 0;
  long basis_count = 0;
  const int d = v.complex_dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        basis_res = std::max(basis_res, product_residual(v.basis_element(i), v.basis_element(j),
                                                         v.basis_element(k)));
        ++basis_count;
      }
  rep.add("product_basis", "phi{a,b,c} = {phi a, phi b, phi c} on basis triples", basis_count,
          basis_res, basis_res <= tol.algebraic);

  Rng rng(seed);
  double rand_res = 0;
  for (int i = 0; i < samples; ++i)
    rand_res = std::max(rand_res, product_residual(random_element(v, rng), random_element(v, rng),
                                                   random_element(v, rng)));
  rep.add("product_random", "phi{a,b,c} = {phi a, phi b, phi c} on random triples", samples,
          rand_res, rand_res <= tol.algebraic * 100);

  phi.verified = rep.overall_pass();
  return rep;
}

V0Element GradedMap::apply_v0(const V0Element& h) const {
  const TripleSpace& w = codomain->base();
  if (h.has_generators) {
    V0Element r = V0Element::zero(w);
    for (const auto& [a, b] : h.generators) {
      const V0Element g = box(w, t_m1.apply(a), t_m1.apply(b));
      r.generators.push_back(g.generators[0]);
      r.op += g.op;
    }
    return r;
  }
  const RealLinearOp conj =
      op_compose(op_compose(t_m1, RealLinearOp::from_complex(h.op)), t_m1.inverse());
  const double scale = 1.0 + conj.norm();
  if (conj.complex_linearity_residual() > 1e-8 * scale)
    throw std::invalid_argument("GradedMap: conjugated middle operator is not complex-linear");
  V0Element r;
  r.space = &w;
  r.has_generators = false;
  r.op = conj.complex_matrix();
  return r;
}

TKKElement GradedMap::apply(const TKKElement& z) const {
  TKKElement r = TKKElement::zero(*codomain);
  r.x = t_m1.apply(z.x);
  r.h = apply_v0(z.h);
  r.y = t_p1.apply(z.y);
  if (negatively_graded) r = theta(r);
  return r;
}

GradedMap f_morphism(const TripleMap& phi, const TKKAlgebra& domain, const TKKAlgebra& codomain) {
  if (!phi.op.is_bijective()) throw std::invalid_argument("f_morphism: phi not bijective");
  if (&domain.base() != phi.domain && !domain.base().same_shape(*phi.domain))
    throw std::invalid_argument("f_morphism: domain mismatch");
  GradedMap t;
  t.domain = &domain;
  t.codomain = &codomain;
  t.t_m1 = phi.op;
  t.t_p1 = phi.op;
  t.kind = phi.op.kind;
  return t;
}

Report verify_graded_iso(GradedMap& t, int samples, std::uint64_t seed, const Tolerance& tol) {
  Report rep;
  const TKKAlgebra& g = *t.domain;
  Rng rng(seed);

  const bool bij = t.t_m1.is_bijective(tol) && t.t_p1.is_bijective(tol) &&
                   g.base().complex_dim() == t.codomain->base().complex_dim();
  rep.add("bijective", "degree blocks are bijections", 1, bij ? 0.0 : 1.0, bij);

  double bracket_res = 0, invol_res = 0, graded_res = 0;
  for (int i = 0; i < samples; ++i) {
    const TKKElement z = random_tkk_element(g, rng), w = random_tkk_element(g, rng);
    bracket_res = std::max(bracket_res, tkk_norm(t.apply(bracket(z, w)) - bracket(t.apply(z), t.apply(w))));
    invol_res = std::max(invol_res, tkk_norm(t.apply(theta(z)) - theta(t.apply(z))));

    // grading: pure-degree inputs land in the expected degree with no leakage
    const CVector a = random_element(g.base(), rng);
    const TKKElement im = t.apply(TKKElement::embed_m1(g, a));
    const TKKElement ip = t.apply(TKKElement::embed_p1(g, a));
    const TKKElement ih = t.apply(TKKElement::embed_h(g, random_v0(g, rng)));
    if (!t.negatively_graded) {
      graded_res = std::max(graded_res, im.y.norm() + im.h.op.norm());
      graded_res = std::max(graded_res, ip.x.norm() + ip.h.op.norm());
    } else {
      graded_res = std::max(graded_res, im.x.norm() + im.h.op.norm());
      graded_res = std::max(graded_res, ip.y.norm() + ip.h.op.norm());
    }
    graded_res = std::max(graded_res, ih.x.norm() + ih.y.norm());
  }
  const double scale_tol = tol.algebraic * 100;
  rep.add("bracket", "T[z,w] = [Tz,Tw]", samples, bracket_res, bracket_res <= scale_tol);
  rep.add("involution", "theta' T = T theta", samples, invol_res, invol_res <= scale_tol);
  rep.add("grading",
          t.negatively_graded ? "T maps degree j to -j" : "T preserves degrees", samples,
          graded_res, graded_res <= tol.algebraic);

  t.verified = rep.overall_pass();
  return rep;
}

double isometry_residual(const GradedMap& t, int samples, std::uint64_t seed) {
  const TKKAlgebra& g = *t.domain;
  const TKKAlgebra& h = *t.codomain;
  Rng rng(seed);

  std::vector<CVector> transported;
  for (const auto& s : g.norm_samples()) transported.push_back(t.t_m1.apply(s));
  auto image_v0_norm = [&](const V0Element& k) {
    double m = 0;
    for (const auto& s : transported) m = std::max(m, h.base().norm(k.op * s));
    return m;
  };

  double res = 0;
  for (int i = 0; i < samples; ++i) {
    const TKKElement z = random_tkk_element(g, rng);
    TKKElement iz = t.apply(z);
    if (t.negatively_graded) iz = theta(iz);  // theta' is isometric; compare the graded part
    const double n0 = g.base().norm(z.x) + v0_norm(g, z.h) + g.base().norm(z.y);
    const double n1 = h.base().norm(iz.x) + image_v0_norm(iz.h) + h.base().norm(iz.y);
    res = std::max(res, std::abs(n1 - n0));
  }
  return res;
}

TripleMap recover_triple_map(const GradedMap& t, const Tolerance& tol) {
  if (t.negatively_graded)
    throw std::invalid_argument("recover_triple_map: graded map required");
  const TKKAlgebra& g = *t.domain;
  const TKKAlgebra& h = *t.codomain;
  TripleMap phi;
  phi.domain = &g.base();
  phi.codomain = &h.base();
  phi.op = t.t_m1;
  phi.verified = true;

  const GradedMap rebuilt = f_morphism(phi, g, h);
  double res = 0;
  const int d = g.base().complex_dim();
  for (int k = 0; k < d; ++k) {
    const CVector e = g.base().basis_element(k);
    res = std::max(res, tkk_norm(t.apply(TKKElement::embed_m1(g, e)) -
                                 rebuilt.apply(TKKElement::embed_m1(g, e))));
    res = std::max(res, tkk_norm(t.apply(TKKElement::embed_p1(g, e)) -
                                 rebuilt.apply(TKKElement::embed_p1(g, e))));
  }
  for (const auto& [p, q] : g.g0_basis_pairs()) {
    const V0Element b = box(g.base(), g.base().basis_element(p), g.base().basis_element(q));
    res = std::max(res, tkk_norm(t.apply(TKKElement::embed_h(g, b)) -
                                 rebuilt.apply(TKKElement::embed_h(g, b))));
  }
  if (res > tol.algebraic * 100)
    throw std::runtime_error("recover_triple_map: reconstruction residual " + std::to_string(res));
  return phi;
}

Report functor_laws(const TripleMap& phi, const TripleMap& psi, const TKKAlgebra& a0,
                    const TKKAlgebra& a1, const TKKAlgebra& a2, const Tolerance& tol) {
  if (!phi.verified || !psi.verified)
    throw std::invalid_argument("functor_laws: unverified morphisms");
  Report rep;
  const GradedMap f_phi = f_morphism(phi, a0, a1);
  const GradedMap f_psi = f_morphism(psi, a1, a2);
  const GradedMap f_comp = f_morphism(compose_triple_maps(psi, phi), a0, a2);

  auto basis_elements = [](const TKKAlgebra& g) {
    std::vector<TKKElement> elems;
    for (int k = 0; k < g.base().complex_dim(); ++k) {
      elems.push_back(TKKElement::embed_m1(g, g.base().basis_element(k)));
      elems.push_back(TKKElement::embed_p1(g, g.base().basis_element(k)));
    }
    for (const auto& [p, q] : g.g0_basis_pairs())
      elems.push_back(TKKElement::embed_h(
          g, box(g.base(), g.base().basis_element(p), g.base().basis_element(q))));
    return elems;
  };

  double comp_res = 0;
  long n = 0;
  for (const auto& z : basis_elements(a0)) {
    comp_res = std::max(comp_res, tkk_norm(f_comp.apply(z) - f_psi.apply(f_phi.apply(z))));
    ++n;
  }
  rep.add("composition", "F(psi . phi) = F(psi) . F(phi)", n, comp_res,
          comp_res <= tol.algebraic * 100);

  const GradedMap f_id = f_morphism(triple_map_identity(a0.base()), a0, a0);
  double id_res = 0;
  for (const auto& z : basis_elements(a0)) id_res = std::max(id_res, tkk_norm(f_id.apply(z) - z));
  rep.add("identity", "F(id) = id", n, id_res, id_res == 0.0);
  return rep;
}

Report conjugate_variant_check(const GradedMap& t, int samples, std::uint64_t seed,
                               const Tolerance& tol) {
  if (t.kind != OpKind::conjugate_linear)
    throw std::invalid_argument("conjugate_variant_check: conjugate-linear map required");
  Report rep;
  const TripleSpace& v = t.domain->base();
  const TripleSpace& w = t.codomain->base();

  const double lin_res = t.t_m1.conjugate_linearity_residual();
  rep.add("conjugate_linearity", "T_{-1} anticommutes with multiplication by i", 1, lin_res,
          lin_res <= tol.algebraic);

  Rng rng(seed);
  double prod_res = 0;
  for (int i = 0; i < samples; ++i) {
    const CVector a = random_element(v, rng), b = random_element(v, rng),
                  c = random_element(v, rng);
    prod_res = std::max(
        prod_res, w.norm(t.t_m1.apply(v.triple(a, b, c)) -
                         w.triple(t.t_m1.apply(a), t.t_m1.apply(b), t.t_m1.apply(c))));
  }
  rep.add("product", "T{a,b,c} = {Ta,Tb,Tc} on degree -1", samples, prod_res,
          prod_res <= tol.algebraic * 100);

  const double iso_res = isometry_residual(t, samples, seed + 1);
  rep.add("isometry", "|T z| = |z| on transported samples", samples, iso_res,
          iso_res <= tol.normative);
  return rep;
}

nlohmann::json triple_map_to_json(const TripleMap& phi) {
  return {{"kind", to_string(phi.op.kind)},
          {"real_matrix", op_to_json(phi.op)},
          {"domain", descriptor_to_json(phi.domain->descriptor())},
          {"codomain", descriptor_to_json(phi.codomain->descriptor())}};
}

TripleMap triple_map_from_json(const nlohmann::json& j, const TripleSpace& domain,
                               const TripleSpace& codomain) {
  TripleMap phi;
  phi.domain = &domain;
  phi.codomain = &codomain;
  phi.op = op_from_json(j.at("real_matrix"));
  if (phi.op.domain_dim != domain.complex_dim() || phi.op.codomain_dim != codomain.complex_dim())
    throw std::invalid_argument("triple_map_from_json: dimension mismatch");
  const Descriptor dd = descriptor_from_json(j.at("domain"));
  const Descriptor dc = descriptor_from_json(j.at("codomain"));
  if (!TripleSpace::make(dd).same_shape(domain) || !TripleSpace::make(dc).same_shape(codomain))
    throw std::invalid_argument("triple_map_from_json: descriptor mismatch");
  return phi;
}

}  // namespace tkk
