#include "tkk/tkk.hpp"

#include <Eigen/SVD>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace tkk {

namespace {

CVector vectorize(const CMatrix& m) {
  return Eigen::Map<const CVector>(m.data(), m.size());
}

constexpr std::uint64_t kNormSampleSeed = 0x5eed0001;
constexpr int kNormSampleCount = 64;

}  // namespace

TKKAlgebra::TKKAlgebra(TripleSpace space) : space_(std::move(space)) {
  const int d = space_.complex_dim();
  CMatrix span(d * d, d * d);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      span.col(static_cast<int>(pairs.size())) =
          vectorize(box(space_, space_.basis_element(i), space_.basis_element(j)).op);
      pairs.emplace_back(i, j);
    }
  Eigen::ColPivHouseholderQR<CMatrix> qr(span);
  qr.setThreshold(1e-10);
  g0_dim_ = static_cast<int>(qr.rank());
  const auto& perm = qr.colsPermutation().indices();
  g0_span_.resize(d * d, g0_dim_);
  for (int k = 0; k < g0_dim_; ++k) {
    const int col = perm(k);
    g0_basis_pairs_.push_back(pairs[col]);
    g0_span_.col(k) = span.col(col);
    g0_basis_ops_.push_back(Eigen::Map<const CMatrix>(g0_span_.col(k).data(), d, d));
  }
  g0_solver_.compute(g0_span_);

  Rng rng(kNormSampleSeed);
  for (int k = 0; k < d; ++k) {
    CVector b = space_.basis_element(k);
    norm_samples_.push_back(b / space_.norm(b));
  }
  for (int k = 0; k < kNormSampleCount; ++k) {
    CVector v = rng.cvector(d);
    const double n = space_.norm(v);
    if (n > 1e-12) norm_samples_.push_back(v / n);
  }
}

CVector TKKAlgebra::g0_coordinates(const CMatrix& h, double* residual) const {
  const CVector v = vectorize(h);
  const CVector c = g0_solver_.solve(v);
  if (residual) *residual = (g0_span_ * c - v).norm();
  return c;
}

TKKElement TKKElement::zero(const TKKAlgebra& alg) {
  return {&alg, CVector::Zero(alg.base().complex_dim()), V0Element::zero(alg.base()),
          CVector::Zero(alg.base().complex_dim())};
}

TKKElement TKKElement::embed_m1(const TKKAlgebra& alg, const CVector& x) {
  TKKElement z = zero(alg);
  z.x = x;
  return z;
}

TKKElement TKKElement::embed_p1(const TKKAlgebra& alg, const CVector& y) {
  TKKElement z = zero(alg);
  z.y = y;
  return z;
}

TKKElement TKKElement::embed_h(const TKKAlgebra& alg, const V0Element& h) {
  TKKElement z = zero(alg);
  z.h = h;
  return z;
}

TKKElement TKKElement::make(const TKKAlgebra& alg, const CVector& x, const V0Element& h,
                            const CVector& y) {
  return {&alg, x, h, y};
}

namespace {

V0Element v0_add(const V0Element& a, const V0Element& b) {
  V0Element r;
  r.space = a.space;
  r.op = a.op + b.op;
  if (a.has_generators && b.has_generators) {
    r.has_generators = true;
    r.generators = a.generators;
    r.generators.insert(r.generators.end(), b.generators.begin(), b.generators.end());
  }
  return r;
}

V0Element v0_scale(const V0Element& a, double s) {
  V0Element r = a;
  r.op *= s;
  for (auto& g : r.generators) g.first *= s;
  return r;
}

V0Element v0_neg(const V0Element& a) { return v0_scale(a, -1.0); }

}  // namespace

TKKElement TKKElement::operator+(const TKKElement& o) const {
  return {algebra, x + o.x, v0_add(h, o.h), y + o.y};
}

TKKElement TKKElement::operator-(const TKKElement& o) const {
  return {algebra, x - o.x, v0_add(h, v0_neg(o.h)), y - o.y};
}

TKKElement TKKElement::scaled(double r) const { return {algebra, r * x, v0_scale(h, r), r * y}; }

TKKElement bracket(const TKKElement& z, const TKKElement& w) {
  if (z.algebra != w.algebra) throw std::invalid_argument("bracket: algebra mismatch");
  const TKKAlgebra& alg = *z.algebra;
  const TripleSpace& s = alg.base();
  const auto& [zx, zh, zy] = std::tie(z.x, z.h, z.y);
  const auto& [wx, wh, wy] = std::tie(w.x, w.h, w.y);

  TKKElement r = TKKElement::zero(alg);
  r.x = zh.op * wx - wh.op * zx;

  // middle part [h,k] + x box v - u box y
  V0Element mid;
  mid.space = &s;
  mid.op = zh.op * wh.op - wh.op * zh.op;
  if (zh.has_generators && wh.has_generators) {
    mid.has_generators = true;
    // [a box b, c box d] = {a,b,c} box d - c box {b,a,d}
    for (const auto& [a, b] : zh.generators)
      for (const auto& [c, d] : wh.generators) {
        mid.generators.emplace_back(s.triple(a, b, c), d);
        mid.generators.emplace_back(-c, s.triple(b, a, d));
      }
  }
  V0Element xv = box(s, zx, wy);
  V0Element uy = box(s, wx, zy);
  r.h = v0_add(mid, v0_add(xv, v0_neg(uy)));

  r.y = natural(wh).op * zy - natural(zh).op * wy;
  return r;
}

TKKElement theta(const TKKElement& z) {
  TKKElement r = TKKElement::zero(*z.algebra);
  r.x = z.y;
  r.h = v0_neg(natural(z.h));
  r.y = z.x;
  return r;
}

double v0_norm(const TKKAlgebra& alg, const V0Element& h) {
  double m = 0;
  for (const auto& s : alg.norm_samples())
    m = std::max(m, alg.base().norm(h.op * s));
  return m;
}

double tkk_norm(const TKKElement& z) {
  const TKKAlgebra& alg = *z.algebra;
  return alg.base().norm(z.x) + v0_norm(alg, z.h) + alg.base().norm(z.y);
}

double jacobi_residual(const TKKElement& z1, const TKKElement& z2, const TKKElement& z3) {
  const TKKElement s =
      bracket(bracket(z1, z2), z3) + bracket(bracket(z2, z3), z1) + bracket(bracket(z3, z1), z2);
  return tkk_norm(s);
}

RealLinearOp ad(const TKKElement& z) {
  const TKKAlgebra& alg = *z.algebra;
  const int d = alg.base().complex_dim();
  const int g = alg.g0_dim();
  const int n = d + g + d;

  auto from_coords = [&](const CVector& v) {
    TKKElement w = TKKElement::zero(alg);
    w.x = v.head(d);
    for (int k = 0; k < g; ++k) {
      const Complex c = v(d + k);
      if (c != Complex(0, 0)) {
        const auto& [p, q] = alg.g0_basis_pairs()[k];
        V0Element gk = box(alg.base(), c * alg.base().basis_element(p), alg.base().basis_element(q));
        w.h = v0_add(w.h, gk);
      }
    }
    w.y = v.tail(d);
    return w;
  };
  auto to_coords = [&](const TKKElement& w) {
    CVector v(n);
    v.head(d) = w.x;
    v.segment(d, g) = alg.g0_coordinates(w.h.op);
    v.tail(d) = w.y;
    return v;
  };

  RMatrix m(2 * n, 2 * n);
  for (int p = 0; p < n; ++p) {
    for (int part = 0; part < 2; ++part) {
      CVector e = CVector::Zero(n);
      e(p) = part == 0 ? Complex(1, 0) : Complex(0, 1);
      const CVector img = to_coords(bracket(z, from_coords(e)));
      const int col = part == 0 ? p : n + p;
      m.col(col).head(n) = img.real();
      m.col(col).tail(n) = img.imag();
    }
  }
  return RealLinearOp(n, n, std::move(m), OpKind::general);
}

double condition_a_residual(const TKKAlgebra& alg, const CVector& a) {
  if (alg.base().norm(a) < 1e-12)
    throw std::invalid_argument("condition_a_residual: zero vector");
  const TKKElement z = TKKElement::embed_m1(alg, a);
  return std::abs(tkk_norm(bracket(bracket(z, theta(z)), z)) - 1.0);
}

double condition_c_singularity(const TKKAlgebra& alg, const CVector& a) {
  if (alg.base().norm(a) < 1e-12)
    throw std::invalid_argument("condition_c_singularity: zero vector");
  const int d = alg.base().complex_dim();
  const CMatrix b = box(alg.base(), a, a).op;
  Eigen::JacobiSVD<CMatrix> svd(CMatrix(CMatrix::Identity(d, d) - b));
  return svd.singularValues()(svd.singularValues().size() - 1);
}

CVector random_element(const TripleSpace& s, Rng& rng) { return rng.cvector(s.complex_dim()); }

CVector random_unit(const TripleSpace& s, Rng& rng) {
  for (;;) {
    CVector v = random_element(s, rng);
    const double n = s.norm(v);
    if (n > 1e-9) return v / n;
  }
}

V0Element random_v0(const TKKAlgebra& alg, Rng& rng, int generators) {
  V0Element h = V0Element::zero(alg.base());
  for (int i = 0; i < generators; ++i)
    h = v0_add(h, box(alg.base(), random_element(alg.base(), rng), random_element(alg.base(), rng)));
  return h;
}

TKKElement random_tkk_element(const TKKAlgebra& alg, Rng& rng) {
  TKKElement z = TKKElement::zero(alg);
  z.x = random_element(alg.base(), rng);
  z.h = random_v0(alg, rng);
  z.y = random_element(alg.base(), rng);
  return z;
}

Report structural_checks(const TKKAlgebra& alg, int samples, std::uint64_t seed,
                         const Tolerance& tol) {
  Rng rng(seed);
  const TripleSpace& s = alg.base();
  Report rep;

  // exact coordinate norm, used for residuals of identities that must vanish
  auto coord_norm = [&](const TKKElement& z) {
    return z.x.norm() + z.h.op.norm() + z.y.norm();
  };

  double graded_res = 0, triple_res = 0, theta_auto_res = 0, theta_sq_res = 0, alt_res = 0;
  double c_estimate = 0;
  for (int i = 0; i < samples; ++i) {
    const CVector a = random_element(s, rng), b = random_element(s, rng),
                  c = random_element(s, rng);
    // degree bookkeeping: [g_-1, g_-1] = 0, [g_1, g_1] = 0, [g_-1, g_1] is pure degree 0
    const TKKElement am = TKKElement::embed_m1(alg, a), bm = TKKElement::embed_m1(alg, b);
    const TKKElement ap = TKKElement::embed_p1(alg, a), bp = TKKElement::embed_p1(alg, b);
    graded_res = std::max(graded_res, coord_norm(bracket(am, bm)));
    graded_res = std::max(graded_res, coord_norm(bracket(ap, bp)));
    const TKKElement mixed = bracket(am, bp);
    graded_res = std::max(graded_res, mixed.x.norm() + mixed.y.norm());

    // {a,b,c} = [[a, theta b], c]
    const TKKElement lie =
        bracket(bracket(am, theta(bm)), TKKElement::embed_m1(alg, c));
    const TKKElement want = TKKElement::embed_m1(alg, s.triple(a, b, c));
    triple_res = std::max(triple_res, tkk_norm(lie - want));

    const TKKElement z = random_tkk_element(alg, rng), w = random_tkk_element(alg, rng);
    theta_auto_res = std::max(theta_auto_res, tkk_norm(theta(bracket(z, w)) - bracket(theta(z), theta(w))));
    theta_sq_res = std::max(theta_sq_res, tkk_norm(theta(theta(z)) - z));
    alt_res = std::max(alt_res, coord_norm(bracket(z, z)));

    const double nz = tkk_norm(z), nw = tkk_norm(w);
    if (nz > 1e-9 && nw > 1e-9)
      c_estimate = std::max(c_estimate, tkk_norm(bracket(z, w)) / (nz * nw));
  }

  rep.add("gradedness", "[g_m, g_n] contained in g_{m+n}", samples, graded_res,
          graded_res <= tol.algebraic);
  rep.add("triple_vs_bracket", "{a,b,c} = [[a, theta b], c]", samples, triple_res,
          triple_res <= tol.algebraic * 10);
  rep.add("theta_automorphism", "theta[z,w] = [theta z, theta w]", samples, theta_auto_res,
          theta_auto_res <= tol.algebraic * 10);
  rep.add("theta_involution", "theta^2 = id", samples, theta_sq_res, theta_sq_res <= 1e-12 * 100);
  rep.add("bracket_alternating", "[z,z] = 0", samples, alt_res, alt_res <= 1e-12 * 100);
  rep.add("norm_bound_constant", "|[X,Y]| <= C |X||Y|", samples, c_estimate,
          std::isfinite(c_estimate));
  return rep;
}

nlohmann::json tkk_element_to_json(const TKKElement& z) {
  nlohmann::json gens = nlohmann::json::array();
  if (z.h.has_generators)
    for (const auto& [a, b] : z.h.generators) gens.push_back({element_to_json(a), element_to_json(b)});
  return {{"x", element_to_json(z.x)},
          {"h", {{"generators", gens}, {"op", cmatrix_to_json(z.h.op)}}},
          {"y", element_to_json(z.y)}};
}

TKKElement tkk_element_from_json(const TKKAlgebra& alg, const nlohmann::json& j) {
  TKKElement z = TKKElement::zero(alg);
  z.x = element_from_json(j.at("x"));
  z.y = element_from_json(j.at("y"));
  const auto& h = j.at("h");
  if (h.contains("generators")) {
    for (const auto& g : h.at("generators")) {
      z.h = [&] {
        V0Element add = box(alg.base(), element_from_json(g[0]), element_from_json(g[1]));
        V0Element r = z.h;
        r.op += add.op;
        r.generators.insert(r.generators.end(), add.generators.begin(), add.generators.end());
        return r;
      }();
    }
  } else if (h.contains("op")) {
    z.h.op = cmatrix_from_json(h.at("op"));
    z.h.has_generators = false;
  }
  if (z.x.size() != alg.base().complex_dim() || z.y.size() != alg.base().complex_dim())
    throw std::invalid_argument("tkk_element_from_json: dimension mismatch");
  return z;
}

}  // namespace tkk
