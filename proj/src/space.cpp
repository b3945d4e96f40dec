#include "tkk/space.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace tkk {

namespace {

int descriptor_dim(const Descriptor& d) {
  switch (d.type) {
    case Factor::cartan1: return d.rows * d.cols;
    case Factor::cartan2: return d.n * (d.n - 1) / 2;
    case Factor::cartan3: return d.n * (d.n + 1) / 2;
    case Factor::spin: return d.n;
    case Factor::sum: {
      int s = 0;
      for (const auto& p : d.parts) s += descriptor_dim(p);
      return s;
    }
  }
  return 0;
}

int descriptor_rank(const Descriptor& d) {
  switch (d.type) {
    case Factor::cartan1: return std::min(d.rows, d.cols);
    case Factor::cartan2: return d.n / 2;
    case Factor::cartan3: return d.n;
    case Factor::spin: return 2;
    case Factor::sum: {
      int s = 0;
      for (const auto& p : d.parts) s += descriptor_rank(p);
      return s;
    }
  }
  return 0;
}

}  // namespace

TripleSpace TripleSpace::make(const Descriptor& d) {
  TripleSpace s;
  s.desc_ = d;
  switch (d.type) {
    case Factor::cartan1:
      if (d.rows < 1 || d.cols < 1) throw std::invalid_argument("cartan1: dims must be >= 1");
      break;
    case Factor::cartan2:
      if (d.n < 2) throw std::invalid_argument("cartan2: need n >= 2 (n = 1 is the zero space)");
      break;
    case Factor::cartan3:
      if (d.n < 1) throw std::invalid_argument("cartan3: need n >= 1");
      break;
    case Factor::spin:
      if (d.n < 2) throw std::invalid_argument("spin: need n >= 2");
      break;
    case Factor::sum:
      if (d.parts.empty()) throw std::invalid_argument("sum: needs at least one part");
      for (const auto& p : d.parts) {
        if (p.type == Factor::sum) throw std::invalid_argument("sum: nested sums not supported");
        s.parts_.push_back(TripleSpace::make(p));
      }
      break;
  }
  s.dim_ = descriptor_dim(d);
  s.rank_ = descriptor_rank(d);
  if (d.type == Factor::sum) {
    int off = 0;
    for (const auto& p : s.parts_) {
      s.part_offsets_.push_back(off);
      off += p.complex_dim();
    }
  }
  s.gram_ = RVector::Ones(s.dim_);
  if (d.type == Factor::cartan2) {
    s.gram_ = 2.0 * RVector::Ones(s.dim_);
  } else if (d.type == Factor::cartan3) {
    int k = 0;
    for (int i = 0; i < d.n; ++i)
      for (int j = i; j < d.n; ++j, ++k) s.gram_(k) = (i == j) ? 1.0 : 2.0;
  } else if (d.type == Factor::sum) {
    for (std::size_t i = 0; i < s.parts_.size(); ++i)
      s.gram_.segment(s.part_offsets_[i], s.parts_[i].complex_dim()) = s.parts_[i].gram();
  }
  return s;
}

CVector TripleSpace::basis_element(int k) const {
  CVector v = CVector::Zero(dim_);
  v(k) = 1.0;
  return v;
}

void TripleSpace::check_coords(const CVector& x) const {
  if (x.size() != dim_) throw std::invalid_argument("element does not belong to this space");
}

CMatrix TripleSpace::to_matrix(const CVector& x) const {
  check_coords(x);
  switch (desc_.type) {
    case Factor::cartan1: {
      CMatrix m(desc_.rows, desc_.cols);
      for (int i = 0; i < desc_.rows; ++i)
        for (int j = 0; j < desc_.cols; ++j) m(i, j) = x(i * desc_.cols + j);
      return m;
    }
    case Factor::cartan2: {
      CMatrix m = CMatrix::Zero(desc_.n, desc_.n);
      int k = 0;
      for (int i = 0; i < desc_.n; ++i)
        for (int j = i + 1; j < desc_.n; ++j, ++k) {
          m(i, j) = x(k);
          m(j, i) = -x(k);
        }
      return m;
    }
    case Factor::cartan3: {
      CMatrix m = CMatrix::Zero(desc_.n, desc_.n);
      int k = 0;
      for (int i = 0; i < desc_.n; ++i)
        for (int j = i; j < desc_.n; ++j, ++k) {
          m(i, j) = x(k);
          m(j, i) = x(k);
        }
      return m;
    }
    default:
      throw std::logic_error("to_matrix: no matrix realization for this factor");
  }
}

CVector TripleSpace::from_matrix(const CMatrix& m) const {
  CVector x(dim_);
  switch (desc_.type) {
    case Factor::cartan1: {
      if (m.rows() != desc_.rows || m.cols() != desc_.cols)
        throw std::invalid_argument("from_matrix: wrong shape");
      for (int i = 0; i < desc_.rows; ++i)
        for (int j = 0; j < desc_.cols; ++j) x(i * desc_.cols + j) = m(i, j);
      return x;
    }
    case Factor::cartan2: {
      int k = 0;
      for (int i = 0; i < desc_.n; ++i)
        for (int j = i + 1; j < desc_.n; ++j, ++k) x(k) = m(i, j);
      break;
    }
    case Factor::cartan3: {
      int k = 0;
      for (int i = 0; i < desc_.n; ++i)
        for (int j = i; j < desc_.n; ++j, ++k) x(k) = m(i, j);
      break;
    }
    default:
      throw std::logic_error("from_matrix: no matrix realization for this factor");
  }
  // antisymmetric/symmetric structure must be preserved by the caller
  if ((to_matrix(x) - m).norm() > 1e-8 * (1.0 + m.norm()))
    throw std::invalid_argument("from_matrix: matrix not in the factor subspace");
  return x;
}

CVector TripleSpace::spin_triple(const CVector& a, const CVector& b, const CVector& c) const {
  // <x,y> = sum x_i conj(y_i)
  const Complex iab = (b.adjoint() * a)(0);
  const Complex icb = (b.adjoint() * c)(0);
  const Complex iac = (a.transpose() * c)(0);  // <a, conj(c)> = sum a_i c_i
  return iab * c + icb * a - iac * b.conjugate();
}

double TripleSpace::spin_norm(const CVector& x) const {
  const double xx = x.squaredNorm();
  const double t = std::abs((x.transpose() * x)(0));
  const double disc = std::max(0.0, xx * xx - t * t);
  return std::sqrt(xx + std::sqrt(disc));
}

CVector TripleSpace::triple(const CVector& a, const CVector& b, const CVector& c) const {
  check_coords(a);
  check_coords(b);
  check_coords(c);
  switch (desc_.type) {
    case Factor::cartan1:
    case Factor::cartan2:
    case Factor::cartan3: {
      const CMatrix ma = to_matrix(a), mb = to_matrix(b), mc = to_matrix(c);
      const CMatrix r = 0.5 * (ma * mb.adjoint() * mc + mc * mb.adjoint() * ma);
      return from_matrix(r);
    }
    case Factor::spin:
      return spin_triple(a, b, c);
    case Factor::sum: {
      CVector r(dim_);
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        const int o = part_offsets_[i], d = parts_[i].complex_dim();
        r.segment(o, d) = parts_[i].triple(a.segment(o, d), b.segment(o, d), c.segment(o, d));
      }
      return r;
    }
  }
  throw std::logic_error("triple: unknown factor");
}

double TripleSpace::norm(const CVector& x) const {
  check_coords(x);
  switch (desc_.type) {
    case Factor::cartan1:
    case Factor::cartan2:
    case Factor::cartan3:
      return spectral_norm(to_matrix(x));
    case Factor::spin:
      return spin_norm(x);
    case Factor::sum: {
      double m = 0;
      for (std::size_t i = 0; i < parts_.size(); ++i)
        m = std::max(m, parts_[i].norm(x.segment(part_offsets_[i], parts_[i].complex_dim())));
      return m;
    }
  }
  throw std::logic_error("norm: unknown factor");
}

bool TripleSpace::all_parts_rank_ge2() const {
  if (desc_.type != Factor::sum) return max_rank() >= 2;
  for (const auto& p : parts_)
    if (p.max_rank() < 2) return false;
  return true;
}

bool TripleSpace::same_shape(const TripleSpace& other) const {
  return descriptor_to_json(desc_) == descriptor_to_json(other.desc_);
}

nlohmann::json descriptor_to_json(const Descriptor& d) {
  switch (d.type) {
    case Factor::cartan1: return {{"type", "cartan1"}, {"rows", d.rows}, {"cols", d.cols}};
    case Factor::cartan2: return {{"type", "cartan2"}, {"n", d.n}};
    case Factor::cartan3: return {{"type", "cartan3"}, {"n", d.n}};
    case Factor::spin: return {{"type", "spin"}, {"n", d.n}};
    case Factor::sum: {
      nlohmann::json parts = nlohmann::json::array();
      for (const auto& p : d.parts) parts.push_back(descriptor_to_json(p));
      return {{"type", "sum"}, {"parts", parts}};
    }
  }
  throw std::logic_error("descriptor_to_json: unknown factor");
}

Descriptor descriptor_from_json(const nlohmann::json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "cartan1") return Descriptor::cartan1(j.at("rows").get<int>(), j.at("cols").get<int>());
  if (type == "cartan2") return Descriptor::cartan2(j.at("n").get<int>());
  if (type == "cartan3") return Descriptor::cartan3(j.at("n").get<int>());
  if (type == "spin") return Descriptor::spin(j.at("n").get<int>());
  if (type == "sum") {
    std::vector<Descriptor> parts;
    for (const auto& p : j.at("parts")) parts.push_back(descriptor_from_json(p));
    return Descriptor::sum(std::move(parts));
  }
  throw std::invalid_argument("unknown space type: " + type);
}

nlohmann::json element_to_json(const CVector& x) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < x.size(); ++i) a.push_back({x(i).real(), x(i).imag()});
  return a;
}

CVector element_from_json(const nlohmann::json& j) {
  CVector x(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    x(static_cast<int>(i)) = Complex(j[i][0].get<double>(), j[i][1].get<double>());
  return x;
}

}  // namespace tkk
