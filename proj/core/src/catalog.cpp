#include "tanaka/catalog.hpp"

#include <algorithm>
#include <fstream>

namespace tanaka {

namespace {

// z^a conj(z)^b in the chart of codimension k.
Polynomial zz(int k, int a, int b, const Gaussian& c = 1) {
  Monomial m(static_cast<std::size_t>(2 + k), 0);
  m[0] = static_cast<std::uint16_t>(a);
  m[1] = static_cast<std::uint16_t>(b);
  return Polynomial::monomial(m, c);
}

Polynomial re_part(int k, int a, int b) {
  return zz(k, a, b, Rational(1, 2)) + zz(k, b, a, Rational(1, 2));
}

Polynomial im_part(int k, int a, int b) {
  // (p - conj p) / 2i
  return zz(k, a, b, Gaussian(0, Rational(-1, 2))) + zz(k, b, a, Gaussian(0, Rational(1, 2)));
}

struct Term {
  enum { Re, Im, Abs } kind;
  int a, b;
};

// Weighted-homogeneous real polynomials in the order they are added to the models.
const std::vector<Term>& ladder() {
  static const std::vector<Term> terms = {
      {Term::Abs, 1, 1}, {Term::Re, 2, 1}, {Term::Im, 2, 1}, {Term::Abs, 2, 2},
      {Term::Re, 3, 1},  {Term::Im, 3, 1}, {Term::Re, 4, 1}, {Term::Im, 4, 1},
      {Term::Re, 3, 2},  {Term::Im, 3, 2},
  };
  return terms;
}

ModelSpec rigid(int k) {
  ModelSpec m;
  m.id = k < 10 ? "rigid-k0" + std::to_string(k) : "rigid-k" + std::to_string(k);
  m.k = k;
  for (int j = 0; j < k; ++j) {
    const Term& t = ladder().at(j);
    switch (t.kind) {
      case Term::Abs: m.phi.push_back(zz(k, t.a, t.b)); break;
      case Term::Re: m.phi.push_back(re_part(k, t.a, t.b)); break;
      case Term::Im: m.phi.push_back(im_part(k, t.a, t.b)); break;
    }
    m.weights.push_back(t.a + t.b);
  }
  m.note = "rigid graph Im w_j = phi_j(z, conj z); accepted after the growth check";
  return m;
}

}  // namespace

std::vector<ModelSpec> builtin_catalog() {
  std::vector<ModelSpec> out;

  ModelSpec h;
  h.id = "heisenberg";
  h.k = 1;
  h.phi = {zz(1, 1, 1)};
  h.weights = {2};
  h.note = "w - conj(w) = 2i z conj(z)";
  out.push_back(h);

  ModelSpec he;
  he.id = "heisenberg-explicit";
  he.k = 1;
  {
    const Chart c = Chart::cr(1);
    PolyVectorField L = PolyVectorField::coordinate(c, 0);
    std::vector<Polynomial> comps(3, Polynomial(3));
    comps[2] = zz(1, 0, 1, Gaussian::i());
    L += PolyVectorField(c, comps);
    he.explicit_L = L;
  }
  he.note = "sphere given by its CR field L = d/dz + i conj(z) d/du";
  out.push_back(he);

  ModelSpec flat;
  flat.id = "levi-flat";
  flat.k = 1;
  flat.phi = {zz(1, 2, 0) + zz(1, 0, 2)};
  flat.weights = {2};
  flat.expect_nondegenerate = false;
  flat.note = "Im w = z^2 + conj(z)^2 is Levi-flat at 0; negative control";
  out.push_back(flat);

  for (int k = 2; k <= 10; ++k) out.push_back(rigid(k));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

nlohmann::json model_to_json(const ModelSpec& m) {
  nlohmann::json j = {{"id", m.id}, {"k", m.k}, {"note", m.note},
                      {"expect_nondegenerate", m.expect_nondegenerate}};
  if (m.explicit_L) {
    j["L"] = m.explicit_L->to_json();
  } else {
    nlohmann::json phi = nlohmann::json::array();
    for (const auto& p : m.phi) phi.push_back(p.to_json());
    j["phi"] = phi;
    j["weights"] = m.weights;
  }
  return j;
}

ModelSpec model_from_json(const nlohmann::json& j) {
  ModelSpec m;
  m.id = j.at("id").get<std::string>();
  m.k = j.at("k").get<int>();
  m.note = j.value("note", "");
  m.expect_nondegenerate = j.value("expect_nondegenerate", true);
  const Chart chart = m.chart();
  if (j.contains("L")) {
    m.explicit_L = PolyVectorField::from_json(j["L"], chart);
  } else {
    for (const auto& p : j.at("phi")) m.phi.push_back(Polynomial::from_json(p, chart.size()));
    m.weights = j.at("weights").get<std::vector<int>>();
  }
  validate_model(m);
  return m;
}

nlohmann::json catalog_to_json(const std::vector<ModelSpec>& models) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : models) out.push_back(model_to_json(m));
  return out;
}

std::vector<ModelSpec> catalog_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("catalog must be a JSON array of models");
  std::vector<ModelSpec> out;
  for (const auto& e : j) out.push_back(model_from_json(e));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

std::vector<ModelSpec> load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalog " + path);
  return catalog_from_json(nlohmann::json::parse(in));
}

const ModelSpec& find_model(const std::vector<ModelSpec>& catalog, const std::string& id) {
  for (const auto& m : catalog)
    if (m.id == id) return m;
  throw std::out_of_range("unknown model id: " + id);
}

}  // namespace tanaka
