#include "tanaka/polynomial.hpp"

#include <algorithm>

namespace tanaka {

namespace {

std::string superscript(unsigned e) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(e)) s += digits[c - '0'];
  return s;
}

std::string subscript(const std::string& n) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char c : n) s += digits[c - '0'];
  return s;
}

void check_same(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

Chart Chart::cr(int k) {
  Chart c;
  c.names = {"z", "z̄"};
  for (int j = 1; j <= k; ++j) c.names.push_back("u" + subscript(std::to_string(j)));
  c.conj_perm.resize(c.names.size());
  for (std::size_t i = 0; i < c.names.size(); ++i) c.conj_perm[i] = i;
  c.conj_perm[0] = 1;
  c.conj_perm[1] = 0;
  return c;
}

Chart Chart::real(std::size_t n, const std::string& prefix) {
  Chart c;
  for (std::size_t i = 0; i < n; ++i) {
    c.names.push_back(prefix + subscript(std::to_string(i + 1)));
    c.conj_perm.push_back(i);
  }
  return c;
}

Polynomial Polynomial::constant(std::size_t nvars, const Gaussian& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars, 0);
  m.at(i) = 1;
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const Gaussian& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

Gaussian Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Gaussian() : it->second;
}

Gaussian Polynomial::constant_term() const { return coefficient(Monomial(nvars_, 0)); }

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (auto e : m) d += e;
    best = std::max(best, d);
  }
  return best;
}

bool Polynomial::independent_of(std::size_t i) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] == 0; });
}

void Polynomial::add_term(const Monomial& m, const Gaussian& c) {
  if (m.size() != nvars_) throw std::invalid_argument("monomial has wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    --d[i];
    out.add_term(d, Gaussian(static_cast<long>(m[i])) * c);
  }
  return out;
}

Polynomial Polynomial::conj(const std::vector<std::size_t>& perm) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    Monomial d(nvars_, 0);
    for (std::size_t i = 0; i < nvars_; ++i) d[perm[i]] = m[i];
    out.add_term(d, c.conj());
  }
  return out;
}

Polynomial Polynomial::set_zero(std::size_t first, std::size_t last) const {
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_)
    if (std::all_of(m.begin() + first, m.begin() + last, [](auto e) { return e == 0; })) out.terms_.emplace(m, c);
  return out;
}

Polynomial Polynomial::restrict_to(std::size_t first, std::size_t count) const {
  Polynomial out(count);
  for (const auto& [m, c] : terms_) {
    bool inside = true;
    for (std::size_t i = 0; i < nvars_ && inside; ++i)
      if (m[i] != 0 && (i < first || i >= first + count)) inside = false;
    if (!inside) continue;
    out.terms_.emplace(Monomial(m.begin() + first, m.begin() + first + count), c);
  }
  return out;
}

Polynomial Polynomial::embed(std::size_t nvars, std::size_t offset) const {
  Polynomial out(nvars);
  for (const auto& [m, c] : terms_) {
    Monomial d(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) d.at(offset + i) = m[i];
    out.terms_.emplace(std::move(d), c);
  }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
  if (values.size() != nvars_) throw std::invalid_argument("substitute: wrong number of values");
  const std::size_t target = values.empty() ? 0 : values.front().nvars();
  std::vector<std::vector<Polynomial>> powers(nvars_);
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * values[i]);
      term = term * pw[m[i]];
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::operator-() const { return Gaussian(-1) * *this; }

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  Polynomial out(a.nvars_);
  Monomial m(a.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint16_t>(ma[i] + mb[i]);
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial operator*(const Gaussian& s, const Polynomial& p) {
  Polynomial out(p.nvars_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, s * c);
  return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first for readability.
  std::vector<std::pair<Monomial, Gaussian>> ordered(terms_.rbegin(), terms_.rend());
  bool first = true;
  for (const auto& [m, c] : ordered) {
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += names.at(i);
      if (m[i] > 1) mono += superscript(m[i]);
    }
    std::string coef;
    bool negative = false;
    Gaussian cc = c;
    if (cc.im().is_zero() && cc.re().sign() < 0) negative = true;
    if (cc.re().is_zero() && cc.im().sign() < 0) negative = true;
    if (negative) cc = -cc;
    if (cc.is_one()) coef = mono.empty() ? "1" : "";
    else if (cc.re().is_zero() || cc.im().is_zero()) coef = cc.str();
    else coef = "(" + cc.str() + ")";
    std::string term = coef.empty() ? mono : (mono.empty() ? coef : coef + " " + mono);
    if (first) out += negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : terms_)
    out.push_back({{"exp", m}, {"re", c.re().str()}, {"im", c.im().str()}});
  return out;
}

Polynomial Polynomial::from_json(const nlohmann::json& j, std::size_t nvars) {
  Polynomial p(nvars);
  for (const auto& t : j) {
    auto exps = t.at("exp").get<std::vector<int>>();
    if (exps.size() > nvars) throw std::invalid_argument("monomial has too many exponents");
    Monomial m(nvars, 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("negative exponent");
      m[i] = static_cast<std::uint16_t>(exps[i]);
    }
    auto part = [&](const char* key) {
      if (!t.contains(key)) return Rational();
      const auto& v = t.at(key);
      return v.is_number_integer() ? Rational(v.get<long>()) : Rational::parse(v.get<std::string>());
    };
    p.add_term(m, Gaussian(part("re"), part("im")));
  }
  return p;
}

PolyVectorField::PolyVectorField(Chart chart)
    : chart_(std::move(chart)), components_(chart_.size(), Polynomial(chart_.size())) {}

PolyVectorField::PolyVectorField(Chart chart, std::vector<Polynomial> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
  if (components_.size() != chart_.size()) throw std::invalid_argument("one component per coordinate required");
  for (const auto& p : components_)
    if (p.nvars() != chart_.size()) throw std::invalid_argument("component lives in the wrong ring");
}

PolyVectorField PolyVectorField::coordinate(const Chart& chart, std::size_t i) {
  PolyVectorField v(chart);
  v.components_.at(i) = Polynomial::constant(chart.size(), 1);
  return v;
}

bool PolyVectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const auto& p) { return p.is_zero(); });
}

Polynomial PolyVectorField::apply(const Polynomial& f) const {
  Polynomial out(chart_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (!components_[i].is_zero()) out += components_[i] * f.derivative(i);
  return out;
}

Vector PolyVectorField::at_origin() const {
  Vector v;
  for (const auto& p : components_) v.push_back(p.constant_term());
  return v;
}

PolyVectorField PolyVectorField::conj() const {
  PolyVectorField out(chart_);
  for (std::size_t i = 0; i < components_.size(); ++i)
    out.components_[chart_.conj_perm[i]] = components_[i].conj(chart_.conj_perm);
  return out;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  if (!(chart_ == o.chart_)) throw ChartMismatch("vector fields use different charts");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
  return *this;
}

PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
  return a + Gaussian(-1) * b;
}

PolyVectorField operator*(const Gaussian& s, const PolyVectorField& v) {
  PolyVectorField out = v;
  for (auto& p : out.components_) p = s * p;
  return out;
}

std::string PolyVectorField::str() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const Polynomial& p = components_[i];
    if (p.is_zero()) continue;
    const std::string d = "∂/∂" + chart_.names[i];
    std::string coef = p.str(chart_.names);
    bool negative = false;
    if (p.terms().size() == 1 && coef.front() == '-') {
      negative = true;
      coef.erase(0, 1);
    }
    std::string term;
    if (coef == "1") term = d;
    else if (p.terms().size() == 1) term = coef + " " + d;
    else term = "(" + coef + ") " + d;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

nlohmann::json PolyVectorField::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& p : components_) comps.push_back(p.to_json());
  return {{"coordinates", chart_.names}, {"components", comps}};
}

PolyVectorField PolyVectorField::from_json(const nlohmann::json& j, const Chart& chart) {
  const auto& comps = j.at("components");
  if (comps.size() != chart.size()) throw std::invalid_argument("vector field has wrong number of components");
  std::vector<Polynomial> ps;
  for (const auto& c : comps) ps.push_back(Polynomial::from_json(c, chart.size()));
  return PolyVectorField(chart, std::move(ps));
}

PolyVectorField vf_bracket(const PolyVectorField& a, const PolyVectorField& b) {
  if (!(a.chart() == b.chart())) throw ChartMismatch("vector fields use different charts");
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < a.chart().size(); ++i)
    comps.push_back(a.apply(b.component(i)) - b.apply(a.component(i)));
  return PolyVectorField(a.chart(), std::move(comps));
}

}  // namespace tanaka
