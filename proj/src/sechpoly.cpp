#include "kawalab/sechpoly.hpp"

#include <sstream>

namespace kawalab {

SechPoly SechPoly::term(int n, ParamPoly coeff) {
  SechPoly f;
  f.insert(n, std::move(coeff));
  return f;
}

void SechPoly::insert(int n, ParamPoly c) {
  if (c.is_zero()) return;
  auto it = terms_.find(n);
  if (it == terms_.end()) {
    terms_.emplace(n, std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly SechPoly::coefficient(int n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? ParamPoly() : it->second;
}

SechPoly& SechPoly::operator+=(const SechPoly& o) {
  for (const auto& [n, c] : o.terms_) insert(n, c);
  return *this;
}

SechPoly& SechPoly::operator-=(const SechPoly& o) {
  for (const auto& [n, c] : o.terms_) insert(n, -c);
  return *this;
}

SechPoly SechPoly::scaled(const ParamPoly& c) const {
  SechPoly f;
  for (const auto& [n, v] : terms_) f.insert(n, v * c);
  return f;
}

std::string SechPoly::to_string() const {
  if (terms_.empty()) return "0\n";
  std::ostringstream os;
  for (const auto& [n, c] : terms_) os << "(" << c.to_string() << ") * sech^" << n << "\n";
  return os.str();
}

SechPoly sech_mul(const SechPoly& f, const SechPoly& g) {
  SechPoly out;
  for (const auto& [nf, cf] : f.terms())
    for (const auto& [ng, cg] : g.terms()) out += SechPoly::term(nf + ng, cf * cg);
  return out;
}

SechPoly sech_pow(const SechPoly& f, int q) {
  SechPoly out = SechPoly::term(0, ParamPoly::constant(Rational(1)));
  for (int i = 0; i < q; ++i) out = sech_mul(out, f);
  return out;
}

SechPoly sech_d2(const SechPoly& f) {
  const ParamPoly B = ParamPoly::symbol(Sym::B);
  SechPoly out;
  for (const auto& [n, c] : f.terms()) {
    if (n == 0) continue;  // constants differentiate away
    ParamPoly cb = c * B;
    out += SechPoly::term(n, cb.scaled(Rational(n) * Rational(n)));
    out += SechPoly::term(n + 2, cb.scaled(-Rational(n) * Rational(n + 1)));
  }
  return out;
}

EquationForm EquationForm::kawahara() { return {"kawahara", rat(1, 2), 2, rat(1)}; }
EquationForm EquationForm::mkawahara() { return {"mkawahara", rat(1), 3, rat(1)}; }
EquationForm EquationForm::custom(Rational c2, Rational nl_coeff, int nl_power,
                                  std::string name) {
  EquationForm eq;
  eq.name = std::move(name);
  eq.nl_coeff = std::move(nl_coeff);
  eq.nl_power = nl_power;
  eq.c2 = std::move(c2);
  return eq;
}

SechPoly stationary_residual(const EquationForm& eq, const SechPoly& ansatz) {
  const ParamPoly omega = ParamPoly::symbol(Sym::omega);
  const ParamPoly gamma = ParamPoly::symbol(Sym::gamma);
  SechPoly res = ansatz.scaled(-omega);
  res += sech_pow(ansatz, eq.nl_power).scaled(eq.nl_coeff);
  SechPoly d2 = sech_d2(ansatz);
  res += d2.scaled(eq.c2);
  res -= sech_d2(d2).scaled(gamma);
  return res;
}

SechPoly kawahara_ansatz() {
  return SechPoly::term(2, ParamPoly::symbol(Sym::beta)) +
         SechPoly::term(4, ParamPoly::symbol(Sym::lambda));
}

SechPoly mkawahara_ansatz() { return SechPoly::term(2, ParamPoly::symbol(Sym::beta)); }

std::vector<CollectedEquation> collect_coefficient_system(const SechPoly& residual) {
  std::vector<CollectedEquation> out;
  for (const auto& [n, c] : residual.terms())
    if (!c.is_zero()) out.push_back({n, c});
  return out;
}

}  // namespace kawalab
