#include "kawalab/parampoly.hpp"

#include <sstream>
#include <stdexcept>

namespace kawalab {

const std::array<const char*, kNumSymbols> kSymbolNames = {"omega", "gamma", "beta", "lambda",
                                                           "B"};

int total_degree(const Expo& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool GradedLexGreater::operator()(const Expo& a, const Expo& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  // lex with omega highest precedence: larger exponent on an earlier symbol wins
  for (int i = 0; i < kNumSymbols; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

ParamPoly ParamPoly::constant(Rational c) {
  ParamPoly p;
  if (c != 0) p.terms_[Expo{0, 0, 0, 0, 0}] = std::move(c);
  return p;
}

ParamPoly ParamPoly::symbol(Sym s) {
  Expo e{0, 0, 0, 0, 0};
  e[static_cast<int>(s)] = 1;
  return monomial(e, Rational(1));
}

ParamPoly ParamPoly::monomial(const Expo& e, Rational c) {
  ParamPoly p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

int ParamPoly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);  // leading term has max degree
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly p;
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Expo e;
      for (int i = 0; i < kNumSymbols; ++i) e[i] = ea[i] + eb[i];
      auto it = p.terms_.find(e);
      if (it == p.terms_.end()) {
        Rational c = ca * cb;
        if (c != 0) p.terms_.emplace(e, std::move(c));
      } else {
        it->second += ca * cb;
        if (it->second == 0) p.terms_.erase(it);
      }
    }
  return p;
}

ParamPoly ParamPoly::scaled(const Rational& c) const {
  ParamPoly p;
  if (c == 0) return p;
  for (const auto& [e, v] : terms_) p.terms_[e] = v * c;
  return p;
}

Rational ParamPoly::rational_content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_class num = c.get_num(), den = c.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  Rational content(g, l);
  content.canonicalize();
  if (sgn(terms_.begin()->second) < 0) content = -content;
  return content;
}

Expo ParamPoly::monomial_content() const {
  Expo m{0, 0, 0, 0, 0};
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      m = e;
      first = false;
    } else {
      for (int i = 0; i < kNumSymbols; ++i) m[i] = std::min(m[i], e[i]);
    }
  }
  return m;
}

ParamPoly ParamPoly::primitive_part() const {
  if (terms_.empty()) return {};
  Rational rc = rational_content();
  Expo mc = monomial_content();
  ParamPoly p;
  for (const auto& [e, c] : terms_) {
    Expo ne;
    for (int i = 0; i < kNumSymbols; ++i) ne[i] = e[i] - mc[i];
    p.terms_[ne] = c / rc;
  }
  return p;
}

ParamPoly ParamPoly::substitute(Sym s, const ParamPoly& value) const {
  const int si = static_cast<int>(s);
  int maxdeg = 0;
  for (const auto& [e, c] : terms_) maxdeg = std::max(maxdeg, e[si]);
  std::vector<ParamPoly> powers(maxdeg + 1);
  powers[0] = constant(Rational(1));
  for (int i = 1; i <= maxdeg; ++i) powers[i] = powers[i - 1] * value;
  ParamPoly out;
  for (const auto& [e, c] : terms_) {
    Expo rest = e;
    rest[si] = 0;
    out += monomial(rest, c) * powers[e[si]];
  }
  return out;
}

ParamPoly ParamPoly::eliminate_gamma(const Rational& c) const {
  const int gi = static_cast<int>(Sym::gamma);
  const int li = static_cast<int>(Sym::lambda);
  const int Bi = static_cast<int>(Sym::B);
  ParamPoly out;
  for (const auto& [e, v] : terms_) {
    int g = e[gi];
    Expo ne = e;
    ne[gi] = 0;
    ne[li] += g;
    ne[Bi] -= 2 * g;
    if (ne[Bi] < 0)
      throw std::domain_error("eliminate_gamma: term lacks the B^2 factor riding on gamma");
    out += monomial(ne, v * rat_pow(c, static_cast<unsigned>(g)));
  }
  return out;
}

std::string monomial_to_string(const std::array<int, kNumSymbols>& e) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < kNumSymbols; ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    os << kSymbolNames[i];
    if (e[i] != 1) os << "^" << e[i];
    any = true;
  }
  return any ? os.str() : std::string("1");
}

static std::string coeff_to_string(const Rational& c) {
  std::string s = c.get_str();
  if (c.get_den() != 1) return "(" + s + ")";
  return s;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    bool is_const = total_degree(e) == 0;
    if (a != 1 || is_const) {
      os << coeff_to_string(a);
      if (!is_const) os << "*";
    }
    if (!is_const) os << monomial_to_string(e);
  }
  return os.str();
}

std::string ParamPoly::Proportionality::ratio_string() const {
  if (!match) return "none";
  std::ostringstream os;
  os << coeff_to_string(coef);
  std::array<int, kNumSymbols> num = mono, den{0, 0, 0, 0, 0};
  bool has_num = false, has_den = false;
  for (int i = 0; i < kNumSymbols; ++i) {
    if (num[i] < 0) {
      den[i] = -num[i];
      num[i] = 0;
      has_den = true;
    } else if (num[i] > 0) {
      has_num = true;
    }
  }
  if (has_num) os << "*" << monomial_to_string(num);
  if (has_den) os << "/(" << monomial_to_string(den) << ")";
  return os.str();
}

ParamPoly::Proportionality ParamPoly::proportional(const ParamPoly& a, const ParamPoly& b) {
  Proportionality r;
  r.mono = {0, 0, 0, 0, 0};
  if (a.is_zero() || b.is_zero()) {
    r.match = a.is_zero() && b.is_zero();
    r.coef = Rational(r.match ? 1 : 0);
    return r;
  }
  if (a.primitive_part() != b.primitive_part()) return r;
  r.match = true;
  r.coef = a.rational_content() / b.rational_content();
  Expo ma = a.monomial_content(), mb = b.monomial_content();
  for (int i = 0; i < kNumSymbols; ++i) r.mono[i] = ma[i] - mb[i];
  return r;
}

}  // namespace kawalab
