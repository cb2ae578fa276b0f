#include "rpkh/laurent.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rpkh {

LaurentQ LaurentQ::monomial(long long c, int e) {
  LaurentQ p;
  p.add(c, e);
  return p;
}

LaurentQ LaurentQ::loop() {
  LaurentQ p;
  p.add(1, 1);
  p.add(1, -1);
  return p;
}

LaurentQ& LaurentQ::add(long long c, int e) {
  if (c == 0) return *this;
  auto it = coeffs.find(e);
  if (it == coeffs.end()) {
    coeffs.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
  return *this;
}

long long LaurentQ::coeff(int e) const {
  auto it = coeffs.find(e);
  return it == coeffs.end() ? 0 : it->second;
}

LaurentQ LaurentQ::operator+(const LaurentQ& o) const {
  LaurentQ r = *this;
  for (auto& [e, c] : o.coeffs) r.add(c, e);
  return r;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  for (auto& [e, c] : o.coeffs) add(c, e);
  return *this;
}

LaurentQ LaurentQ::operator-(const LaurentQ& o) const {
  LaurentQ r = *this;
  for (auto& [e, c] : o.coeffs) r.add(-c, e);
  return r;
}

LaurentQ LaurentQ::operator*(const LaurentQ& o) const {
  LaurentQ r;
  for (auto& [e1, c1] : coeffs)
    for (auto& [e2, c2] : o.coeffs) r.add(c1 * c2, e1 + e2);
  return r;
}

LaurentQ LaurentQ::pow(int n) const {
  LaurentQ r = one();
  for (int i = 0; i < n; i++) r = r * (*this);
  return r;
}

namespace {

// Renders one term of a canonical polynomial string. `vars` is a list of
// (symbol, exponent); zero exponents are dropped, exponent 1 prints bare.
std::string term_str(long long c, std::initializer_list<std::pair<const char*, int>> vars) {
  std::ostringstream os;
  bool any_var = false;
  for (auto& [sym, e] : vars)
    if (e != 0) any_var = true;
  long long a = c < 0 ? -c : c;
  if (!any_var || a != 1) {
    os << a;
    if (any_var) os << ' ';
  }
  bool first = true;
  for (auto& [sym, e] : vars) {
    if (e == 0) continue;
    if (!first) os << ' ';
    first = false;
    os << sym;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace

std::string LaurentQ::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : coeffs) {
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << term_str(c, {{"q", e}});
  }
  return os.str();
}

PoincarePoly& PoincarePoly::add(long long c, int i, int m) {
  if (c == 0) return *this;
  auto key = std::make_pair(i, m);
  auto it = coeffs.find(key);
  if (it == coeffs.end()) {
    coeffs.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
  return *this;
}

long long PoincarePoly::coeff(int i, int m) const {
  auto it = coeffs.find({i, m});
  return it == coeffs.end() ? 0 : it->second;
}

PoincarePoly PoincarePoly::operator+(const PoincarePoly& o) const {
  PoincarePoly r = *this;
  for (auto& [k, c] : o.coeffs) r.add(c, k.first, k.second);
  return r;
}

LaurentQ PoincarePoly::at_t_minus_one() const {
  LaurentQ r;
  for (auto& [k, c] : coeffs) r.add(k.first % 2 == 0 ? c : -c, k.second);
  return r;
}

std::string PoincarePoly::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, c] : coeffs) {
    if (first) {
      if (c < 0) os << '-';
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << term_str(c, {{"t", k.first}, {"q", k.second}});
  }
  return os.str();
}

PoincarePoly PoincarePoly::parse(const std::string& s) {
  PoincarePoly p;
  std::istringstream is(s);
  long long sign = 1;
  std::string tok;
  long long coef = 1;
  int ti = 0, qe = 0;
  bool in_term = false;
  auto flush = [&]() {
    if (in_term) p.add(sign * coef, ti, qe);
    sign = 1;
    coef = 1;
    ti = qe = 0;
    in_term = false;
  };
  while (is >> tok) {
    if (tok == "+") {
      flush();
      continue;
    }
    if (tok == "-") {
      flush();
      sign = -1;
      continue;
    }
    // token is a factor: number, t[^e], q[^e]; possibly with leading '-'
    size_t pos = 0;
    if (tok[pos] == '-') {
      flush();
      sign = -1;
      pos = 1;
    }
    in_term = true;
    if (std::isdigit(static_cast<unsigned char>(tok[pos]))) {
      coef = std::stoll(tok.substr(pos));
    } else {
      char var = tok[pos];
      int e = 1;
      if (pos + 1 < tok.size()) {
        if (tok[pos + 1] != '^') throw std::runtime_error("bad polynomial token: " + tok);
        e = std::stoi(tok.substr(pos + 2));
      }
      if (var == 't')
        ti = e;
      else if (var == 'q')
        qe = e;
      else
        throw std::runtime_error("bad polynomial token: " + tok);
    }
  }
  flush();
  return p;
}

}  // namespace rpkh
