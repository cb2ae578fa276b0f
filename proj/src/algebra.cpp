#include "rpkh/algebra.hpp"

#include <set>
#include <sstream>

namespace rpkh {

int GradedSpaceF2::index_of(const std::string& n) const {
  for (int i = 0; i < dim(); i++)
    if (gens[i].first == n) return i;
  return -1;
}

LaurentQ qdim(const GradedSpaceF2& s) {
  LaurentQ p;
  for (auto& [name, d] : s.gens) p.add(1, d);
  return p;
}

LinearMapF2 LinearMapF2::zero(int dom, int cod, int shift) {
  LinearMapF2 m;
  m.dom_dim = dom;
  m.cod_dim = cod;
  m.shift = shift;
  m.cols.assign(dom, {});
  return m;
}

bool LinearMapF2::is_zero() const {
  for (auto& c : cols)
    if (!c.empty()) return false;
  return true;
}

std::vector<uint8_t> LinearMapF2::apply(const std::vector<uint8_t>& v) const {
  std::vector<uint8_t> out(cod_dim, 0);
  for (int j = 0; j < dom_dim; j++)
    if (v[j])
      for (int i : cols[j]) out[i] ^= 1;
  return out;
}

LinearMapF2 compose(const LinearMapF2& b, const LinearMapF2& a) {
  LinearMapF2 r = LinearMapF2::zero(a.dom_dim, b.cod_dim, a.shift + b.shift);
  for (int j = 0; j < a.dom_dim; j++) {
    std::vector<uint8_t> acc(b.cod_dim, 0);
    for (int mid : a.cols[j])
      for (int i : b.cols[mid]) acc[i] ^= 1;
    for (int i = 0; i < b.cod_dim; i++)
      if (acc[i]) r.cols[j].push_back(i);
  }
  return r;
}

std::vector<std::string> dyad_validate(const Dyad& a) {
  std::vector<std::string> bad;
  auto check_space = [&](const GradedSpaceF2& s, const char* which) {
    std::set<std::string> seen;
    for (auto& [name, deg] : s.gens) {
      (void)deg;
      if (!seen.insert(name).second) bad.push_back(std::string(which) + ": duplicate generator " + name);
    }
  };
  check_space(a.V0, "V0");
  check_space(a.V1, "V1");
  auto check_map = [&](const LinearMapF2& m, const GradedSpaceF2& dom, const GradedSpaceF2& cod,
                       const char* which) {
    if (m.dom_dim != dom.dim() || m.cod_dim != cod.dim()) {
      bad.push_back(std::string(which) + ": dimension mismatch");
      return;
    }
    if (m.shift != -1) bad.push_back(std::string(which) + ": quantum degree shift is not -1");
    for (int j = 0; j < m.dom_dim; j++)
      for (int i : m.cols[j])
        if (cod.qdeg(i) != dom.qdeg(j) + m.shift) {
          std::ostringstream os;
          os << which << ": entry " << dom.name(j) << " -> " << cod.name(i)
             << " violates homogeneity";
          bad.push_back(os.str());
        }
  };
  check_map(a.f, a.V0, a.V1, "f");
  check_map(a.g, a.V1, a.V0, "g");
  if (bad.empty()) {
    if (!compose(a.g, a.f).is_zero()) bad.push_back("g o f != 0");
    if (!compose(a.f, a.g).is_zero()) bad.push_back("f o g != 0");
  }
  return bad;
}

Dyad dual_dyad(const Dyad& a) {
  Dyad d;
  d.name = a.name + "*";
  d.V0 = a.V1;
  d.V1 = a.V0;
  d.f = a.g;
  d.g = a.f;
  return d;
}

std::vector<Dyad> builtin_dyads() {
  std::vector<Dyad> out;

  GradedSpaceF2 F2pt{{{"1", 0}}};
  GradedSpaceF2 none{};
  GradedSpaceF2 W{{{"a", 1}, {"b", 0}, {"c", 0}, {"d", -1}}};
  GradedSpaceF2 Vbar{{{"vb+", 1}, {"vb-", -1}}};

  {
    Dyad aps;
    aps.name = "aps";
    aps.V0 = F2pt;
    aps.V1 = F2pt;
    aps.f = LinearMapF2::zero(1, 1);
    aps.g = LinearMapF2::zero(1, 1);
    out.push_back(aps);
  }
  {
    Dyad a0;
    a0.name = "a0";
    a0.V0 = F2pt;
    a0.V1 = none;
    a0.f = LinearMapF2::zero(1, 0);
    a0.g = LinearMapF2::zero(0, 1);
    out.push_back(a0);
  }
  {
    Dyad a1;
    a1.name = "a1";
    a1.V0 = none;
    a1.V1 = F2pt;
    a1.f = LinearMapF2::zero(0, 1);
    a1.g = LinearMapF2::zero(1, 0);
    out.push_back(a1);
  }
  {
    // f(b) = f(c) = u-,  g(u+) = b + c, all other generators map to zero.
    Dyad hf;
    hf.name = "hf";
    hf.V0 = W;
    hf.V1 = Vbar;
    hf.f = LinearMapF2::zero(4, 2);
    hf.f.cols[1] = {1};
    hf.f.cols[2] = {1};
    hf.g = LinearMapF2::zero(2, 4);
    hf.g.cols[0] = {1, 2};
    out.push_back(hf);
  }
  {
    Dyad hfp;
    hfp.name = "hfprime";
    hfp.V0 = W;
    hfp.V1 = Vbar;
    hfp.f = LinearMapF2::zero(4, 2);
    hfp.g = LinearMapF2::zero(2, 4);
    out.push_back(hfp);
  }
  return out;
}

const Dyad* find_builtin_dyad(const std::string& name) {
  static const std::vector<Dyad> all = builtin_dyads();
  for (auto& d : all)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace rpkh
