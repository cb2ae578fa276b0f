#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <random>

#include "rpkh/corpus.hpp"
#include "rpkh/homology.hpp"
#include "rpkh/io.hpp"
#include "rpkh/skein.hpp"
#include "rpkh/verify.hpp"

using namespace rpkh;

namespace {
const Dyad& dy(const char* name) { return *find_builtin_dyad(name); }
}

TEST_CASE("polynomial formatting and parsing") {
  LaurentQ p;
  p.add(1, -4).add(-1, -2).add(1, 0);
  REQUIRE(p.str() == "q^-4 - q^-2 + 1");
  REQUIRE(LaurentQ::zero().str() == "0");
  REQUIRE(LaurentQ::loop().pow(2).str() == "q^-2 + 2 + q^2");

  PoincarePoly pp;
  pp.add(1, -2, -4).add(2, -2, -3).add(1, 0, 0).add(1, 1, 1);
  REQUIRE(pp.str() == "t^-2 q^-4 + 2 t^-2 q^-3 + 1 + t q");
  REQUIRE(PoincarePoly::parse(pp.str()) == pp);
  REQUIRE(pp.at_t_minus_one().str() == "q^-4 + 2 q^-3 + 1 - q");
}

TEST_CASE("frobenius algebra axioms over F2") {
  // the library's m and Delta tables over label bits (0 = v+, 1 = v-)
  auto m = [](int a, int b) -> std::vector<int> {
    int r = frobenius_m(a, b);
    if (r < 0) return {};
    return {r};
  };
  auto delta = [](int a) { return frobenius_delta(a); };
  // associativity
  for (int a = 0; a < 2; a++)
    for (int b = 0; b < 2; b++)
      for (int c = 0; c < 2; c++) {
        std::map<int, int> lhs, rhs;
        for (int ab : m(a, b))
          for (int x : m(ab, c)) lhs[x] ^= 1;
        for (int bc : m(b, c))
          for (int x : m(a, bc)) rhs[x] ^= 1;
        REQUIRE(lhs == rhs);
      }
  // coassociativity and the Frobenius relation Delta m = (m x id)(id x Delta)
  for (int a = 0; a < 2; a++) {
    std::map<std::tuple<int, int, int>, int> lhs, rhs;
    for (auto [x, y] : delta(a))
      for (auto [u, v] : delta(x)) lhs[{u, v, y}] ^= 1;
    for (auto [x, y] : delta(a))
      for (auto [u, v] : delta(y)) rhs[{x, u, v}] ^= 1;
    REQUIRE(lhs == rhs);
  }
  for (int a = 0; a < 2; a++)
    for (int b = 0; b < 2; b++) {
      std::map<std::pair<int, int>, int> lhs, rhs;
      for (int ab : m(a, b))
        for (auto [x, y] : delta(ab)) lhs[{x, y}] ^= 1;
      for (auto [x, y] : delta(b))
        for (int ax : m(a, x)) rhs[{ax, y}] ^= 1;
      REQUIRE(lhs == rhs);
    }
  // m Delta = 0 over F2
  for (int a = 0; a < 2; a++) {
    std::map<int, int> acc;
    for (auto [x, y] : delta(a))
      for (int z : m(x, y)) acc[z] ^= 1;
    for (auto& [z, c] : acc) REQUIRE(c == 0);
  }
}

TEST_CASE("qdim is multiplicative and dyad maps stay homogeneous") {
  const Dyad& hf = dy("hf");
  LaurentQ prod = qdim(hf.V0) * qdim(hf.V1);
  GradedSpaceF2 tensor;
  for (auto& [n1, d1] : hf.V0.gens)
    for (auto& [n2, d2] : hf.V1.gens) tensor.gens.push_back({n1 + n2, d1 + d2});
  REQUIRE(qdim(tensor) == prod);

  for (auto& a : random_dyads(10, 7)) {
    CAPTURE(a.name);
    REQUIRE(dyad_validate(a).empty());
  }
}

TEST_CASE("diagram JSON round trip") {
  for (const auto& e : corpus()) {
    std::string text = diagram_to_json(e.diagram);
    DiagramRP2 back = diagram_from_json(text);
    REQUIRE(diagram_to_json(back) == text);
    REQUIRE(validate(back).ok() == validate(e.diagram).ok());
  }
}

TEST_CASE("dyad JSON round trip and file semantics") {
  for (auto& a : builtin_dyads()) {
    Dyad back = dyad_from_json(dyad_to_json(a));
    REQUIRE(dyad_to_json(back) == dyad_to_json(a));
    REQUIRE(dyad_validate(back).empty());
  }
  // missing f/g keys mean zero maps
  Dyad z = dyad_from_json(R"({"name":"z","V0":[["a",0]],"V1":[["b",-1]]})");
  REQUIRE(z.f.is_zero());
  REQUIRE(z.g.is_zero());
  REQUIRE(dyad_validate(z).empty());
}

TEST_CASE("corpus JSON files are in sync with the registry") {
  namespace fs = std::filesystem;
  fs::path dir = fs::path(__FILE__).parent_path().parent_path() / "corpus";
  REQUIRE(fs::exists(dir));
  for (const auto& e : corpus()) {
    fs::path f = dir / (e.diagram.name + ".json");
    CAPTURE(f.string());
    REQUIRE(fs::exists(f));
    REQUIRE(read_file(f.string()) == diagram_to_json(e.diagram));
  }
}

TEST_CASE("homology is invariant under generator shuffles; rank-nullity holds") {
  const DiagramRP2& d = corpus_diagram("p1knot");
  Geometry g(d);
  auto C = build_reduced_complex(g, dy("hf"), g.default_basepoint(), g.default_marked_arc());
  auto ref = homology_dims(C);

  std::mt19937 rng(99);
  ChainComplexBigraded S = C;
  // shuffle generators inside each level, keeping qdeg labels attached
  std::vector<std::vector<int>> perm(S.num_levels());
  for (int li = 0; li < S.num_levels(); li++) {
    auto& L = S.levels[li];
    perm[li].resize(L.dim);
    std::iota(perm[li].begin(), perm[li].end(), 0);
    std::shuffle(perm[li].begin(), perm[li].end(), rng);
    std::vector<int> q(L.dim);
    for (int i = 0; i < L.dim; i++) q[perm[li][i]] = L.qdeg[i];
    L.qdeg = q;
  }
  for (int li = 0; li + 1 < S.num_levels(); li++)
    for (auto& [r, c] : S.diffs[li]) {
      r = perm[li][r];
      c = perm[li + 1][c];
    }
  REQUIRE(homology_dims(S, false) == ref);

  // rank-nullity per q slice: dim ker + rank = dim, via dim H <= dim C
  auto chains = chain_dims(C);
  for (auto& [iq, dim] : ref) REQUIRE(dim <= chains[iq]);
}

TEST_CASE("bracket equals the state sum and has 2^n leaves") {
  for (const char* name : {"p1knot", "trefoil", "p2link"}) {
    const DiagramRP2& d = corpus_diagram(name);
    Geometry g(d);
    FaceRef P = g.canonical_base_face();
    for (int parity = 0; parity < 2; parity++) {
      LaurentQ direct;
      int leaves = 0;
      for (uint32_t bits = 0; bits < (uint32_t(1) << d.n()); bits++) {
        leaves++;
        Smoothing sm = g.resolve(State{bits, d.n()});
        if (g.encircling_number(sm, P) != parity) continue;
        int w = State{bits, d.n()}.weight();
        LaurentQ term = LaurentQ::loop().pow(sm.k() - 1) *
                        LaurentQ::monomial(w % 2 == 0 ? 1 : -1, w);
        direct += term;
      }
      REQUIRE(leaves == 1 << d.n());
      REQUIRE(bracket(g, P, parity) == direct);
    }
  }
}

TEST_CASE("negative control: corrupted differential is caught with a witness") {
  const DiagramRP2& d = corpus_diagram("p1knot");
  Geometry g(d);
  auto C = build_reduced_complex(g, dy("aps"), g.default_basepoint(), g.default_marked_arc());
  REQUIRE(verify_d_squared(C));
  // corrupt an edge map entry whose target feeds the next level, so one of
  // the two routes around a square is lost
  ChainComplexBigraded bad = C;
  std::set<int> live_mid;
  for (auto& [m, t] : bad.diffs[1]) live_mid.insert(m);
  for (size_t i = 0; i < bad.diffs[0].size(); i++) {
    if (live_mid.count(bad.diffs[0][i].second)) {
      bad.diffs[0].erase(bad.diffs[0].begin() + i);
      break;
    }
  }
  REQUIRE(bad.diffs[0].size() + 1 == C.diffs[0].size());
  D2Report rep = verify_d_squared_report(bad);
  REQUIRE_FALSE(rep.ok);
  REQUIRE(rep.row >= 0);
  REQUIRE(rep.str().find("d^2 != 0") != std::string::npos);
  REQUIRE_THROWS(homology_dims(bad));
}

TEST_CASE("seifert state is the unique orientation preserving resolution") {
  for (const char* name : {"trefoil", "figure8", "p1knot"}) {
    const DiagramRP2& d = corpus_diagram(name);
    DiagramIndex idx(d);
    OrientationData o = orient(d, idx);
    State seif = seifert_state(d);
    for (int c = 0; c < d.n(); c++) {
      SlotPairing p = smoothing_pairing(d.crossings[c].over_pair, seif.bit(c));
      REQUIRE(o.slot_in[4 * c + 0] != o.slot_in[4 * c + p.partner[0]]);
      SlotPairing bad = smoothing_pairing(d.crossings[c].over_pair, 1 - seif.bit(c));
      REQUIRE(o.slot_in[4 * c + 0] == o.slot_in[4 * c + bad.partner[0]]);
    }
  }
}

TEST_CASE("validate diagnoses structural defects") {
  DiagramRP2 d = corpus_diagram("p2link");
  d.arcs[0].end[0] = slot_ep(0, 1);  // slot used twice, boundary point unused
  REQUIRE_FALSE(validate(d).ok());

  DiagramRP2 e = corpus_diagram("trefoil");
  e.arcs.pop_back();
  REQUIRE_FALSE(validate(e).ok());

  DiagramRP2 f = corpus_diagram("unknot0");
  f.free_loops = 2;  // fine: side-by-side unlink
  auto rep = validate(f);
  REQUIRE(rep.ok());
  Geometry g(f);
  REQUIRE(g.num_face_orbits() == 3);
  // canonical P: the lowest orbit with region parity 0 = the face outside
  // both circles; the two insides have parity 1
  int zero_parity = 0;
  for (int orbit = 0; orbit < 3; orbit++)
    if (g.region_parity(FaceRef{orbit}) == 0) {
      zero_parity++;
      REQUIRE(g.canonical_base_face().orbit == orbit);
    }
  REQUIRE(zero_parity == 1);
}

TEST_CASE("region parity determines the encircling pattern (Prop 1.3.4)") {
  for (const auto& e : corpus()) {
    if (e.class1 || e.diagram.n() > 6) continue;
    CAPTURE(e.diagram.name);
    Geometry g(e.diagram);
    const int n = e.diagram.n();
    std::vector<Smoothing> sm;
    for (uint32_t b = 0; b < (uint32_t(1) << n); b++) sm.push_back(g.resolve(State{b, n}));
    for (int p = 0; p < g.num_face_orbits(); p++) {
      for (int q = p + 1; q < g.num_face_orbits(); q++) {
        bool same = g.region_parity(FaceRef{p}) == g.region_parity(FaceRef{q});
        for (auto& s : sm) {
          int ep = g.encircling_number(s, FaceRef{p});
          int eq = g.encircling_number(s, FaceRef{q});
          REQUIRE(ep == (same ? eq : 1 - eq));
        }
      }
    }
  }
}

TEST_CASE("Jones polynomials are invariant under all five moves") {
  int tested = 0;
  for (auto& mp : generate_move_pairs()) {
    if (validate(mp.before).total_class != 0) continue;
    Geometry g1(mp.before), g2(mp.after);
    CAPTURE(mp.base, mp.move);
    REQUIRE(jones(g1, 0) == jones(g2, 0));
    REQUIRE(jones(g1, 1) == jones(g2, 1));
    tested++;
  }
  REQUIRE(tested >= 20);
}

TEST_CASE("trivial module and comodule tables") {
  // y . v+ = y for every generator of either dyad space
  REQUIRE(trivial_module_m(0, 0) == 0);
  REQUIRE(trivial_module_m(3, 0) == 3);
  // y . v- = 0
  REQUIRE(trivial_module_m(0, 1) == -1);
  REQUIRE(trivial_module_m(2, 1) == -1);
  // Delta(y) = y tensor v-
  REQUIRE(trivial_comodule_delta(1) == std::make_pair(1, 1));
  // quantum degrees: both drop the total degree by one on the hf dyad
  const Dyad& hf = dy("hf");
  for (int y = 0; y < hf.V0.dim(); y++) {
    int in_deg = hf.V0.qdeg(y) + vlabel_qdeg(0);
    REQUIRE(hf.V0.qdeg(trivial_module_m(y, 0)) == in_deg - 1);
    auto [yy, l] = trivial_comodule_delta(y);
    REQUIRE(hf.V0.qdeg(yy) + vlabel_qdeg(l) == hf.V0.qdeg(y) - 1);
  }
}

TEST_CASE("complex serialization lists generators and entries") {
  Geometry g(corpus_diagram("p2link"));
  auto C = build_reduced_complex(g, dy("aps"), g.default_basepoint(), g.default_marked_arc());
  std::string j = complex_to_json(C);
  REQUIRE(j.find("\"levels\"") != std::string::npos);
  REQUIRE(j.find("\"differentials\"") != std::string::npos);
  REQUIRE(j.find("\"state\":\"0\"") != std::string::npos);
  REQUIRE(j.find("\"state\":\"1\"") != std::string::npos);
}

TEST_CASE("degenerate inputs: empty diagram and state mismatches") {
  DiagramRP2 empty;
  empty.name = "empty";
  REQUIRE(validate(empty).ok());
  REQUIRE(validate(empty).total_class == 0);
  Geometry g(empty);
  REQUIRE(g.num_face_orbits() == 1);
  Smoothing sm = g.resolve(State{0, 0});
  REQUIRE(sm.k() == 0);
  REQUIRE(g.encircling_number(sm, FaceRef{0}) == 0);
  REQUIRE_THROWS(build_reduced_complex(g, dy("aps"), FaceRef{0}, 0));
  REQUIRE_THROWS(bracket(g, FaceRef{0}, 0));

  Geometry gt(corpus_diagram("trefoil"));
  REQUIRE_THROWS(gt.resolve(State{0, 5}));
}
