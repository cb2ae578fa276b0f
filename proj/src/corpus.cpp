#include "rpkh/corpus.hpp"

#include <stdexcept>

#include "rpkh/complex.hpp"
#include "rpkh/moves.hpp"
#include "rpkh/smoothing.hpp"

namespace rpkh {

DiagramRP2 make_free_unknot() {
  DiagramRP2 d;
  d.name = "unknot0";
  d.free_loops = 1;
  return d;
}

DiagramRP2 make_two_passage_unknot() {
  DiagramRP2 d;
  d.name = "unknot_cc2";
  d.boundary_points = 4;
  d.arcs.push_back({{boundary_ep(0), boundary_ep(1)}});
  d.arcs.push_back({{boundary_ep(2), boundary_ep(3)}});
  return d;
}

DiagramRP2 make_unknot_kink(OverPair over) {
  DiagramRP2 d;
  d.name = "unknot_kink";
  d.crossings.push_back({over, ""});
  d.arcs.push_back({{slot_ep(0, 3), slot_ep(0, 0)}});
  d.arcs.push_back({{slot_ep(0, 2), slot_ep(0, 1)}});
  d.crosscap_face_dart = {{0, 0}};
  return d;
}

DiagramRP2 make_trefoil(OverPair over) {
  DiagramRP2 d;
  d.name = over == OverPair::O02 ? "trefoil" : "trefoil_l";
  for (int i = 0; i < 3; i++) d.crossings.push_back({over, ""});
  for (int i = 0; i < 3; i++) {
    int j = (i + 1) % 3;
    d.arcs.push_back({{slot_ep(i, 3), slot_ep(j, 0)}});
    d.arcs.push_back({{slot_ep(i, 2), slot_ep(j, 1)}});
  }
  d.crosscap_face_dart = {{0, 0}};
  return d;
}

DiagramRP2 make_figure8() {
  // closure of the three-strand braid (s1 s2^-1)^2; slots 0=SW 1=SE 2=NE 3=NW
  DiagramRP2 d;
  d.name = "figure8";
  d.crossings.push_back({OverPair::O02, ""});  // s1
  d.crossings.push_back({OverPair::O13, ""});  // s2^-1
  d.crossings.push_back({OverPair::O02, ""});
  d.crossings.push_back({OverPair::O13, ""});
  d.arcs.push_back({{slot_ep(0, 2), slot_ep(1, 0)}});
  d.arcs.push_back({{slot_ep(0, 3), slot_ep(2, 0)}});
  d.arcs.push_back({{slot_ep(1, 3), slot_ep(2, 1)}});
  d.arcs.push_back({{slot_ep(2, 2), slot_ep(3, 0)}});
  d.arcs.push_back({{slot_ep(1, 2), slot_ep(3, 1)}});
  d.arcs.push_back({{slot_ep(2, 3), slot_ep(0, 0)}});  // left closure
  d.arcs.push_back({{slot_ep(3, 3), slot_ep(0, 1)}});  // middle closure
  d.arcs.push_back({{slot_ep(3, 2), slot_ep(1, 1)}});  // right closure
  d.crosscap_face_dart = {{5, 1}};
  return d;
}

DiagramRP2 make_hopf() {
  DiagramRP2 d;
  d.name = "hopf";
  d.crossings.push_back({OverPair::O13, ""});
  d.crossings.push_back({OverPair::O13, ""});
  d.arcs.push_back({{slot_ep(0, 1), slot_ep(1, 2)}});
  d.arcs.push_back({{slot_ep(0, 3), slot_ep(1, 0)}});
  d.arcs.push_back({{slot_ep(0, 2), slot_ep(1, 1)}});
  d.arcs.push_back({{slot_ep(0, 0), slot_ep(1, 3)}});
  d.crosscap_face_dart = {{0, 0}};
  return d;
}

DiagramRP2 make_p2link(OverPair over) {
  DiagramRP2 d;
  d.name = "p2link";
  d.boundary_points = 4;
  d.crossings.push_back({over, ""});
  d.arcs.push_back({{boundary_ep(0), slot_ep(0, 0)}});
  d.arcs.push_back({{boundary_ep(1), slot_ep(0, 1)}});
  d.arcs.push_back({{slot_ep(0, 2), boundary_ep(2)}});
  d.arcs.push_back({{slot_ep(0, 3), boundary_ep(3)}});
  return d;
}

// The two-passage knot whose reduced homology reproduces the five golden
// polynomials; located by exhaustive search over 3-crossing disk diagrams.
DiagramRP2 make_p1knot() {
  DiagramRP2 d;
  d.name = "p1knot";
  d.crossings.push_back({OverPair::O02, ""});
  d.crossings.push_back({OverPair::O13, ""});
  d.crossings.push_back({OverPair::O13, ""});
  d.boundary_points = 4;
  d.arcs.push_back({{slot_ep(0, 0), slot_ep(1, 0)}});
  d.arcs.push_back({{slot_ep(0, 1), slot_ep(1, 3)}});
  d.arcs.push_back({{slot_ep(0, 2), slot_ep(2, 0)}});
  d.arcs.push_back({{slot_ep(0, 3), boundary_ep(0)}});
  d.arcs.push_back({{slot_ep(1, 1), boundary_ep(1)}});
  d.arcs.push_back({{slot_ep(1, 2), slot_ep(2, 1)}});
  d.arcs.push_back({{slot_ep(2, 2), boundary_ep(2)}});
  d.arcs.push_back({{slot_ep(2, 3), boundary_ep(3)}});
  return d;
}

DiagramRP2 make_essential_circle() {
  DiagramRP2 d;
  d.name = "cls1_circle";
  d.boundary_points = 2;
  d.arcs.push_back({{boundary_ep(0), boundary_ep(1)}});
  return d;
}

namespace {

DiagramRP2 named(DiagramRP2 d, const std::string& name) {
  d.name = name;
  return d;
}

// The class-1 theory takes the point P as part of its input, and the
// dyad-induced maps of the variant are only consistent away from nested
// trivial circles around P. Corpus entries pin the first basepoint that
// keeps d^2 = 0; validity is independent of the dyad, so probing with one
// nonzero dyad suffices.
DiagramRP2 with_consistent_basepoint(DiagramRP2 d) {
  Geometry g(d);
  const Dyad& probe = *find_builtin_dyad("hf");
  auto consistent = [&](FaceRef P) {
    try {
      return verify_d_squared(build_class1_complex(g, probe, P));
    } catch (const std::exception&) {
      return false;
    }
  };
  if (consistent(g.default_basepoint())) return d;
  for (int orbit = 0; orbit < g.num_face_orbits(); orbit++) {
    if (consistent(FaceRef{orbit})) {
      d.basepoint_face = orbit;
      return d;
    }
  }
  throw std::runtime_error(d.name + ": no consistent class-1 basepoint");
}

// 2-crossing disk diagrams realizing the local two-singular-point
// configurations as closed diagrams (enumerated, d^2-checked)
DiagramRP2 make_fig3_twist_split() {
  // cube profile k = 1,2,1,1: one twist crossing, one split/merge crossing
  DiagramRP2 d;
  d.name = "fig3_twist_split";
  d.boundary_points = 4;
  d.crossings.assign(2, {OverPair::O13, ""});
  d.arcs.push_back({{slot_ep(0, 0), slot_ep(1, 0)}});
  d.arcs.push_back({{slot_ep(0, 1), boundary_ep(0)}});
  d.arcs.push_back({{slot_ep(0, 2), boundary_ep(1)}});
  d.arcs.push_back({{slot_ep(0, 3), slot_ep(1, 1)}});
  d.arcs.push_back({{slot_ep(1, 2), boundary_ep(2)}});
  d.arcs.push_back({{slot_ep(1, 3), boundary_ep(3)}});
  return d;
}

DiagramRP2 make_fig3_double_twist() {
  // cube profile k = 1,1,2,2: both 0-neighbors twist
  DiagramRP2 d;
  d.name = "fig3_double_twist";
  d.boundary_points = 4;
  d.crossings.assign(2, {OverPair::O13, ""});
  d.arcs.push_back({{slot_ep(0, 0), slot_ep(1, 0)}});
  d.arcs.push_back({{slot_ep(0, 1), boundary_ep(0)}});
  d.arcs.push_back({{slot_ep(0, 2), boundary_ep(1)}});
  d.arcs.push_back({{slot_ep(0, 3), boundary_ep(2)}});
  d.arcs.push_back({{slot_ep(1, 1), slot_ep(1, 2)}});
  d.arcs.push_back({{slot_ep(1, 3), boundary_ep(3)}});
  return d;
}

DiagramRP2 make_fig3_kink_twist() {
  // cube profile k = 2,1,2,1: a kink circle beside a double passage
  DiagramRP2 d;
  d.name = "fig3_kink_twist";
  d.boundary_points = 4;
  d.crossings.assign(2, {OverPair::O13, ""});
  d.arcs.push_back({{slot_ep(0, 0), slot_ep(0, 1)}});
  d.arcs.push_back({{slot_ep(0, 2), slot_ep(1, 0)}});
  d.arcs.push_back({{slot_ep(0, 3), boundary_ep(0)}});
  d.arcs.push_back({{slot_ep(1, 1), boundary_ep(1)}});
  d.arcs.push_back({{slot_ep(1, 2), boundary_ep(2)}});
  d.arcs.push_back({{slot_ep(1, 3), boundary_ep(3)}});
  return d;
}

DiagramRP2 make_cls1_two_a() {
  // class 1, cube profile k = 2,3,1,2
  DiagramRP2 d;
  d.name = "cls1_two_a";
  d.boundary_points = 2;
  d.crossings.assign(2, {OverPair::O13, ""});
  d.arcs.push_back({{slot_ep(0, 0), slot_ep(0, 3)}});
  d.arcs.push_back({{slot_ep(0, 1), slot_ep(1, 0)}});
  d.arcs.push_back({{slot_ep(0, 2), slot_ep(1, 1)}});
  d.arcs.push_back({{slot_ep(1, 2), boundary_ep(0)}});
  d.arcs.push_back({{slot_ep(1, 3), boundary_ep(1)}});
  return d;
}

DiagramRP2 make_cls1_two_b() {
  // class 1, cube profile k = 1,2,2,1: splits then merges
  DiagramRP2 d;
  d.name = "cls1_two_b";
  d.boundary_points = 2;
  d.crossings.assign(2, {OverPair::O13, ""});
  d.arcs.push_back({{slot_ep(0, 0), slot_ep(1, 0)}});
  d.arcs.push_back({{slot_ep(0, 1), slot_ep(1, 3)}});
  d.arcs.push_back({{slot_ep(0, 2), slot_ep(1, 2)}});
  d.arcs.push_back({{slot_ep(0, 3), boundary_ep(0)}});
  d.arcs.push_back({{slot_ep(1, 1), boundary_ep(1)}});
  return d;
}

}  // namespace

std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](DiagramRP2 d, bool class1 = false) {
    CorpusEntry e;
    e.affine = d.boundary_points == 0;
    e.class1 = class1;
    e.diagram = std::move(d);
    out.push_back(std::move(e));
  };

  add(make_free_unknot());
  add(make_unknot_kink());
  add(named(mirror(make_unknot_kink()), "unknot_kink_m"));
  add(make_trefoil());
  add(named(mirror(make_trefoil()), "trefoil_m"));
  add(make_figure8());
  add(make_hopf());

  add(make_two_passage_unknot());
  add(make_p2link());
  add(named(mirror(make_p2link()), "p2link_m"));
  add(make_p1knot());
  add(named(mirror(make_p1knot()), "p1knot_m"));
  add(make_fig3_twist_split());
  add(make_fig3_double_twist());
  add(make_fig3_kink_twist());

  // move-derived class-0 diagrams up to 7 crossings
  {
    DiagramRP2 t5 = r1_insert(r1_insert(make_trefoil(), 0, OverPair::O02), 1, OverPair::O13);
    add(named(t5, "trefoil_5x"));
    DiagramRP2 f8;
    {
      DiagramRP2 base = make_figure8();
      Geometry g(base);
      auto sites = r2_sites(g);
      if (sites.empty()) throw std::runtime_error("figure8 has no R2 site");
      f8 = r2_insert(base, g, sites.front());
    }
    add(named(f8, "figure8_6x"));
    DiagramRP2 p5 = r1_insert(r1_insert(make_p1knot(), 0, OverPair::O02), 3, OverPair::O13);
    add(named(p5, "p1knot_5x"));
  }

  add(make_essential_circle(), true);
  add(with_consistent_basepoint(named(r1_insert(make_essential_circle(), 0, OverPair::O13),
                                      "cls1_kink")),
      true);
  add(with_consistent_basepoint(make_cls1_two_a()), true);
  add(with_consistent_basepoint(make_cls1_two_b()), true);
  {
    DiagramRP2 c3 = r1_insert(make_cls1_two_a(), 3, OverPair::O02);
    add(with_consistent_basepoint(named(c3, "cls1_3x")), true);
    DiagramRP2 base = make_cls1_two_b();
    Geometry g(base);
    auto sites = r2_sites(g);
    if (sites.empty()) throw std::runtime_error("cls1_two_b has no R2 site");
    DiagramRP2 c4 = r2_insert(base, g, sites.front());
    add(with_consistent_basepoint(named(c4, "cls1_4x")), true);
    DiagramRP2 c5 = r1_insert(c4, 0, OverPair::O13);
    add(with_consistent_basepoint(named(c5, "cls1_5x")), true);
  }
  return out;
}

const DiagramRP2& corpus_diagram(const std::string& name) {
  static const std::vector<CorpusEntry> all = corpus();
  for (const auto& e : all)
    if (e.diagram.name == name) return e.diagram;
  throw std::runtime_error("no corpus diagram named " + name);
}

}  // namespace rpkh
