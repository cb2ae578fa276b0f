#pragma once

#include <string>
#include <vector>

#include "rpkh/diagram.hpp"

namespace rpkh {

// Bundled verification corpus. Entries are built programmatically; the JSON
// files under corpus/ are generated from this registry (tools/gen_corpus)
// and kept in sync by a test.
struct CorpusEntry {
  DiagramRP2 diagram;
  bool class1 = false;    // generates H1(RP3)
  bool affine = false;    // boundary_points == 0
};

std::vector<CorpusEntry> corpus();
const DiagramRP2& corpus_diagram(const std::string& name);

DiagramRP2 make_free_unknot();
DiagramRP2 make_two_passage_unknot();
DiagramRP2 make_unknot_kink(OverPair over = OverPair::O13);
DiagramRP2 make_trefoil(OverPair over = OverPair::O02);
DiagramRP2 make_figure8();
DiagramRP2 make_hopf();
DiagramRP2 make_p2link(OverPair over = OverPair::O13);
DiagramRP2 make_p1knot();
DiagramRP2 make_essential_circle();

}  // namespace rpkh
