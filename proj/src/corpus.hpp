#pragma once

#include <string>
#include <vector>

#include "analysis.hpp"
#include "finite_ring.hpp"

namespace glr {

struct CorpusEntry {
    std::string name;
    RingSpec spec;
};

/// The 8-element commutative ring F2[x,y]/(x^2, xy, y^2): the fixed
/// counterexample whose double annihilator collapses (x) into (x,y).
RingSpec f2xy_spec();

/// Cyclic rings, truncated polynomial rings over small prime fields, 2x2
/// matrix rings, and the counterexample table ring.
std::vector<CorpusEntry> corpus_base();

/// Representative direct products of base entries under the element cap.
std::vector<CorpusEntry> corpus_products();

/// corpus_base + corpus_products; the instance set for corpus-wide suites.
std::vector<CorpusEntry> corpus_full();

/// Small fixed set whose pairwise products stay under the default cap; used
/// for the product/quotient closure suite.
std::vector<CorpusEntry> corpus_small();

struct SuiteItem {
    std::string ring;
    std::string check;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::vector<SuiteItem> items;
    bool all_pass = true;
};

/// Every corpus-wide law in one run: classification consistency, the pseudo
/// MV / duality / correspondence checks on each GLR, the decomposition
/// certificates, the closure suite and the finite truncation witness.
SuiteReport run_property_suite(const RunConfig& cfg = {});

} // namespace glr
