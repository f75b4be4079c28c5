// Text formats shared by the CLI and the tests.
//
// Edge list: first meaningful line "n k" (k is the claimed bandwidth
// witness), then one "i j" line per edge with 1 <= i < j <= n. Blank lines
// are skipped and '#' starts a comment that runs to the end of the line.
//
// Subdivision: "roots u w", then one line per branch listing its vertices.
//
// Trace: one line per growth step, either
//   "step <t> endpoint <v> extend <v'>"  or  "step <t> crash <v>".
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spansub/builder.hpp"
#include "spansub/graph.hpp"
#include "spansub/oracle.hpp"

namespace spansub {

struct EdgeListFile {
    int n = 0;
    int k = 0;
    std::vector<std::pair<int, int>> edges;
};

// Parses the edge-list format; source names the stream in error messages.
EdgeListFile read_edge_list(std::istream& in, const std::string& source);

// Builds the graph and, when check_witness is set, fails with
// BandwidthViolatedError unless every edge fits the declared witness k.
LabeledGraph edge_list_to_graph(const EdgeListFile& file, bool check_witness);

void write_edge_list(std::ostream& out, const LabeledGraph& g, int k);

void write_subdivision(std::ostream& out, const RootedSubdivision& s);
RootedSubdivision read_subdivision(std::istream& in,
                                   const std::string& source);

void write_trace(std::ostream& out, const BuildTrace& trace);

// Single line "cycle v1 v2 ..." / "path v1 v2 ...".
void write_cycle(std::ostream& out, const std::vector<int>& cycle);
void write_path(std::ostream& out, const std::vector<int>& path);

// Certificate kind on its own line, then the evidence in the formats above
// ("cut v1 v2 ..." for separators, nothing for exhaustion).
void write_certificate(std::ostream& out, const Certificate& cert);

} // namespace spansub
