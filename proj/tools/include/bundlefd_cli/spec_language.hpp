#pragma once

#include <string_view>

#include <bundlefd/bundle.hpp>
#include <bundlefd/graph.hpp>

namespace bundlefd::cli {

/// Graph expressions accepted on the command line:
///
///   C5  K4  K4-e  P3  Q3            named families
///   circulant(16,[1,4])             circulant with jump list
///   product(B,F)  bundle(B,F,T)     total graph of a bundle over B
///   torus(n,T)                      C_n over C_n twisted on the edge (n-1,0)
///   file:path                       edge-list file
///
/// Twists T are id, rotK, reflK (cycle fibres) or an explicit image list
/// such as [1,2,3,0]. A suffix @u-v places the twist on the directed base
/// edge (u,v); by default it sits on the edge from the largest base vertex
/// to its smallest neighbour. Errors are ParseErrors with a 1-based column.
Graph parse_graph_spec(std::string_view text);

/// Same language; product/bundle/torus keep their structure, and file:path
/// reads the bundle text format.
Bundle parse_bundle_spec(std::string_view text);

}  // namespace bundlefd::cli
