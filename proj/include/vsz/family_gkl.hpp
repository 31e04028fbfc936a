#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "vsz/critical.hpp"
#include "vsz/graph.hpp"
#include "vsz/invariants.hpp"

namespace vsz::gkl {

/// K_k minus a Hamiltonian cycle, every clique vertex joined to the first
/// vertex of a path with ell edges. The closed forms need k >= 6.
struct Params {
    std::int64_t k = 6;
    std::int64_t ell = 1;

    friend bool operator==(const Params&, const Params&) = default;
};

/// Throws std::invalid_argument unless k >= 6 and ell >= 1.
void validate(const Params& p);

std::size_t vertex_count(const Params& p);
std::size_t edge_count(const Params& p);

/// Clique vertex v_i gets id i-1, path vertex u_j gets id k+j-1.
Graph build(const Params& p);

/// Multiplicity-weighted distance terms of W^alpha(G_{k,ell}).
std::vector<WeightedTerm> wiener_terms(const Params& p);
/// Multiplicity-weighted edge terms of Sz^alpha(G_{k,ell}).
std::vector<WeightedTerm> szeged_terms(const Params& p);

double wiener_alpha_closed(const Params& p, double alpha);
double szeged_alpha_closed(const Params& p, double alpha);
std::int64_t wiener_closed_exact(const Params& p);
std::int64_t szeged_closed_exact(const Params& p);

/// h for G_{k,ell} from the closed forms, without building the graph.
GapFunction closed_form_gap(const Params& p);

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = -1;  // inclusive; lo > hi means empty
};

struct MultirootHit {
    Params params;
    std::size_t root_count = 0;
};

/// Scan used for counting roots on (0, 1): the find_roots defaults clipped to hi = 1.
ScanOptions multiroot_scan();

std::size_t count_roots_closed(const Params& p, const ScanOptions& opts = multiroot_scan());

/// Every (k, ell) in the grid whose closed-form gap has at least three roots
/// in (0, 1), in row-major (k, then ell) order.
std::vector<MultirootHit> search_multiroot(Range k, Range ell, const ScanOptions& opts = multiroot_scan());

}  // namespace vsz::gkl
