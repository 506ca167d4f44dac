#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "census/pattern.hpp"
#include "census/tournament.hpp"

namespace census {

// Row-major n*n adjacency bits packed little-endian into 64 bits (n <= 7).
using CanonCode = std::uint64_t;

// Minimum of the packed adjacency string over all vertex permutations.
// Equal codes <=> isomorphic. Brute force over n! orders; n <= 7 only.
CanonCode canonical_form(const Tournament& t);

Tournament tournament_from_code(int n, CanonCode code);
CanonCode pack_code(const Tournament& t);

// Number of vertex permutations fixing the orientation; n <= 7.
long long automorphism_order(const Tournament& t);

// True iff reorienting any nonempty set of edges with both endpoints
// outside R always breaks isomorphism with t. n <= 5.
bool is_signature(const Tournament& t, std::span<const int> r);

struct SignatureResult {
  int size = 0;
  std::vector<int> witness;  // first minimal signature in subset order
};

// Smallest signature, by ascending-size subset search; n <= 5.
SignatureResult signature_size(const Tournament& t);

struct CatalogEntry {
  Pattern pattern;
  CanonCode code = 0;
  long long aut_order = 0;
  std::vector<int> out_degrees;  // descending
  int signature = 0;
};

// Canonical representatives and derived data for all tournament classes on
// 3, 4 and 5 vertices, with Figure-style names bound by calibration.
class Catalog {
 public:
  // Catalog built from the frozen calibration table (fast path).
  static const Catalog& instance();

  // Full recomputation: enumerates all 1024 labeled 5-vertex tournaments,
  // buckets them into classes, pins T5/R5/H1/H1T/H3/H8 structurally and the
  // remaining three name pairs by requiring every Table-style census
  // equation to hold on fixed random instances. Throws CalibrationAmbiguous
  // if more or fewer than one assignment survives.
  static Catalog calibrate();

  const CatalogEntry& entry(Pattern p) const;
  std::span<const CatalogEntry> entries() const { return entries_; }
  Tournament representative(Pattern p) const;

  // The unique class of t; n in {3,4,5}.
  Pattern classify(const Tournament& t) const;
  Pattern classify_code(int n, CanonCode canon) const;

  // Class of the k-subset code produced by subset_code (LUT lookup).
  Pattern classify_subset_code(int k, unsigned code) const;

  std::string to_json() const;

 private:
  Catalog() = default;
  void build_luts();

  std::vector<CatalogEntry> entries_;            // all 18, Pattern order
  std::vector<Pattern> lut3_, lut4_, lut5_;      // subset-code -> class
};

// Orientation bits of the sub-tournament on vertices vs (ascending pair
// order (0,1),(0,2),...): bit t set iff vs[i] -> vs[j].
unsigned subset_code(const Tournament& g, std::span<const int> vs);

// Ground-truth census: classifies every k-subset exhaustively.
// Caps: n <= 1024 (k=3), n <= 256 (k=4), n <= 64 (k=5); else TooLarge.
CountVector oracle_count(const Tournament& g, int k);

}  // namespace census
