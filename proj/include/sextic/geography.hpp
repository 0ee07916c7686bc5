#pragma once

#include "sextic/scrollar.hpp"
#include "sextic/verifier.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextic::geography {

class NegativeGenus : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SliceRow {
  ScrollarTuple e;
  RegionLabel region;
  bool realizable;
  int expected_codim;
};

/// All degree-6 tuples of one genus, i.e. sum(e) = g + 5, sorted
/// lexicographically.
struct GenusSlice {
  int genus = 0;
  std::vector<SliceRow> rows;
};

/// Parallel over e1 under Execution::parallel; the serial path is the
/// reference. Both return identical slices.
GenusSlice enumerate_by_genus(int genus, verify::Execution exec = verify::Execution::parallel);

/// Every label is present in the map, with zero counts included.
std::map<RegionLabel, std::size_t> region_counts(int genus);
std::map<RegionLabel, std::size_t> region_counts(const GenusSlice& slice);

enum class Format { csv, json };

/// CSV header `e1,e2,e3,e4,e5,region,realizable,expected_codim`, LF endings;
/// JSON is an array of objects with the same keys.
std::string emit(const GenusSlice& slice, Format format);

}  // namespace sextic::geography
