#include "sextic/geography.hpp"

#include "json.hpp"

#include <sstream>

namespace sextic::geography {

namespace {

// Nondecreasing tails (e2..e5) with e2 >= e1 summing to `rest`.
void tails(int first, int rest, std::vector<SliceRow>& out) {
  std::array<int, 5> e{first, 0, 0, 0, 0};
  for (e[1] = first; 4 * e[1] <= rest; ++e[1])
    for (e[2] = e[1]; e[1] + 3 * e[2] <= rest; ++e[2])
      for (e[3] = e[2]; e[1] + e[2] + 2 * e[3] <= rest; ++e[3]) {
        e[4] = rest - e[1] - e[2] - e[3];
        ScrollarTuple t = ScrollarTuple::sextic(e);
        RegionLabel label = classify_region(t);
        bool ok = label == RegionLabel::P3Only || label == RegionLabel::Both || label == RegionLabel::QOnly;
        out.push_back(SliceRow{t, label, ok, expected_codim(t)});
      }
}

}  // namespace

GenusSlice enumerate_by_genus(int genus, verify::Execution exec) {
  if (genus < 0) throw NegativeGenus("genus must be nonnegative");
  const int total = genus + 5;
  const int max_first = total / 5;
  std::vector<std::vector<SliceRow>> by_first(static_cast<std::size_t>(max_first));
  if (exec == verify::Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int first = 1; first <= max_first; ++first) tails(first, total - first, by_first[first - 1]);
  } else {
    for (int first = 1; first <= max_first; ++first) tails(first, total - first, by_first[first - 1]);
  }
  GenusSlice slice;
  slice.genus = genus;
  for (auto& part : by_first)
    for (auto& row : part) slice.rows.push_back(std::move(row));
  return slice;
}

std::map<RegionLabel, std::size_t> region_counts(const GenusSlice& slice) {
  std::map<RegionLabel, std::size_t> counts;
  for (auto label : {RegionLabel::Outside, RegionLabel::P3Only, RegionLabel::Both, RegionLabel::QOnly, RegionLabel::P2NotQ})
    counts[label] = 0;
  for (const auto& row : slice.rows) ++counts[row.region];
  return counts;
}

std::map<RegionLabel, std::size_t> region_counts(int genus) { return region_counts(enumerate_by_genus(genus)); }

std::string emit(const GenusSlice& slice, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : slice.rows) {
      nlohmann::ordered_json obj;
      for (int i = 1; i <= 5; ++i) obj["e" + std::to_string(i)] = r.e.e(i);
      obj["region"] = to_string(r.region);
      obj["realizable"] = r.realizable;
      obj["expected_codim"] = r.expected_codim;
      rows.push_back(obj);
    }
    return rows.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "e1,e2,e3,e4,e5,region,realizable,expected_codim\n";
  for (const auto& r : slice.rows) {
    for (int i = 1; i <= 5; ++i) out << r.e.e(i) << ',';
    out << to_string(r.region) << ',' << (r.realizable ? "true" : "false") << ',' << r.expected_codim << '\n';
  }
  return out.str();
}

}  // namespace sextic::geography
