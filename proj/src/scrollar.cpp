#include "sextic/scrollar.hpp"

#include <algorithm>
#include <numeric>

namespace sextic {

ScrollarTuple::ScrollarTuple(int degree, std::vector<int> entries) : degree_(degree), entries_(std::move(entries)) {
  if (degree_ < 2) throw InvalidTuple("degree must be at least 2");
  if (entries_.size() != static_cast<std::size_t>(degree_ - 1))
    throw InvalidTuple("degree " + std::to_string(degree_) + " needs " + std::to_string(degree_ - 1) + " entries, got " +
                       std::to_string(entries_.size()));
  if (entries_.front() < 1) throw InvalidTuple("e_1 must be at least 1");
  if (!std::is_sorted(entries_.begin(), entries_.end())) throw InvalidTuple("entries must be nondecreasing");
}

int ScrollarTuple::sum() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

std::string to_string(const ScrollarTuple& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.entries().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e.entries()[i]);
  }
  return out + ")";
}

OrientedPartition::OrientedPartition(std::array<int, 2> light_pair, std::array<int, 2> heavy_pair)
    : light(light_pair), heavy(heavy_pair) {
  std::sort(light.begin(), light.end());
  std::sort(heavy.begin(), heavy.end());
  std::array<int, 4> all{light[0], light[1], heavy[0], heavy[1]};
  std::sort(all.begin(), all.end());
  if (all != std::array<int, 4>{2, 3, 4, 5}) throw std::invalid_argument("pairs must partition {2,3,4,5}");
}

std::string to_string(const OrientedPartition& p) {
  return "{" + std::to_string(p.light[0]) + "," + std::to_string(p.light[1]) + "}|{" + std::to_string(p.heavy[0]) +
         "," + std::to_string(p.heavy[1]) + "}";
}

const std::array<OrientedPartition, 6>& all_oriented_partitions() {
  static const std::array<OrientedPartition, 6> parts = {
      OrientedPartition({2, 3}, {4, 5}), OrientedPartition({2, 4}, {3, 5}), OrientedPartition({2, 5}, {3, 4}),
      OrientedPartition({3, 4}, {2, 5}), OrientedPartition({3, 5}, {2, 4}), OrientedPartition({4, 5}, {2, 3}),
  };
  return parts;
}

const char* to_string(RegionLabel label) {
  switch (label) {
    case RegionLabel::Outside: return "Outside";
    case RegionLabel::P3Only: return "P3Only";
    case RegionLabel::Both: return "Both";
    case RegionLabel::QOnly: return "QOnly";
    case RegionLabel::P2NotQ: return "P2NotQ";
  }
  return "?";
}

namespace {

void require_sextic(const ScrollarTuple& e) {
  if (e.degree() != 6) throw WrongDegree("expected a degree-6 tuple, got degree " + std::to_string(e.degree()));
}

// Inequalities shared by P2 and P3.
bool common_bounds(const ScrollarTuple& e) { return e.e(5) <= e.e(1) + e.e(4) && e.e(5) <= e.e(2) + e.e(3); }

}  // namespace

bool in_P2(const ScrollarTuple& e) {
  require_sextic(e);
  return common_bounds(e) && e.e(3) <= e.e(1) + e.e(2) && e.e(4) <= 2 * e.e(2);
}

bool in_P3(const ScrollarTuple& e) {
  require_sextic(e);
  return common_bounds(e) && e.e(2) <= 2 * e.e(1) && e.e(4) <= e.e(1) + e.e(3);
}

bool in_P6(const ScrollarTuple& e) {
  require_sextic(e);
  for (int i = 1; i <= 4; ++i)
    for (int j = i; i + j <= 5; ++j)
      if (e.e(i + j) > e.e(i) + e.e(j)) return false;
  return true;
}

bool is_admissible(const ScrollarTuple& e, const OrientedPartition& p) {
  if (!in_P2(e)) throw NotInP2("admissibility is defined for tuples in P2; got " + to_string(e));
  const int ei = e.e(p.light[0]), ej = e.e(p.light[1]);
  const int ek = e.e(p.heavy[0]), el = e.e(p.heavy[1]);
  const int e1 = e.e(1);
  return ei + ej <= ek + el                    //
         && ei <= ej && ej <= ei + e1          //
         && ek <= el && el <= ek + e1          //
         && ek + el + e1 <= 2 * ei + 2 * ej;
}

std::vector<OrientedPartition> find_admissible_partitions(const ScrollarTuple& e) {
  if (!in_P2(e)) throw NotInP2("admissibility is defined for tuples in P2; got " + to_string(e));
  std::vector<OrientedPartition> out;
  for (const auto& p : all_oriented_partitions())
    if (is_admissible(e, p)) out.push_back(p);
  return out;
}

bool in_Q(const ScrollarTuple& e) {
  require_sextic(e);
  if (!in_P2(e) || in_P3(e)) return false;
  return !find_admissible_partitions(e).empty();
}

bool realizable(const ScrollarTuple& e) {
  switch (e.degree()) {
    case 2: return true;
    case 3: return e.e(2) <= 2 * e.e(1);
    case 6: return in_Q(e) || in_P3(e);
    default:
      throw UnsupportedDegree("realizability is only decided for d in {2, 3, 6}; got d = " + std::to_string(e.degree()));
  }
}

int genus(const ScrollarTuple& e) { return e.sum() - e.degree() + 1; }

int expected_codim(const ScrollarTuple& e) {
  int total = 0;
  const auto& v = e.entries();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) total += std::max(0, v[j] - v[i] - 1);
  return total;
}

Rational semistable_gap_bound(int degree, int genus) {
  if (degree < 2 || genus < 0) throw BadParameters("need d >= 2 and g >= 0");
  Rational bound(2 * (genus + degree - 1), degree);
  bound.canonicalize();
  return bound;
}

RegionLabel classify_region(const ScrollarTuple& e) {
  require_sextic(e);
  const bool p2 = in_P2(e);
  const bool p3 = in_P3(e);
  if (p2 && p3) return RegionLabel::Both;
  if (p3) return RegionLabel::P3Only;
  if (!p2) return RegionLabel::Outside;
  return find_admissible_partitions(e).empty() ? RegionLabel::P2NotQ : RegionLabel::QOnly;
}

}  // namespace sextic
