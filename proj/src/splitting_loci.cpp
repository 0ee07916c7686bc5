#include "sextic/splitting_loci.hpp"

#include <algorithm>
#include <stdexcept>

namespace sextic {

TrigonalBase::TrigonalBase(int first, int second) : e1(first), e2(second) {
  if (e1 < 1 || e2 < e1 || e2 > 2 * e1)
    throw InvalidBase("trigonal base needs 1 <= e1 <= e2 <= 2 e1; got (" + std::to_string(e1) + "," +
                      std::to_string(e2) + ")");
}

SplittingType::SplittingType(std::array<int, 3> degrees) : a(degrees) {
  if (!std::is_sorted(a.begin(), a.end())) throw std::invalid_argument("splitting type must be nondecreasing");
}

std::string to_string(const SplittingType& t) {
  return "(" + std::to_string(t.a[0]) + "," + std::to_string(t.a[1]) + "," + std::to_string(t.a[2]) + ")";
}

HyperellipticSplit::HyperellipticSplit(int low, int high, int base_genus) : a(low), b(high), genus(base_genus) {
  if (a > b) throw std::invalid_argument("hyperelliptic splitting type needs a <= b");
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
}

int mu(const SplittingType& t) {
  int total = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) total += std::max(0, t[j] - t[i] - 1);
  return total;
}

bool is_nonempty(const TrigonalBase& base, const SplittingType& t) {
  return t[2] <= t[1] + base.e1 && t[3] <= t[2] + base.e1 && t[3] <= t[1] + base.e2;
}

int dim_splitting_locus(const TrigonalBase& base, const SplittingType& t) {
  if (!is_nonempty(base, t)) throw EmptyLocus("splitting locus of " + to_string(t) + " is empty");
  const int spread = t[3] - t[1];
  if (spread <= base.e1) return base.genus() - mu(t);
  if (spread < base.e2) return base.e2 - spread;
  return 0;  // spread == e2, forced by nonemptiness
}

int delta(const ScrollarTuple& e) {
  if (e.degree() != 6) throw WrongDegree("delta needs a degree-6 tuple");
  return e.e(1) + e.e(2) - e.e(3) - e.e(4) - e.e(5);
}

SplittingType target_type(const ScrollarTuple& e) {
  if (e.degree() != 6) throw WrongDegree("target type needs a degree-6 tuple");
  return SplittingType(-e.e(5), -e.e(4), -e.e(3));
}

int target_dim(const ScrollarTuple& e) {
  if (!in_P3(e)) throw NotInP3(to_string(e) + " is not in P3");
  return dim_splitting_locus(TrigonalBase(e.e(1), e.e(2)), target_type(e));
}

int bad_type_sum(const ScrollarTuple& e) {
  const int g_x = e.e(1) + e.e(2) - 2;
  const int from_definitions = -2 * delta(e) - g_x - 2;
  const int simplified = 2 * (e.e(3) + e.e(4) + e.e(5)) - 3 * (e.e(1) + e.e(2));
  if (from_definitions != simplified) throw std::logic_error("bad-type sum identity failed for " + to_string(e));
  return from_definitions;
}

namespace {

int ceil_div(int num, int den) {
  // den > 0
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

}  // namespace

std::vector<SplittingType> enumerate_bad_types(const ScrollarTuple& e) {
  if (!in_P3(e)) throw NotInP3(to_string(e) + " is not in P3");
  const TrigonalBase base(e.e(1), e.e(2));
  const int sum = bad_type_sum(e);
  std::vector<SplittingType> out;
  // sum <= 3 a1 + e1 + e2 bounds a1 from below; a1 <= -1 from above.
  for (int a1 = ceil_div(sum - base.e1 - base.e2, 3); a1 <= -1; ++a1) {
    for (int a2 = a1; a2 <= a1 + base.e1; ++a2) {
      const int a3 = sum - a1 - a2;
      if (a3 < a2) continue;
      SplittingType t(a1, a2, a3);
      if (is_nonempty(base, t)) out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int semireduced_degree(const HyperellipticSplit& h) {
  if (h.b - h.a > h.genus + 1)
    throw GapTooLarge("no splitting type (" + std::to_string(h.a) + "," + std::to_string(h.b) + ") on genus " +
                      std::to_string(h.genus));
  return h.genus + 1 - (h.b - h.a);
}

}  // namespace sextic
