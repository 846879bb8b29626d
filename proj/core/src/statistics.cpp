#include "wreathstat/statistics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wreathstat {

std::vector<int> classical_descents(std::span<const int> pi) {
  std::vector<int> out;
  for (std::size_t j = 1; j < pi.size(); ++j)
    if (pi[j - 1] > pi[j]) out.push_back(static_cast<int>(j));
  return out;
}

int classical_maj(std::span<const int> pi) {
  auto d = classical_descents(pi);
  return std::accumulate(d.begin(), d.end(), 0);
}

int classical_des(std::span<const int> pi) {
  return static_cast<int>(classical_descents(pi).size());
}

std::vector<int> classical_descents(const ColoredPermutation& g) {
  if (!g.is_color_free()) throw std::invalid_argument("classical descents need a color-free element");
  return classical_descents(g.letters());
}

int classical_maj(const ColoredPermutation& g) {
  if (!g.is_color_free()) throw std::invalid_argument("classical major index needs a color-free element");
  return classical_maj(g.letters());
}

namespace {

void require_signed(const ColoredPermutation& g, std::string_view what) {
  if (g.r() != 2) throw std::invalid_argument(std::string(what) + " requires r = 2");
}

void require_type_d(const ColoredPermutation& g) {
  require_signed(g, "type D statistics");
  if (g.size() < 2) throw std::invalid_argument("type D statistics require n >= 2");
  if (!is_in_D(g)) throw std::invalid_argument("element is not in D_n (odd number of negatives)");
}

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

std::vector<int> descent_set(const ColoredPermutation& g, OrderFlavor flavor) {
  const int n = g.size();
  std::vector<int> out;
  switch (flavor) {
    case OrderFlavor::wreath:
    case OrderFlavor::natural: {
      if (flavor == OrderFlavor::natural) require_signed(g, "natural order");
      Letter prev{0, 0};
      for (int j = 0; j < n; ++j) {
        const Letter& next = g.at(j + 1);
        if (letter_less(next, prev, flavor)) out.push_back(j);
        prev = next;
      }
      break;
    }
    case OrderFlavor::steingrimsson: {
      for (int j = 1; j <= n; ++j) {
        Letter next = j < n ? g.at(j + 1) : Letter{n + 1, 0};
        if (letter_less(next, g.at(j), flavor)) out.push_back(j);
      }
      break;
    }
    case OrderFlavor::naturalD: {
      require_type_d(g);
      int prev = -signed_value(g.at(2));
      for (int j = 0; j < n; ++j) {
        int next = signed_value(g.at(j + 1));
        if (prev > next) out.push_back(j);
        prev = next;
      }
      break;
    }
  }
  return out;
}

int des(const ColoredPermutation& g) {
  return static_cast<int>(descent_set(g, OrderFlavor::wreath).size());
}
int stdes(const ColoredPermutation& g) {
  return static_cast<int>(descent_set(g, OrderFlavor::steingrimsson).size());
}
int natdes(const ColoredPermutation& g) {
  return static_cast<int>(descent_set(g, OrderFlavor::natural).size());
}
int natmaj(const ColoredPermutation& g) { return sum_of(descent_set(g, OrderFlavor::natural)); }
int dnatdes(const ColoredPermutation& g) {
  return static_cast<int>(descent_set(g, OrderFlavor::naturalD).size());
}

std::vector<int> type_a_descents(const ColoredPermutation& g, OrderFlavor order) {
  if (requires_signed(order)) require_signed(g, "signed letter orders");
  std::vector<int> out;
  for (int j = 1; j < g.size(); ++j)
    if (letter_less(g.at(j + 1), g.at(j), order)) out.push_back(j);
  return out;
}

int type_a_major(const ColoredPermutation& g, OrderFlavor order) {
  return sum_of(type_a_descents(g, order));
}

std::vector<int> neg_set(const ColoredPermutation& g) {
  std::vector<int> out;
  for (int j = 1; j <= g.size(); ++j)
    if (g.color(j) != 0) out.push_back(j);
  return out;
}

int neg(const ColoredPermutation& g) { return static_cast<int>(neg_set(g).size()); }

int col(const ColoredPermutation& g) {
  int s = 0;
  for (const Letter& l : g.window()) s += l.color;
  return s;
}

PositionMultiset PositionMultiset::from_set(std::span<const int> positions) {
  PositionMultiset m;
  for (int p : positions) m.add(p);
  return m;
}

void PositionMultiset::add(int position, int multiplicity) {
  if (multiplicity < 0) throw std::invalid_argument("negative multiplicity");
  if (multiplicity == 0) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), position,
                             [](const auto& e, int p) { return e.first < p; });
  if (it != entries_.end() && it->first == position)
    it->second += multiplicity;
  else
    entries_.insert(it, {position, multiplicity});
}

int PositionMultiset::multiplicity(int position) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), position,
                             [](const auto& e, int p) { return e.first < p; });
  return it != entries_.end() && it->first == position ? it->second : 0;
}

int PositionMultiset::cardinality() const {
  int c = 0;
  for (const auto& [p, m] : entries_) c += m;
  return c;
}

long long PositionMultiset::sum() const {
  long long s = 0;
  for (const auto& [p, m] : entries_) s += static_cast<long long>(p) * m;
  return s;
}

std::vector<int> PositionMultiset::expanded() const {
  std::vector<int> out;
  for (const auto& [p, m] : entries_) out.insert(out.end(), static_cast<std::size_t>(m), p);
  return out;
}

PositionMultiset operator+(PositionMultiset a, const PositionMultiset& b) {
  for (const auto& [p, m] : b.entries_) a.add(p, m);
  return a;
}

PositionMultiset nneg_multiset(const ColoredPermutation& g) {
  PositionMultiset m;
  for (int i = 1; i <= g.size(); ++i) m.add(i, g.color(i));
  return m;
}

PositionMultiset ndes_multiset(const ColoredPermutation& g) {
  auto desa = type_a_descents(g, OrderFlavor::wreath);
  return PositionMultiset::from_set(desa) + nneg_multiset(inverse(g));
}

int ndes(const ColoredPermutation& g) { return ndes_multiset(g).cardinality(); }
int nmajor(const ColoredPermutation& g) { return static_cast<int>(ndes_multiset(g).sum()); }

int ColorChangeVector::ch() const { return std::accumulate(a.begin(), a.end(), 0); }

int ColorChangeVector::ch_ceil() const { return (ch() + r - 1) / r; }

ColorChangeVector color_changes(std::span<const int> colors, int r) {
  ColorChangeVector v;
  v.r = r;
  const std::size_t n = colors.size();
  v.a.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    int next = j + 1 < n ? colors[j + 1] : 0;
    v.a[j] = ((colors[j] - next) % r + r) % r;
  }
  return v;
}

ColorChangeVector color_changes(const ColoredPermutation& g) {
  return color_changes(g.colors(), g.r());
}

int ch(const ColoredPermutation& g) { return color_changes(g).ch(); }

int fdes(const ColoredPermutation& g) {
  return g.r() * static_cast<int>(type_a_descents(g).size()) + g.color(1);
}

int fmajor(const ColoredPermutation& g) { return g.r() * type_a_major(g) + col(g); }

int nat_type_a_major(const ColoredPermutation& g) {
  require_signed(g, "natural statistics");
  return type_a_major(g, OrderFlavor::natural);
}

int natfmaj(const ColoredPermutation& g) { return 2 * nat_type_a_major(g) + neg(g); }

PositionMultiset dndes_multiset(const ColoredPermutation& g) {
  require_type_d(g);
  auto m = PositionMultiset::from_set(type_a_descents(g, OrderFlavor::naturalD));
  for (int j : neg_set(inverse(g)))
    if (j != 1) m.add(j - 1);
  return m;
}

PositionMultiset dndes_multiset_direct(const ColoredPermutation& g) {
  require_type_d(g);
  auto m = PositionMultiset::from_set(type_a_descents(g, OrderFlavor::naturalD));
  for (int i = 1; i <= g.size(); ++i)
    if (g.color(i) != 0 && g.letter(i) != 1) m.add(g.letter(i) - 1);
  return m;
}

int dndes(const ColoredPermutation& g) { return dndes_multiset(g).cardinality(); }
int dnmajor(const ColoredPermutation& g) { return static_cast<int>(dndes_multiset(g).sum()); }

std::string_view to_string(DescentCause c) {
  switch (c) {
    case DescentCause::none: return "none";
    case DescentCause::zero: return "zero";
    case DescentCause::colorChange: return "colorChange";
    case DescentCause::standard: return "standard";
  }
  return "?";
}

std::vector<DescentCause> classify_descents(const ColoredPermutation& g) {
  const int n = g.size();
  std::vector<DescentCause> out(static_cast<std::size_t>(n), DescentCause::none);
  if (g.color(1) != 0) out[0] = DescentCause::zero;
  for (int j = 1; j < n; ++j) {
    int cj = g.color(j), cn = g.color(j + 1);
    if (cj < cn)
      out[static_cast<std::size_t>(j)] = DescentCause::colorChange;
    else if (cj == cn && g.letter(j) > g.letter(j + 1))
      out[static_cast<std::size_t>(j)] = DescentCause::standard;
  }
  return out;
}

std::vector<int> color_change_descents(std::span<const int> colors, int r) {
  auto a = color_changes(colors, r).a;
  const int n = static_cast<int>(a.size());
  std::vector<int> out;
  int tail = 0;  // A_{k+1}
  for (int k = n; k >= 1; --k) {
    int with_k = tail + a[static_cast<std::size_t>(k - 1)];
    if (with_k / r > tail / r) out.push_back(k);
    tail = with_k;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace wreathstat
