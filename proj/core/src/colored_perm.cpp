#include "wreathstat/colored_perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace wreathstat {

GroupSpec::GroupSpec(int r, int n) : r_(r), n_(n) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

std::optional<std::uint64_t> GroupSpec::order() const {
  std::uint64_t acc = 1;
  for (int i = 0; i < n_; ++i)
    if (__builtin_mul_overflow(acc, static_cast<std::uint64_t>(r_), &acc)) return std::nullopt;
  for (int i = 2; i <= n_; ++i)
    if (__builtin_mul_overflow(acc, static_cast<std::uint64_t>(i), &acc)) return std::nullopt;
  return acc;
}

ColoredPermutation::ColoredPermutation(GroupSpec spec, std::vector<Letter> window)
    : spec_(spec), window_(std::move(window)) {
  const int n = spec_.n();
  if (static_cast<int>(window_.size()) != n)
    throw std::invalid_argument("window has " + std::to_string(window_.size()) +
                                " entries, expected " + std::to_string(n));
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const Letter& l : window_) {
    if (l.value < 1 || l.value > n)
      throw std::invalid_argument("letter " + std::to_string(l.value) + " out of range 1.." +
                                  std::to_string(n));
    if (seen[static_cast<std::size_t>(l.value)])
      throw std::invalid_argument("duplicate letter " + std::to_string(l.value));
    seen[static_cast<std::size_t>(l.value)] = true;
    if (l.color < 0 || l.color >= spec_.r())
      throw std::invalid_argument("color " + std::to_string(l.color) + " out of range 0.." +
                                  std::to_string(spec_.r() - 1));
  }
}

ColoredPermutation ColoredPermutation::identity(GroupSpec spec) {
  std::vector<Letter> w(static_cast<std::size_t>(spec.n()));
  for (int j = 0; j < spec.n(); ++j) w[static_cast<std::size_t>(j)] = {j + 1, 0};
  return {spec, std::move(w)};
}

ColoredPermutation ColoredPermutation::from_plain(GroupSpec spec, std::span<const int> letters) {
  std::vector<Letter> w;
  w.reserve(letters.size());
  for (int v : letters) w.push_back({v, 0});
  return {spec, std::move(w)};
}

ColoredPermutation ColoredPermutation::from_parts(GroupSpec spec, std::span<const int> letters,
                                                  std::span<const int> colors) {
  if (letters.size() != colors.size())
    throw std::invalid_argument("letter and color vectors differ in length");
  std::vector<Letter> w;
  w.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) w.push_back({letters[i], colors[i]});
  return {spec, std::move(w)};
}

std::vector<int> ColoredPermutation::letters() const {
  std::vector<int> out;
  out.reserve(window_.size());
  for (const Letter& l : window_) out.push_back(l.value);
  return out;
}

std::vector<int> ColoredPermutation::colors() const {
  std::vector<int> out;
  out.reserve(window_.size());
  for (const Letter& l : window_) out.push_back(l.color);
  return out;
}

bool ColoredPermutation::is_color_free() const {
  return std::all_of(window_.begin(), window_.end(), [](const Letter& l) { return l.color == 0; });
}

bool ColoredPermutation::is_identity() const {
  for (std::size_t j = 0; j < window_.size(); ++j)
    if (window_[j].value != static_cast<int>(j) + 1 || window_[j].color != 0) return false;
  return true;
}

std::strong_ordering operator<=>(const ColoredPermutation& a, const ColoredPermutation& b) {
  if (auto c = a.spec_.r() <=> b.spec_.r(); c != 0) return c;
  if (auto c = a.spec_.n() <=> b.spec_.n(); c != 0) return c;
  auto la = a.letters(), lb = b.letters();
  if (auto c = la <=> lb; c != 0) return c;
  return a.colors() <=> b.colors();
}

namespace {

int parse_uint(std::string_view tok, std::string_view whole) {
  if (tok.empty()) throw std::invalid_argument("empty number in token '" + std::string(whole) + "'");
  if (tok.size() > 1 && tok[0] == '0')
    throw std::invalid_argument("leading zero in token '" + std::string(whole) + "'");
  if (tok.size() > 9) throw std::invalid_argument("number too large in '" + std::string(whole) + "'");
  int v = 0;
  for (char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed token '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

std::vector<Letter> parse_tokens(std::string_view text, int r) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::invalid_argument("window must be enclosed in brackets");
  text = text.substr(1, text.size() - 2);

  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    std::string_view tok = text.substr(i, j - i);
    i = j;

    Letter l;
    if (tok.front() == '-') {
      if (r != 2) throw std::invalid_argument("'-j' tokens are only allowed when r = 2");
      if (tok.find('^') != std::string_view::npos)
        throw std::invalid_argument("token '" + std::string(tok) + "' mixes '-' and '^'");
      l.value = parse_uint(tok.substr(1), tok);
      l.color = 1;
    } else if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      l.value = parse_uint(tok.substr(0, caret), tok);
      l.color = parse_uint(tok.substr(caret + 1), tok);
    } else {
      l.value = parse_uint(tok, tok);
    }
    out.push_back(l);
  }
  if (out.empty()) throw std::invalid_argument("empty window");
  return out;
}

}  // namespace

ColoredPermutation parse_window(std::string_view text, GroupSpec spec) {
  return {spec, parse_tokens(text, spec.r())};
}

ColoredPermutation parse_window(std::string_view text, int r) {
  auto letters = parse_tokens(text, r);
  GroupSpec spec(r, static_cast<int>(letters.size()));
  return {spec, std::move(letters)};
}

std::string format_window(const ColoredPermutation& g) {
  std::string out = "[";
  for (int j = 1; j <= g.size(); ++j) {
    if (j > 1) out += ' ';
    out += std::to_string(g.letter(j));
    if (g.color(j) != 0) {
      out += '^';
      out += std::to_string(g.color(j));
    }
  }
  out += ']';
  return out;
}

ColoredPermutation compose(const ColoredPermutation& g, const ColoredPermutation& h) {
  if (g.spec() != h.spec()) throw std::invalid_argument("compose: group specs differ");
  const int r = g.r();
  std::vector<Letter> w(static_cast<std::size_t>(g.size()));
  for (int j = 1; j <= g.size(); ++j) {
    const Letter& inner = h.at(j);
    const Letter& outer = g.at(inner.value);
    w[static_cast<std::size_t>(j - 1)] = {outer.value, (inner.color + outer.color) % r};
  }
  return {g.spec(), std::move(w)};
}

ColoredPermutation inverse(const ColoredPermutation& g) {
  const int r = g.r();
  std::vector<Letter> w(static_cast<std::size_t>(g.size()));
  for (int i = 1; i <= g.size(); ++i) {
    const Letter& l = g.at(i);
    w[static_cast<std::size_t>(l.value - 1)] = {i, (r - l.color) % r};
  }
  return {g.spec(), std::move(w)};
}

Factorization decompose(const ColoredPermutation& g, OrderFlavor order) {
  if (order == OrderFlavor::natural) {
    if (g.r() != 2) throw std::invalid_argument("natural order requires r = 2");
  } else if (order != OrderFlavor::wreath) {
    throw std::invalid_argument("decompose supports the wreath and natural orders only");
  }
  const int n = g.size();
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 1);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return letter_less(g.at(a), g.at(b), order); });

  std::vector<Letter> inc(static_cast<std::size_t>(n));
  std::vector<int> plain(static_cast<std::size_t>(n));
  for (int rank = 1; rank <= n; ++rank) {
    int pos = idx[static_cast<std::size_t>(rank - 1)];
    inc[static_cast<std::size_t>(rank - 1)] = g.at(pos);
    plain[static_cast<std::size_t>(pos - 1)] = rank;
  }
  return {ColoredPermutation(g.spec(), std::move(inc)),
          ColoredPermutation::from_plain(g.spec(), plain)};
}

GroupEnumerator::GroupEnumerator(GroupSpec spec)
    : spec_(spec),
      letters_(static_cast<std::size_t>(spec.n())),
      colors_(static_cast<std::size_t>(spec.n()), 0) {
  std::iota(letters_.begin(), letters_.end(), 1);
}

std::optional<ColoredPermutation> GroupEnumerator::next() {
  if (done_) return std::nullopt;
  auto current = ColoredPermutation::from_parts(spec_, letters_, colors_);

  int j = spec_.n() - 1;
  while (j >= 0 && colors_[static_cast<std::size_t>(j)] == spec_.r() - 1) {
    colors_[static_cast<std::size_t>(j)] = 0;
    --j;
  }
  if (j >= 0) {
    ++colors_[static_cast<std::size_t>(j)];
  } else if (!std::next_permutation(letters_.begin(), letters_.end())) {
    done_ = true;
  }
  return current;
}

std::vector<ColoredPermutation> enumerate_group(GroupSpec spec) {
  std::vector<ColoredPermutation> out;
  if (auto ord = spec.order()) out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(*ord, 1u << 20)));
  for_each_element(spec, [&](const ColoredPermutation& g) { out.push_back(g); });
  return out;
}

std::vector<ColoredPermutation> enumerate_increasing(GroupSpec spec, OrderFlavor order,
                                                     bool even_signs_only) {
  if (order == OrderFlavor::natural) {
    if (spec.r() != 2) throw std::invalid_argument("natural order requires r = 2");
  } else if (order != OrderFlavor::wreath) {
    throw std::invalid_argument("increasing elements are defined for the wreath and natural orders");
  }
  if (even_signs_only && spec.r() != 2)
    throw std::invalid_argument("the even-sign filter requires r = 2");

  const int n = spec.n();
  std::vector<int> color_of(static_cast<std::size_t>(n), 0);
  std::vector<ColoredPermutation> out;
  while (true) {
    int colored = static_cast<int>(std::count_if(color_of.begin(), color_of.end(),
                                                 [](int c) { return c != 0; }));
    if (!even_signs_only || colored % 2 == 0) {
      std::vector<Letter> w(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = {i + 1, color_of[static_cast<std::size_t>(i)]};
      std::sort(w.begin(), w.end(),
                [&](const Letter& a, const Letter& b) { return letter_less(a, b, order); });
      out.emplace_back(spec, std::move(w));
    }
    int j = n - 1;
    while (j >= 0 && color_of[static_cast<std::size_t>(j)] == spec.r() - 1) {
      color_of[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
    ++color_of[static_cast<std::size_t>(j)];
  }
  return out;
}

std::vector<ColoredPermutation> enumerate_type_d(int n) {
  std::vector<ColoredPermutation> out;
  for_each_element(GroupSpec(2, n), [&](const ColoredPermutation& g) {
    if (is_in_D(g)) out.push_back(g);
  });
  return out;
}

std::vector<std::vector<int>> all_permutations(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_in_D(const ColoredPermutation& g) {
  if (g.r() != 2) throw std::invalid_argument("type D membership requires r = 2");
  int neg = 0;
  for (const Letter& l : g.window()) neg += l.color;
  return neg % 2 == 0;
}

ColoredPermutation reverse_negative_entries(const ColoredPermutation& g) {
  if (g.r() != 2) throw std::invalid_argument("reverse_negative_entries requires r = 2");
  std::vector<int> values;
  for (const Letter& l : g.window())
    if (l.color != 0) values.push_back(l.value);
  std::vector<int> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  // k-th smallest colored letter becomes the k-th largest.
  std::vector<Letter> w(g.window().begin(), g.window().end());
  for (Letter& l : w) {
    if (l.color == 0) continue;
    auto k = std::lower_bound(sorted.begin(), sorted.end(), l.value) - sorted.begin();
    l.value = sorted[sorted.size() - 1 - static_cast<std::size_t>(k)];
  }
  return {g.spec(), std::move(w)};
}

}  // namespace wreathstat
