#include "dqsym/compositions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dqsym/errors.hpp"

namespace dqsym {

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
    throw std::invalid_argument("composition parts must be positive");
}

unsigned Composition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

unsigned Composition::max_part() const noexcept {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.parts_ <=> b.parts_;
}

unsigned WeakComposition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

OrderedInjection::OrderedInjection(std::size_t target_size, std::vector<std::size_t> images)
    : target_size_(target_size), images_(std::move(images)) {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] < 1 || images_[k] > target_size_)
      throw std::invalid_argument("injection image out of range");
    if (k > 0 && images_[k] <= images_[k - 1])
      throw std::invalid_argument("injection images must be strictly increasing");
  }
}

std::optional<std::size_t> OrderedInjection::preimage(std::size_t i) const noexcept {
  auto it = std::lower_bound(images_.begin(), images_.end(), i);
  if (it == images_.end() || *it != i) return std::nullopt;
  return static_cast<std::size_t>(it - images_.begin()) + 1;
}

Composition positive_part(const WeakComposition& w) {
  std::vector<unsigned> parts;
  std::copy_if(w.parts().begin(), w.parts().end(), std::back_inserter(parts),
               [](unsigned p) { return p != 0; });
  return Composition(std::move(parts));
}

std::vector<Composition> enumerate_compositions(unsigned max_length, unsigned max_part) {
  std::vector<Composition> out{Composition{}};
  if (max_part == 0) return out;
  for (unsigned len = 1; len <= max_length; ++len) {
    // Odometer over [1, max_part]^len in lexicographic order.
    std::vector<unsigned> parts(len, 1);
    while (true) {
      out.emplace_back(parts);
      std::size_t k = len;
      while (k > 0 && parts[k - 1] == max_part) parts[--k] = 1;
      if (k == 0) break;
      ++parts[k - 1];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void compositions_rec(unsigned remaining, unsigned max_length, unsigned max_part,
                      std::vector<unsigned>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (prefix.size() == max_length) return;
  for (unsigned p = 1; p <= std::min(remaining, max_part); ++p) {
    prefix.push_back(p);
    compositions_rec(remaining - p, max_length, max_part, prefix, out);
    prefix.pop_back();
  }
}

void covering_rec(std::size_t l, std::size_t m, std::size_t n, std::size_t pos,
                  std::vector<std::size_t>& iota, std::vector<std::size_t>& jota,
                  const std::function<void(const InjectionPair&)>& visit) {
  const std::size_t left_a = l - iota.size();
  const std::size_t left_b = m - jota.size();
  const std::size_t rows_left = n - pos;
  if (rows_left == 0) {
    if (left_a == 0 && left_b == 0)
      visit(InjectionPair{OrderedInjection(n, iota), OrderedInjection(n, jota)});
    return;
  }
  // Each remaining row takes an alpha-part, a beta-part, or both.
  if (left_a > rows_left || left_b > rows_left || left_a + left_b < rows_left) return;
  const std::size_t row = pos + 1;
  if (left_a > 0) {
    iota.push_back(row);
    covering_rec(l, m, n, pos + 1, iota, jota, visit);
    if (left_b > 0) {
      jota.push_back(row);
      covering_rec(l, m, n, pos + 1, iota, jota, visit);
      jota.pop_back();
    }
    iota.pop_back();
  }
  if (left_b > 0) {
    jota.push_back(row);
    covering_rec(l, m, n, pos + 1, iota, jota, visit);
    jota.pop_back();
  }
}

}  // namespace

std::vector<Composition> compositions_of(unsigned total, unsigned max_length, unsigned max_part) {
  std::vector<Composition> out;
  std::vector<unsigned> prefix;
  compositions_rec(total, max_length, max_part, prefix, out);
  return out;
}

std::vector<OrderedInjection> enumerate_injections(std::size_t l, std::size_t n) {
  std::vector<OrderedInjection> out;
  if (l > n) return out;
  std::vector<std::size_t> images(l);
  std::iota(images.begin(), images.end(), std::size_t{1});
  while (true) {
    out.emplace_back(n, images);
    // Advance to the next l-subset of [n] in lex order.
    std::size_t k = l;
    while (k > 0 && images[k - 1] == n - l + k) --k;
    if (k == 0) break;
    ++images[k - 1];
    for (std::size_t t = k; t < l; ++t) images[t] = images[t - 1] + 1;
  }
  return out;
}

void for_each_covering_pair(std::size_t l, std::size_t m, std::size_t n,
                            const std::function<void(const InjectionPair&)>& visit) {
  std::vector<std::size_t> iota;
  std::vector<std::size_t> jota;
  iota.reserve(l);
  jota.reserve(m);
  covering_rec(l, m, n, 0, iota, jota, visit);
}

CompositionMultiset overlapping_shuffles(const Composition& alpha, const Composition& beta) {
  CompositionMultiset out;
  const std::size_t l = alpha.length();
  const std::size_t m = beta.length();
  for (std::size_t n = std::max(l, m); n <= l + m; ++n) {
    for_each_covering_pair(l, m, n, [&](const InjectionPair& pair) {
      std::vector<unsigned> parts(n, 0);
      for (std::size_t k = 1; k <= l; ++k) parts[pair.iota(k) - 1] += alpha.part(k);
      for (std::size_t k = 1; k <= m; ++k) parts[pair.jota(k) - 1] += beta.part(k);
      ++out[Composition(std::move(parts))];
    });
  }
  return out;
}

Composition parse_composition(const std::string& text) {
  std::vector<unsigned> parts;
  if (text.empty()) return Composition{};
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    unsigned long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (value > 1'000'000) throw ParseError("composition part too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError("expected a positive integer", pos);
    if (value == 0) throw ParseError("composition parts must be positive", start);
    parts.push_back(static_cast<unsigned>(value));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return Composition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Composition& c) {
  os << '(';
  for (std::size_t k = 0; k < c.length(); ++k) os << (k ? "," : "") << c.parts()[k];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const OrderedInjection& f) {
  os << '{';
  for (std::size_t k = 0; k < f.images().size(); ++k) os << (k ? "," : "") << f.images()[k];
  return os << '}';
}

std::string to_string(const Composition& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace dqsym
