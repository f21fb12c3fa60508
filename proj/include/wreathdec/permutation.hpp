#pragma once

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wreathdec/errors.hpp"

namespace wreathdec {

// Permutation of Z_m stored as an image table. Values are immutable after
// construction. Composition is left-to-right: j^(ab) = (j^a)^b.
class Permutation {
public:
  // Identity on Z_m.
  explicit Permutation(int m) : img_(static_cast<std::size_t>(check_m(m))) {
    std::iota(img_.begin(), img_.end(), 0);
  }

  static Permutation identity(int m) { return Permutation(m); }

  static Permutation from_images(std::vector<int> images) {
    const int m = check_m(static_cast<int>(images.size()));
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int v : images) {
      if (v < 0 || v >= m) throw std::invalid_argument("image out of range");
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("images not a bijection");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    Permutation p(m);
    p.img_ = std::move(images);
    return p;
  }

  static Permutation transposition(int m, int a, int b) {
    Permutation p(m);
    p.at_check(a);
    p.at_check(b);
    std::swap(p.img_[static_cast<std::size_t>(a)], p.img_[static_cast<std::size_t>(b)]);
    return p;
  }

  // Single cycle (c0, c1, ..., ck) on Z_m; remaining points fixed.
  static Permutation from_cycle(int m, const std::vector<int>& cycle) {
    Permutation p(m);
    if (cycle.empty()) return p;
    for (std::size_t a = 0; a < cycle.size(); ++a) {
      p.at_check(cycle[a]);
      p.img_[static_cast<std::size_t>(cycle[a])] = cycle[(a + 1) % cycle.size()];
    }
    std::vector<char> seen(static_cast<std::size_t>(m), 0);
    for (int v : cycle) {
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("repeated element in cycle");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int j) const { return img_[static_cast<std::size_t>(j)]; }
  int operator()(int j) const { return apply(j); }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const {
    for (int j = 0; j < size(); ++j)
      if (img_[static_cast<std::size_t>(j)] != j) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
  static int check_m(int m) {
    if (m < 2) throw std::invalid_argument("permutation order must be at least 2");
    return m;
  }
  void at_check(int j) const {
    if (j < 0 || j >= size()) throw std::invalid_argument("point out of range");
  }

  std::vector<int> img_;
};

// j^(ab) = (j^a)^b.
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("incompatible orders");
  std::vector<int> img(static_cast<std::size_t>(a.size()));
  for (int j = 0; j < a.size(); ++j) img[static_cast<std::size_t>(j)] = b.apply(a.apply(j));
  return Permutation::from_images(std::move(img));
}

inline Permutation operator*(const Permutation& a, const Permutation& b) { return compose(a, b); }

inline Permutation inverse(const Permutation& a) {
  std::vector<int> img(static_cast<std::size_t>(a.size()));
  for (int j = 0; j < a.size(); ++j) img[static_cast<std::size_t>(a.apply(j))] = j;
  return Permutation::from_images(std::move(img));
}

// T(a): number of cycles in disjoint cycle notation, fixed points included.
inline int cycle_count(const Permutation& a) {
  std::vector<char> seen(static_cast<std::size_t>(a.size()), 0);
  int count = 0;
  for (int j = 0; j < a.size(); ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    ++count;
    for (int x = j; !seen[static_cast<std::size_t>(x)]; x = a.apply(x)) seen[static_cast<std::size_t>(x)] = 1;
  }
  return count;
}

// Whether a fixes the top symbol m-1.
inline bool is_top_stabilizer(const Permutation& a) { return a.apply(a.size() - 1) == a.size() - 1; }

// Truncation: a (m-1, (m-1)^a). Defined only when a moves m-1; the result
// fixes m-1.
inline Permutation truncate(const Permutation& a) {
  const int m = a.size();
  if (is_top_stabilizer(a)) throw std::invalid_argument("truncation undefined for (m-1)-stabilizer");
  return compose(a, Permutation::transposition(m, m - 1, a.apply(m - 1)));
}

namespace detail {
inline int mod(long long x, int n) {
  long long r = x % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}
}  // namespace detail

// pi(m, i) = (0,1,...,m-1)^i, i.e. j -> j+i (mod m). Any integer exponent.
inline Permutation pi(int m, long long i) {
  if (m < 2) throw std::invalid_argument("pi requires m >= 2");
  const int e = detail::mod(i, m);
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) img[static_cast<std::size_t>(j)] = (j + e) % m;
  return Permutation::from_images(std::move(img));
}

// gamma(m, i) = ((0,1,...,m-2)(m-1))^i for odd m >= 5. Fixes m-1 and adds i
// mod (m-1) on the rest.
inline Permutation gamma(int m, long long i) {
  if (m < 5 || m % 2 == 0) throw std::invalid_argument("G_{m-1} defined for odd m >= 5");
  const int e = detail::mod(i, m - 1);
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int s = 0; s + 1 < m; ++s) img[static_cast<std::size_t>(s)] = (s + e) % (m - 1);
  img[static_cast<std::size_t>(m - 1)] = m - 1;
  return Permutation::from_images(std::move(img));
}

namespace detail {
// The special full cycle closing the set F_m.
inline Permutation f_sigma_top(int m) {
  const int k = (m - 1) / 2;
  std::vector<int> img(static_cast<std::size_t>(m));
  for (int a = 0; a < m; ++a) {
    int v;
    if (a == 0) v = 3;
    else if (a == 1) v = 2;
    else if (a == 2) v = 0;
    else if (a == k + 1) v = m - 1;
    else if (a == m - 1) v = 1;
    else if (a >= 3 && a <= k) v = m - a + 1;
    else v = m - a + 2;  // k+2 <= a <= m-2
    img[static_cast<std::size_t>(a)] = v;
  }
  return Permutation::from_images(std::move(img));
}
}  // namespace detail

// Member sigma_index of F_m.
inline Permutation f_sigma(int m, int index) {
  if (m < 5 || m % 2 == 0) throw std::invalid_argument("G_{m-1} defined for odd m >= 5");
  if (index < 0 || index >= m) throw std::invalid_argument("F_m index out of range");
  const int k = (m - 1) / 2;
  if (index == 0) return Permutation::identity(m);
  if (index == m - 1) return detail::f_sigma_top(m);
  if (index == m - 3) return compose(gamma(m, m - 3), Permutation::transposition(m, m - 1, 0));
  if (index % 2 == 1) {
    const int j = (index - 1) / 2;
    return compose(gamma(m, index), Permutation::transposition(m, m - 1, j + 2));
  }
  const int j = index / 2;
  return compose(gamma(m, index), Permutation::transposition(m, m - 1, k + j + 1));
}

// F_m = {sigma_0, ..., sigma_{m-1}}, a regular permutation set for odd m >= 5.
inline std::vector<Permutation> f_set(int m) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out.push_back(f_sigma(m, i));
  return out;
}

// Closed form for sigma_{m-i+t}, t in {2,1,0,-2,-3,-4}: a gamma power times an
// apex transposition whose position depends on the parity of i.
inline Permutation sigma_shift(int m, int i, int t) {
  if (m < 5 || m % 2 == 0) throw std::invalid_argument("G_{m-1} defined for odd m >= 5");
  if (i < 1 || i > m - 2) throw std::invalid_argument("sigma_shift requires 1 <= i <= m-2");
  if (t != 2 && t != 1 && t != 0 && t != -2 && t != -3 && t != -4)
    throw std::invalid_argument("sigma_shift shift must be in {2,1,0,-2,-3,-4}");
  const int target = m - i + t;
  if (target < 1 || target > m - 2 || target == m - 3)
    throw std::invalid_argument("index excluded by the shift-table precondition");
  const int k = (m - 1) / 2;
  const bool odd = (i % 2 == 1);
  const int j = odd ? (i - 1) / 2 : i / 2;
  int pos;
  switch (t) {
    case 2: pos = odd ? m - j + 1 : k - j + 3; break;
    case 1: pos = odd ? k - j + 2 : m - j + 1; break;
    case 0: pos = odd ? m - j : k - j + 2; break;
    case -2: pos = odd ? m - j - 1 : k - j + 1; break;
    case -3: pos = odd ? k - j : m - j - 1; break;
    default: pos = odd ? m - j - 2 : k - j; break;  // t == -4
  }
  assert(pos >= 0 && pos <= m - 2);
  Permutation out = compose(gamma(m, t + 1 - i), Permutation::transposition(m, m - 1, pos));
  assert(out == f_sigma(m, target));
  return out;
}

// Disjoint-cycle display form; fixed points kept as singletons.
struct CycleForm {
  int m = 0;
  std::vector<std::vector<int>> cycles;
};

// Canonical cycle form: each cycle starts at its minimum element, moving
// cycles sorted by minimum element, fixed points last.
inline CycleForm cycle_form(const Permutation& a) {
  const int m = a.size();
  CycleForm out;
  out.m = m;
  std::vector<std::vector<int>> fixed;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  for (int j = 0; j < m; ++j) {
    if (seen[static_cast<std::size_t>(j)]) continue;
    std::vector<int> cyc;
    for (int x = j; !seen[static_cast<std::size_t>(x)]; x = a.apply(x)) {
      seen[static_cast<std::size_t>(x)] = 1;
      cyc.push_back(x);
    }
    if (cyc.size() == 1) fixed.push_back(std::move(cyc));
    else out.cycles.push_back(std::move(cyc));
  }
  for (auto& f : fixed) out.cycles.push_back(std::move(f));
  return out;
}

inline Permutation from_cycle_form(const CycleForm& form) {
  if (form.m < 2) throw std::invalid_argument("cycle form order must be at least 2");
  Permutation p(form.m);
  std::vector<int> img = p.images();
  std::vector<char> seen(static_cast<std::size_t>(form.m), 0);
  for (const auto& cyc : form.cycles) {
    for (int v : cyc) {
      if (v < 0 || v >= form.m) throw std::invalid_argument("cycle element out of range");
      if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("repeated element across cycles");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t a = 0; a < cyc.size(); ++a)
      img[static_cast<std::size_t>(cyc[a])] = cyc[(a + 1) % cyc.size()];
  }
  return Permutation::from_images(std::move(img));
}

inline std::string format_cycles(const Permutation& a) {
  const CycleForm form = cycle_form(a);
  std::ostringstream os;
  for (const auto& cyc : form.cycles) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ',';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

// Parses comma cycle notation like "(0,3,4,1,2)" or "(0,7)(1,8)(14)".
// Elements not mentioned are fixed points.
inline Permutation parse_cycles(const std::string& text, int m) {
  CycleForm form;
  form.m = m;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      bool neg = false;
      if (i < text.size() && text[i] == '-') { neg = true; ++i; }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected integer in cycle notation");
      long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      cyc.push_back(static_cast<int>(neg ? -v : v));
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i < text.size() && text[i] == ')') { ++i; break; }
      throw std::invalid_argument("expected ',' or ')' in cycle notation");
    }
    form.cycles.push_back(std::move(cyc));
    any = true;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("empty cycle notation");
  return from_cycle_form(form);
}

}  // namespace wreathdec
