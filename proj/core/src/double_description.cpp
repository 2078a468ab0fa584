// Copyright 2026 The qbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "double_description.hpp"

#include <bit>
#include <cstdint>
#include <utility>

namespace qbell::detail {

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void set_first(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) set(i);
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool subset_of(const Bits& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r = a;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntegerVector v;
  Bits zero;
};

// a * x - b * y, made primitive.
IntegerVector combine(const Integer& a, const IntegerVector& x, const Integer& b, const IntegerVector& y) {
  IntegerVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] - b * y[i];
  make_primitive(r);
  return r;
}

}  // namespace

ConeGenerators double_description(std::size_t dim, const std::vector<IntegerVector>& rows) {
  const std::size_t nrows = rows.size();
  std::vector<IntegerVector> lineality;
  for (std::size_t i = 0; i < dim; ++i) {
    IntegerVector e(dim, Integer(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < nrows; ++k) {
    const IntegerVector& h = rows[k];

    std::size_t pivot = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      if (sgn(dot(h, lineality[i])) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < lineality.size()) {
      IntegerVector l = std::move(lineality[pivot]);
      lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(pivot));
      Integer hl = dot(h, l);
      if (sgn(hl) < 0) {
        for (auto& e : l) e = -e;
        hl = -hl;
      }
      for (auto& other : lineality) {
        const Integer ho = dot(h, other);
        if (sgn(ho) != 0) other = combine(hl, other, ho, l);
      }
      for (auto& r : rays) {
        const Integer hr = dot(h, r.v);
        if (sgn(hr) != 0) r.v = combine(hl, r.v, hr, l);
        r.zero.set(k);
      }
      Ray fresh{std::move(l), Bits(nrows)};
      fresh.zero.set_first(k);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> plus;
    std::vector<std::size_t> minus;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      value[j] = dot(h, rays[j].v);
      const int s = sgn(value[j]);
      if (s > 0) plus.push_back(j);
      if (s < 0) minus.push_back(j);
    }
    if (minus.empty()) {
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (sgn(value[j]) == 0) rays[j].zero.set(k);
      }
      continue;
    }

    const std::size_t pointed_dim = dim - lineality.size();
    const std::size_t need = pointed_dim >= 2 ? pointed_dim - 2 : 0;
    std::vector<Ray> next;
    for (const std::size_t p : plus) {
      for (const std::size_t n : minus) {
        Bits common = rays[p].zero & rays[n].zero;
        if (common.count() < need) continue;
        bool adjacent = true;
        for (std::size_t j = 0; j < rays.size() && adjacent; ++j) {
          if (j != p && j != n && common.subset_of(rays[j].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray r{combine(value[p], rays[n].v, value[n], rays[p].v), std::move(common)};
        r.zero.set(k);
        next.push_back(std::move(r));
      }
    }
    std::vector<Ray> kept;
    kept.reserve(rays.size() - minus.size() + next.size());
    for (std::size_t j = 0; j < rays.size(); ++j) {
      const int s = sgn(value[j]);
      if (s < 0) continue;
      if (s == 0) rays[j].zero.set(k);
      kept.push_back(std::move(rays[j]));
    }
    for (auto& r : next) kept.push_back(std::move(r));
    rays = std::move(kept);
  }

  ConeGenerators out;
  out.lineality = std::move(lineality);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace qbell::detail
