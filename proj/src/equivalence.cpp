// Copyright 2026 The ghzbell Authors
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

#include "ghzbell/equivalence.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace ghzbell {

RelabelingElement RelabelingElement::identity(const Scenario& s) {
  RelabelingElement e;
  for (int p = 0; p < 3; ++p) {
    e.perm[p].resize(s.settings(p));
    std::iota(e.perm[p].begin(), e.perm[p].end(), 0);
    e.sign[p].assign(s.settings(p), 1);
  }
  return e;
}

void RelabelingElement::validate(const Scenario& s) const {
  std::array<bool, 3> seen{};
  for (int p = 0; p < 3; ++p) {
    const int q = party[p];
    if (q < 0 || q > 2 || seen[q]) throw RelabelingError("party map is not a permutation");
    seen[q] = true;
    if (s.settings(q) != s.settings(p)) {
      throw RelabelingError("party exchange between different setting counts");
    }
    const int m = s.settings(p);
    if (static_cast<int>(perm[p].size()) != m || static_cast<int>(sign[p].size()) != m) {
      throw RelabelingError("setting map has the wrong length");
    }
    std::vector<bool> hit(m, false);
    for (int x : perm[p]) {
      if (x < 0 || x >= m || hit[x]) throw RelabelingError("setting map is not a permutation");
      hit[x] = true;
    }
    for (int x : sign[p]) {
      if (x != 1 && x != -1) throw RelabelingError("signs must be +1 or -1");
    }
  }
}

RelabelingElement RelabelingElement::inverse() const {
  RelabelingElement inv;
  for (int p = 0; p < 3; ++p) {
    const int q = party[p];
    inv.party[q] = p;
    inv.perm[q].resize(perm[p].size());
    inv.sign[q].resize(perm[p].size());
    for (std::size_t s = 0; s < perm[p].size(); ++s) {
      inv.perm[q][perm[p][s]] = static_cast<int>(s);
      inv.sign[q][perm[p][s]] = sign[p][s];
    }
  }
  return inv;
}

RelabelingElement random_element(const Scenario& s, std::mt19937_64& gen) {
  auto below = [&](int n) { return static_cast<int>(gen() % static_cast<std::uint64_t>(n)); };
  RelabelingElement e = RelabelingElement::identity(s);
  std::vector<std::array<int, 3>> parties;
  std::array<int, 3> p{0, 1, 2};
  do {
    if (s.settings(p[0]) == s.m_a() && s.settings(p[1]) == s.m_b() && s.settings(p[2]) == s.m_c()) {
      parties.push_back(p);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  e.party = parties[below(static_cast<int>(parties.size()))];
  for (int q = 0; q < 3; ++q) {
    auto& v = e.perm[q];
    for (int n = static_cast<int>(v.size()) - 1; n > 0; --n) std::swap(v[n], v[below(n + 1)]);
    for (int& x : e.sign[q]) x = (gen() & 1) ? -1 : 1;
  }
  return e;
}

namespace {

struct Partial {
  std::array<int, 3> party{};
  std::array<std::vector<int>, 3> perm;
  std::array<std::vector<int>, 3> sign;
  std::array<std::uint32_t, 3> used{};
};

struct Decision {
  int axis;
  int pos;
  int prefix_end;  // flattened positions [0, prefix_end) are settled afterwards
};

// a0, b0, then Cecil's settings, then the rest of Bob's, then the rest of
// Alice's: each step settles the next run of the i-slowest flattening.
std::vector<Decision> decision_order(const Scenario& s) {
  std::vector<Decision> out;
  out.push_back({0, 0, 0});
  out.push_back({1, 0, 0});
  for (int k = 0; k < s.m_c(); ++k) out.push_back({2, k, k + 1});
  for (int j = 1; j < s.m_b(); ++j) out.push_back({1, j, (j + 1) * s.m_c()});
  for (int i = 1; i < s.m_a(); ++i) out.push_back({0, i, (i + 1) * s.m_b() * s.m_c()});
  return out;
}

std::int64_t entry(const IntTensor& t, const Partial& n, int flat) {
  const Scenario& s = t.scenario();
  const std::array<int, 3> idx{flat / (s.m_b() * s.m_c()), (flat / s.m_c()) % s.m_b(),
                               flat % s.m_c()};
  std::array<int, 3> o{};
  int sg = 1;
  for (int p = 0; p < 3; ++p) {
    o[n.party[p]] = n.perm[p][idx[p]];
    sg *= n.sign[p][idx[p]];
  }
  const std::int64_t v = t.at(o[0], o[1], o[2]);
  return sg > 0 ? v : -v;
}

std::string sha256_hex32(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int n = 0; n < 16 && n < len; ++n) {
    out += hex[md[n] >> 4];
    out += hex[md[n] & 15];
  }
  return out;
}

}  // namespace

CanonicalForm canonicalize(const IntTensor& t, std::int64_t node_budget) {
  const Scenario& s = t.scenario();
  const auto order = decision_order(s);
  CanonicalForm out;
  out.tensor = IntTensor(s);

  std::vector<Partial> beam;
  std::array<int, 3> p{0, 1, 2};
  do {
    if (s.settings(p[0]) != s.m_a() || s.settings(p[1]) != s.m_b() ||
        s.settings(p[2]) != s.m_c()) {
      continue;
    }
    Partial root;
    root.party = p;
    for (int q = 0; q < 3; ++q) {
      root.perm[q].assign(s.settings(q), -1);
      root.sign[q].assign(s.settings(q), 1);
    }
    beam.push_back(std::move(root));
  } while (std::next_permutation(p.begin(), p.end()));

  int settled = 0;
  std::vector<Partial> next;
  std::vector<std::int64_t> best, block;
  for (std::size_t level = 0; level < order.size(); ++level) {
    const Decision& d = order[level];
    // The overall sign group has a redundant subgroup (negate two whole
    // parties), which lets the first setting of Alice and Bob keep sign +1.
    const int max_sign = level < 2 ? 1 : 2;
    next.clear();
    best.clear();
    bool have_best = false;
    for (const Partial& node : beam) {
      for (int old = 0; old < s.settings(d.axis); ++old) {
        if (node.used[d.axis] >> old & 1U) continue;
        for (int sg = 0; sg < max_sign; ++sg) {
          if (++out.nodes > node_budget) {
            throw CanonicalBudgetError("canonical search exceeded " +
                                       std::to_string(node_budget) + " nodes");
          }
          Partial child = node;
          child.perm[d.axis][d.pos] = old;
          child.sign[d.axis][d.pos] = sg == 0 ? 1 : -1;
          child.used[d.axis] |= 1U << old;
          block.clear();
          for (int f = settled; f < d.prefix_end; ++f) block.push_back(entry(t, child, f));
          if (!have_best || block < best) {
            best = block;
            have_best = true;
            next.clear();
          } else if (block != best) {
            continue;
          }
          next.push_back(std::move(child));
        }
      }
    }
    for (int f = settled; f < d.prefix_end; ++f) out.tensor[f] = best[f - settled];
    settled = d.prefix_end;
    beam.swap(next);
  }

  const Partial& w = beam.front();
  out.element.party = w.party;
  out.element.perm = w.perm;
  out.element.sign = w.sign;

  std::string data = s.to_string() + ':';
  for (std::int64_t c : out.tensor.coeffs()) data += std::to_string(c) + ',';
  out.digest = sha256_hex32(data);

  for (int q = 0; q < 3; ++q) {
    int live = 0;
    for (int x = 0; x < s.settings(q); ++x) {
      bool nonzero = false;
      for (int i = 0; i < s.m_a() && !nonzero; ++i)
        for (int j = 0; j < s.m_b() && !nonzero; ++j)
          for (int k = 0; k < s.m_c() && !nonzero; ++k) {
            const std::array<int, 3> n{i, j, k};
            if (n[q] == x && t.at(i, j, k) != 0) nonzero = true;
          }
      live += nonzero;
    }
    out.effective_counts[q] = live;
  }
  return out;
}

Fingerprint fingerprint(const IntTensor& t) {
  const Scenario& s = t.scenario();
  Fingerprint f;
  f.scenario = s;
  std::array<std::pair<int, std::vector<std::vector<std::int64_t>>>, 3> keyed;
  for (int q = 0; q < 3; ++q) {
    std::vector<std::vector<std::int64_t>> slices(s.settings(q));
    for (int i = 0; i < s.m_a(); ++i)
      for (int j = 0; j < s.m_b(); ++j)
        for (int k = 0; k < s.m_c(); ++k) {
          const std::array<int, 3> n{i, j, k};
          slices[n[q]].push_back(std::abs(t.at(i, j, k)));
        }
    for (auto& v : slices) std::sort(v.begin(), v.end());
    std::sort(slices.begin(), slices.end());
    keyed[q] = {s.settings(q), std::move(slices)};
  }
  std::sort(keyed.begin(), keyed.end());
  for (int q = 0; q < 3; ++q) f.parties[q] = std::move(keyed[q].second);
  return f;
}

bool equivalent(const IntTensor& a, const IntTensor& b) {
  if (!(a.scenario() == b.scenario())) return false;
  if (!(fingerprint(a) == fingerprint(b))) return false;
  return canonicalize(a).tensor == canonicalize(b).tensor;
}

}  // namespace ghzbell
