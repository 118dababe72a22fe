// Copyright 2026 The Datasmell Authors.
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

#include "datasmell/detect_column.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "datasmell/detect_instance.h"
#include "datasmell/resources.h"
#include "datasmell/text.h"

namespace datasmell {
namespace {

constexpr uint32_t kNone = UINT32_MAX;

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  uint32_t Find(uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller index becomes the root, so a class id is its least member.
  void Union(uint32_t a, uint32_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (a < b) {
      parent_[b] = a;
    } else {
      parent_[a] = b;
    }
  }

 private:
  std::vector<uint32_t> parent_;
};

std::vector<std::string_view> Tokens(std::string_view key) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (start <= key.size()) {
    const size_t sp = key.find(' ', start);
    const size_t end = sp == std::string_view::npos ? key.size() : sp;
    if (end > start) out.push_back(key.substr(start, end - start));
    if (sp == std::string_view::npos) break;
    start = sp + 1;
  }
  return out;
}

bool IsStopword(std::string_view t) {
  return t == "of" || t == "the" || t == "and" || t == "for" || t == "de" ||
         t == "&";
}

std::u32string Initials(const std::vector<std::string_view>& words,
                        bool skip_stopwords) {
  std::u32string out;
  for (std::string_view w : words) {
    if (skip_stopwords && IsStopword(w)) continue;
    const std::u32string cps = text::Decode(w);
    if (!cps.empty()) out += cps[0];
  }
  return out;
}

// Acronym form of a single token ("u.n." -> "un"); empty when the token has
// anything but letters and dots.
std::u32string AcronymForm(std::string_view token) {
  std::u32string out;
  for (char32_t c : text::Decode(token)) {
    if (c == U'.') continue;
    if (!text::IsLetter(c)) return {};
    out += c;
  }
  return out;
}

bool IsSubsequence(std::u32string_view small, std::u32string_view big) {
  size_t j = 0;
  for (char32_t c : big) {
    if (j < small.size() && small[j] == c) ++j;
  }
  return j == small.size();
}

// "dr." contracts "doctor".
bool DottedContraction(std::string_view x, std::string_view y) {
  if (!x.ends_with('.') || y.ends_with('.')) return false;
  const std::u32string stem = text::Decode(x.substr(0, x.size() - 1));
  const std::u32string full = text::Decode(y);
  return !stem.empty() && stem.size() < full.size() && stem[0] == full[0] &&
         IsSubsequence(stem, full);
}

bool LexiconLinked(std::string_view a, std::string_view b,
                   const Resources& res) {
  auto linked = [&](std::string_view x, std::string_view y) {
    const auto it = res.abbreviations.find(x);
    return it != res.abbreviations.end() && it->second.contains(y);
  };
  return linked(a, b) || linked(b, a);
}

bool TokenAbbreviation(std::string_view x, std::string_view y,
                       const Resources& res) {
  return DottedContraction(x, y) || DottedContraction(y, x) ||
         LexiconLinked(x, y, res);
}

bool IsAcronymOf(std::string_view token,
                 const std::vector<std::string_view>& words,
                 size_t min_len) {
  const std::u32string acr = AcronymForm(token);
  if (acr.size() < min_len || words.size() < 2) return false;
  if (Initials(words, false) == acr) return true;
  size_t content = 0;
  for (std::string_view w : words) content += IsStopword(w) ? 0 : 1;
  return content >= 2 && Initials(words, true) == acr;
}

// Single-token members of the abbreviation lexicon, grouped by link.
class LexiconClasses {
 public:
  explicit LexiconClasses(const Resources& res) {
    std::map<std::string, std::string, std::less<>> parent;
    auto find = [&](std::string x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    auto add = [&](const std::string& x) { parent.try_emplace(x, x); };
    for (const auto& [shortform, longs] : res.abbreviations) {
      if (shortform.find(' ') != std::string::npos) continue;
      add(shortform);
      for (const std::string& l : longs) {
        if (l.find(' ') != std::string::npos) continue;
        add(l);
        std::string a = find(shortform);
        std::string b = find(l);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        parent[b] = a;
      }
    }
    for (const auto& entry : parent) rep_[entry.first] = find(entry.first);
  }

  const std::string* Rep(std::string_view token) const {
    const auto it = rep_.find(token);
    return it == rep_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, std::string, std::less<>> rep_;
};

void AppendFirstCodePoint(std::string& out, std::string_view s) {
  const std::u32string cps = text::Decode(s.substr(0, std::min<size_t>(4, s.size())));
  out += text::Encode(std::u32string_view(cps).substr(0, 1));
  out += '\x1f';
}

void AbbreviationStage(const std::vector<std::string>& keys,
                       const Resources& res, size_t min_len,
                       const std::vector<uint32_t>& key_rep, UnionFind& uf) {
  auto relate = [&](size_t i, size_t j) {
    if (AbbreviationRelated(keys[i], keys[j], res, min_len)) {
      uf.Union(key_rep[i], key_rep[j]);
    }
  };
  const LexiconClasses classes(res);
  std::unordered_map<std::string, std::vector<uint32_t>> blocks;
  std::vector<bool> special(keys.size(), false);
  std::unordered_map<std::u32string, std::vector<uint32_t>> by_initials;
  std::unordered_map<std::string_view, uint32_t> key_index;
  for (uint32_t i = 0; i < keys.size(); ++i) {
    key_index.emplace(keys[i], i);
    const std::vector<std::string_view> toks = Tokens(keys[i]);
    std::string sig = std::to_string(toks.size()) + ':';
    for (std::string_view t : toks) {
      const std::string* rep = classes.Rep(t);
      if (rep != nullptr || t.ends_with('.')) special[i] = true;
      AppendFirstCodePoint(sig, rep != nullptr ? std::string_view(*rep) : t);
    }
    blocks[sig].push_back(i);
    if (toks.size() >= 2) {
      const std::u32string full = Initials(toks, false);
      const std::u32string lean = Initials(toks, true);
      by_initials[full].push_back(i);
      if (lean != full) by_initials[lean].push_back(i);
    }
  }
  // Token-aligned pairs need a dotted or lexicon token on at least one side.
  for (const auto& [sig, members] : blocks) {
    for (size_t a = 0; a < members.size(); ++a) {
      if (!special[members[a]]) continue;
      for (size_t b = 0; b < members.size(); ++b) {
        if (a == b || (special[members[b]] && b < a)) continue;
        relate(members[a], members[b]);
      }
    }
  }
  for (uint32_t i = 0; i < keys.size(); ++i) {
    const auto lex = res.abbreviations.find(keys[i]);
    if (lex != res.abbreviations.end()) {
      for (const std::string& l : lex->second) {
        const auto it = key_index.find(l);
        if (it != key_index.end()) relate(i, it->second);
      }
    }
    if (keys[i].find(' ') == std::string::npos) {
      const std::u32string acr = AcronymForm(keys[i]);
      if (acr.size() < min_len) continue;
      const auto it = by_initials.find(acr);
      if (it == by_initials.end()) continue;
      for (uint32_t j : it->second) relate(i, j);
    }
  }
}

// Exact candidate generation for EditSimilarity >= s by segment pigeonhole:
// if a (the shorter string) is within d edits of b, some of its 2d+1
// segments survives intact in b, shifted by at most d positions.
class NearDuplicateIndex {
 public:
  NearDuplicateIndex(const std::vector<std::u32string>& keys, double s)
      : keys_(keys), s_(s) {}

  // Calls fn(a, b) per candidate pair until it returns false. Returns
  // false when stopped early.
  template <typename Fn>
  bool ForEachCandidate(Fn fn) {
    size_t max_len = 0;
    for (const auto& k : keys_) max_len = std::max(max_len, k.size());
    std::vector<std::vector<uint32_t>> by_len(max_len + 1);
    for (uint32_t i = 0; i < keys_.size(); ++i) {
      by_len[keys_[i].size()].push_back(i);
    }
    // Strings too short to split are compared against every partner length.
    for (uint32_t a = 0; a < keys_.size(); ++a) {
      const size_t la = keys_[a].size();
      const size_t d = MaxEdits(la);
      if (2 * d + 1 <= la) {
        Index(a, la, d);
        continue;
      }
      for (size_t lb = la; lb <= std::min(max_len, MaxPartner(la)); ++lb) {
        for (uint32_t b : by_len[lb]) {
          if (b != a && !fn(a, b)) return false;
        }
      }
    }
    std::vector<uint32_t> seen(keys_.size(), kNone);
    std::u32string probe;
    for (uint32_t b = 0; b < keys_.size(); ++b) {
      const std::u32string& kb = keys_[b];
      const size_t lb = kb.size();
      const size_t allowed = Allowed(lb);
      const size_t la_min = lb > allowed ? lb - allowed : 1;
      for (size_t la = std::max<size_t>(la_min, 1); la <= lb; ++la) {
        const size_t d = MaxEdits(la);
        const size_t k = 2 * d + 1;
        if (k > la) continue;
        for (size_t seg = 0; seg < k; ++seg) {
          const auto [pos, len] = Segment(la, k, seg);
          const size_t lo = pos > d ? pos - d : 0;
          const size_t hi = std::min(pos + d, lb - len);
          for (size_t p = lo; p <= hi && p + len <= lb; ++p) {
            MakeKey(la, seg, std::u32string_view(kb).substr(p, len), probe);
            const auto it = index_.find(probe);
            if (it == index_.end()) continue;
            for (uint32_t a : it->second) {
              if (a == b || seen[a] == b) continue;
              if (la == lb && a > b) continue;
              seen[a] = b;
              if (!fn(a, b)) return false;
            }
          }
        }
      }
    }
    return true;
  }

 private:
  // Edits tolerated when the longer string has length n.
  size_t Allowed(size_t n) const {
    return static_cast<size_t>(std::floor((1.0 - s_) * static_cast<double>(n) +
                                          1e-9));
  }
  // Longest partner length reachable from la.
  size_t MaxPartner(size_t la) const {
    size_t lb = la;
    while (lb + 1 - la <= Allowed(lb + 1) && lb < la + 4096) ++lb;
    return lb;
  }
  size_t MaxEdits(size_t la) const { return Allowed(MaxPartner(la)); }

  static std::pair<size_t, size_t> Segment(size_t len, size_t k, size_t i) {
    const size_t base = len / k;
    const size_t extra = len % k;
    const size_t pos = i * base + std::min(i, extra);
    return {pos, base + (i < extra ? 1 : 0)};
  }

  static void MakeKey(size_t la, size_t seg, std::u32string_view piece,
                      std::u32string& out) {
    out.clear();
    out += static_cast<char32_t>(la);
    out += static_cast<char32_t>(seg);
    out += piece;
  }

  void Index(uint32_t a, size_t la, size_t d) {
    const size_t k = 2 * d + 1;
    std::u32string key;
    for (size_t seg = 0; seg < k; ++seg) {
      const auto [pos, len] = Segment(la, k, seg);
      MakeKey(la, seg, std::u32string_view(keys_[a]).substr(pos, len), key);
      index_[key].push_back(a);
    }
  }

  const std::vector<std::u32string>& keys_;
  double s_;
  std::unordered_map<std::u32string, std::vector<uint32_t>> index_;
};

void SynonymStage(const std::vector<std::string>& keys, const Resources& res,
                  double cosine, size_t cap,
                  const std::vector<uint32_t>& key_rep, UnionFind& uf,
                  std::vector<std::string>& warnings) {
  std::unordered_map<std::string_view, uint32_t> single;
  for (uint32_t i = 0; i < keys.size(); ++i) {
    if (keys[i].find(' ') == std::string::npos) single.emplace(keys[i], i);
  }
  for (const auto& [key, i] : single) {
    const auto it = res.thesaurus.find(key);
    if (it == res.thesaurus.end()) continue;
    for (const std::string& syn : it->second) {
      const auto hit = single.find(syn);
      if (hit != single.end()) uf.Union(key_rep[i], key_rep[hit->second]);
    }
  }
  if (res.vectors.empty()) return;
  std::vector<std::pair<uint32_t, const std::vector<float>*>> vecs;
  for (uint32_t i = 0; i < keys.size(); ++i) {
    if (!single.contains(keys[i])) continue;
    if (const auto* v = res.Vector(keys[i])) vecs.emplace_back(i, v);
  }
  if (vecs.size() > cap) {
    warnings.push_back("C-SYN vector comparison skipped: " +
                       std::to_string(vecs.size()) +
                       " distinct tokens exceed cap " + std::to_string(cap));
    return;
  }
  for (size_t a = 0; a < vecs.size(); ++a) {
    for (size_t b = a + 1; b < vecs.size(); ++b) {
      if (Cosine(*vecs[a].second, *vecs[b].second) >= cosine) {
        uf.Union(key_rep[vecs[a].first], key_rep[vecs[b].first]);
      }
    }
  }
}

void Snapshot(UnionFind& uf, size_t n, std::vector<uint32_t>& out) {
  out.resize(n);
  for (uint32_t i = 0; i < n; ++i) out[i] = uf.Find(i);
}

// Builds the groups formed at stage k from the classes of stage k-1.
void CollectGroups(CascadeResult& r, size_t k) {
  const size_t n = r.distinct.size();
  const std::vector<uint32_t>& cur = r.stage_class[k];
  auto prev = [&](uint32_t i) { return k == 0 ? i : r.stage_class[k - 1][i]; };
  std::vector<size_t> total(n, 0);
  std::vector<uint32_t> best(n, kNone);
  for (uint32_t i = 0; i < n; ++i) {
    const uint32_t c = prev(i);
    total[c] += r.counts[i];
    if (best[c] == kNone || r.counts[i] > r.counts[best[c]]) best[c] = i;
  }
  std::vector<uint32_t> children(n, 0);
  for (uint32_t i = 0; i < n; ++i) {
    if (prev(i) == i) ++children[cur[i]];
  }
  std::map<uint32_t, std::vector<uint32_t>> comps;  // comp -> child classes
  for (uint32_t i = 0; i < n; ++i) {
    if (prev(i) == i && children[cur[i]] >= 2) comps[cur[i]].push_back(i);
  }
  struct Built {
    VariantGroup group;
    uint32_t comp;
    uint32_t majority;
  };
  std::vector<Built> built;
  for (const auto& [comp, kids] : comps) {
    Built b;
    b.comp = comp;
    b.group.relation = static_cast<Relation>(k);
    b.majority = kids[0];
    for (uint32_t c : kids) {
      b.group.variants.push_back({r.distinct[best[c]], total[c]});
      const std::string& raw = r.distinct[best[c]];
      const std::string& cur_best = r.distinct[best[b.majority]];
      if (total[c] > total[b.majority] ||
          (total[c] == total[b.majority] && raw < cur_best)) {
        b.majority = c;
      }
    }
    std::sort(b.group.variants.begin(), b.group.variants.end(),
              [](const Variant& x, const Variant& y) { return x.raw < y.raw; });
    b.group.canonical = r.distinct[best[b.majority]];
    built.push_back(std::move(b));
  }
  std::sort(built.begin(), built.end(), [](const Built& x, const Built& y) {
    return x.group.canonical < y.group.canonical;
  });
  std::vector<uint32_t> slot(n, kNone);
  const size_t base = r.groups.size();
  for (size_t g = 0; g < built.size(); ++g) {
    slot[built[g].comp] = static_cast<uint32_t>(base + g);
    r.groups.push_back(std::move(built[g].group));
    r.group_minority.emplace_back();
  }
  for (uint32_t i = 0; i < n; ++i) {
    const uint32_t g = slot[cur[i]];
    if (g == kNone) continue;
    if (prev(i) != built[g - base].majority) r.group_minority[g].push_back(i);
  }
}

std::string Quote(std::string_view s) {
  std::string out = "'";
  out += s;
  out += '\'';
  return out;
}

std::string GroupEvidence(const VariantGroup& g) {
  constexpr size_t kListed = 5;
  std::string out = std::string(RelationName(g.relation)) + " variants ";
  for (size_t i = 0; i < g.variants.size() && i < kListed; ++i) {
    if (i > 0) out += ", ";
    out += Quote(g.variants[i].raw) + " x" + std::to_string(g.variants[i].count);
  }
  if (g.variants.size() > kListed) {
    out += ", +" + std::to_string(g.variants.size() - kListed) + " more";
  }
  out += "; majority " + Quote(g.canonical);
  return out;
}

bool TextColumn(const ColumnData& col) {
  return col.non_missing_count() > 0 && col.dominant() == BaseType::kText;
}

}  // namespace

std::string_view RelationName(Relation r) {
  switch (r) {
    case Relation::kCaseFold:
      return "case-fold";
    case Relation::kSpaceFold:
      return "space-fold";
    case Relation::kAbbreviation:
      return "abbreviation";
    case Relation::kNearDuplicate:
      return "near-duplicate";
    case Relation::kSynonym:
      return "synonym";
  }
  return "?";
}

std::string_view RelationSmell(Relation r) {
  switch (r) {
    case Relation::kCaseFold:
      return smell::kCaseInconsistency;
    case Relation::kSpaceFold:
      return smell::kSpaceInconsistency;
    case Relation::kAbbreviation:
      return smell::kAbbrevInconsistency;
    case Relation::kNearDuplicate:
      return smell::kAmbiguousValue;
    case Relation::kSynonym:
      return smell::kSynonym;
  }
  return "";
}

size_t VariantGroup::total() const {
  size_t t = 0;
  for (const Variant& v : variants) t += v.count;
  return t;
}

size_t VariantGroup::majority_count() const {
  for (const Variant& v : variants) {
    if (v.raw == canonical) return v.count;
  }
  return 0;
}

size_t DamerauLevenshtein(std::u32string_view a, std::u32string_view b) {
  const size_t n = a.size();
  const size_t m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<size_t> prev2(m + 1);
  std::vector<size_t> prev(m + 1);
  std::vector<size_t> cur(m + 1);
  std::iota(prev.begin(), prev.end(), size_t{0});
  for (size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (size_t j = 1; j <= m; ++j) {
      const size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      size_t v = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
      if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1]) {
        v = std::min(v, prev2[j - 2] + 1);
      }
      cur[j] = v;
    }
    std::swap(prev2, prev);
    std::swap(prev, cur);
  }
  return prev[m];
}

double EditSimilarity(std::u32string_view a, std::u32string_view b) {
  const size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(DamerauLevenshtein(a, b)) /
                   static_cast<double>(longest);
}

std::string CascadeKey(std::string_view raw) {
  return text::CollapseSpace(text::FoldCase(raw));
}

bool AbbreviationRelated(std::string_view a, std::string_view b,
                         const Resources& res, size_t min_acronym_len) {
  if (a == b) return false;
  if (LexiconLinked(a, b, res)) return true;
  const std::vector<std::string_view> ta = Tokens(a);
  const std::vector<std::string_view> tb = Tokens(b);
  if (ta.size() == tb.size()) {
    bool all = true;
    for (size_t i = 0; i < ta.size() && all; ++i) {
      all = ta[i] == tb[i] || TokenAbbreviation(ta[i], tb[i], res);
    }
    if (all) return true;
  }
  if (ta.size() == 1 && IsAcronymOf(ta[0], tb, min_acronym_len)) return true;
  if (tb.size() == 1 && IsAcronymOf(tb[0], ta, min_acronym_len)) return true;
  return false;
}

CascadeResult RunCascade(std::vector<std::string> distinct,
                         std::vector<size_t> counts, const StrengthConfig& cfg,
                         const Resources& res) {
  CascadeResult r;
  {
    std::vector<size_t> order(distinct.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return distinct[x] < distinct[y]; });
    r.distinct.reserve(order.size());
    for (size_t i : order) {
      if (!r.distinct.empty() && r.distinct.back() == distinct[i]) {
        r.counts.back() += counts[i];
        continue;
      }
      r.distinct.push_back(std::move(distinct[i]));
      r.counts.push_back(counts[i]);
    }
  }
  const size_t n = r.distinct.size();
  UnionFind uf(n);

  std::unordered_map<std::string, uint32_t> first;
  for (uint32_t i = 0; i < n; ++i) {
    auto [it, inserted] = first.try_emplace(text::FoldCase(r.distinct[i]), i);
    if (!inserted) uf.Union(it->second, i);
  }
  Snapshot(uf, n, r.stage_class[0]);

  std::vector<std::string> keys;
  std::vector<uint32_t> key_rep;
  std::vector<std::string> key_of(n);
  {
    std::map<std::string, uint32_t> key_first;
    for (uint32_t i = 0; i < n; ++i) {
      key_of[i] = CascadeKey(r.distinct[i]);
      auto [it, inserted] = key_first.try_emplace(key_of[i], i);
      if (!inserted) uf.Union(it->second, i);
    }
    for (const auto& [key, i] : key_first) {
      keys.push_back(key);
      key_rep.push_back(i);
    }
  }
  Snapshot(uf, n, r.stage_class[1]);

  const auto min_acronym = static_cast<size_t>(
      cfg.Param(smell::kAbbrevInconsistency, "min_acronym_len"));
  AbbreviationStage(keys, res, min_acronym, key_rep, uf);
  Snapshot(uf, n, r.stage_class[2]);

  const double similarity = cfg.Param(smell::kAmbiguousValue, "similarity");
  const auto cap =
      static_cast<size_t>(cfg.Param(smell::kAmbiguousValue, "distinct_cap"));
  if (keys.size() > cap) {
    r.near_duplicate_skipped = true;
    r.warnings.push_back("B-AMBIG-VAL similarity stage skipped: " +
                         std::to_string(keys.size()) +
                         " distinct values exceed cap " + std::to_string(cap));
  } else {
    std::vector<std::u32string> wide;
    wide.reserve(keys.size());
    for (const std::string& k : keys) wide.push_back(text::Decode(k));
    const auto budget = static_cast<uint64_t>(
        cfg.Param(smell::kAmbiguousValue, "pair_budget"));
    uint64_t pairs = 0;
    NearDuplicateIndex index(wide, similarity);
    const bool done = index.ForEachCandidate([&](uint32_t a, uint32_t b) {
      if (++pairs > budget) return false;
      if (uf.Find(key_rep[a]) == uf.Find(key_rep[b])) return true;
      if (EditSimilarity(wide[a], wide[b]) >= similarity) {
        uf.Union(key_rep[a], key_rep[b]);
      }
      return true;
    });
    if (!done) {
      uf = UnionFind(n);
      for (uint32_t i = 0; i < n; ++i) uf.Union(i, r.stage_class[2][i]);
      r.near_duplicate_skipped = true;
      r.warnings.push_back(
          "B-AMBIG-VAL similarity stage skipped: candidate pairs exceed "
          "budget " + std::to_string(budget));
    }
  }
  Snapshot(uf, n, r.stage_class[3]);

  if (res.HasSynonymResource()) {
    SynonymStage(keys, res, cfg.Param(smell::kSynonym, "cosine"), cap, key_rep,
                 uf, r.warnings);
  }
  Snapshot(uf, n, r.stage_class[4]);

  for (size_t k = 0; k < kStageCount; ++k) CollectGroups(r, k);

  if (!res.ambiguity_lexicon.empty()) {
    std::vector<bool> minority(n, false);
    for (const auto& m : r.group_minority) {
      for (uint32_t i : m) minority[i] = true;
    }
    for (uint32_t i = 0; i < n; ++i) {
      if (!minority[i] && res.ambiguity_lexicon.contains(key_of[i])) {
        r.lexicon_hits.push_back(i);
      }
    }
  }
  return r;
}

CascadeResult RunCascade(const ColumnData& col, const StrengthConfig& cfg,
                         const Resources& res) {
  if (!TextColumn(col)) return {};
  std::unordered_map<std::string_view, uint32_t> ids;
  std::vector<std::string_view> values;
  std::vector<size_t> counts;
  std::vector<uint32_t> row_id(col.size(), CascadeResult::kNoValue);
  for (size_t r = 0; r < col.size(); ++r) {
    if (col.missing(r)) continue;
    auto [it, inserted] =
        ids.try_emplace(col.raw(r), static_cast<uint32_t>(values.size()));
    if (inserted) {
      values.push_back(col.raw(r));
      counts.push_back(0);
    }
    ++counts[it->second];
    row_id[r] = it->second;
  }
  std::vector<std::string> distinct(values.begin(), values.end());
  CascadeResult out = RunCascade(distinct, counts, cfg, res);
  // Map first-seen ids onto the sorted order.
  std::vector<uint32_t> order(values.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](uint32_t x, uint32_t y) { return values[x] < values[y]; });
  std::vector<uint32_t> remap(values.size());
  for (uint32_t pos = 0; pos < order.size(); ++pos) remap[order[pos]] = pos;
  for (uint32_t& id : row_id) {
    if (id != CascadeResult::kNoValue) id = remap[id];
  }
  out.row_distinct = std::move(row_id);
  return out;
}

std::vector<Finding> GroupFindings(const ColumnData& col,
                                   const CascadeResult& cascade,
                                   Relation relation,
                                   const StrengthConfig& cfg) {
  const std::string_view id = RelationSmell(relation);
  std::vector<Finding> out;
  std::vector<uint32_t> finding_of(cascade.distinct.size(), kNone);
  for (size_t g = 0; g < cascade.groups.size(); ++g) {
    const VariantGroup& group = cascade.groups[g];
    if (group.relation != relation) continue;
    Finding f;
    f.smell_id = std::string(id);
    f.column_index = col.index();
    f.granularity = Granularity::kColumn;
    f.flagged_count = group.total() - group.majority_count();
    f.evidence = GroupEvidence(group);
    f.params_used = cfg.Params(id);
    for (uint32_t i : cascade.group_minority[g]) {
      finding_of[i] = static_cast<uint32_t>(out.size());
    }
    out.push_back(std::move(f));
  }
  if (out.empty()) return out;
  for (size_t r = 0; r < cascade.row_distinct.size(); ++r) {
    const uint32_t i = cascade.row_distinct[r];
    if (i == CascadeResult::kNoValue || finding_of[i] == kNone) continue;
    Finding& f = out[finding_of[i]];
    if (f.samples.size() < cfg.sample_cap) {
      f.samples.push_back({r, std::string(col.raw(r))});
    }
  }
  return out;
}

std::vector<Finding> DetectCaseInconsistency(const ColumnData& col,
                                             const StrengthConfig& cfg,
                                             const CascadeResult& cascade) {
  return GroupFindings(col, cascade, Relation::kCaseFold, cfg);
}

std::vector<Finding> DetectSpaceInconsistency(const ColumnData& col,
                                              const StrengthConfig& cfg,
                                              const CascadeResult& cascade) {
  return GroupFindings(col, cascade, Relation::kSpaceFold, cfg);
}

std::vector<Finding> DetectAbbrevInconsistency(const ColumnData& col,
                                               const StrengthConfig& cfg,
                                               const CascadeResult& cascade) {
  return GroupFindings(col, cascade, Relation::kAbbreviation, cfg);
}

std::vector<Finding> DetectAmbiguousValue(const ColumnData& col,
                                          const StrengthConfig& cfg,
                                          const CascadeResult& cascade) {
  std::vector<Finding> out =
      GroupFindings(col, cascade, Relation::kNearDuplicate, cfg);
  if (cascade.lexicon_hits.empty()) return out;
  std::vector<bool> hit(cascade.distinct.size(), false);
  std::string listed;
  for (uint32_t i : cascade.lexicon_hits) {
    hit[i] = true;
    if (!listed.empty()) listed += ", ";
    listed += Quote(cascade.distinct[i]);
  }
  FindingBuilder b(smell::kAmbiguousValue, col, Granularity::kColumn, cfg);
  for (size_t r = 0; r < cascade.row_distinct.size(); ++r) {
    const uint32_t i = cascade.row_distinct[r];
    if (i != CascadeResult::kNoValue && hit[i]) b.Flag(r);
  }
  for (Finding& f : std::move(b).Build("ambiguity lexicon entries " + listed)) {
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Finding> DetectSynonyms(const ColumnData& col,
                                    const StrengthConfig& cfg,
                                    const CascadeResult& cascade) {
  return GroupFindings(col, cascade, Relation::kSynonym, cfg);
}

std::vector<Finding> DetectFormatInconsistency(
    const ColumnData& col, const StrengthConfig& cfg,
    const datetime::ColumnDateTimeProfile& profile) {
  const std::string_view id = smell::kFormatInconsistency;
  if (profile.parseable < 2 || profile.signatures.size() < 2) return {};
  if (TemporalFraction(col, profile) <
      cfg.Param(id, "min_temporal_fraction")) {
    return {};
  }
  const int majority = profile.MajoritySignature();
  FindingBuilder b(id, col, Granularity::kColumn, cfg);
  for (size_t r = 0; r < profile.rows.size(); ++r) {
    const int32_t sig = profile.rows[r].signature;
    if (sig >= 0 && sig != majority) b.Flag(r);
  }
  std::vector<size_t> order(profile.signatures.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
    return profile.signature_counts[x] != profile.signature_counts[y]
               ? profile.signature_counts[x] > profile.signature_counts[y]
               : profile.signatures[x] < profile.signatures[y];
  });
  std::string evidence =
      std::to_string(profile.signatures.size()) + " signatures: ";
  for (size_t i = 0; i < order.size(); ++i) {
    if (i > 0) evidence += ", ";
    evidence += profile.signatures[order[i]] + " x" +
                std::to_string(profile.signature_counts[order[i]]);
  }
  return std::move(b).Build(evidence);
}

}  // namespace datasmell
