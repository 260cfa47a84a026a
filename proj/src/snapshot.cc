// Copyright 2026 The msnrec Authors.
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

#include "msnrec/snapshot.h"

#include <algorithm>
#include <unordered_map>

#include "msnrec/errors.h"

namespace msnrec {
namespace {

std::size_t IntersectionSize(const IdSet& a, const IdSet& b) {
  std::size_t n = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++n;
      ++ia;
      ++ib;
    }
  }
  return n;
}

double Ratio(std::size_t numerator, std::size_t denominator) {
  if (denominator == 0) return 0.0;
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

double OverlapRatio(const IdSet& source, const IdSet& other) {
  return Ratio(IntersectionSize(source, other), source.size());
}

// item -> users holding it in `relation`.
using InvertedIndex = std::unordered_map<std::string, std::vector<UserId>>;

InvertedIndex Invert(const Relation& relation) {
  InvertedIndex index;
  for (const auto& [user, items] : relation) {
    for (const auto& item : items) index[item].push_back(user);
  }
  return index;
}

// For every k in `sources`, counts how many of k's items are held by each
// other user j according to `holders`, and stores count / |items(k)|.
void FillOverlapLayer(MsnSnapshot& snapshot, LayerId layer,
                      const Relation& sources, const InvertedIndex& holders) {
  std::map<UserId, std::size_t> counts;
  for (const auto& [k, items] : sources) {
    counts.clear();
    for (const auto& item : items) {
      auto it = holders.find(item);
      if (it == holders.end()) continue;
      for (const UserId& j : it->second) {
        if (j != k) ++counts[j];
      }
    }
    for (const auto& [j, n] : counts) {
      snapshot.Set(layer, k, j, Ratio(n, items.size()));
    }
  }
}

}  // namespace

void MsnSnapshot::Set(LayerId layer, const UserId& k, const UserId& j,
                      double strength) {
  if (k == j) throw ValidationError("self-edge for '" + k + "'");
  if (!(strength >= 0.0 && strength <= 1.0)) {
    throw ValidationError("strength out of [0,1] for " + k + " -> " + j);
  }
  auto& edges = layers_[Index(layer)];
  auto& count = edge_counts_[Index(layer)];
  if (strength == 0.0) {
    auto row = edges.find(k);
    if (row == edges.end()) return;
    count -= row->second.erase(j);
    if (row->second.empty()) edges.erase(row);
    return;
  }
  auto [it, inserted] = edges[k].insert_or_assign(j, strength);
  if (inserted) ++count;
}

double MsnSnapshot::Strength(LayerId layer, const UserId& k,
                             const UserId& j) const {
  const Row* row = OutEdges(layer, k);
  if (row == nullptr) return 0.0;
  auto it = row->find(j);
  return it == row->end() ? 0.0 : it->second;
}

LayerVector MsnSnapshot::Strengths(const UserId& k, const UserId& j) const {
  LayerVector s{};
  for (LayerId layer : kAllLayers) s[Index(layer)] = Strength(layer, k, j);
  return s;
}

const MsnSnapshot::Row* MsnSnapshot::OutEdges(LayerId layer,
                                              const UserId& k) const {
  const auto& edges = layers_[Index(layer)];
  auto it = edges.find(k);
  return it == edges.end() ? nullptr : &it->second;
}

std::set<UserId> MsnSnapshot::Neighbours(const UserId& k) const {
  std::set<UserId> out;
  for (LayerId layer : kAllLayers) {
    if (const Row* row = OutEdges(layer, k)) {
      for (const auto& [j, s] : *row) out.insert(j);
    }
  }
  return out;
}

std::size_t MsnSnapshot::EdgeCount(LayerId layer) const {
  return edge_counts_[Index(layer)];
}

std::size_t MsnSnapshot::TotalEdgeCount() const {
  std::size_t n = 0;
  for (std::size_t c : edge_counts_) n += c;
  return n;
}

double ComputeLayerStrength(const InteractionLog& log, LayerId layer,
                            const UserId& k, const UserId& j) {
  if (!log.HasUser(k)) throw LookupError("unknown user '" + k + "'");
  if (!log.HasUser(j)) throw LookupError("unknown user '" + j + "'");
  if (k == j) throw ValidationError("strength of '" + k + "' to itself");

  switch (layer) {
    case LayerId::kTag:
      return OverlapRatio(log.TagsUsed(k), log.TagsUsed(j));
    case LayerId::kGroup:
      return OverlapRatio(log.Groups(k), log.Groups(j));
    case LayerId::kFavFav:
      return OverlapRatio(log.Favourites(k), log.Favourites(j));
    case LayerId::kOpOp:
      return OverlapRatio(log.Opinions(k), log.Opinions(j));
    case LayerId::kFavAuthor:
      return OverlapRatio(log.Favourites(k), log.Authored(j));
    case LayerId::kAuthorFav:
      return OverlapRatio(log.Authored(k), log.Favourites(j));
    case LayerId::kOpAuthor:
      return OverlapRatio(log.Opinions(k), log.Authored(j));
    case LayerId::kAuthorOp:
      return OverlapRatio(log.Authored(k), log.Opinions(j));
    case LayerId::kContactDirect:
      return log.Contacts(k).contains(j) ? 1.0 : 0.0;
    case LayerId::kContactCommon: {
      std::size_t listing_k = 0;
      std::size_t listing_both = 0;
      for (const auto& [z, list] : log.contacts) {
        if (!list.contains(k)) continue;
        ++listing_k;
        if (list.contains(j)) ++listing_both;
      }
      return Ratio(listing_both, listing_k);
    }
    case LayerId::kContactTransitive: {
      const IdSet& direct = log.Contacts(k);
      std::size_t reaching = 0;
      for (const UserId& z : direct) {
        if (log.Contacts(z).contains(j)) ++reaching;
      }
      return Ratio(reaching, direct.size());
    }
  }
  return 0.0;
}

MsnSnapshot BuildLayers(const InteractionLog& log, std::uint64_t built_at) {
  log.Validate();
  MsnSnapshot snapshot(built_at);

  FillOverlapLayer(snapshot, LayerId::kTag, log.tags_used,
                   Invert(log.tags_used));
  FillOverlapLayer(snapshot, LayerId::kGroup, log.groups, Invert(log.groups));

  const InvertedIndex favouriters = Invert(log.favourites);
  const InvertedIndex commenters = Invert(log.opinions);
  const InvertedIndex authors = Invert(log.authored);
  FillOverlapLayer(snapshot, LayerId::kFavFav, log.favourites, favouriters);
  FillOverlapLayer(snapshot, LayerId::kOpOp, log.opinions, commenters);
  FillOverlapLayer(snapshot, LayerId::kFavAuthor, log.favourites, authors);
  FillOverlapLayer(snapshot, LayerId::kAuthorFav, log.authored, favouriters);
  FillOverlapLayer(snapshot, LayerId::kOpAuthor, log.opinions, authors);
  FillOverlapLayer(snapshot, LayerId::kAuthorOp, log.authored, commenters);

  for (const auto& [k, list] : log.contacts) {
    for (const UserId& j : list) {
      snapshot.Set(LayerId::kContactDirect, k, j, 1.0);
    }
  }

  // listers(k) = users whose contact list contains k. ContactCommon counts,
  // over listers(k), how many also list j; ContactTransitive counts, over
  // contacts(k), how many list j.
  Relation listers;
  for (const auto& [z, list] : log.contacts) {
    for (const UserId& k : list) listers[k].insert(z);
  }
  std::map<UserId, std::size_t> counts;
  for (const auto& [k, by] : listers) {
    counts.clear();
    for (const UserId& z : by) {
      for (const UserId& j : log.Contacts(z)) {
        if (j != k) ++counts[j];
      }
    }
    for (const auto& [j, n] : counts) {
      snapshot.Set(LayerId::kContactCommon, k, j, Ratio(n, by.size()));
    }
  }
  for (const auto& [k, direct] : log.contacts) {
    counts.clear();
    for (const UserId& z : direct) {
      for (const UserId& j : log.Contacts(z)) {
        if (j != k) ++counts[j];
      }
    }
    for (const auto& [j, n] : counts) {
      snapshot.Set(LayerId::kContactTransitive, k, j, Ratio(n, direct.size()));
    }
  }
  return snapshot;
}

}  // namespace msnrec
