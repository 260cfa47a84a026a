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

#ifndef MSNREC_INTERACTION_LOG_H_
#define MSNREC_INTERACTION_LOG_H_

#include <map>
#include <set>
#include <string>

namespace msnrec {

using UserId = std::string;
using ObjectId = std::string;
using TagId = std::string;
using GroupId = std::string;

using IdSet = std::set<std::string>;
using Relation = std::map<UserId, IdSet>;

// The raw facts of a multimedia sharing system. Relations never hold an
// empty set, so two logs with the same facts compare equal.
struct InteractionLog {
  std::set<UserId> users;
  Relation authored;
  Relation tags_used;
  Relation groups;
  Relation favourites;
  Relation opinions;
  Relation contacts;
  Relation blocked;

  bool HasUser(const UserId& u) const { return users.contains(u); }

  // Accessors return an empty set for users without entries.
  const IdSet& Authored(const UserId& u) const;
  const IdSet& TagsUsed(const UserId& u) const;
  const IdSet& Groups(const UserId& u) const;
  const IdSet& Favourites(const UserId& u) const;
  const IdSet& Opinions(const UserId& u) const;
  const IdSet& Contacts(const UserId& u) const;
  const IdSet& Blocked(const UserId& u) const;

  // Throws ValidationError naming the first offending entry.
  void Validate() const;

  // Total number of facts across all relations (users excluded).
  std::size_t FactCount() const;

  bool operator==(const InteractionLog&) const = default;
};

// Set-union of two logs. The result is not validated.
void MergeInto(InteractionLog& target, const InteractionLog& source);

// Looks up `u` in `relation`, returning an empty set if absent.
const IdSet& Lookup(const Relation& relation, const UserId& u);

}  // namespace msnrec

#endif  // MSNREC_INTERACTION_LOG_H_
