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

#include "msnrec/interaction_log.h"

#include "msnrec/errors.h"

namespace msnrec {
namespace {

const IdSet& EmptySet() {
  static const IdSet kEmpty;
  return kEmpty;
}

void CheckSubjects(const InteractionLog& log, const Relation& relation,
                   const char* name) {
  for (const auto& [user, items] : relation) {
    if (!log.HasUser(user)) {
      throw ValidationError(std::string(name) + ": unknown user '" + user +
                            "'");
    }
    if (items.empty()) {
      throw ValidationError(std::string(name) + ": empty entry for '" + user +
                            "'");
    }
  }
}

void CheckUserTargets(const InteractionLog& log, const Relation& relation,
                      const char* name) {
  for (const auto& [user, targets] : relation) {
    for (const UserId& target : targets) {
      if (target == user) {
        throw ValidationError(std::string(name) + ": '" + user +
                              "' references itself");
      }
      if (!log.HasUser(target)) {
        throw ValidationError(std::string(name) + " " + user +
                              ": unknown user '" + target + "'");
      }
    }
  }
}

void MergeRelation(Relation& target, const Relation& source) {
  for (const auto& [user, items] : source) {
    if (items.empty()) continue;
    target[user].insert(items.begin(), items.end());
  }
}

}  // namespace

const IdSet& Lookup(const Relation& relation, const UserId& u) {
  auto it = relation.find(u);
  return it == relation.end() ? EmptySet() : it->second;
}

const IdSet& InteractionLog::Authored(const UserId& u) const {
  return Lookup(authored, u);
}
const IdSet& InteractionLog::TagsUsed(const UserId& u) const {
  return Lookup(tags_used, u);
}
const IdSet& InteractionLog::Groups(const UserId& u) const {
  return Lookup(groups, u);
}
const IdSet& InteractionLog::Favourites(const UserId& u) const {
  return Lookup(favourites, u);
}
const IdSet& InteractionLog::Opinions(const UserId& u) const {
  return Lookup(opinions, u);
}
const IdSet& InteractionLog::Contacts(const UserId& u) const {
  return Lookup(contacts, u);
}
const IdSet& InteractionLog::Blocked(const UserId& u) const {
  return Lookup(blocked, u);
}

void InteractionLog::Validate() const {
  for (const UserId& u : users) {
    if (u.empty()) throw ValidationError("users: empty user id");
  }
  CheckSubjects(*this, authored, "authored");
  CheckSubjects(*this, tags_used, "tag");
  CheckSubjects(*this, groups, "group");
  CheckSubjects(*this, favourites, "favourite");
  CheckSubjects(*this, opinions, "opinion");
  CheckSubjects(*this, contacts, "contact");
  CheckSubjects(*this, blocked, "block");
  CheckUserTargets(*this, contacts, "contact");
  CheckUserTargets(*this, blocked, "block");

  IdSet published;
  for (const auto& [user, objects] : authored) {
    published.insert(objects.begin(), objects.end());
  }
  auto check_objects = [&](const Relation& relation, const char* name) {
    for (const auto& [user, objects] : relation) {
      for (const ObjectId& o : objects) {
        if (!published.contains(o)) {
          throw ValidationError(std::string(name) + " " + user +
                                ": object '" + o + "' has no author");
        }
      }
    }
  };
  check_objects(favourites, "favourite");
  check_objects(opinions, "opinion");
}

std::size_t InteractionLog::FactCount() const {
  std::size_t n = 0;
  for (const Relation* r : {&authored, &tags_used, &groups, &favourites,
                            &opinions, &contacts, &blocked}) {
    for (const auto& [user, items] : *r) n += items.size();
  }
  return n;
}

void MergeInto(InteractionLog& target, const InteractionLog& source) {
  target.users.insert(source.users.begin(), source.users.end());
  MergeRelation(target.authored, source.authored);
  MergeRelation(target.tags_used, source.tags_used);
  MergeRelation(target.groups, source.groups);
  MergeRelation(target.favourites, source.favourites);
  MergeRelation(target.opinions, source.opinions);
  MergeRelation(target.contacts, source.contacts);
  MergeRelation(target.blocked, source.blocked);
}

}  // namespace msnrec
