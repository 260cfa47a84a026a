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

#include "msnrec/log_io.h"

#include <map>
#include <sstream>
#include <vector>

#include "msnrec/errors.h"

namespace msnrec {
namespace {

std::vector<std::string_view> Tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() &&
           (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
      ++pos;
    }
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
           line[end] != '\r') {
      ++end;
    }
    tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

struct RecordSpec {
  std::string_view keyword;
  Relation InteractionLog::*relation;
  bool target_is_user;
  bool target_is_object;
};

constexpr RecordSpec kRecords[] = {
    {"authored", &InteractionLog::authored, false, false},
    {"tag", &InteractionLog::tags_used, false, false},
    {"group", &InteractionLog::groups, false, false},
    {"favourite", &InteractionLog::favourites, false, true},
    {"opinion", &InteractionLog::opinions, false, true},
    {"contact", &InteractionLog::contacts, true, false},
    {"block", &InteractionLog::blocked, true, false},
};

}  // namespace

InteractionLog ParseLog(std::istream& in) {
  InteractionLog log;
  // First line referencing each object through favourite/opinion, for
  // reporting objects that nobody authored.
  std::map<ObjectId, std::size_t> referenced_at;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = Tokenize(line);
    if (tokens.empty()) continue;
    const std::string_view keyword = tokens[0];

    if (keyword == "user") {
      if (tokens.size() != 2) {
        throw ParseError(line_no, "expected 'user <uid>'");
      }
      log.users.emplace(tokens[1]);
      continue;
    }

    const RecordSpec* spec = nullptr;
    for (const RecordSpec& r : kRecords) {
      if (r.keyword == keyword) spec = &r;
    }
    if (spec == nullptr) {
      throw ParseError(line_no,
                       "unknown record kind '" + std::string(keyword) + "'");
    }
    if (tokens.size() != 3) {
      throw ParseError(line_no, "expected '" + std::string(keyword) +
                                    " <uid> <id>'");
    }
    const UserId subject(tokens[1]);
    const std::string object(tokens[2]);
    if (!log.HasUser(subject)) {
      throw ParseError(line_no, "undeclared user '" + subject + "'");
    }
    if (spec->target_is_user) {
      if (!log.HasUser(object)) {
        throw ParseError(line_no, "undeclared user '" + object + "'");
      }
      if (object == subject) {
        throw ParseError(line_no, std::string(keyword) + " of '" + subject +
                                      "' to itself");
      }
    }
    if (spec->target_is_object) referenced_at.try_emplace(object, line_no);
    (log.*(spec->relation))[subject].insert(object);
  }

  IdSet published;
  for (const auto& [user, objects] : log.authored) {
    published.insert(objects.begin(), objects.end());
  }
  for (const auto& [object, at] : referenced_at) {
    if (!published.contains(object)) {
      throw ParseError(at, "object '" + object + "' is never authored");
    }
  }
  return log;
}

InteractionLog ParseLog(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ParseLog(in);
}

std::string SerializeLog(const InteractionLog& log) {
  std::ostringstream out;
  for (const UserId& u : log.users) out << "user " << u << '\n';
  for (const RecordSpec& spec : kRecords) {
    for (const auto& [user, items] : log.*(spec.relation)) {
      for (const auto& item : items) {
        out << spec.keyword << ' ' << user << ' ' << item << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace msnrec
