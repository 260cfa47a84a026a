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

#ifndef MSNREC_LOG_IO_H_
#define MSNREC_LOG_IO_H_

#include <istream>
#include <string>
#include <string_view>

#include "msnrec/interaction_log.h"

namespace msnrec {

// Parses the line-oriented log format:
//
//   user <uid>
//   authored <uid> <object-id>
//   tag <uid> <tag-id>
//   group <uid> <group-id>
//   favourite <uid> <object-id>
//   opinion <uid> <object-id>
//   contact <uid> <uid>
//   block <uid> <uid>
//
// Blank lines and text after '#' are ignored. A user must be declared
// before it is referenced; everything else is order independent and
// duplicates are idempotent. Throws ParseError carrying the line number.
InteractionLog ParseLog(std::istream& in);
InteractionLog ParseLog(std::string_view text);

// Canonical text form: users first, then each relation in a fixed order,
// entries sorted. ParseLog(SerializeLog(log)) == log for any valid log.
std::string SerializeLog(const InteractionLog& log);

}  // namespace msnrec

#endif  // MSNREC_LOG_IO_H_
