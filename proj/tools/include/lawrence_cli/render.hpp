// Copyright 2026 The Authors.
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


#ifndef LAWRENCE_CLI_RENDER_HPP_
#define LAWRENCE_CLI_RENDER_HPP_

#include <string>

#include "lawrence_cli/document.hpp"

namespace lawrence::cli {

/// Aligned plain-text view of a document. Keys with a "<key>_text" sibling
/// show the sibling's value; arrays of flat objects become tables.
/// `color` wraps pass/fail/skipped status values in ANSI colors.
std::string render_text(const Json& doc, bool color = false);

/// The text form of a scalar or an array of scalars, as render_text
/// prints it.
std::string render_leaf(const Json& v);

}  // namespace lawrence::cli

#endif  // LAWRENCE_CLI_RENDER_HPP_
