// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace entpair {

/// Command dispatch for the entpair tool. `args` excludes the program name.
/// Returns 0 on success, 2 on validation/usage errors, 3 on numerical
/// certification failures. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entpair
