#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rost {

/// Exit codes: 0 success or verified, 1 refuted, 2 usage error, 3 not certifiable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rost
