#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsey::cli {

// Exit contract: 0 claim verified / decision computed / all checks pass,
// 1 claim refuted or a check failed (evidence printed), 2 usage or input
// error, 3 search limits exceeded.  Human-oriented text by default;
// --format json is the stable machine surface.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ramsey::cli
