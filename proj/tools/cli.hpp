#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cayrec::cli {

/// Runs one cayrec invocation. args excludes the program name. Returns the
/// process exit status: 0 success/pass, 1 fail/stuck/contradiction/non-unique,
/// 2 usage or parse error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace cayrec::cli
