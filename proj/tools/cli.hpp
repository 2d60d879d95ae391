#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wongseq::cli {

// Exit codes: 0 success, 1 malformed input, 2 algorithmic failure
// (fail, inconclusive, failed_po, verification FAIL, budget refusal).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wongseq::cli
