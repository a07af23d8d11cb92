#pragma once

#include "gofboot/dataset.hpp"

#include <istream>
#include <string>

namespace gofboot {

/// Reads a numeric CSV: a header of unique names, then rows of finite decimal
/// numbers. LF and CRLF line endings are accepted and blank lines skipped.
/// Errors are DataError naming the offending line and column.
Dataset ingest_csv(const std::string& path);
Dataset parse_csv(std::istream& in, const std::string& source = "<stream>");

}  // namespace gofboot
