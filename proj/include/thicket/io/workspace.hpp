#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "thicket/classifier/catalogue.hpp"
#include "thicket/io/json_io.hpp"

namespace thicket {

enum class OutputFormat { Json, Text };

/// A command line stored in the workspace, e.g. ["check", "nakayama", "--seed", "7"].
using Task = std::vector<std::string>;

struct Workspace {
  std::shared_ptr<const Catalogue> catalogue;
  std::vector<Task> tasks;
  OutputFormat format = OutputFormat::Json;
};

/// Parses and fully validates a workspace document. Every failure throws
/// InputError with a "source:line:column: path: message" prefix.
Workspace parse_workspace(std::string_view text, const std::string& source = "<input>");
Workspace load_workspace(const std::string& path);

/// Inverse of parse_workspace up to formatting and the prime status field
/// (recomputed on parse).
Json serialize_workspace(const Workspace& ws);

}  // namespace thicket
