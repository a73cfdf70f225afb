#pragma once

#include "hwc/builders.hpp"
#include "hwc/report.hpp"

namespace hwc {

struct PipelineOptions {
  int d = -1;  // default N
  uint64_t seed = 0;
};

struct CommandResult {
  bool ok = true;
  Json results;
};

CommandResult run_validate(const BuiltAlgebra& B, const PipelineOptions& o);
CommandResult run_core(const BuiltAlgebra& B, const PipelineOptions& o);
CommandResult run_celldatum(const BuiltAlgebra& B, const PipelineOptions& o);
CommandResult run_matrices(const BuiltAlgebra& B, const PipelineOptions& o);
CommandResult run_cover(const BuiltAlgebra& B, const PipelineOptions& o);
CommandResult run_extable(const BuiltAlgebra& B, const PipelineOptions& o);
CommandResult run_all(const BuiltAlgebra& B, const PipelineOptions& o);

const std::vector<std::string>& command_names();
CommandResult run_command(const std::string& name, const BuiltAlgebra& B, const PipelineOptions& o);
// full report; the input hash covers the canonical spec text of B and the options
Json command_report(const std::string& name, const BuiltAlgebra& B, const std::string& source, const PipelineOptions& o);

}  // namespace hwc
