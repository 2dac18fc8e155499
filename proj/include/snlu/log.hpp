#pragma once

#include <string_view>

namespace snlu::log {

/// Reads SNLU_LOG (error|info|debug) once; defaults to error.
void init_from_env();

void info(std::string_view msg);
void debug(std::string_view msg);
void error(std::string_view msg);

}  // namespace snlu::log
