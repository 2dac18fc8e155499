#include "snlu/log.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

namespace snlu::log {
namespace {

std::shared_ptr<spdlog::logger> logger() {
  static std::once_flag once;
  static std::shared_ptr<spdlog::logger> instance;
  std::call_once(once, [] {
    instance = spdlog::stderr_color_mt("snlu");
    instance->set_pattern("[%l] %v");
    instance->set_level(spdlog::level::err);
  });
  return instance;
}

}  // namespace

void init_from_env() {
  const char* env = std::getenv("SNLU_LOG");
  const std::string level = env ? env : "error";
  if (level == "debug") {
    logger()->set_level(spdlog::level::debug);
  } else if (level == "info") {
    logger()->set_level(spdlog::level::info);
  } else {
    logger()->set_level(spdlog::level::err);
  }
}

void info(std::string_view msg) { logger()->info(msg); }
void debug(std::string_view msg) { logger()->debug(msg); }
void error(std::string_view msg) { logger()->error(msg); }

}  // namespace snlu::log
