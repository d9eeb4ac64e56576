// Copyright 2026 The Deid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deid/log.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>

namespace deid::log {

namespace {

std::atomic<Level> g_level{Level::WARN};
std::mutex g_mutex;

void emit(const char* prefix, const std::string& message) {
  std::lock_guard<std::mutex> lock(g_mutex);
  std::fprintf(stderr, "[%s] %s\n", prefix, message.c_str());
}

}  // namespace

void set_level(Level level) { g_level.store(level); }
Level level() { return g_level.load(); }

void debug(const std::string& message) {
  if (level() <= Level::DEBUG) emit("debug", message);
}

void info(const std::string& message) {
  if (level() <= Level::INFO) emit("info", message);
}

void warn(const std::string& message) {
  if (level() <= Level::WARN) emit("warn", message);
}

void error(const std::string& message) {
  if (level() <= Level::ERROR) emit("error", message);
}

}  // namespace deid::log
