// include/tse/log.h
//
// Copyright 2026  The tse authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSE_LOG_H_
#define TSE_LOG_H_

#include <sstream>
#include <string>

namespace tse {

enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Active level comes from the TSE_LOG environment variable
// (error|warn|info|debug), default info.
LogLevel log_level();
void log_line(LogLevel level, const std::string& msg);

namespace internal {
class LogStream {
 public:
  explicit LogStream(LogLevel level) : level_(level) {}
  ~LogStream() { log_line(level_, os_.str()); }
  template <typename T>
  LogStream& operator<<(const T& v) {
    os_ << v;
    return *this;
  }

 private:
  LogLevel level_;
  std::ostringstream os_;
};
}  // namespace internal

}  // namespace tse

#define TSE_LOG(level) \
  if (tse::log_level() >= tse::LogLevel::level) tse::internal::LogStream(tse::LogLevel::level)

#endif  // TSE_LOG_H_
