#pragma once

// stderr diagnostics gated by the MONTESINOS_LOG environment variable
// ("debug" enables everything, "info" the coarse messages, unset = quiet).

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

namespace montesinos {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

inline LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("MONTESINOS_LOG");
        if (!env) return LogLevel::Quiet;
        std::string v(env);
        if (v == "debug") return LogLevel::Debug;
        if (v == "info") return LogLevel::Info;
        return LogLevel::Quiet;
    }();
    return level;
}

} // namespace montesinos

#define MONTESINOS_LOG_INFO(expr)                                              \
    do {                                                                       \
        if (::montesinos::log_level() >= ::montesinos::LogLevel::Info) {       \
            std::ostringstream oss__;                                          \
            oss__ << expr;                                                     \
            std::cerr << "[montesinos] " << oss__.str() << "\n";               \
        }                                                                      \
    } while (0)

#define MONTESINOS_LOG_DEBUG(expr)                                             \
    do {                                                                       \
        if (::montesinos::log_level() >= ::montesinos::LogLevel::Debug) {      \
            std::ostringstream oss__;                                          \
            oss__ << expr;                                                     \
            std::cerr << "[montesinos] " << oss__.str() << "\n";               \
        }                                                                      \
    } while (0)
