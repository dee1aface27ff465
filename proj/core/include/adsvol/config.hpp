#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>

#include "adsvol/common.hpp"

namespace adsvol {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
  int word_radius = 4;
  std::uint64_t budget = 2'000'000;
  double tolerance = 1e-6;
  unsigned threads = 0;  // 0: ADSVOL_THREADS env var, else hardware count
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 0;

  void validate() const {
    if (budget < 1) fail(ErrorKind::InvalidInput, "budget must be >= 1");
    if (!(tolerance > 0.0)) fail(ErrorKind::InvalidInput, "tolerance must be positive");
    if (word_radius < 0) fail(ErrorKind::InvalidInput, "word radius must be >= 0");
  }

  unsigned effective_threads() const {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("ADSVOL_THREADS")) {
      long v = std::strtol(env, nullptr, 10);
      if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
  }
};

}  // namespace adsvol
