#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "erdos/error.hpp"

namespace erdos {

/// Environment variable consulted when a caller asks for the default worker
/// count (workers == 0).
inline constexpr const char* kWorkersEnv = "ERDOS_LAB_WORKERS";

inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::InvalidArgument, std::string(kWorkersEnv) + " must be an integer in [1, 1024]");
  }
  return 1;
}

/// Half-open row range [begin, end).
struct RowRange {
  std::size_t begin;
  std::size_t end;
};

/// Splits rows 0..rows-1 into at most `parts` contiguous ranges with roughly
/// equal total weight. Ranges come back in row order.
template <class Weight>
std::vector<RowRange> split_rows(std::size_t rows, unsigned parts, Weight weight) {
  std::vector<RowRange> out;
  if (rows == 0) return out;
  parts = std::max(1u, parts);
  double total = 0;
  for (std::size_t i = 0; i < rows; ++i) total += static_cast<double>(weight(i));
  const double target = total / parts;
  std::size_t begin = 0;
  double acc = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    acc += static_cast<double>(weight(i));
    if (out.size() + 1 < parts && acc >= target * static_cast<double>(out.size() + 1)) {
      out.push_back({begin, i + 1});
      begin = i + 1;
    }
  }
  if (begin < rows) out.push_back({begin, rows});
  return out;
}

/// Runs task(chunk_index, range) for every range, on up to ranges.size()
/// threads. The first exception thrown by any task is rethrown here.
template <class Task>
void run_chunks(const std::vector<RowRange>& ranges, Task task) {
  if (ranges.size() <= 1) {
    for (std::size_t c = 0; c < ranges.size(); ++c) task(c, ranges[c]);
    return;
  }
  std::vector<std::exception_ptr> errors(ranges.size());
  {
    std::vector<std::jthread> threads;
    threads.reserve(ranges.size());
    for (std::size_t c = 0; c < ranges.size(); ++c) {
      threads.emplace_back([&, c] {
        try {
          task(c, ranges[c]);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace erdos
