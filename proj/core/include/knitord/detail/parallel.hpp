#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "knitord/report.hpp"

namespace knitord::detail {

// Evaluates fn(i) for i in [0, n); fn returns an optional Violation whose
// index is filled in by this harness as rep.checked + i. Violations come out
// sorted by index, so the result is independent of the worker count.
// Contiguous chunks per worker; exceptions are rethrown after join.
template <class Fn>
void run_check(VerificationReport& rep, std::uint64_t n, int workers, Fn&& fn) {
  const std::uint64_t base = rep.checked;
  rep.checked += n;
  if (n == 0) return;
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > n) workers = static_cast<int>(n);

  std::vector<std::vector<Violation>> local(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  const std::uint64_t chunk = (n + workers - 1) / workers;

  auto body = [&](int w) {
    const std::uint64_t begin = chunk * w;
    const std::uint64_t end = begin + chunk < n ? begin + chunk : n;
    try {
      for (std::uint64_t i = begin; i < end; ++i) {
        if (auto v = fn(i)) {
          v->index = base + i;
          local[w].push_back(std::move(*v));
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    body(0);
  } else {
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) threads.emplace_back(body, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& vs : local) {
    rep.violations.insert(rep.violations.end(),
                          std::make_move_iterator(vs.begin()),
                          std::make_move_iterator(vs.end()));
  }
}

}  // namespace knitord::detail
