#include "ucbs/thread_pool.hpp"

#include <cstdlib>
#include <string>

namespace ucbs {

ThreadPool::ThreadPool(unsigned threads) {
  if (threads == 0) threads = 1;
  for (unsigned i = 0; i + 1 < threads; ++i) {
    workers_.emplace_back([this] { worker_loop(); });
  }
}

ThreadPool::~ThreadPool() {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    stop_ = true;
  }
  work_cv_.notify_all();
  for (auto& w : workers_) w.join();
}

void ThreadPool::worker_loop() {
  for (;;) {
    std::unique_lock<std::mutex> lock(mutex_);
    work_cv_.wait(lock, [this] {
      return stop_ || (has_job_ && job_.next < job_.end);
    });
    if (stop_) return;
    const std::size_t lo = job_.next;
    const std::size_t hi = std::min(lo + job_.chunk, job_.end);
    job_.next = hi;
    ++job_.in_flight;
    const auto* body = job_.body;
    const std::size_t chunk_index = (lo - job_.begin) / job_.chunk;
    lock.unlock();

    (*body)(lo, hi, chunk_index);

    lock.lock();
    --job_.in_flight;
    if (job_.next >= job_.end && job_.in_flight == 0) done_cv_.notify_all();
  }
}

bool ThreadPool::run_one_chunk() {
  std::size_t lo, hi, chunk_index;
  const std::function<void(std::size_t, std::size_t, std::size_t)>* body;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!has_job_ || job_.next >= job_.end) return false;
    lo = job_.next;
    hi = std::min(lo + job_.chunk, job_.end);
    job_.next = hi;
    ++job_.in_flight;
    body = job_.body;
    chunk_index = (lo - job_.begin) / job_.chunk;
  }
  (*body)(lo, hi, chunk_index);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    --job_.in_flight;
    if (job_.next >= job_.end && job_.in_flight == 0) done_cv_.notify_all();
  }
  return true;
}

void ThreadPool::parallel_for(
    std::size_t begin, std::size_t end, std::size_t chunk,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  if (begin >= end) return;
  if (chunk == 0) chunk = 1;

  if (workers_.empty() || end - begin <= chunk) {
    std::size_t chunk_index = 0;
    for (std::size_t lo = begin; lo < end; lo += chunk, ++chunk_index) {
      body(lo, std::min(lo + chunk, end), chunk_index);
    }
    return;
  }

  {
    std::lock_guard<std::mutex> lock(mutex_);
    job_ = Job{begin, end, chunk, begin, 0, &body};
    has_job_ = true;
  }
  work_cv_.notify_all();

  // The calling thread works too.
  while (run_one_chunk()) {
  }

  std::unique_lock<std::mutex> lock(mutex_);
  done_cv_.wait(lock, [this] { return job_.next >= job_.end && job_.in_flight == 0; });
  has_job_ = false;
}

ThreadPool& ThreadPool::global() {
  static ThreadPool pool([] {
    if (const char* env = std::getenv("UCBS_THREADS")) {
      const long n = std::strtol(env, nullptr, 10);
      if (n >= 1) return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1u : hw;
  }());
  return pool;
}

}  // namespace ucbs
