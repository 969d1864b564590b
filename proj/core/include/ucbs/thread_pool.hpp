#pragma once

#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace ucbs {

// Shared worker pool for data-parallel loops.
//
// parallel_for splits [begin, end) into fixed-size chunks and hands each
// chunk to one worker. A result element is only ever written by the chunk
// that owns it, and callers reduce per-chunk partials in chunk order, so
// outputs do not depend on the number of threads. UCBS_THREADS caps the
// global pool.
class ThreadPool {
 public:
  explicit ThreadPool(unsigned threads);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  unsigned thread_count() const { return static_cast<unsigned>(workers_.size()) + 1; }

  // body(lo, hi, chunk_index) is invoked once per chunk; chunk_index is
  // (lo - begin) / chunk.
  void parallel_for(std::size_t begin, std::size_t end, std::size_t chunk,
                    const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

  // Pool sized from UCBS_THREADS (or hardware concurrency).
  static ThreadPool& global();

 private:
  struct Job {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t chunk = 1;
    std::size_t next = 0;       // next chunk start, under mutex
    std::size_t in_flight = 0;  // chunks currently executing
    const std::function<void(std::size_t, std::size_t, std::size_t)>* body = nullptr;
  };

  void worker_loop();
  bool run_one_chunk();  // returns false if no work was available

  std::vector<std::thread> workers_;
  std::mutex mutex_;
  std::condition_variable work_cv_;
  std::condition_variable done_cv_;
  Job job_;
  bool has_job_ = false;
  bool stop_ = false;
};

}  // namespace ucbs
