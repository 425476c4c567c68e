// cogent: self-programming codelet engine driven by information-theoretic reward
// Copyright 2026 The cogent Authors.
// Licensed under the Apache License, Version 2.0.
#pragma once

#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace cogent {

// Minimal persistent thread pool for batched codelet execution. Tasks must
// not touch shared mutable state; the engine only hands it pure interpreter
// runs and applies their results serially afterwards.
class WorkerPool {
 public:
  explicit WorkerPool(int threads) {
    workers_.reserve(static_cast<std::size_t>(threads));
    for (int i = 0; i < threads; ++i)
      workers_.emplace_back([this] { work_loop(); });
  }

  ~WorkerPool() {
    {
      std::lock_guard lock(mutex_);
      stopping_ = true;
    }
    cv_.notify_all();
    for (auto& w : workers_) w.join();
  }

  WorkerPool(const WorkerPool&) = delete;
  WorkerPool& operator=(const WorkerPool&) = delete;

  // Runs all tasks and blocks until every one has finished.
  void run_batch(std::vector<std::function<void()>>& tasks) {
    if (tasks.empty()) return;
    {
      std::lock_guard lock(mutex_);
      batch_ = &tasks;
      next_task_ = 0;
      done_count_ = 0;
    }
    cv_.notify_all();
    std::unique_lock lock(mutex_);
    done_cv_.wait(lock, [&] { return done_count_ == tasks.size(); });
    batch_ = nullptr;
  }

 private:
  void work_loop() {
    while (true) {
      std::size_t index;
      {
        std::unique_lock lock(mutex_);
        cv_.wait(lock, [&] {
          return stopping_ || (batch_ && next_task_ < batch_->size());
        });
        if (stopping_) return;
        index = next_task_++;
      }
      (*batch_)[index]();
      {
        std::lock_guard lock(mutex_);
        ++done_count_;
      }
      done_cv_.notify_one();
    }
  }

  std::vector<std::thread> workers_;
  std::mutex mutex_;
  std::condition_variable cv_;
  std::condition_variable done_cv_;
  std::vector<std::function<void()>>* batch_ = nullptr;
  std::size_t next_task_ = 0;
  std::size_t done_count_ = 0;
  bool stopping_ = false;
};

}  // namespace cogent
