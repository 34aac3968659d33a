#pragma once

#include <fcntl.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aris/error.hpp"

namespace aris {

namespace stdfs = std::filesystem;

inline std::string read_file(const stdfs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::io_failure, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::optional<std::string> read_file_if(const stdfs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void ensure_dir(const stdfs::path& dir) {
  std::error_code ec;
  stdfs::create_directories(dir, ec);
  if (ec) raise(Errc::io_failure, "cannot create " + dir.string() + ": " + ec.message());
}

// Write-then-rename. A crash mid-write leaves a temp file, never a truncated
// target; rename on the same filesystem is atomic.
inline void write_file_atomic(const stdfs::path& path, std::string_view content) {
  ensure_dir(path.parent_path().empty() ? "." : path.parent_path());
  static std::atomic<uint64_t> counter{0};
  stdfs::path tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid()) + "-" + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(Errc::io_failure, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) raise(Errc::io_failure, "short write to " + tmp.string());
  }
  std::error_code ec;
  stdfs::rename(tmp, path, ec);
  if (ec) {
    stdfs::remove(tmp, ec);
    raise(Errc::io_failure, "cannot rename into " + path.string());
  }
}

// Single write(2) on an O_APPEND descriptor; concurrent appenders cannot
// interleave within one line.
inline void append_line_atomic(const stdfs::path& path, std::string_view line) {
  ensure_dir(path.parent_path().empty() ? "." : path.parent_path());
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) raise(Errc::io_failure, "cannot open " + path.string());
  std::string buf(line);
  buf += '\n';
  ssize_t n = ::write(fd, buf.data(), buf.size());
  ::close(fd);
  if (n != static_cast<ssize_t>(buf.size()))
    raise(Errc::io_failure, "short append to " + path.string());
}

inline std::vector<stdfs::path> list_files(const stdfs::path& dir, std::string_view ext = "") {
  std::vector<stdfs::path> out;
  if (!stdfs::exists(dir)) return out;
  for (const auto& entry : stdfs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (!ext.empty() && entry.path().extension() != ext) continue;
    out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Advisory single-writer lock: an O_EXCL-created file holding the owner pid.
// A lock whose owner is gone is reclaimed; a live owner raises lock_held.
class ProjectLock {
 public:
  ProjectLock() = default;
  explicit ProjectLock(const stdfs::path& lock_path) { acquire(lock_path); }

  ProjectLock(const ProjectLock&) = delete;
  ProjectLock& operator=(const ProjectLock&) = delete;
  ProjectLock(ProjectLock&& other) noexcept { *this = std::move(other); }
  ProjectLock& operator=(ProjectLock&& other) noexcept {
    release();
    path_ = std::move(other.path_);
    held_ = other.held_;
    other.held_ = false;
    return *this;
  }

  ~ProjectLock() { release(); }

  void acquire(const stdfs::path& lock_path) {
    ensure_dir(lock_path.parent_path());
    for (int attempt = 0; attempt < 2; ++attempt) {
      int fd = ::open(lock_path.c_str(), O_WRONLY | O_CREAT | O_EXCL, 0644);
      if (fd >= 0) {
        std::string pid = std::to_string(::getpid());
        [[maybe_unused]] ssize_t n = ::write(fd, pid.data(), pid.size());
        ::close(fd);
        path_ = lock_path;
        held_ = true;
        return;
      }
      auto owner = read_file_if(lock_path);
      if (owner && !owner_alive(*owner)) {
        std::error_code ec;
        stdfs::remove(lock_path, ec);
        continue;  // stale; retry the exclusive create
      }
      raise(Errc::lock_held,
            "project is locked by pid " + (owner ? *owner : std::string("?")) + " (" +
                lock_path.string() + ")");
    }
    raise(Errc::lock_held, "could not acquire " + lock_path.string());
  }

  void release() {
    if (held_) {
      std::error_code ec;
      stdfs::remove(path_, ec);
      held_ = false;
    }
  }

  bool held() const { return held_; }

 private:
  static bool owner_alive(const std::string& pid_text) {
    errno = 0;
    long pid = std::strtol(pid_text.c_str(), nullptr, 10);
    if (pid <= 0) return false;
    return stdfs::exists("/proc/" + std::to_string(pid));
  }

  stdfs::path path_;
  bool held_ = false;
};

}  // namespace aris
