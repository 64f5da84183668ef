#include "detcount/harness/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>

namespace detcount::harness {

std::vector<ResultRecord> load_cache(const std::string& path) {
  std::ifstream in(path);
  std::vector<ResultRecord> records;
  if (!in) return records;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      records.push_back(parse_record(line));
    } catch (const std::exception& e) {
      throw CacheError(path + ": line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return records;
}

void append_cache(const std::string& path, const std::vector<ResultRecord>& records) {
  if (records.empty()) return;
  std::string payload;
  for (const auto& r : records) {
    payload += to_json_line(r);
    payload += '\n';
  }
  int fd = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) {
    throw std::runtime_error("append_cache: cannot open " + path + ": " +
                             std::strerror(errno));
  }
  if (::flock(fd, LOCK_EX) != 0) {
    int err = errno;
    ::close(fd);
    throw std::runtime_error("append_cache: cannot lock " + path + ": " +
                             std::strerror(err));
  }
  size_t off = 0;
  while (off < payload.size()) {
    ssize_t n = ::write(fd, payload.data() + off, payload.size() - off);
    if (n < 0) {
      int err = errno;
      ::flock(fd, LOCK_UN);
      ::close(fd);
      throw std::runtime_error("append_cache: write failed: " + std::string(std::strerror(err)));
    }
    off += static_cast<size_t>(n);
  }
  ::flock(fd, LOCK_UN);
  ::close(fd);
}

}  // namespace detcount::harness
