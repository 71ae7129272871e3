#pragma once

#include <filesystem>
#include <random>
#include <string>

#include "spring/harness.hpp"

namespace spring::testing {

namespace fs = std::filesystem;

/// Directory holding the bundled testcase-N.json / .reference fixtures.
inline fs::path fixture_dir() { return fs::path(SPRING_FIXTURE_DIR); }

inline std::string fixture(const std::string& name) {
  return harness::read_file(fixture_dir() / name);
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    std::mt19937_64 gen(rd());
    for (;;) {
      path_ = fs::temp_directory_path() / ("spring-test-" + std::to_string(gen()));
      if (fs::create_directory(path_)) break;
    }
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

/// Copies every bundled testcase input and reference into `dest`.
inline void copy_fixtures(const fs::path& dest) {
  for (const auto& entry : fs::directory_iterator(fixture_dir())) {
    const auto ext = entry.path().extension();
    if (ext == ".json" || ext == ".reference") {
      fs::copy_file(entry.path(), dest / entry.path().filename(),
                    fs::copy_options::overwrite_existing);
    }
  }
}

}  // namespace spring::testing
