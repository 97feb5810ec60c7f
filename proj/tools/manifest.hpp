#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cycram/serialize.hpp"

namespace cycram::cli {

/// Parameters recorded in the manifest, in registration order. Options marked
/// `always` are recorded with their effective value; the rest only when given.
class ParamRegistry {
 public:
  template <class T>
  CLI::Option* add(CLI::App* app, const std::string& flag, T& var, const std::string& desc,
                   bool always = true) {
    CLI::Option* opt = app->add_option(flag, var, desc);
    if (always) opt->capture_default_str();
    entries_.push_back({app, opt, [&var] { return json(var); }, always});
    return opt;
  }
  CLI::Option* add_flag(CLI::App* app, const std::string& flag, bool& var, const std::string& desc) {
    CLI::Option* opt = app->add_flag(flag, var, desc);
    entries_.push_back({app, opt, [&var] { return json(var); }, true});
    return opt;
  }
  /// Parameters of the subcommand that owns the options.
  json collect(const CLI::App* app) const;

 private:
  struct Entry {
    const CLI::App* app;
    CLI::Option* option;
    std::function<json()> value;
    bool always;
  };
  std::vector<Entry> entries_;
};

struct RunManifest {
  std::string subcommand;
  json params = json::object();
  std::uint64_t seed = 0;
  std::string version;
  json digests = json::object();  // input path -> sha256 hex
  std::string started_at;
  std::string finished_at;

  void add_input(const std::filesystem::path& path);
  json to_json() const;
};

std::string sha256_file(const std::filesystem::path& path);
std::string utc_timestamp(std::chrono::system_clock::time_point t);

/// Seed default: CYCRAM_SEED when set, otherwise 0. InvalidInput on a malformed value.
std::uint64_t default_seed();

}  // namespace cycram::cli
