#include "manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <memory>

#include "cycram/errors.hpp"

namespace cycram::cli {

json ParamRegistry::collect(const CLI::App* app) const {
  json j = json::object();
  for (const auto& e : entries_) {
    if (e.app != app) continue;
    if (!e.always && e.option->count() == 0) continue;
    std::string name = e.option->get_name(false, true);
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    j[name] = e.value();
  }
  return j;
}

void RunManifest::add_input(const std::filesystem::path& path) {
  digests[path.string()] = sha256_file(path);
}

json RunManifest::to_json() const {
  json j;
  j["subcommand"] = subcommand;
  j["params"] = params;
  j["seed"] = seed;
  j["version"] = version;
  j["digests"] = digests;
  j["started_at"] = started_at;
  j["finished_at"] = finished_at;
  return j;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 initialisation failed");
  }
  std::array<char, 1 << 15> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> md;
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), md.data(), &len);
  std::string hex;
  char byte[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", md[i]);
    hex += byte;
  }
  return hex;
}

std::string utc_timestamp(std::chrono::system_clock::time_point t) {
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
  const std::time_t secs = static_cast<std::time_t>(ms / 1000);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%03dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec,
                static_cast<int>(ms % 1000));
  return buf;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("CYCRAM_SEED");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || *env == '-') throw InvalidInput(std::string("CYCRAM_SEED is not an unsigned integer: ") + env);
  return v;
}

}  // namespace cycram::cli
