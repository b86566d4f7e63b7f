// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include "isoradix/cache.hpp"

#include <cstring>
#include <fstream>
#include <string>

#include "isoradix/errors.hpp"

namespace isoradix {

namespace {

constexpr char kMagic[] = "ISORADIX1";
constexpr std::size_t kMagicLen = 9;

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(const std::string& in, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[at + i])) << (8 * i);
  return v;
}

}  // namespace

TraceCache::TraceCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_))
    throw UserError("cache directory '" + dir_.string() + "' is not usable: " +
                    (ec ? ec.message() : "not a directory"));
}

std::filesystem::path TraceCache::file_for(const Digest128& key) const { return dir_ / (key.hex() + ".apc"); }

std::optional<CacheEntry> TraceCache::load(const Digest128& key) const {
  const auto path = file_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  in.close();

  const auto quarantine = [&]() -> std::optional<CacheEntry> {
    std::error_code ec;
    std::filesystem::rename(path, path.string() + ".corrupt", ec);
    if (ec) std::filesystem::remove(path, ec);
    return std::nullopt;
  };

  // header + checksum at minimum
  if (bytes.size() < kMagicLen + 8 + 8 + 8) return quarantine();
  if (std::memcmp(bytes.data(), kMagic, kMagicLen) != 0) return quarantine();
  const std::string body = bytes.substr(0, bytes.size() - 8);
  if (fnv1a(body) != get_u64(bytes, bytes.size() - 8)) return quarantine();

  CacheEntry entry;
  entry.curve_key = key;
  entry.B_max = get_u64(bytes, kMagicLen);
  const std::uint64_t count = get_u64(bytes, kMagicLen + 8);
  if (bytes.size() != kMagicLen + 16 + count * 16 + 8) return quarantine();
  entry.rows.reserve(count);
  std::uint64_t prev_p = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    TraceRow row;
    row.p = get_u64(bytes, kMagicLen + 16 + i * 16);
    row.a = static_cast<std::int64_t>(get_u64(bytes, kMagicLen + 16 + i * 16 + 8));
    if (row.p <= prev_p) return quarantine();  // rows must ascend strictly
    prev_p = row.p;
    entry.rows.push_back(row);
  }
  return entry;
}

void TraceCache::store(const CacheEntry& entry) const {
  std::string bytes;
  bytes.reserve(kMagicLen + 16 + entry.rows.size() * 16 + 8);
  bytes.append(kMagic, kMagicLen);
  put_u64(bytes, entry.B_max);
  put_u64(bytes, entry.rows.size());
  for (const TraceRow& row : entry.rows) {
    put_u64(bytes, row.p);
    put_u64(bytes, static_cast<std::uint64_t>(row.a));
  }
  put_u64(bytes, fnv1a(bytes));

  const auto path = file_for(entry.curve_key);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UserError("cannot write cache file '" + tmp + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw UserError("short write to cache file '" + tmp + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw UserError("cannot move cache file into place at '" + path.string() + "': " + ec.message());
}

}  // namespace isoradix
