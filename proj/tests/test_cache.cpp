#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "pcv/errors.hpp"
#include "pcv/table_cache.hpp"
#include "test_support.hpp"

using namespace pcv;

TEST_SUITE_BEGIN("cache");

namespace {

std::filesystem::path temp_file(const char* tag) {
  return std::filesystem::temp_directory_path() /
         (std::string("pcv_test_") + tag + "_" + std::to_string(::getpid()) +
          ".pcv");
}

struct FileGuard {
  std::filesystem::path p;
  ~FileGuard() { std::filesystem::remove(p); }
};

}  // namespace

TEST_CASE("round trip preserves all kernel answers") {
  const auto path = temp_file("roundtrip");
  FileGuard guard{path};
  auto t = PrimeTables::build(300'000);
  save_tables(t, path);
  auto back = load_tables(path);
  CHECK(back.limit() == t.limit());
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 10'000; ++i) {
    const u64 x = rng() % 300'001;
    CHECK(back.prime_count(x) == t.prime_count(x));
    CHECK(back.is_prime(x) == t.is_prime(x));
    if (x >= 2) {
      CHECK(back.twin_pair_count_upper(x) == t.twin_pair_count_upper(x));
      CHECK(back.squarefree_count(x) == t.squarefree_count(x));
      CHECK(back.gaussian_ideal_count(x) == t.gaussian_ideal_count(x));
      if (2 * x + 1 <= 300'000)
        CHECK(back.sophie_germain_count(x) == t.sophie_germain_count(x));
    }
  }
  for (u64 i = 1; i <= 1'000; ++i) CHECK(back.nth_prime(i) == t.nth_prime(i));
  CHECK(tables_checksum(back) == tables_checksum(t));
}

TEST_CASE("limit 2 edge case survives the round trip") {
  const auto path = temp_file("tiny");
  FileGuard guard{path};
  auto t = PrimeTables::build(2);
  save_tables(t, path);
  auto back = load_tables(path);
  CHECK(back.prime_count(2) == 1);
  CHECK(back.prime_count(0) == 0);
}

TEST_CASE("corrupted magic is rejected, naming the file") {
  const auto path = temp_file("magic");
  FileGuard guard{path};
  save_tables(PrimeTables::build(10'000), path);
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(0);
    f.write("XXXX", 4);
  }
  try {
    load_tables(path);
    FAIL("expected a load error");
  } catch (const ResourceError& e) {
    CHECK(std::string(e.what()).find(path.string()) != std::string::npos);
  }
}

TEST_CASE("flipped payload bit fails the checksum") {
  const auto path = temp_file("crc");
  FileGuard guard{path};
  save_tables(PrimeTables::build(10'000), path);
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(40);
    char b;
    f.seekg(40);
    f.read(&b, 1);
    b ^= 0x10;
    f.seekp(40);
    f.write(&b, 1);
  }
  CHECK_THROWS_AS(load_tables(path), ResourceError);
}

TEST_CASE("unsupported version byte is rejected") {
  const auto path = temp_file("version");
  FileGuard guard{path};
  save_tables(PrimeTables::build(10'000), path);
  {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(4);
    const char v = 0x02;
    f.write(&v, 1);
  }
  CHECK_THROWS_AS(load_tables(path), ResourceError);
}

TEST_CASE("truncated file is rejected") {
  const auto path = temp_file("trunc");
  FileGuard guard{path};
  save_tables(PrimeTables::build(100'000), path);
  std::filesystem::resize_file(path, std::filesystem::file_size(path) / 2);
  CHECK_THROWS_AS(load_tables(path), ResourceError);
}

TEST_CASE("missing file is an error") {
  CHECK_THROWS_AS(load_tables("/nonexistent/pcv.cache"), ResourceError);
}

TEST_SUITE_END();
