#include "pcv/table_cache.hpp"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <vector>

#include "pcv/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "PCV1 serialization assumes a little-endian host");

namespace pcv {

namespace {

constexpr char kMagic[4] = {'P', 'C', 'V', '1'};
constexpr std::uint8_t kVersion = 0x01;

void put_u64_le(std::vector<std::uint8_t>& out, u64 v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

u64 bitmap_bytes(const PrimeTables& t) { return (t.odd_bit_count() + 7) / 8; }

std::vector<std::uint8_t> header_bytes(const PrimeTables& t) {
  std::vector<std::uint8_t> h;
  h.insert(h.end(), kMagic, kMagic + 4);
  h.push_back(kVersion);
  put_u64_le(h, t.limit());
  h.push_back(static_cast<std::uint8_t>(PrimeTables::kBlockBits));
  return h;
}

std::vector<std::uint8_t> checkpoint_bytes(const PrimeTables& t) {
  std::vector<std::uint8_t> c;
  c.reserve(t.block_counts().size() * 8);
  for (u64 v : t.block_counts()) put_u64_le(c, v);
  return c;
}

}  // namespace

std::uint32_t tables_checksum(const PrimeTables& t) {
  uLong crc = crc32(0L, Z_NULL, 0);
  auto h = header_bytes(t);
  crc = crc32(crc, h.data(), static_cast<uInt>(h.size()));
  const auto* bytes =
      reinterpret_cast<const Bytef*>(t.composite_words().data());
  u64 remaining = bitmap_bytes(t);
  while (remaining > 0) {
    uInt chunk = static_cast<uInt>(std::min<u64>(remaining, 1u << 30));
    crc = crc32(crc, bytes, chunk);
    bytes += chunk;
    remaining -= chunk;
  }
  auto c = checkpoint_bytes(t);
  crc = crc32(crc, c.data(), static_cast<uInt>(c.size()));
  return static_cast<std::uint32_t>(crc);
}

void save_tables(const PrimeTables& t, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw ResourceError("cannot open cache file for writing: " + path.string());
  auto h = header_bytes(t);
  out.write(reinterpret_cast<const char*>(h.data()),
            static_cast<std::streamsize>(h.size()));
  out.write(reinterpret_cast<const char*>(t.composite_words().data()),
            static_cast<std::streamsize>(bitmap_bytes(t)));
  auto c = checkpoint_bytes(t);
  out.write(reinterpret_cast<const char*>(c.data()),
            static_cast<std::streamsize>(c.size()));
  std::uint32_t crc = tables_checksum(t);
  std::uint8_t crc_le[4];
  for (int i = 0; i < 4; ++i) crc_le[i] = static_cast<std::uint8_t>(crc >> (8 * i));
  out.write(reinterpret_cast<const char*>(crc_le), 4);
  if (!out)
    throw ResourceError("short write while saving cache file: " + path.string());
}

PrimeTables load_tables(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot open cache file: " + path.string());

  std::uint8_t head[14];
  in.read(reinterpret_cast<char*>(head), sizeof head);
  if (!in || std::memcmp(head, kMagic, 4) != 0)
    throw ResourceError("not a PCV1 cache file: " + path.string());
  if (head[4] != kVersion)
    throw ResourceError("unsupported cache version in " + path.string());
  u64 limit = 0;
  for (int i = 0; i < 8; ++i) limit |= static_cast<u64>(head[5 + i]) << (8 * i);
  if (head[13] != PrimeTables::kBlockBits)
    throw ResourceError("unsupported block size exponent in " + path.string());
  if (limit < 2)
    throw ResourceError("corrupt limit field in " + path.string());

  const u64 odd_bits = limit >= 3 ? (limit - 3) / 2 + 1 : 0;
  const u64 nbytes = (odd_bits + 7) / 8;
  const u64 nblocks = (limit >> PrimeTables::kBlockBits) + 1;

  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, head, sizeof head);

  std::vector<u64> words((odd_bits + 63) / 64, 0);
  in.read(reinterpret_cast<char*>(words.data()),
          static_cast<std::streamsize>(nbytes));
  if (!in) throw ResourceError("truncated cache bitmap in " + path.string());
  {
    const auto* bytes = reinterpret_cast<const Bytef*>(words.data());
    u64 remaining = nbytes;
    while (remaining > 0) {
      uInt chunk = static_cast<uInt>(std::min<u64>(remaining, 1u << 30));
      crc = crc32(crc, bytes, chunk);
      bytes += chunk;
      remaining -= chunk;
    }
  }

  std::vector<std::uint8_t> cp(nblocks * 8);
  in.read(reinterpret_cast<char*>(cp.data()),
          static_cast<std::streamsize>(cp.size()));
  if (!in) throw ResourceError("truncated pi checkpoints in " + path.string());
  crc = crc32(crc, cp.data(), static_cast<uInt>(cp.size()));

  std::uint8_t crc_le[4];
  in.read(reinterpret_cast<char*>(crc_le), 4);
  if (!in) throw ResourceError("missing checksum in " + path.string());
  std::uint32_t stored = 0;
  for (int i = 0; i < 4; ++i) stored |= static_cast<std::uint32_t>(crc_le[i]) << (8 * i);
  if (stored != static_cast<std::uint32_t>(crc))
    throw ResourceError("checksum mismatch in cache file: " + path.string());

  std::vector<u64> blocks(nblocks);
  for (u64 b = 0; b < nblocks; ++b) {
    u64 v = 0;
    for (int i = 0; i < 8; ++i)
      v |= static_cast<u64>(cp[b * 8 + static_cast<u64>(i)]) << (8 * i);
    blocks[b] = v;
  }
  return PrimeTables::adopt(limit, std::move(words), std::move(blocks));
}

}  // namespace pcv
