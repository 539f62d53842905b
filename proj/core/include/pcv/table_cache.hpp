#pragma once

#include <filesystem>

#include "pcv/prime_tables.hpp"

namespace pcv {

// Binary sieve cache, layout "PCV1":
//   magic "PCV1" (4 bytes)
//   format version (1 byte, 0x01)
//   limit (8 bytes little-endian)
//   block size exponent (1 byte, 16)
//   composite bitmap for odd integers 3..limit, LSB-first within bytes
//   pi checkpoints, one 8-byte little-endian count per block
//   CRC-32 of all preceding bytes (4 bytes little-endian)
// Loading rejects mismatched magic, version, block exponent or checksum.
void save_tables(const PrimeTables& tables, const std::filesystem::path& path);
PrimeTables load_tables(const std::filesystem::path& path);

// Checksum of the serialized form without touching the filesystem; used as
// the kernel fingerprint in checkpoints.
std::uint32_t tables_checksum(const PrimeTables& tables);

}  // namespace pcv
