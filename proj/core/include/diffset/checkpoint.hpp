#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffset {

// Binary layout, all integers little-endian:
//   header : magic[4] | version u8 | parameter u32 | flags u8 | chunk_count u32 | bins u32
//   record : chunk u64 | counts u64 * bins | fnv1a64(chunk, counts) u64
// Records are appended as chunks finish, in completion order.

inline constexpr std::uint8_t kCheckpointVersion = 1;
inline constexpr std::array<char, 4> kDistMagic{'D', 'S', 'L', 'B'};
inline constexpr std::array<char, 4> kFringeMagic{'D', 'S', 'F', 'R'};

struct CheckpointHeader {
    std::array<char, 4> magic{};
    std::uint8_t version = kCheckpointVersion;
    std::uint32_t parameter = 0;  // n for distributions, m for fringe counts
    std::uint8_t flags = 0;       // bit 0: conditioned
    std::uint32_t chunk_count = 0;
    std::uint32_t bins = 0;

    friend bool operator==(const CheckpointHeader&, const CheckpointHeader&) = default;
};

class CheckpointError : public std::runtime_error {
public:
    CheckpointError(const std::string& what, std::optional<std::uint64_t> chunk = std::nullopt)
        : std::runtime_error(what), chunk_(chunk) {}
    std::optional<std::uint64_t> chunk() const noexcept { return chunk_; }

private:
    std::optional<std::uint64_t> chunk_;
};

struct CheckpointContents {
    CheckpointHeader header;
    std::map<std::uint64_t, std::vector<std::uint64_t>> chunks;
    /// Bytes covered by the header and intact records; a torn trailing record
    /// (interrupted append) lies beyond this offset and is ignored.
    std::uintmax_t valid_bytes = 0;
};

/// Parses a checkpoint. Throws CheckpointError (carrying the chunk id when it
/// is known) on a bad magic, version, checksum, duplicate or out-of-range chunk.
CheckpointContents read_checkpoint(const std::filesystem::path& path);

std::uint64_t fnv1a64(std::span<const unsigned char> bytes,
                      std::uint64_t seed = 0xcbf29ce484222325ULL) noexcept;

/// Single writer shared by all workers; append() is serialized internally.
class CheckpointWriter {
public:
    /// Opens `path` for appending. An existing file must carry `header` and
    /// its intact chunks are returned through `resumed`; a torn tail is cut
    /// off. A missing file is created atomically (temp file + rename).
    CheckpointWriter(std::filesystem::path path, const CheckpointHeader& header,
                     CheckpointContents& resumed);
    ~CheckpointWriter();
    CheckpointWriter(const CheckpointWriter&) = delete;
    CheckpointWriter& operator=(const CheckpointWriter&) = delete;

    /// Appends one record. If the write fails part way (e.g. the disk is
    /// full) the file is truncated back to its last intact record and
    /// CheckpointError is thrown.
    void append(std::uint64_t chunk, std::span<const std::uint64_t> counts);

    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
    std::uint32_t bins_;
    int fd_ = -1;
    std::uintmax_t good_size_ = 0;
    std::mutex mutex_;
};

std::vector<unsigned char> encode_header(const CheckpointHeader& header);

}  // namespace diffset
