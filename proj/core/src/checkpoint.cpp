#include "diffset/checkpoint.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <system_error>

namespace diffset {

namespace {

constexpr std::size_t kHeaderBytes = 4 + 1 + 4 + 1 + 4 + 4;

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

std::uint32_t get_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

std::size_t record_bytes(std::uint32_t bins) { return 8 + 8 * static_cast<std::size_t>(bins) + 8; }

std::vector<unsigned char> encode_record(std::uint64_t chunk, std::span<const std::uint64_t> counts) {
    std::vector<unsigned char> out;
    out.reserve(record_bytes(static_cast<std::uint32_t>(counts.size())));
    put_u64(out, chunk);
    for (std::uint64_t c : counts) put_u64(out, c);
    put_u64(out, fnv1a64(out));
    return out;
}

bool write_all(int fd, const std::vector<unsigned char>& bytes) {
    std::size_t done = 0;
    while (done < bytes.size()) {
        const ssize_t w = ::write(fd, bytes.data() + done, bytes.size() - done);
        if (w < 0) {
            if (errno == EINTR) continue;
            return false;
        }
        if (w == 0) return false;
        done += static_cast<std::size_t>(w);
    }
    return true;
}

}  // namespace

std::uint64_t fnv1a64(std::span<const unsigned char> bytes, std::uint64_t seed) noexcept {
    std::uint64_t h = seed;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::vector<unsigned char> encode_header(const CheckpointHeader& header) {
    std::vector<unsigned char> out(header.magic.begin(), header.magic.end());
    out.push_back(header.version);
    put_u32(out, header.parameter);
    out.push_back(header.flags);
    put_u32(out, header.chunk_count);
    put_u32(out, header.bins);
    return out;
}

CheckpointContents read_checkpoint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CheckpointError("cannot open checkpoint " + path.string());
    const std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                          std::istreambuf_iterator<char>());
    if (data.size() < kHeaderBytes) throw CheckpointError("checkpoint header truncated");

    CheckpointContents out;
    auto& h = out.header;
    std::memcpy(h.magic.data(), data.data(), 4);
    if (h.magic != kDistMagic && h.magic != kFringeMagic) {
        throw CheckpointError("checkpoint has unknown magic");
    }
    h.version = data[4];
    if (h.version != kCheckpointVersion) {
        throw CheckpointError("unsupported checkpoint version " + std::to_string(h.version));
    }
    h.parameter = get_u32(&data[5]);
    h.flags = data[9];
    h.chunk_count = get_u32(&data[10]);
    h.bins = get_u32(&data[14]);

    const std::size_t rec = record_bytes(h.bins);
    std::size_t pos = kHeaderBytes;
    while (pos + rec <= data.size()) {
        const unsigned char* p = &data[pos];
        const std::uint64_t chunk = get_u64(p);
        const std::uint64_t stored = get_u64(p + rec - 8);
        if (fnv1a64({p, rec - 8}) != stored) {
            throw CheckpointError("checkpoint record for chunk " + std::to_string(chunk) +
                                      " fails its checksum",
                                  chunk);
        }
        if (chunk >= h.chunk_count) {
            throw CheckpointError("checkpoint chunk " + std::to_string(chunk) + " out of range",
                                  chunk);
        }
        std::vector<std::uint64_t> counts(h.bins);
        for (std::uint32_t b = 0; b < h.bins; ++b) counts[b] = get_u64(p + 8 + 8 * b);
        if (!out.chunks.emplace(chunk, std::move(counts)).second) {
            throw CheckpointError("checkpoint repeats chunk " + std::to_string(chunk), chunk);
        }
        pos += rec;
    }
    out.valid_bytes = pos;
    return out;
}

CheckpointWriter::CheckpointWriter(std::filesystem::path path, const CheckpointHeader& header,
                                   CheckpointContents& resumed)
    : path_(std::move(path)), bins_(header.bins) {
    namespace fs = std::filesystem;
    if (fs::exists(path_)) {
        resumed = read_checkpoint(path_);
        if (!(resumed.header == header)) {
            throw CheckpointError("checkpoint " + path_.string() +
                                  " was written for a different computation");
        }
        if (fs::file_size(path_) != resumed.valid_bytes) fs::resize_file(path_, resumed.valid_bytes);
        good_size_ = resumed.valid_bytes;
    } else {
        const fs::path tmp = path_.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            const auto bytes = encode_header(header);
            out.write(reinterpret_cast<const char*>(bytes.data()),
                      static_cast<std::streamsize>(bytes.size()));
            if (!out) {
                std::error_code ec;
                fs::remove(tmp, ec);
                throw CheckpointError("cannot write checkpoint " + tmp.string());
            }
        }
        fs::rename(tmp, path_);
        resumed = CheckpointContents{header, {}, kHeaderBytes};
        good_size_ = kHeaderBytes;
    }
    fd_ = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CLOEXEC);
    if (fd_ < 0) {
        throw CheckpointError("cannot open checkpoint " + path_.string() + ": " +
                              std::strerror(errno));
    }
}

CheckpointWriter::~CheckpointWriter() {
    if (fd_ >= 0) {
        ::fsync(fd_);
        ::close(fd_);
    }
}

void CheckpointWriter::append(std::uint64_t chunk, std::span<const std::uint64_t> counts) {
    if (counts.size() != bins_) throw std::invalid_argument("checkpoint record has wrong width");
    const auto bytes = encode_record(chunk, counts);
    std::lock_guard lock(mutex_);
    if (!write_all(fd_, bytes)) {
        const int err = errno;
        std::error_code ec;
        std::filesystem::resize_file(path_, good_size_, ec);
        throw CheckpointError("failed to append chunk " + std::to_string(chunk) + " to " +
                                  path_.string() + ": " + std::strerror(err),
                              chunk);
    }
    good_size_ += bytes.size();
}

}  // namespace diffset
