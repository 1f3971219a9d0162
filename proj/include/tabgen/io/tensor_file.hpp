#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "tabgen/common.hpp"
#include "tabgen/errors.hpp"

namespace tabgen::io {

// Named-tensor container: little-endian float32 arrays with shape headers,
// a free-form metadata string (JSON by convention) and a trailing FNV-1a
// checksum. Shared by latent caches, pretraining checkpoints and bundles.
//
// Layout:
//   magic "TGTENS1\0" | u32 version | u64 meta_len | meta bytes
//   u32 n_tensors | per tensor: u32 name_len, name, u32 ndim, u64 dims[], f32 data[]
//   u64 checksum (FNV-1a over all preceding bytes)

struct NamedTensor {
    std::string name;
    std::vector<std::uint64_t> shape;
    std::vector<float> data;

    std::uint64_t numel() const {
        std::uint64_t n = 1;
        for (auto d : shape) n *= d;
        return n;
    }
};

class TensorFile {
  public:
    static constexpr char kMagic[8] = {'T', 'G', 'T', 'E', 'N', 'S', '1', '\0'};
    static constexpr std::uint32_t kFormatVersion = 1;

    std::string meta;
    std::vector<NamedTensor> tensors;

    void add(std::string name, std::vector<std::uint64_t> shape, std::vector<float> data) {
        NamedTensor t{std::move(name), std::move(shape), std::move(data)};
        if (t.numel() != t.data.size())
            throw ShapeError("TensorFile: shape/data size mismatch for tensor '" + t.name + "'");
        tensors.push_back(std::move(t));
    }

    const NamedTensor& get(const std::string& name) const {
        for (const auto& t : tensors)
            if (t.name == name) return t;
        throw CorruptionError("TensorFile: missing tensor '" + name + "'");
    }

    bool has(const std::string& name) const {
        for (const auto& t : tensors)
            if (t.name == name) return true;
        return false;
    }

    // Atomic write: serialize to <path>.tmp then rename.
    void save(const std::string& path) const {
        std::vector<unsigned char> buf = serialize_();
        std::string tmp = path + ".tmp";
        std::FILE* f = std::fopen(tmp.c_str(), "wb");
        if (!f) throw CacheError("TensorFile: cannot open for writing: " + tmp);
        std::size_t written = std::fwrite(buf.data(), 1, buf.size(), f);
        std::fclose(f);
        if (written != buf.size()) {
            std::remove(tmp.c_str());
            throw CacheError("TensorFile: short write: " + tmp);
        }
        std::filesystem::rename(tmp, path);
    }

    static TensorFile load(const std::string& path) {
        std::FILE* f = std::fopen(path.c_str(), "rb");
        if (!f) throw CorruptionError("TensorFile: cannot open: " + path);
        std::fseek(f, 0, SEEK_END);
        long size = std::ftell(f);
        std::fseek(f, 0, SEEK_SET);
        std::vector<unsigned char> buf(static_cast<std::size_t>(size));
        std::size_t got = std::fread(buf.data(), 1, buf.size(), f);
        std::fclose(f);
        if (got != buf.size()) throw CorruptionError("TensorFile: short read: " + path);
        return deserialize_(buf, path);
    }

    std::uint64_t content_hash() const {
        auto buf = serialize_();
        return fnv1a(buf.data(), buf.size());
    }

  private:
    template <typename T>
    static void put(std::vector<unsigned char>& buf, const T& v) {
        static_assert(std::is_trivially_copyable_v<T>);
        const auto* p = reinterpret_cast<const unsigned char*>(&v);
        buf.insert(buf.end(), p, p + sizeof(T));
    }

    template <typename T>
    static T take(const std::vector<unsigned char>& buf, std::size_t& off, const std::string& path) {
        if (off + sizeof(T) > buf.size()) throw CorruptionError("TensorFile: truncated file: " + path);
        T v;
        std::memcpy(&v, buf.data() + off, sizeof(T));
        off += sizeof(T);
        return v;
    }

    std::vector<unsigned char> serialize_() const {
        std::vector<unsigned char> buf;
        buf.insert(buf.end(), kMagic, kMagic + 8);
        put(buf, kFormatVersion);
        put(buf, static_cast<std::uint64_t>(meta.size()));
        buf.insert(buf.end(), meta.begin(), meta.end());
        put(buf, static_cast<std::uint32_t>(tensors.size()));
        for (const auto& t : tensors) {
            put(buf, static_cast<std::uint32_t>(t.name.size()));
            buf.insert(buf.end(), t.name.begin(), t.name.end());
            put(buf, static_cast<std::uint32_t>(t.shape.size()));
            for (auto d : t.shape) put(buf, d);
            const auto* p = reinterpret_cast<const unsigned char*>(t.data.data());
            buf.insert(buf.end(), p, p + t.data.size() * sizeof(float));
        }
        put(buf, fnv1a(buf.data(), buf.size()));
        return buf;
    }

    static TensorFile deserialize_(const std::vector<unsigned char>& buf, const std::string& path) {
        if (buf.size() < 8 + sizeof(std::uint32_t) + sizeof(std::uint64_t))
            throw CorruptionError("TensorFile: truncated file: " + path);
        if (std::memcmp(buf.data(), kMagic, 8) != 0)
            throw CorruptionError("TensorFile: bad magic: " + path);
        std::uint64_t stored_sum;
        std::memcpy(&stored_sum, buf.data() + buf.size() - sizeof(std::uint64_t), sizeof(std::uint64_t));
        std::uint64_t actual_sum = fnv1a(buf.data(), buf.size() - sizeof(std::uint64_t));
        if (stored_sum != actual_sum)
            throw CorruptionError("TensorFile: checksum mismatch: " + path);

        std::size_t off = 8;
        TensorFile tf;
        auto version = take<std::uint32_t>(buf, off, path);
        if (version != kFormatVersion)
            throw BundleError("TensorFile: unsupported format version " + std::to_string(version) + ": " + path);
        auto meta_len = take<std::uint64_t>(buf, off, path);
        if (off + meta_len > buf.size()) throw CorruptionError("TensorFile: truncated file: " + path);
        tf.meta.assign(reinterpret_cast<const char*>(buf.data() + off), meta_len);
        off += meta_len;
        auto n_tensors = take<std::uint32_t>(buf, off, path);
        for (std::uint32_t i = 0; i < n_tensors; ++i) {
            NamedTensor t;
            auto name_len = take<std::uint32_t>(buf, off, path);
            if (off + name_len > buf.size()) throw CorruptionError("TensorFile: truncated file: " + path);
            t.name.assign(reinterpret_cast<const char*>(buf.data() + off), name_len);
            off += name_len;
            auto ndim = take<std::uint32_t>(buf, off, path);
            t.shape.resize(ndim);
            for (auto& d : t.shape) d = take<std::uint64_t>(buf, off, path);
            std::uint64_t n = t.numel();
            if (off + n * sizeof(float) > buf.size())
                throw CorruptionError("TensorFile: truncated file: " + path);
            t.data.resize(n);
            std::memcpy(t.data.data(), buf.data() + off, n * sizeof(float));
            off += n * sizeof(float);
            tf.tensors.push_back(std::move(t));
        }
        return tf;
    }
};

}  // namespace tabgen::io
