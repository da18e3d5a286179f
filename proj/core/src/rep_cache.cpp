#include "dualmod/rep_cache.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <system_error>

namespace dualmod::cache {

namespace {

constexpr char kMagic[8] = {'D', 'M', 'R', 'E', 'P', 'C', 'H', '1'};

std::uint64_t fnv1a(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    return h;
}

class Writer {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void bytes(const void* p, std::size_t n) {
        const auto* b = static_cast<const std::uint8_t*>(p);
        out_.insert(out_.end(), b, b + n);
    }
    void plane(const BitMatrixF2& m) {
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::uint64_t w : m.row(r)) u64(w);
    }
    std::vector<std::uint8_t> finish() {
        const std::uint64_t sum = fnv1a(out_);
        u64(sum);
        return std::move(out_);
    }

private:
    std::vector<std::uint8_t> out_;
};

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

    std::uint8_t u8() {
        need(1);
        return in_[pos_++];
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t{in_[pos_++]} << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t{in_[pos_++]} << (8 * i);
        return v;
    }
    std::string str(std::size_t n) {
        need(n);
        std::string s(reinterpret_cast<const char*>(in_.data() + pos_), n);
        pos_ += n;
        return s;
    }
    BitMatrixF2 plane(std::size_t dim) {
        BitMatrixF2 m(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (auto& w : m.row(r)) w = u64();
        // Padding bits past `dim` must be clear.
        if (dim % kWordBits != 0 && dim > 0) {
            const std::uint64_t mask = ~std::uint64_t{0} << (dim % kWordBits);
            for (std::size_t r = 0; r < dim; ++r)
                if (m.row(r).back() & mask) throw CacheFormatError("cache: nonzero padding bits");
        }
        return m;
    }
    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return in_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (in_.size() - pos_ < n) throw CacheFormatError("cache: truncated record");
    }
    std::span<const std::uint8_t> in_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize(const CacheRecord& record) {
    const Representation& rep = record.rep;
    Writer w;
    w.bytes(kMagic, sizeof kMagic);
    w.u32(kFormatVersion);
    w.u8(rep.group() == GroupKind::Symmetric ? 0 : 1);
    w.u8(rep.field() == FieldKind::F2 ? 0 : 1);
    w.u8(rep.lambda() ? 1 : 0);
    w.u8(record.form ? 1 : 0);
    w.u32(static_cast<std::uint32_t>(rep.degree()));
    if (rep.lambda()) {
        w.u32(static_cast<std::uint32_t>(rep.lambda()->length()));
        for (int part : rep.lambda()->parts()) w.u32(static_cast<std::uint32_t>(part));
    }
    w.u64(rep.dim());
    w.u32(static_cast<std::uint32_t>(rep.generators().size()));
    for (const auto& g : rep.generators()) {
        w.u32(static_cast<std::uint32_t>(g.label.size()));
        w.bytes(g.label.data(), g.label.size());
        for (int image : g.element.images()) w.u32(static_cast<std::uint32_t>(image));
        w.plane(g.matrix.lo());
        if (rep.field() == FieldKind::F4) w.plane(g.matrix.hi());
    }
    if (record.form) w.plane(*record.form);
    return w.finish();
}

CacheRecord deserialize(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < sizeof kMagic + 8 || std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0)
        throw CacheFormatError("cache: bad magic");
    const auto body = bytes.first(bytes.size() - 8);
    Reader tail(bytes.last(8));
    if (tail.u64() != fnv1a(body)) throw CacheFormatError("cache: checksum mismatch");

    Reader r(body);
    r.str(sizeof kMagic);
    const std::uint32_t version = r.u32();
    if (version != kFormatVersion) throw CacheFormatError("cache: unsupported version " + std::to_string(version));
    const std::uint8_t group = r.u8();
    const std::uint8_t field = r.u8();
    const std::uint8_t has_lambda = r.u8();
    const std::uint8_t has_form = r.u8();
    if (group > 1 || field > 1 || has_lambda > 1 || has_form > 1) throw CacheFormatError("cache: bad header flags");
    const std::uint32_t n = r.u32();
    if (n > 255) throw CacheFormatError("cache: degree out of range");
    std::optional<Partition> lambda;
    if (has_lambda) {
        const std::uint32_t len = r.u32();
        if (len > n) throw CacheFormatError("cache: bad partition length");
        std::vector<int> parts(len);
        for (auto& p : parts) p = static_cast<int>(r.u32());
        try {
            lambda = Partition(std::move(parts));
        } catch (const std::invalid_argument& e) {
            throw CacheFormatError(std::string("cache: ") + e.what());
        }
    }
    const std::uint64_t dim = r.u64();
    const std::uint32_t count = r.u32();
    const std::size_t plane_bytes = static_cast<std::size_t>(dim) * words_for(static_cast<std::size_t>(dim)) * 8;
    if (dim > (std::uint64_t{1} << 20) || count > 4 * n + 4 ||
        r.remaining() / (plane_bytes ? plane_bytes : 1) < count)
        throw CacheFormatError("cache: sizes inconsistent with record length");
    std::vector<Generator> gens;
    gens.reserve(count);
    try {
        for (std::uint32_t i = 0; i < count; ++i) {
            Generator g;
            const std::uint32_t label_len = r.u32();
            g.label = r.str(label_len);
            std::vector<int> images(n);
            for (auto& x : images) x = static_cast<int>(r.u32());
            g.element = Permutation(std::move(images));
            BitMatrixF2 lo = r.plane(static_cast<std::size_t>(dim));
            BitMatrixF2 hi = field ? r.plane(static_cast<std::size_t>(dim))
                                   : BitMatrixF2(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
            g.matrix = MatrixF4(std::move(lo), std::move(hi));
            gens.push_back(std::move(g));
        }
        CacheRecord out;
        if (has_form) out.form = r.plane(static_cast<std::size_t>(dim));
        if (r.remaining() != 0) throw CacheFormatError("cache: trailing bytes");
        out.rep = Representation(group ? GroupKind::Alternating : GroupKind::Symmetric,
                                 field ? FieldKind::F4 : FieldKind::F2, static_cast<int>(n),
                                 static_cast<std::size_t>(dim), std::move(gens), std::move(lambda));
        return out;
    } catch (const std::invalid_argument& e) {
        throw CacheFormatError(std::string("cache: ") + e.what());
    }
}

void save(const CacheRecord& record, const std::filesystem::path& file) {
    const auto bytes = serialize(record);
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot open " + file.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("cache: write failed for " + file.string());
}

CacheRecord load(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cache: cannot open " + file.string());
    const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return deserialize(bytes);
}

RepresentationCache::RepresentationCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::optional<RepresentationCache> RepresentationCache::from_environment() {
    const char* value = std::getenv(kCacheDirEnv);
    if (!value || !*value) return std::nullopt;
    return RepresentationCache(value);
}

std::filesystem::path RepresentationCache::path_for(const Partition& lambda) const {
    std::string name = "D_";
    for (std::size_t i = 0; i < lambda.length(); ++i) name += (i ? "-" : "") + std::to_string(lambda[i]);
    return dir_ / (name + ".v" + std::to_string(kFormatVersion) + ".dmrep");
}

std::optional<CacheRecord> RepresentationCache::get(const Partition& lambda) const {
    const auto file = path_for(lambda);
    std::error_code ec;
    if (!std::filesystem::exists(file, ec)) return std::nullopt;
    try {
        auto record = load(file);
        if (!record.rep.lambda() || !(*record.rep.lambda() == lambda)) return std::nullopt;
        return record;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void RepresentationCache::put(const Partition& lambda, const CacheRecord& record) const {
    std::filesystem::create_directories(dir_);
    const auto file = path_for(lambda);
    std::random_device rd;
    auto tmp = file;
    tmp += ".tmp" + std::to_string(rd());
    save(record, tmp);
    std::filesystem::rename(tmp, file);
}

CacheRecord d_module_record(const Partition& lambda, const specht::Options& options,
                            const RepresentationCache* cache) {
    const std::uint64_t tabloids = specht::tabloid_count(lambda);
    if (tabloids > options.max_tabloids) throw specht::MemoryGuardError(lambda, tabloids, options.max_tabloids);
    if (cache)
        if (auto hit = cache->get(lambda)) return std::move(*hit);
    auto module = specht::build_d_module(lambda, options);
    CacheRecord record{std::move(module.rep), std::move(module.form)};
    if (cache) cache->put(lambda, record);
    return record;
}

}  // namespace dualmod::cache
