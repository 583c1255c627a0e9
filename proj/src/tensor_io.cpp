#include "fastattrib/tensor_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "fastattrib/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "tensor files are little-endian; big-endian hosts are unsupported");

namespace fastattrib {

namespace {

constexpr char kMagic[4] = {'F', 'A', 'T', 'N'};
constexpr uint32_t kVersion = 1;
constexpr uint8_t kDtypeF64 = 0;

template <typename T>
void write_pod(std::ofstream& out, T v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T read_pod(std::ifstream& in) {
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

}  // namespace

void save_tensor(const std::filesystem::path& path, const Tensor& t) {
    if (t.data.size() != t.element_count())
        throw PreconditionError("save_tensor: dims do not match payload size");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("save_tensor: cannot open " + path.string());
    out.write(kMagic, 4);
    write_pod(out, kVersion);
    write_pod(out, kDtypeF64);
    write_pod(out, static_cast<uint32_t>(t.dims.size()));
    for (uint64_t d : t.dims) write_pod(out, d);
    out.write(reinterpret_cast<const char*>(t.data.data()),
              static_cast<std::streamsize>(t.data.size() * sizeof(double)));
    if (!out) throw IoError("save_tensor: write failed for " + path.string());
}

Tensor load_tensor(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("load_tensor: cannot open " + path.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw IoError("load_tensor: bad magic in " + path.string());
    if (read_pod<uint32_t>(in) != kVersion)
        throw IoError("load_tensor: unsupported version in " + path.string());
    if (read_pod<uint8_t>(in) != kDtypeF64)
        throw IoError("load_tensor: unsupported dtype in " + path.string());
    const uint32_t ndim = read_pod<uint32_t>(in);
    if (ndim > 8) throw IoError("load_tensor: implausible ndim in " + path.string());
    Tensor t;
    t.dims.resize(ndim);
    for (auto& d : t.dims) d = read_pod<uint64_t>(in);
    t.data.resize(t.element_count());
    in.read(reinterpret_cast<char*>(t.data.data()),
            static_cast<std::streamsize>(t.data.size() * sizeof(double)));
    if (!in) throw IoError("load_tensor: truncated payload in " + path.string());
    return t;
}

void save_matrix(const std::filesystem::path& path, const Matrix& m) {
    Tensor t;
    t.dims = {m.rows(), m.cols()};
    t.data = m.data();
    save_tensor(path, t);
}

Matrix load_matrix(const std::filesystem::path& path) {
    Tensor t = load_tensor(path);
    if (t.dims.size() != 2) throw IoError("load_matrix: tensor is not 2-d: " + path.string());
    return Matrix(static_cast<size_t>(t.dims[0]), static_cast<size_t>(t.dims[1]),
                  std::move(t.data));
}

void save_vector(const std::filesystem::path& path, const VecD& v) {
    Tensor t;
    t.dims = {v.size()};
    t.data = v;
    save_tensor(path, t);
}

VecD load_vector(const std::filesystem::path& path) {
    Tensor t = load_tensor(path);
    if (t.dims.size() != 1) throw IoError("load_vector: tensor is not 1-d: " + path.string());
    return std::move(t.data);
}

}  // namespace fastattrib
