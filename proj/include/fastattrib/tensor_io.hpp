#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fastattrib/matrix.hpp"

namespace fastattrib {

/// On-disk tensor: magic "FATN", u32 version=1, u8 dtype (0 = f64),
/// u32 ndim, ndim x u64 dims, then the little-endian f64 payload.
/// Round trips are bit-exact.
struct Tensor {
    std::vector<uint64_t> dims;
    VecD data;

    size_t element_count() const {
        size_t n = 1;
        for (auto d : dims) n *= static_cast<size_t>(d);
        return n;
    }
};

void save_tensor(const std::filesystem::path& path, const Tensor& t);
Tensor load_tensor(const std::filesystem::path& path);

void save_matrix(const std::filesystem::path& path, const Matrix& m);
Matrix load_matrix(const std::filesystem::path& path);

void save_vector(const std::filesystem::path& path, const VecD& v);
VecD load_vector(const std::filesystem::path& path);

}  // namespace fastattrib
