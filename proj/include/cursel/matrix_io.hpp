#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dense_matrix.hpp"
#include "error.hpp"

//
// Matrix files: CSV (one row per line) and DMAT binary
// ("DMAT", u32 rows, u32 cols, u32 reserved = 0, then rows*cols little-endian f64, row-major).
//

namespace cursel::io {

inline constexpr std::array<char, 4> dmat_magic = {'D', 'M', 'A', 'T'};
inline constexpr std::size_t dmat_header_size = 16;

inline std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_csv(std::ostream& os, const DenseMatrix& a)
{
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j > 0)
                os << ',';
            os << format_double(a(i, j));
        }
        os << '\n';
    }
}

inline DenseMatrix read_csv(std::istream& is)
{
    std::vector<double> entries;
    std::size_t n_rows = 0, n_cols = 0;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        std::size_t count = 0;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(cell, &used);
            } catch (const std::exception&) {
                fail(ErrorKind::InvalidInput, "csv: cannot parse '" + cell + "' on row " + std::to_string(n_rows + 1));
            }
            if (cell.find_first_not_of(" \t", used) != std::string::npos)
                fail(ErrorKind::InvalidInput, "csv: trailing characters in '" + cell + "'");
            entries.push_back(v);
            ++count;
        }
        if (n_rows == 0)
            n_cols = count;
        require(count == n_cols, ErrorKind::InvalidInput,
                "csv: row " + std::to_string(n_rows + 1) + " has " + std::to_string(count) + " entries, expected " +
                    std::to_string(n_cols));
        ++n_rows;
    }
    return DenseMatrix(n_rows, n_cols, entries);
}

namespace detail {

inline void put_u32(std::ostream& os, std::uint32_t v)
{
    const unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                                static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

inline std::uint32_t get_u32(const unsigned char* b)
{
    return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) | (std::uint32_t(b[3]) << 24);
}

} // namespace detail

inline void write_dmat(std::ostream& os, const DenseMatrix& a)
{
    require(a.rows() <= UINT32_MAX && a.cols() <= UINT32_MAX, ErrorKind::InvalidInput, "dmat: matrix too large");
    os.write(dmat_magic.data(), 4);
    detail::put_u32(os, static_cast<std::uint32_t>(a.rows()));
    detail::put_u32(os, static_cast<std::uint32_t>(a.cols()));
    detail::put_u32(os, 0);
    for (double v : a.entries()) {
        auto bits = std::bit_cast<std::uint64_t>(v);
        unsigned char b[8];
        for (int i = 0; i < 8; ++i)
            b[i] = static_cast<unsigned char>(bits >> (8 * i));
        os.write(reinterpret_cast<const char*>(b), 8);
    }
}

inline DenseMatrix read_dmat(std::istream& is)
{
    unsigned char header[dmat_header_size];
    is.read(reinterpret_cast<char*>(header), dmat_header_size);
    require(is.gcount() == static_cast<std::streamsize>(dmat_header_size), ErrorKind::InvalidInput,
            "dmat: truncated header");
    require(std::memcmp(header, dmat_magic.data(), 4) == 0, ErrorKind::InvalidInput, "dmat: bad magic");
    const std::size_t n = detail::get_u32(header + 4);
    const std::size_t m = detail::get_u32(header + 8);
    std::vector<double> entries(n * m);
    for (double& v : entries) {
        unsigned char b[8];
        is.read(reinterpret_cast<char*>(b), 8);
        require(is.gcount() == 8, ErrorKind::InvalidInput, "dmat: truncated payload");
        std::uint64_t bits = 0;
        for (int i = 0; i < 8; ++i)
            bits |= std::uint64_t(b[i]) << (8 * i);
        v = std::bit_cast<double>(bits);
    }
    return DenseMatrix(n, m, entries);
}

/// Format chosen by extension: ".dmat" / ".bin" is binary, anything else CSV.
inline bool is_binary_path(const std::filesystem::path& path)
{
    const auto ext = path.extension().string();
    return ext == ".dmat" || ext == ".bin";
}

inline void save(const std::filesystem::path& path, const DenseMatrix& a)
{
    std::ofstream os(path, std::ios::binary);
    require(static_cast<bool>(os), ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
    if (is_binary_path(path))
        write_dmat(os, a);
    else
        write_csv(os, a);
    os.flush();
    require(static_cast<bool>(os), ErrorKind::IoError, "write to '" + path.string() + "' failed");
}

inline DenseMatrix load(const std::filesystem::path& path)
{
    std::ifstream is(path, std::ios::binary);
    require(static_cast<bool>(is), ErrorKind::IoError, "cannot open '" + path.string() + "'");
    return is_binary_path(path) ? read_dmat(is) : read_csv(is);
}

} // namespace cursel::io
