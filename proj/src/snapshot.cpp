#include "voigt/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace voigt {

namespace {

constexpr char kMagic[8] = {'V', 'O', 'I', 'G', 'T', 'F', 'L', 'D'};
constexpr std::uint32_t kVersion = 1;

template <class T>
T byteswap_if_big(T v) {
    if constexpr (std::endian::native == std::endian::little) {
        return v;
    } else {
        auto bytes = std::bit_cast<std::array<std::byte, sizeof(T)>>(v);
        std::reverse(bytes.begin(), bytes.end());
        return std::bit_cast<T>(bytes);
    }
}

template <class T>
void put(std::ostream& out, T v) {
    v = byteswap_if_big(v);
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in) {
    T v{};
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw FormatError("snapshot: truncated file");
    return byteswap_if_big(v);
}

void put_field(std::ostream& out, const SpectralField& f) {
    for (int c = 0; c < f.components(); ++c) {
        const auto& arr = f.comp(c);
        for (std::int64_t i = 0; i < arr.size(); ++i) {
            put<double>(out, arr(i).real());
            put<double>(out, arr(i).imag());
        }
    }
}

void get_field(std::istream& in, SpectralField& f) {
    for (int c = 0; c < f.components(); ++c) {
        auto& arr = f.comp(c);
        for (std::int64_t i = 0; i < arr.size(); ++i) {
            const double re = get<double>(in);
            const double im = get<double>(in);
            arr(i) = {re, im};
        }
    }
}

}  // namespace

void write_snapshot(const SimState& state, const VoigtParams& params,
                    const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("snapshot: cannot open for writing: " + path.string());
    out.write(kMagic, sizeof(kMagic));
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, std::uint32_t(state.u.grid().dim));
    put<std::uint32_t>(out, std::uint32_t(state.u.grid().n));
    put<double>(out, state.time);
    put<double>(out, params.alpha);
    put<double>(out, params.alpha_m);
    put<std::uint32_t>(out, state.b ? 2u : 1u);                   // field count
    put<std::uint32_t>(out, std::uint32_t(state.u.components())); // components per field
    put_field(out, state.u);
    if (state.b) put_field(out, *state.b);
    if (!out) throw FormatError("snapshot: write failed: " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("snapshot: cannot open: " + path.string());
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw FormatError("snapshot: bad magic");
    const auto version = get<std::uint32_t>(in);
    if (version != kVersion)
        throw FormatError("snapshot: unsupported version " + std::to_string(version));
    const auto dim = get<std::uint32_t>(in);
    const auto n = get<std::uint32_t>(in);
    const auto grid = GridSpec::make(int(dim), int(n));
    Snapshot snap;
    snap.state.time = get<double>(in);
    snap.params.alpha = get<double>(in);
    snap.params.alpha_m = get<double>(in);
    const auto field_count = get<std::uint32_t>(in);
    const auto components = get<std::uint32_t>(in);
    if (field_count < 1 || field_count > 2)
        throw FormatError("snapshot: bad field count " + std::to_string(field_count));
    if (components != dim)
        throw FormatError("snapshot: component count does not match dim");
    snap.state.u = SpectralField::zero(grid, int(components));
    get_field(in, snap.state.u);
    if (field_count == 2) {
        snap.state.b = SpectralField::zero(grid, int(components));
        get_field(in, *snap.state.b);
    }
    return snap;
}

}  // namespace voigt
