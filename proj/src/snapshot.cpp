#include "kort/snapshot.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstring>
#include <fstream>

#include "kort/common.hpp"

namespace kort {

namespace {

constexpr char kMagic[8] = {'K', 'O', 'R', 'T', 'F', 'L', 'D', '1'};

// The format is little-endian by definition; this code targets LE hosts.
void write_all(std::ostream& os, const void* p, std::size_t n) {
    os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
}

void write_common(const std::string& path, const std::vector<const ScalarField*>& parts,
                  const std::string& kind, double time) {
    const ScalarField& first = *parts.front();
    nlohmann::json header = {
        {"dim", first.grid().dim},
        {"n_points", first.grid().n_points},
        {"kind", kind},
        {"representation",
         first.representation() == Representation::physical ? "physical" : "spectral"},
        {"time", time},
    };
    const std::string h = header.dump();

    std::ofstream os(path, std::ios::binary);
    if (!os) throw Error("snapshot: cannot open for write: " + path);
    write_all(os, kMagic, sizeof(kMagic));
    const std::uint32_t len = static_cast<std::uint32_t>(h.size());
    write_all(os, &len, sizeof(len));
    write_all(os, h.data(), h.size());

    const bool spectral = first.representation() == Representation::spectral;
    for (const ScalarField* f : parts) {
        for (std::size_t i = 0; i < f->size(); ++i) {
            const double re = (*f)[i].real();
            write_all(os, &re, sizeof(re));
            if (spectral) {
                const double im = (*f)[i].imag();
                write_all(os, &im, sizeof(im));
            }
        }
    }
    if (!os) throw Error("snapshot: write failed: " + path);
}

} // namespace

void write_snapshot(const std::string& path, const ScalarField& f, double time) {
    write_common(path, {&f}, "scalar", time);
}

void write_snapshot(const std::string& path, const VectorField& f, double time) {
    std::vector<const ScalarField*> parts;
    for (int c = 0; c < f.dim(); ++c) parts.push_back(&f.component(c));
    write_common(path, parts, "vector", time);
}

void write_snapshot(const std::string& path, const TensorField& f, double time) {
    std::vector<const ScalarField*> parts;
    for (int i = 0; i < f.dim(); ++i)
        for (int j = 0; j < f.dim(); ++j) parts.push_back(&f.entry(i, j));
    write_common(path, parts, "tensor", time);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("snapshot: cannot open: " + path);

    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw Error("snapshot: bad magic in " + path);

    std::uint32_t len = 0;
    is.read(reinterpret_cast<char*>(&len), sizeof(len));
    std::string h(len, '\0');
    is.read(h.data(), len);
    if (!is) throw Error("snapshot: truncated header in " + path);

    nlohmann::json header = nlohmann::json::parse(h);
    Snapshot snap;
    snap.grid = make_grid(header.at("n_points").get<int>(), header.at("dim").get<int>());
    snap.kind = header.at("kind").get<std::string>();
    snap.representation = header.at("representation").get<std::string>() == "spectral"
                              ? Representation::spectral
                              : Representation::physical;
    snap.time = header.at("time").get<double>();

    std::size_t n_parts = 1;
    if (snap.kind == "vector") n_parts = static_cast<std::size_t>(snap.grid.dim);
    else if (snap.kind == "tensor") n_parts = static_cast<std::size_t>(snap.grid.dim) * snap.grid.dim;
    else if (snap.kind != "scalar") throw Error("snapshot: unknown kind " + snap.kind);

    const bool spectral = snap.representation == Representation::spectral;
    for (std::size_t p = 0; p < n_parts; ++p) {
        ScalarField f = ScalarField::zeros(snap.grid, snap.representation);
        for (std::size_t i = 0; i < f.size(); ++i) {
            double re = 0.0, im = 0.0;
            is.read(reinterpret_cast<char*>(&re), sizeof(re));
            if (spectral) is.read(reinterpret_cast<char*>(&im), sizeof(im));
            f[i] = {re, im};
        }
        snap.parts.push_back(std::move(f));
    }
    if (!is) throw Error("snapshot: truncated payload in " + path);
    return snap;
}

} // namespace kort
