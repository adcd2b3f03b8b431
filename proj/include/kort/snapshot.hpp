#pragma once

#include <string>
#include <vector>

#include "kort/field.hpp"

namespace kort {

/// Binary field snapshot:
///   8-byte magic "KORTFLD1"
///   little-endian u32 header length, then that many bytes of UTF-8 JSON with
///   keys {dim, n_points, kind, representation, time}
///   raw little-endian f64 payload, row-major, components consecutive
///   (re/im interleaved when the representation is spectral).
struct Snapshot {
    Grid grid;
    std::string kind; // "scalar" | "vector" | "tensor"
    Representation representation = Representation::physical;
    double time = 0.0;
    std::vector<ScalarField> parts; // 1, dim, or dim*dim fields
};

void write_snapshot(const std::string& path, const ScalarField& f, double time);
void write_snapshot(const std::string& path, const VectorField& f, double time);
void write_snapshot(const std::string& path, const TensorField& f, double time);

Snapshot read_snapshot(const std::string& path);

} // namespace kort
