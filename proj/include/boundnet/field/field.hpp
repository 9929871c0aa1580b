#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "boundnet/geometry/layout.hpp"

namespace boundnet::field {

using geometry::NodeId;
using geometry::Point2;
using geometry::SensorLayout;

/// Per-node measurements, psi in [0,1], indexed by NodeId.
using Readings = std::vector<double>;

class PhenomenonField;

/// Two-level field split by the line normal.p = offset. The normal points
/// into the phenomenon; points on the line read the inside value.
struct HalfPlane {
    Point2 normal;   // unit length within 1e-12
    double offset;
    double inside;   // psi on/inside the boundary
    double outside;
};

/// Two-level field on a closed disk.
struct Disk {
    Point2 center;
    double radius;   // > 0
    double inside;
    double outside;
};

/// Readings of the base field multiplied by a brightness in [0,1].
struct ScaledGray {
    std::shared_ptr<const PhenomenonField> base;
    double brightness;
};

/// Explicit per-node activation: psi = 1 on the set, 0 elsewhere.
struct BinaryActivation {
    std::vector<NodeId> active; // deduplicated, sorted at construction
};

/// A phenomenon as a scalar field psi(x, y) in [0,1] sampled at sensor
/// positions. Construction validates the variant's invariants.
class PhenomenonField {
public:
    using Variant = std::variant<HalfPlane, Disk, ScaledGray, BinaryActivation>;

    explicit PhenomenonField(HalfPlane hp);
    explicit PhenomenonField(Disk d);
    explicit PhenomenonField(ScaledGray sg);
    explicit PhenomenonField(BinaryActivation ba);

    const Variant& variant() const { return v_; }

private:
    Variant v_;
};

/// Samples the field at every sensor. Throws InvalidNodeId if a
/// BinaryActivation names a node outside the layout.
Readings sample(const PhenomenonField& field, const SensorLayout& layout);

} // namespace boundnet::field
