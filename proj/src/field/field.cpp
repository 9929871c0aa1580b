#include "boundnet/field/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "boundnet/kernels/kernels.hpp"

namespace boundnet::field {

namespace {

void require_level(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidArgument(std::string(what) + " must lie in [0,1]");
    }
}

} // namespace

PhenomenonField::PhenomenonField(HalfPlane hp) : v_(std::move(hp)) {
    const auto& h = std::get<HalfPlane>(v_);
    require_level(h.inside, "HalfPlane.inside");
    require_level(h.outside, "HalfPlane.outside");
    if (!std::isfinite(h.offset)) {
        throw InvalidArgument("HalfPlane.offset must be finite");
    }
    const double len = std::hypot(h.normal.x, h.normal.y);
    if (std::fabs(len - 1.0) > 1e-12) {
        throw InvalidArgument("HalfPlane.normal must have unit length");
    }
}

PhenomenonField::PhenomenonField(Disk d) : v_(std::move(d)) {
    const auto& dk = std::get<Disk>(v_);
    require_level(dk.inside, "Disk.inside");
    require_level(dk.outside, "Disk.outside");
    if (!(dk.radius > 0.0) || !std::isfinite(dk.radius)) {
        throw InvalidArgument("Disk.radius must be positive");
    }
}

PhenomenonField::PhenomenonField(ScaledGray sg) : v_(std::move(sg)) {
    const auto& g = std::get<ScaledGray>(v_);
    require_level(g.brightness, "ScaledGray.brightness");
    if (!g.base) {
        throw InvalidArgument("ScaledGray.base must be set");
    }
}

PhenomenonField::PhenomenonField(BinaryActivation ba) : v_(std::move(ba)) {
    auto& act = std::get<BinaryActivation>(v_).active;
    std::sort(act.begin(), act.end());
    act.erase(std::unique(act.begin(), act.end()), act.end());
    if (!act.empty() && act.front() < 0) {
        throw InvalidNodeId("BinaryActivation: negative node id");
    }
}

Readings sample(const PhenomenonField& field, const SensorLayout& layout) {
    const auto n = static_cast<std::size_t>(layout.size());
    Readings out(n, 0.0);
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, HalfPlane>) {
                kernels::sample_halfplane(layout.xs().data(), layout.ys().data(), n,
                                          f.normal.x, f.normal.y, f.offset,
                                          f.inside, f.outside, out.data());
            } else if constexpr (std::is_same_v<T, Disk>) {
                kernels::sample_disk(layout.xs().data(), layout.ys().data(), n,
                                     f.center.x, f.center.y, f.radius * f.radius,
                                     f.inside, f.outside, out.data());
            } else if constexpr (std::is_same_v<T, ScaledGray>) {
                const Readings base = sample(*f.base, layout);
                kernels::scale(base.data(), n, f.brightness, out.data());
            } else {
                for (NodeId id : f.active) {
                    if (id >= layout.size()) {
                        throw InvalidNodeId("BinaryActivation: node " +
                                            std::to_string(id) + " not in layout of " +
                                            std::to_string(layout.size()));
                    }
                    out[static_cast<std::size_t>(id)] = 1.0;
                }
            }
        },
        field.variant());
    return out;
}

} // namespace boundnet::field
