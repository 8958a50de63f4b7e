#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace pha {

/// Structured basis label. Labels are totally ordered values so that every
/// enumeration in the library is deterministic.
struct BasisId {
    enum class Kind : std::uint8_t {
        Raw = 0,           // a = index
        GroupoidMor = 1,   // a = source object, b = target object, c = morphism index
        TorusMon = 2,      // a = U-exponent, b = V-exponent
        SandwichTriple = 3,// a = left base index, b = Hopf index, c = right base index
        SmashTriple = 4,   // a = left module index, b = Hopf index, c = right module index
    };

    Kind kind = Kind::Raw;
    std::int32_t a = 0, b = 0, c = 0;

    static BasisId raw(int i) { return {Kind::Raw, i, 0, 0}; }
    static BasisId groupoid_mor(int src, int tgt, int idx) {
        return {Kind::GroupoidMor, src, tgt, idx};
    }
    static BasisId torus(int n, int m) { return {Kind::TorusMon, n, m, 0}; }
    static BasisId sandwich(int l, int h, int r) { return {Kind::SandwichTriple, l, h, r}; }
    static BasisId smash(int p, int h, int q) { return {Kind::SmashTriple, p, h, q}; }

    auto operator<=>(const BasisId&) const = default;
};

/// A free n-fold tensor basis label: one algebra label per slot.
/// Level-0 tuples hold a single base-algebra label.
using Tuple = std::vector<BasisId>;

} // namespace pha
