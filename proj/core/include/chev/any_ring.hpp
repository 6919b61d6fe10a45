#pragma once

#include "chev/ring.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace chev {

enum class RingKind { zmod, fp, zloc, dual, fq, jet, q };

struct RingDescriptor {
    RingKind kind = RingKind::q;
    long p = 0;
    int k = 1;
    int m = 0;
    std::vector<long> required_inverses;
};

// zmod:p^k, fp:p, zloc:p, dual:p, fq:p^2, jet:m, q
RingDescriptor parse_descriptor(std::string_view s);
std::string to_string(const RingDescriptor& d);

using AnyRing = std::variant<ZModPk, ZLoc, Dual, Fq2, Jet, Rationals>;

// Throws ring_error if a required inverse is not a unit.
AnyRing make_ring(const RingDescriptor& d);
AnyRing make_ring(std::string_view descriptor, std::vector<long> required_inverses = {});

std::string ring_name(const AnyRing& r);

}  // namespace chev
