#include "chev/any_ring.hpp"

#include <algorithm>
#include <cctype>

namespace chev {

namespace {

long parse_long(std::string_view s, std::string_view whole)
{
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ring_error("bad ring descriptor '" + std::string(whole) + "'");
    return std::stol(std::string(s));
}

}  // namespace

RingDescriptor parse_descriptor(std::string_view s)
{
    RingDescriptor d;
    if (s == "q") {
        d.kind = RingKind::q;
        return d;
    }
    auto colon = s.find(':');
    if (colon == std::string_view::npos)
        throw ring_error("bad ring descriptor '" + std::string(s) + "'");
    auto kind = s.substr(0, colon);
    auto rest = s.substr(colon + 1);
    auto caret = rest.find('^');
    auto base = rest.substr(0, caret);
    if (kind == "zmod") {
        if (caret == std::string_view::npos)
            throw ring_error("zmod needs the form zmod:p^k");
        d.kind = RingKind::zmod;
        d.p = parse_long(base, s);
        d.k = static_cast<int>(parse_long(rest.substr(caret + 1), s));
    } else if (kind == "fq") {
        if (caret == std::string_view::npos || rest.substr(caret + 1) != "2")
            throw ring_error("only fq:p^2 is supported");
        d.kind = RingKind::fq;
        d.p = parse_long(base, s);
        d.k = 2;
    } else if (caret != std::string_view::npos) {
        throw ring_error("bad ring descriptor '" + std::string(s) + "'");
    } else if (kind == "fp") {
        d.kind = RingKind::fp;
        d.p = parse_long(base, s);
    } else if (kind == "zloc") {
        d.kind = RingKind::zloc;
        d.p = parse_long(base, s);
    } else if (kind == "dual") {
        d.kind = RingKind::dual;
        d.p = parse_long(base, s);
    } else if (kind == "jet") {
        d.kind = RingKind::jet;
        d.m = static_cast<int>(parse_long(base, s));
    } else {
        throw ring_error("unknown ring kind '" + std::string(kind) + "'");
    }
    if (d.kind != RingKind::jet && !is_prime(d.p))
        throw ring_error(std::to_string(d.p) + " is not prime");
    return d;
}

std::string to_string(const RingDescriptor& d)
{
    switch (d.kind) {
    case RingKind::zmod: return "zmod:" + std::to_string(d.p) + "^" + std::to_string(d.k);
    case RingKind::fp: return "fp:" + std::to_string(d.p);
    case RingKind::zloc: return "zloc:" + std::to_string(d.p);
    case RingKind::dual: return "dual:" + std::to_string(d.p);
    case RingKind::fq: return "fq:" + std::to_string(d.p) + "^2";
    case RingKind::jet: return "jet:" + std::to_string(d.m);
    case RingKind::q: return "q";
    }
    return "?";
}

AnyRing make_ring(const RingDescriptor& d)
{
    AnyRing r = [&]() -> AnyRing {
        switch (d.kind) {
        case RingKind::zmod: return ZModPk(d.p, d.k);
        case RingKind::fp: return ZModPk(d.p, 1);
        case RingKind::zloc: return ZLoc(d.p);
        case RingKind::dual: return Dual(d.p);
        case RingKind::fq: return Fq2(d.p);
        case RingKind::jet: return Jet(d.m);
        case RingKind::q: return Rationals{};
        }
        throw ring_error("unknown ring kind");
    }();
    for (long v : d.required_inverses) {
        bool ok = std::visit([v](const auto& ring) { return ring.is_unit(ring.from_int(v)); }, r);
        if (!ok)
            throw ring_error(std::to_string(v) + " is not a unit in " + to_string(d));
    }
    return r;
}

AnyRing make_ring(std::string_view descriptor, std::vector<long> required_inverses)
{
    auto d = parse_descriptor(descriptor);
    d.required_inverses = std::move(required_inverses);
    return make_ring(d);
}

std::string ring_name(const AnyRing& r)
{
    return std::visit([](const auto& ring) { return ring.name(); }, r);
}

}  // namespace chev
