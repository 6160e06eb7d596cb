#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/core.hpp"

namespace ramsey {

// Canonical form: nlohmann objects keep keys sorted and dump() emits no
// whitespace, so serializing the same value always yields the same bytes.
inline std::string canonical_json(const nlohmann::json& j) { return j.dump(); }

inline nlohmann::json coloring_to_json(const edge_coloring& c) {
    nlohmann::json j;
    j["kind"] = "edge";
    j["lo"] = c.span.lo;
    j["hi"] = c.span.hi;
    j["q"] = c.q;
    j["colors"] = c.colors;
    return j;
}

inline nlohmann::json coloring_to_json(const triple_coloring& c) {
    nlohmann::json j;
    j["kind"] = "triple";
    j["lo"] = c.span.lo;
    j["hi"] = c.span.hi;
    j["q"] = c.q;
    j["colors"] = c.colors;
    return j;
}

namespace detail {

inline void check_coloring_json(const nlohmann::json& j, const char* kind, std::size_t want) {
    if (!j.is_object() || j.value("kind", "") != kind)
        throw std::domain_error(std::string("coloring json: expected kind \"") + kind + "\"");
    if (!j.contains("colors") || !j["colors"].is_array() || j["colors"].size() != want)
        throw std::domain_error("coloring json: colors array has wrong length");
}

} // namespace detail

inline edge_coloring edge_coloring_from_json(const nlohmann::json& j) {
    edge_coloring c(vertex_interval(j.at("lo").get<vertex>(), j.at("hi").get<vertex>()),
                    j.at("q").get<int>());
    detail::check_coloring_json(j, "edge", c.colors.size());
    c.colors = j["colors"].get<std::vector<std::uint8_t>>();
    for (auto v : c.colors)
        if (v >= c.q) throw std::domain_error("coloring json: color id out of range");
    return c;
}

inline triple_coloring triple_coloring_from_json(const nlohmann::json& j) {
    triple_coloring c(vertex_interval(j.at("lo").get<vertex>(), j.at("hi").get<vertex>()),
                      j.at("q").get<int>());
    detail::check_coloring_json(j, "triple", c.colors.size());
    c.colors = j["colors"].get<std::vector<std::uint8_t>>();
    for (auto v : c.colors)
        if (v >= c.q) throw std::domain_error("coloring json: color id out of range");
    return c;
}

// Binary variant: "RLC1", kind byte (0 edge / 1 triple), little-endian
// int64 lo, int64 hi, uint32 q, then color ids packed LSB-first at
// ceil(log2 q) bits each (zero bits when q == 1).
namespace detail {

inline int bits_for(int q) {
    int b = 0;
    while ((1 << b) < q) ++b;
    return b;
}

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i)
        out.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(v) >> (8 * i)));
}

template <typename T>
T get_le(const std::vector<std::uint8_t>& in, std::size_t& pos) {
    if (pos + sizeof(T) > in.size()) throw std::domain_error("binary coloring: truncated");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<std::uint64_t>(in[pos + i]) << (8 * i);
    pos += sizeof(T);
    return static_cast<T>(v);
}

inline std::vector<std::uint8_t> pack_coloring(std::uint8_t kind, const vertex_interval& span,
                                               int q, const std::vector<std::uint8_t>& colors) {
    std::vector<std::uint8_t> out = {'R', 'L', 'C', '1', kind};
    put_le<std::int64_t>(out, span.lo);
    put_le<std::int64_t>(out, span.hi);
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(q));
    const int bits = bits_for(q);
    std::uint64_t acc = 0;
    int used = 0;
    for (auto c : colors) {
        acc |= static_cast<std::uint64_t>(c) << used;
        used += bits;
        while (used >= 8) {
            out.push_back(static_cast<std::uint8_t>(acc & 0xff));
            acc >>= 8;
            used -= 8;
        }
    }
    if (used > 0) out.push_back(static_cast<std::uint8_t>(acc & 0xff));
    return out;
}

struct packed_header {
    std::uint8_t kind;
    vertex lo, hi;
    int q;
    std::size_t pos;
};

inline packed_header unpack_header(const std::vector<std::uint8_t>& in) {
    if (in.size() < 25 || in[0] != 'R' || in[1] != 'L' || in[2] != 'C' || in[3] != '1')
        throw std::domain_error("binary coloring: bad magic");
    packed_header h{};
    h.kind = in[4];
    std::size_t pos = 5;
    h.lo = get_le<std::int64_t>(in, pos);
    h.hi = get_le<std::int64_t>(in, pos);
    h.q = static_cast<int>(get_le<std::uint32_t>(in, pos));
    h.pos = pos;
    return h;
}

inline void unpack_colors(const std::vector<std::uint8_t>& in, std::size_t pos, int q,
                          std::vector<std::uint8_t>& colors) {
    const int bits = bits_for(q);
    if (bits == 0) {
        std::fill(colors.begin(), colors.end(), 0);
        return;
    }
    std::uint64_t acc = 0;
    int avail = 0;
    const std::uint64_t mask = (1ull << bits) - 1;
    for (auto& c : colors) {
        while (avail < bits) {
            if (pos >= in.size()) throw std::domain_error("binary coloring: truncated payload");
            acc |= static_cast<std::uint64_t>(in[pos++]) << avail;
            avail += 8;
        }
        const std::uint64_t v = acc & mask;
        if (v >= static_cast<std::uint64_t>(q)) throw std::domain_error("binary coloring: color id out of range");
        c = static_cast<std::uint8_t>(v);
        acc >>= bits;
        avail -= bits;
    }
}

} // namespace detail

inline std::vector<std::uint8_t> coloring_to_binary(const edge_coloring& c) {
    return detail::pack_coloring(0, c.span, c.q, c.colors);
}

inline std::vector<std::uint8_t> coloring_to_binary(const triple_coloring& c) {
    return detail::pack_coloring(1, c.span, c.q, c.colors);
}

inline bool binary_is_edge_coloring(const std::vector<std::uint8_t>& in) {
    return detail::unpack_header(in).kind == 0;
}

inline edge_coloring edge_coloring_from_binary(const std::vector<std::uint8_t>& in) {
    auto h = detail::unpack_header(in);
    if (h.kind != 0) throw std::domain_error("binary coloring: not an edge coloring");
    edge_coloring c(vertex_interval(h.lo, h.hi), h.q);
    detail::unpack_colors(in, h.pos, h.q, c.colors);
    return c;
}

inline triple_coloring triple_coloring_from_binary(const std::vector<std::uint8_t>& in) {
    auto h = detail::unpack_header(in);
    if (h.kind != 1) throw std::domain_error("binary coloring: not a triple coloring");
    triple_coloring c(vertex_interval(h.lo, h.hi), h.q);
    detail::unpack_colors(in, h.pos, h.q, c.colors);
    return c;
}

inline nlohmann::json clique_to_json(const clique& k) {
    nlohmann::json j;
    j["kind"] = "clique";
    j["color"] = k.color;
    j["vertices"] = k.vertices;
    if (k.weight) j["weight"] = *k.weight;
    if (k.diff_ranks) j["diff_ranks"] = *k.diff_ranks;
    return j;
}

inline clique clique_from_json(const nlohmann::json& j) {
    if (j.value("kind", "") != "clique") throw std::domain_error("certificate json: expected kind \"clique\"");
    clique k;
    k.color = j.at("color").get<int>();
    k.vertices = j.at("vertices").get<std::vector<vertex>>();
    detail::check_vertex_list(k.vertices);
    if (j.contains("weight")) k.weight = j["weight"].get<double>();
    if (j.contains("diff_ranks")) k.diff_ranks = j["diff_ranks"].get<std::vector<int>>();
    return k;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f.write(data.data(), static_cast<std::streamsize>(data.size()));
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

inline std::string digest_string(const std::string& bytes) {
    return hex64(fnv1a64(bytes.data(), bytes.size()));
}

} // namespace ramsey
