#include "turansw/io.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace turansw {

namespace {

std::string hex_of(const std::vector<uint8_t>& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        out += digits[b >> 4];
        out += digits[b & 0xf];
    }
    return out;
}

std::vector<uint8_t> bytes_of_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw std::invalid_argument("odd hex length");
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    std::vector<uint8_t> out(hex.size() / 2);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = uint8_t(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
    return out;
}

// splits "K <n>:<payload>" and checks the kind tag
std::pair<int, std::string> split_line(const std::string& line, char kind) {
    if (line.size() < 4 || line[0] != kind || line[1] != ' ')
        throw std::invalid_argument(std::string("expected a '") + kind + "' line");
    auto colon = line.find(':', 2);
    if (colon == std::string::npos) throw std::invalid_argument("missing ':'");
    int n = std::stoi(line.substr(2, colon - 2));
    return {n, line.substr(colon + 1)};
}

}  // namespace

std::string to_line(const Tournament& t) {
    return "T " + std::to_string(t.size()) + ":" + hex_of(t.pair_bytes());
}

std::string to_line(const OrientedTwoGraph& g) {
    return "G " + std::to_string(g.size()) + ":" + hex_of(g.sign_bytes());
}

std::string to_line(const ThreeTournament& g) {
    return "D " + std::to_string(g.size()) + ":" + hex_of(g.sign_bytes());
}

std::string to_line(const TwoGraph& x) {
    return "X " + std::to_string(x.size()) + ":" + hex_of(x.membership_bytes());
}

std::string to_line(const AdmissibleFunction& f) {
    std::string bits;
    for (int a = 1; a <= (f.modulus() - 1) / 2; ++a) bits += f.value(a) == 1 ? '1' : '0';
    return "F " + std::to_string(f.modulus()) + ":" + bits;
}

Tournament parse_tournament_line(const std::string& line) {
    auto [n, payload] = split_line(line, 'T');
    return Tournament::from_pair_bytes(n, bytes_of_hex(payload));
}

OrientedTwoGraph parse_two_graph_line(const std::string& line) {
    auto [n, payload] = split_line(line, 'G');
    return OrientedTwoGraph::from_sign_bytes(n, bytes_of_hex(payload));
}

ThreeTournament parse_three_tournament_line(const std::string& line) {
    auto [n, payload] = split_line(line, 'D');
    return ThreeTournament::from_sign_bytes(n, bytes_of_hex(payload));
}

TwoGraph parse_switching_set_line(const std::string& line) {
    auto [n, payload] = split_line(line, 'X');
    return TwoGraph::from_membership_bytes(n, bytes_of_hex(payload));
}

AdmissibleFunction parse_admissible_line(const std::string& line) {
    auto [p, payload] = split_line(line, 'F');
    if (static_cast<int>(payload.size()) != (p - 1) / 2)
        throw std::invalid_argument("sign bitstring length mismatch");
    uint64_t bits = 0;
    for (size_t i = 0; i < payload.size(); ++i) {
        if (payload[i] == '1')
            bits |= 1ull << i;
        else if (payload[i] != '0')
            throw std::invalid_argument("bad sign bit");
    }
    return AdmissibleFunction::from_free_signs(p, bits);
}

nlohmann::json hypergraph_to_json(const Hypergraph& h) {
    nlohmann::json j;
    j["n"] = h.vertex_count();
    j["r"] = h.uniformity();
    j["edges"] = h.edges();
    return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    return Hypergraph::from_edges(j.at("n").get<int>(), j.at("r").get<int>(),
                                  j.at("edges").get<std::vector<std::vector<int>>>());
}

}  // namespace turansw
