#include "result_cache.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hyperchrome::cli {

namespace {

using nlohmann::json;

json witness_to_json(const Hypergraph& g) {
    json edges = json::array();
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        json e = json::array();
        for (Vertex v : g.edge(i)) e.push_back(v + 1);
        edges.push_back(std::move(e));
    }
    return json{{"n", g.num_vertices()}, {"edges", std::move(edges)}};
}

Hypergraph witness_from_json(const json& j) {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::vector<Vertex>> edges;
    for (const auto& e : j.at("edges")) {
        std::vector<Vertex> edge;
        for (const auto& v : e) {
            auto x = v.get<std::uint64_t>();
            if (x < 1 || x > n) throw std::invalid_argument("witness vertex out of range");
            edge.push_back(static_cast<Vertex>(x - 1));
        }
        edges.push_back(std::move(edge));
    }
    return Hypergraph(n, 3, edges);
}

bool same_slot(const ResultRecord& a, RecordKind kind, const std::string& key, std::size_t parameter) {
    return a.kind == kind && a.key == key && a.parameter == parameter;
}

std::uint32_t read_u32(const std::string& bytes, std::size_t at) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[at + i])) << (8 * i);
    return x;
}

}  // namespace

std::optional<Hypergraph> pattern_from_key(const std::string& key) {
    if (key.size() % 2 != 0) return std::nullopt;
    std::string bytes;
    for (std::size_t i = 0; i < key.size(); i += 2) {
        auto nibble = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            return -1;
        };
        int hi = nibble(key[i]), lo = nibble(key[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        bytes.push_back(static_cast<char>(hi * 16 + lo));
    }
    if (bytes.size() < 12) return std::nullopt;
    const std::size_t n = read_u32(bytes, 0), k = read_u32(bytes, 4), m = read_u32(bytes, 8);
    if (k == 0 || bytes.size() != 12 + 4 * k * m) return std::nullopt;
    std::vector<std::vector<Vertex>> edges(m);
    for (std::size_t e = 0; e < m; ++e)
        for (std::size_t i = 0; i < k; ++i) edges[e].push_back(read_u32(bytes, 12 + 4 * (e * k + i)));
    try {
        Hypergraph g(n, k, edges);
        if (pattern_key(g) != key) return std::nullopt;
        return g;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string record_to_line(const ResultRecord& r) {
    json j{{"kind", to_string(r.kind)},     {"key", r.key},
           {"parameter", r.parameter},      {"value", r.value},
           {"status", to_string(r.status)}, {"witness", witness_to_json(r.witness)}};
    return j.dump();
}

ResultRecord record_from_line(const std::string& line) {
    const json j = json::parse(line);
    ResultRecord r;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "ex") r.kind = RecordKind::ex;
    else if (kind == "ramsey") r.kind = RecordKind::ramsey;
    else throw std::invalid_argument("unknown record kind");
    const auto status = j.at("status").get<std::string>();
    if (status == "exact") r.status = RecordStatus::exact;
    else if (status == "lower_bound") r.status = RecordStatus::lower_bound;
    else throw std::invalid_argument("unknown record status");
    r.key = j.at("key").get<std::string>();
    r.parameter = j.at("parameter").get<std::size_t>();
    r.value = j.at("value").get<std::size_t>();
    r.witness = witness_from_json(j.at("witness"));
    return r;
}

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            auto record = record_from_line(line);
            auto pattern = pattern_from_key(record.key);
            if (pattern && revalidate(record, *pattern)) {
                store(record);
                continue;
            }
        } catch (const std::exception&) {
        }
        ++evicted_;
    }
}

std::optional<ResultRecord> ResultCache::lookup(RecordKind kind, const Hypergraph& pattern,
                                                std::size_t parameter) const {
    const auto key = pattern_key(pattern);
    for (const auto& r : records_)
        if (same_slot(r, kind, key, parameter) && r.status == RecordStatus::exact) return r;
    return std::nullopt;
}

void ResultCache::store(const ResultRecord& record) {
    auto it = std::find_if(records_.begin(), records_.end(),
                           [&](const ResultRecord& r) { return same_slot(r, record.kind, record.key, record.parameter); });
    if (it == records_.end()) {
        records_.push_back(record);
        return;
    }
    if (it->status == RecordStatus::exact && record.status != RecordStatus::exact) return;
    *it = record;
}

void ResultCache::save() const {
    auto tmp = path_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        for (const auto& r : records_) out << record_to_line(r) << '\n';
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path_);
}

}  // namespace hyperchrome::cli
