#pragma once

/**
 * @file cache.hpp
 * @brief Persistent cross-call cache of Möbius values.
 *
 * File format, one record per line:
 *
 *     posetTag <TAB> bottom <TAB> top <TAB> mu
 *
 * The file is loaded once on construction. New records are appended in a
 * single write per batch while holding the writer lock; lookups take a shared
 * lock so concurrent readers never block each other.
 */

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "poset.hpp"

namespace posetmorse {

class MobiusCache {
public:
    struct Record {
        std::string tag, bottom, top;
        std::int64_t mu;
    };

    MobiusCache() = default;

    explicit MobiusCache(std::filesystem::path path) : path_(std::move(path)) {
        std::ifstream in(path_);
        if (!in) return;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            auto rec = parse_record(line);
            if (!rec)
                throw parse_error("malformed cache record at " + path_.string() + ":" + std::to_string(lineno));
            entries_[key(rec->tag, rec->bottom, rec->top)] = rec->mu;
        }
    }

    static std::optional<Record> parse_record(std::string_view line) {
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            auto tab = line.find('\t', pos);
            fields.emplace_back(line.substr(pos, tab == std::string_view::npos ? std::string_view::npos : tab - pos));
            if (tab == std::string_view::npos) break;
            pos = tab + 1;
        }
        if (fields.size() != 4 || fields[0].empty()) return std::nullopt;
        try {
            std::size_t used = 0;
            auto mu = std::stoll(fields[3], &used);
            if (used != fields[3].size()) return std::nullopt;
            return Record{fields[0], fields[1], fields[2], mu};
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    static std::string format_record(const Record& r) {
        return r.tag + '\t' + r.bottom + '\t' + r.top + '\t' + std::to_string(r.mu) + '\n';
    }

    const std::filesystem::path& path() const noexcept { return path_; }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return entries_.size();
    }

    std::optional<std::int64_t> find(std::string_view tag, std::string_view bottom, std::string_view top) const {
        std::shared_lock lock(mutex_);
        auto it = entries_.find(key(tag, bottom, top));
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    // Records not yet present are kept in memory and appended to the file.
    void insert(const std::vector<Record>& records) {
        std::unique_lock lock(mutex_);
        std::string batch;
        for (const auto& r : records)
            if (entries_.emplace(key(r.tag, r.bottom, r.top), r.mu).second) batch += format_record(r);
        if (batch.empty() || path_.empty()) return;
        std::ofstream out(path_, std::ios::app | std::ios::binary);
        if (!out) throw error("cannot append to cache file " + path_.string());
        out.write(batch.data(), static_cast<std::streamsize>(batch.size()));
        out.flush();
    }

private:
    static std::string key(std::string_view tag, std::string_view bottom, std::string_view top) {
        std::string k;
        k.reserve(tag.size() + bottom.size() + top.size() + 2);
        k.append(tag).append(1, '\t').append(bottom).append(1, '\t').append(top);
        return k;
    }

    std::filesystem::path path_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::int64_t> entries_;
};

/// Brute-force Möbius value through the cache. A miss computes mu(bottom, z)
/// for the whole interval and stores every value.
template <ChainPoset P>
std::int64_t mobius_bruteforce(const P& poset, const Interval<ElementOf<P>>& iv, MobiusCache& cache) {
    const std::string tag(poset.tag());
    const auto bottom = poset.format(iv.bottom);
    if (auto hit = cache.find(tag, bottom, poset.format(iv.top))) {
        validate(poset, iv);
        return *hit;
    }
    auto table = mobius_table(poset, iv);
    std::vector<MobiusCache::Record> records;
    for (const auto& [z, mu] : table) records.push_back({tag, bottom, poset.format(z), mu});
    cache.insert(records);
    return table.at(iv.top);
}

}  // namespace posetmorse
