// Deterministic output rendering and the on-disk result cache.
//
// Exact rationals are rendered as "p/q" in CSV/JSON; decimals appear only in
// SVG coordinates and asymptotics output, always through decimal_string with
// a declared digit count.  Identical inputs produce byte-identical files.

#pragma once

#include "mapenum/counts.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mapenum {

std::string csv_counts(const std::vector<CountRow>& rows);
std::string json_counts(const std::vector<CountRow>& rows);

std::string csv_curve(const std::vector<std::pair<Rat, Rat>>& samples, unsigned digits);
std::string svg_curve(const std::vector<std::pair<Rat, Rat>>& samples,
                      const std::vector<std::pair<Rat, Rat>>& marks, unsigned digits,
                      unsigned width = 640, unsigned height = 480);

std::string json_series(const std::string& label, const Series& s);

// FNV-1a 64-bit, hex string; used for cache keys.
std::string content_hash(const std::string& payload);

class Cache {
public:
    // Directory resolution: explicit argument, else $MAPENUM_CACHE, else
    // $HOME/.cache/mapenum, else ./.mapenum-cache.
    explicit Cache(std::string dir = "");

    const std::string& dir() const { return dir_; }
    std::optional<std::string> load(const std::string& key) const;
    // Atomic: write to a temp file in the same directory, then rename.
    void store(const std::string& key, const std::string& content) const;

private:
    std::string dir_;
};

}  // namespace mapenum
