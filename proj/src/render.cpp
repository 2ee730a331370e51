#include "mapenum/render.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

namespace mapenum {

std::string csv_counts(const std::vector<CountRow>& rows) {
    std::string out = "valence,genus,vertices,value_num,value_den,mode,note\n";
    for (const auto& r : rows) {
        out += std::to_string(r.j) + "," + std::to_string(r.genus) + "," +
               std::to_string(r.vertices) + "," + num(r.value).str() + "," + den(r.value).str() +
               "," + r.mode + ",\"" + r.note + "\"\n";
    }
    return out;
}

std::string json_counts(const std::vector<CountRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json o;
        o["valence"] = r.j;
        o["genus"] = r.genus;
        o["vertices"] = r.vertices;
        o["value"] = rat_string(r.value);
        o["mode"] = r.mode;
        o["note"] = r.note;
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

std::string csv_curve(const std::vector<std::pair<Rat, Rat>>& samples, unsigned digits) {
    std::string out = "y0,xi2\n";
    for (const auto& [y, x2] : samples)
        out += decimal_string(y, digits) + "," + decimal_string(x2, digits) + "\n";
    return out;
}

namespace {

struct Box {
    Rat xlo, xhi, ylo, yhi;
};

Box bounding(const std::vector<std::pair<Rat, Rat>>& pts) {
    Box b{pts.front().first, pts.front().first, pts.front().second, pts.front().second};
    for (const auto& [x, y] : pts) {
        if (x < b.xlo) b.xlo = x;
        if (x > b.xhi) b.xhi = x;
        if (y < b.ylo) b.ylo = y;
        if (y > b.yhi) b.yhi = y;
    }
    if (b.xlo == b.xhi) b.xhi = b.xlo + 1;
    if (b.ylo == b.yhi) b.yhi = b.ylo + 1;
    return b;
}

}  // namespace

std::string svg_curve(const std::vector<std::pair<Rat, Rat>>& samples,
                      const std::vector<std::pair<Rat, Rat>>& marks, unsigned digits,
                      unsigned width, unsigned height) {
    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (samples.empty()) {
        out += "<line x1=\"40\" y1=\"" + std::to_string(height - 40) + "\" x2=\"" +
               std::to_string(width - 10) + "\" y2=\"" + std::to_string(height - 40) +
               "\" stroke=\"black\"/>\n<line x1=\"40\" y1=\"10\" x2=\"40\" y2=\"" +
               std::to_string(height - 40) + "\" stroke=\"black\"/>\n</svg>\n";
        return out;
    }
    std::vector<std::pair<Rat, Rat>> all = samples;
    for (const auto& m : marks) all.push_back(m);
    Box b = bounding(all);
    Rat w(static_cast<long>(width) - 60), h(static_cast<long>(height) - 60);
    auto px = [&](const Rat& x) { return Rat(40) + (x - b.xlo) / (b.xhi - b.xlo) * w; };
    auto py = [&](const Rat& y) {
        return Rat(static_cast<long>(height) - 40) - (y - b.ylo) / (b.yhi - b.ylo) * h;
    };
    out += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : samples)
        out += decimal_string(px(x), digits) + "," + decimal_string(py(y), digits) + " ";
    out += "\"/>\n";
    for (const auto& [x, y] : marks)
        out += "<circle cx=\"" + decimal_string(px(x), digits) + "\" cy=\"" +
               decimal_string(py(y), digits) + "\" r=\"4\" fill=\"crimson\"/>\n";
    out += "<line x1=\"40\" y1=\"" + std::to_string(height - 40) + "\" x2=\"" +
           std::to_string(width - 10) + "\" y2=\"" + std::to_string(height - 40) +
           "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    out += "<line x1=\"40\" y1=\"10\" x2=\"40\" y2=\"" + std::to_string(height - 40) +
           "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    out += "</svg>\n";
    return out;
}

std::string json_series(const std::string& label, const Series& s) {
    nlohmann::ordered_json o;
    o["label"] = label;
    o["variable"] = var_name(s.var());
    o["order"] = s.order();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (unsigned i = 0; i <= s.order(); ++i) arr.push_back(rat_string(s[i]));
    o["coefficients"] = arr;
    return o.dump(2) + "\n";
}

std::string content_hash(const std::string& payload) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : payload) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

Cache::Cache(std::string dir) {
    if (dir.empty()) {
        if (const char* env = std::getenv("MAPENUM_CACHE")) dir = env;
    }
    if (dir.empty()) {
        if (const char* home = std::getenv("HOME"))
            dir = std::string(home) + "/.cache/mapenum";
        else
            dir = ".mapenum-cache";
    }
    dir_ = dir;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
}

std::optional<std::string> Cache::load(const std::string& key) const {
    std::ifstream in(dir_ + "/" + content_hash(key), std::ios::binary);
    if (!in) return std::nullopt;
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void Cache::store(const std::string& key, const std::string& content) const {
    std::string final_path = dir_ + "/" + content_hash(key);
    std::string tmp = final_path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << content;
    }
    std::filesystem::rename(tmp, final_path);
}

}  // namespace mapenum
